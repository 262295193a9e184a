import random
from fractions import Fraction
from itertools import combinations

from hypothesis import given, strategies as st

from bezout import ExactMatrix, kernel_basis, nullity, rank
from bezout.linalg import bareiss_echelon
from conftest import rationals


def M(*rows):
    return ExactMatrix.from_rows(rows)


def det_laplace(rows):
    """Cofactor expansion along the first row; independent of any elimination."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j, a in enumerate(rows[0]):
        if a:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * a * det_laplace(minor)
    return total


def rank_by_minors(m: ExactMatrix) -> int:
    rows = m.tolist()
    for k in range(min(m.rows, m.cols), 0, -1):
        for ri in combinations(range(m.rows), k):
            for ci in combinations(range(m.cols), k):
                if det_laplace([[rows[i][j] for j in ci] for i in ri]):
                    return k
    return 0


def random_matrix(rng, max_size=6, max_rank=None):
    r, c = rng.randint(1, max_size), rng.randint(1, max_size)
    k = rng.randint(0, min(r, c)) if max_rank is None else max_rank

    def q():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))

    # product of r x k and k x c factors gives rank <= k, so deficiency is common
    a = ExactMatrix(r, k, [q() for _ in range(r * k)])
    b = ExactMatrix(k, c, [q() for _ in range(k * c)])
    return a @ b if k else ExactMatrix.zeros(r, c)


matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(rationals, min_size=r * c, max_size=r * c).map(lambda e: ExactMatrix(r, c, e))
    )
)


def test_rank_examples():
    assert rank(ExactMatrix.identity(4)) == 4
    assert rank(M([1, -1], [-1, 1])) == 1
    assert det_laplace([[1, -1], [-1, 1]]) == 0
    assert rank(ExactMatrix.zeros(3)) == 0
    assert rank(ExactMatrix.zeros(0, 3)) == 0


def test_nullity_examples():
    assert nullity(ExactMatrix.identity(4)) == 0
    assert nullity(M([1, -1], [-1, 1])) == 1
    for n in range(1, 5):
        assert nullity(ExactMatrix.zeros(n)) == n


def test_kernel_examples():
    assert len(kernel_basis(ExactMatrix.identity(3))) == 0
    kb = kernel_basis(M([1, -1], [-1, 1]))
    assert kb.vectors == ((1, 1),)
    assert kernel_basis(M([1, 0])).vectors == ((0, 1),)


def test_kernel_normal_form():
    m = M([1, 2, 0, 3], [2, 4, 1, 1])
    kb = kernel_basis(m)
    # free columns are 1 and 3
    assert kb.vectors == ((-2, 1, 0, 0), (-3, 0, 5, 1))


def test_bareiss_keeps_integers():
    rows, pivots = bareiss_echelon(M([Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), 1]))
    assert all(isinstance(x, int) for r in rows for x in r)
    assert pivots == [0, 1]


@given(matrices)
def test_kernel_vectors_annihilated_and_independent(m):
    kb = kernel_basis(m)
    assert len(kb) == nullity(m)
    for v in kb:
        assert (m @ ExactMatrix.column(v)).is_zero()
    if len(kb):
        assert rank(kb.as_columns()) == len(kb)


def test_kernel_on_rank_deficient():
    rng = random.Random(11)
    for _ in range(100):
        m = random_matrix(rng, 7)
        kb = kernel_basis(m)
        assert len(kb) == m.cols - rank(m)
        for v in kb:
            assert (m @ ExactMatrix.column(v)).is_zero()
        if len(kb):
            assert rank(kb.as_columns()) == len(kb)


def test_rank_transpose_invariant():
    rng = random.Random(3)
    for _ in range(60):
        m = random_matrix(rng, 12)
        assert rank(m) == rank(m.T)


def test_rank_invariant_under_row_operations():
    rng = random.Random(5)
    for _ in range(80):
        m = random_matrix(rng, 8)
        rows = m.tolist()
        rng.shuffle(rows)
        i = rng.randrange(len(rows))
        c = Fraction(rng.choice([-1, 1]) * rng.randint(1, 20), rng.randint(1, 20))
        rows[i] = [c * x for x in rows[i]]
        assert rank(ExactMatrix.from_rows(rows)) == rank(m)


def test_rank_matches_minor_enumeration():
    rng = random.Random(17)
    for _ in range(60):
        m = random_matrix(rng, 5)
        assert rank(m) == rank_by_minors(m)


@given(matrices)
def test_rank_matches_minor_enumeration_dense(m):
    if m.rows * m.cols <= 16:
        assert rank(m) == rank_by_minors(m)
