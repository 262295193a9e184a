import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bezout import (
    ExactMatrix,
    Polynomial,
    PreconditionError,
    hankel_of,
    nilpotent,
    reverse_identity,
    toeplitz_of,
    vandermonde_col,
)
from conftest import P, polys, rationals


def M(*rows):
    return ExactMatrix.from_rows(rows)


def index_formula(fn, n):
    return M(*[[fn(j, k) for k in range(n)] for j in range(n)])


def test_hankel_examples():
    f = P(-1, 0, 1)
    assert hankel_of(f, 2) == M([0, 1], [1, 0])
    assert hankel_of(f, 2) == index_formula(lambda j, k: f.coeff(j + k + 1), 2)
    assert hankel_of(P(7), 2) == ExactMatrix.zeros(2)
    assert hankel_of(P(0, 1), 1) == M([1])


def test_toeplitz_examples():
    f = P(-1, 1, 0)
    assert toeplitz_of(f, 2) == M([-1, 1], [0, -1])
    assert toeplitz_of(f, 2) == index_formula(lambda j, k: f.coeff(k - j) if k >= j else 0, 2)
    assert toeplitz_of(P(1), 3) == ExactMatrix.identity(3)
    assert toeplitz_of(Polynomial(), 2) == ExactMatrix.zeros(2)


def test_builders_reject_small_size():
    with pytest.raises(PreconditionError):
        hankel_of(P(0, 0, 1), 1)
    with pytest.raises(PreconditionError):
        toeplitz_of(P(0, 0, 0, 1), 2)


def test_reverse_identity_and_nilpotent():
    assert reverse_identity(2) == M([0, 1], [1, 0])
    for n in range(1, 9):
        z = reverse_identity(n)
        assert z @ z == ExactMatrix.identity(n)
    assert nilpotent(3) ** 3 == ExactMatrix.zeros(3)
    assert nilpotent(3) ** 2 != ExactMatrix.zeros(3)
    assert nilpotent(3) == M([0, 1, 0], [0, 0, 1], [0, 0, 0])


def test_vandermonde_col():
    assert vandermonde_col(3, 2) == ExactMatrix.column([1, 2, 4])
    assert vandermonde_col(1, Fraction(5, 7)) == ExactMatrix.column([1])
    assert vandermonde_col(4, 0) == ExactMatrix.column([1, 0, 0, 0])


def test_left_multiplication_by_z_flips_hankel_to_toeplitz():
    f = P(3, -1, 4, 1, 5)
    n = 4
    zh = reverse_identity(n) @ hankel_of(f, n)
    # Z H_f is lower triangular Toeplitz with f_n on the diagonal
    assert zh == index_formula(lambda j, k: f.coeff(n - j + k) if j >= k else 0, n)


@given(polys(16), st.integers(0, 3))
def test_toeplitz_transpose_identity(f, pad):
    n = max(len(f.coeffs), 1) + pad
    t = toeplitz_of(f, n)
    z = reverse_identity(n)
    assert t.T == z @ t @ z


@given(polys(8), polys(8), st.integers(0, 3))
def test_commutation_identities(f, g, pad):
    n = max(len(f.coeffs), len(g.coeffs), 1) + pad
    tf, tg = toeplitz_of(f, n), toeplitz_of(g, n)
    hf, hg = hankel_of(f, n), hankel_of(g, n)
    z = reverse_identity(n)
    assert tf @ tg == tg @ tf
    assert hf @ z @ hg == hg @ z @ hf


@given(polys(10), st.integers(0, 3))
def test_hankel_symmetric(f, pad):
    n = max(len(f.coeffs), 1) + pad
    h = hankel_of(f, n)
    assert h == h.T


def test_upper_toeplitz_spanned_by_powers_of_n():
    f = P(2, -1, 3)
    n = 4
    nn = nilpotent(n)
    span = ExactMatrix.zeros(n)
    for j, c in enumerate(f.coeffs):
        span = span + (nn ** j).scale(c)
    assert span == toeplitz_of(f, n)


def test_block_and_submatrix():
    a = M([1, 2], [3, 4])
    b = ExactMatrix.zeros(2, 1)
    c = M([5, 6])
    d = M([7])
    blk = ExactMatrix.block([[a, b], [c, d]])
    assert blk == M([1, 2, 0], [3, 4, 0], [5, 6, 7])
    assert blk.submatrix(0, 2, 0, 2) == a
    with pytest.raises(ValueError):
        ExactMatrix.block([[a, c]])


def test_shape_checks():
    with pytest.raises(ValueError):
        ExactMatrix(2, 2, [1, 2, 3])
    with pytest.raises(ValueError):
        M([1, 2]) @ M([1, 2])
    with pytest.raises(ValueError):
        M([1, 2]) + M([1])


def test_json_serialization():
    m = M([Fraction(-3, 2), 0], [Fraction(6, 4), 7])
    data = json.loads(m.to_json())
    assert data == {"rows": 2, "cols": 2, "entries": ["-3/2", "0", "3/2", "7"]}
    assert ExactMatrix.from_json(m.to_json()) == m


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_json_round_trip(r, c, data):
    m = ExactMatrix(r, c, data.draw(st.lists(rationals, min_size=r * c, max_size=r * c)))
    assert ExactMatrix.from_json(m.to_json()) == m


def test_plain_and_latex():
    m = M([1, Fraction(-1, 2)], [10, 0])
    assert m.to_plain() == "   1 -1/2\n  10    0"
    assert m.to_latex() == "\\begin{bmatrix}\n1 & -\\frac{1}{2} \\\\\n10 & 0\n\\end{bmatrix}"
