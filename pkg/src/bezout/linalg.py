"""Exact rank, nullity and kernel bases via fraction-free elimination."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .matrix import ExactMatrix


def _integer_rows(m: ExactMatrix) -> list[list[int]]:
    # Scaling a row by a nonzero constant leaves the row space unchanged.
    out = []
    for i in range(m.rows):
        row = m.row(i)
        scale = lcm(*(x.denominator for x in row)) if row else 1
        out.append([x.numerator * (scale // x.denominator) for x in row])
    return out


def bareiss_echelon(m: ExactMatrix) -> tuple[list[list[int]], list[int]]:
    """Row echelon form over the integers by two-term Bareiss elimination.

    Returns the eliminated integer rows and the pivot column indices.  The
    first row with a nonzero entry in the current column is taken as pivot.
    Every division performed is exact; a nonzero remainder would mean the
    elimination itself is broken.
    """
    a = _integer_rows(m)
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
        piv_row = a[r]
        pv = piv_row[c]
        for i in range(r + 1, nrows):
            row = a[i]
            lead = row[c]
            for j in range(c + 1, ncols):
                q, rem = divmod(pv * row[j] - lead * piv_row[j], prev)
                assert rem == 0, "Bareiss division was not exact"
                row[j] = q
            row[c] = 0
        prev = pv
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: ExactMatrix) -> int:
    return len(bareiss_echelon(m)[1])


def nullity(m: ExactMatrix) -> int:
    """Dimension of the right kernel: ``cols - rank``."""
    return m.cols - rank(m)


@dataclass(frozen=True)
class KernelBasis:
    dim: int
    vectors: tuple[tuple[Fraction, ...], ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def as_columns(self) -> ExactMatrix:
        """The basis vectors side by side as a ``dim x len`` matrix."""
        return ExactMatrix(self.dim, len(self.vectors), (v[i] for i in range(self.dim) for v in self.vectors))

    def to_dict(self) -> dict:
        from .poly import format_rational

        return {"dim": self.dim, "vectors": [[format_rational(x) for x in v] for v in self.vectors]}


def kernel_basis(m: ExactMatrix) -> KernelBasis:
    """Basis of ``{x : m x = 0}``, one vector per free column.

    The vector for free column ``f`` has a 1 at position ``f``, zeros at the
    other free positions, and reduced rationals at the pivot positions.
    """
    rows, pivots = bareiss_echelon(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    vectors = []
    for fc in free:
        x = [Fraction(0)] * m.cols
        x[fc] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            row = rows[r]
            s = sum((row[j] * x[j] for j in range(pc + 1, m.cols) if row[j]), Fraction(0))
            x[pc] = -s / row[pc]
        vectors.append(tuple(x))
    return KernelBasis(m.cols, tuple(vectors))
