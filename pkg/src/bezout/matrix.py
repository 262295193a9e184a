"""Dense exact-rational matrices and the structured builders H_f, T_f, Z, N, V_n(z)."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import PreconditionError
from .poly import Polynomial, RationalLike, degree, format_rational, to_rational


class ExactMatrix:
    """Immutable ``rows x cols`` matrix; ``entries`` is row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[RationalLike]):
        entries = tuple(to_rational(x) for x in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError(f"{len(entries)} entries cannot fill a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> ExactMatrix:
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, (x for row in rows for x in row))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> ExactMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def column(cls, values: Sequence[RationalLike]) -> ExactMatrix:
        return cls(len(values), 1, values)

    @classmethod
    def block(cls, grid: Sequence[Sequence[ExactMatrix]]) -> ExactMatrix:
        """Assemble a block matrix; blocks in a row share ``rows``, blocks in a column share ``cols``."""
        heights = [row[0].rows for row in grid]
        widths = [m.cols for m in grid[0]]
        for bi, row in enumerate(grid):
            if len(row) != len(widths):
                raise ValueError("block rows differ in length")
            for bj, m in enumerate(row):
                if m.rows != heights[bi] or m.cols != widths[bj]:
                    raise ValueError(f"block ({bi},{bj}) has shape {m.shape}, expected {(heights[bi], widths[bj])}")
        out = []
        for bi, row in enumerate(grid):
            for i in range(heights[bi]):
                for m in row:
                    out.extend(m.row(i))
        return cls(sum(heights), sum(widths), out)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(idx)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> ExactMatrix:
        return ExactMatrix(r1 - r0, c1 - c0, (self[i, j] for i in range(r0, r1) for j in range(c0, c1)))

    @property
    def T(self) -> ExactMatrix:
        return ExactMatrix(self.cols, self.rows, (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def _check_same_shape(self, other: ExactMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_same_shape(other)
        return ExactMatrix(self.rows, self.cols, (a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_same_shape(other)
        return ExactMatrix(self.rows, self.cols, (a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix(self.rows, self.cols, (-a for a in self.entries))

    def scale(self, c: RationalLike) -> ExactMatrix:
        c = to_rational(c)
        return ExactMatrix(self.rows, self.cols, (c * a for a in self.entries))

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.col(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            nz = [(k, a) for k, a in enumerate(r) if a]
            for c in cols:
                out.append(sum((a * c[k] for k, a in nz), Fraction(0)))
        return ExactMatrix(self.rows, other.cols, out)

    def __pow__(self, e: int) -> ExactMatrix:
        if self.rows != self.cols:
            raise ValueError("only square matrices have powers")
        out = ExactMatrix.identity(self.rows)
        for _ in range(e):
            out = out @ self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"ExactMatrix.from_rows({[[format_rational(x) for x in r] for r in self.tolist()]})"

    # serialization

    def to_dict(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [format_rational(x) for x in self.entries]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> ExactMatrix:
        return cls(int(data["rows"]), int(data["cols"]), (Fraction(str(x)) for x in data["entries"]))

    @classmethod
    def from_json(cls, text: str) -> ExactMatrix:
        return cls.from_dict(json.loads(text))

    def to_plain(self) -> str:
        """Right-aligned grid, one row per line."""
        cells = [[format_rational(x) for x in self.row(i)] for i in range(self.rows)]
        if not cells or not self.cols:
            return ""
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)

    def to_latex(self) -> str:
        def tex(q: Fraction) -> str:
            if q.denominator == 1:
                return str(q.numerator)
            sign = "-" if q < 0 else ""
            return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"

        body = " \\\\\n".join(" & ".join(tex(x) for x in self.row(i)) for i in range(self.rows))
        return "\\begin{bmatrix}\n" + body + "\n\\end{bmatrix}"


def _check_size(f: Polynomial, n: int) -> None:
    if n < 1:
        raise PreconditionError(f"matrix size must be positive, got {n}")
    d = degree(f)
    if isinstance(d, int) and d > n:
        raise PreconditionError(f"size {n} is smaller than deg f = {d}")


def hankel_of(f: Polynomial, n: int) -> ExactMatrix:
    """H_f: entry (j, k) is f_{j+k+1}, so the last antidiagonal onwards is zero."""
    _check_size(f, n)
    return ExactMatrix(n, n, (f.coeff(j + k + 1) for j in range(n) for k in range(n)))


def toeplitz_of(f: Polynomial, n: int) -> ExactMatrix:
    """Upper triangular T_f with f_0 on the diagonal and f_{k-j} above it."""
    _check_size(f, n)
    return ExactMatrix(n, n, (f.coeff(k - j) if k >= j else 0 for j in range(n) for k in range(n)))


def reverse_identity(n: int) -> ExactMatrix:
    return ExactMatrix(n, n, (1 if j + k == n - 1 else 0 for j in range(n) for k in range(n)))


def nilpotent(n: int) -> ExactMatrix:
    return ExactMatrix(n, n, (1 if k == j + 1 else 0 for j in range(n) for k in range(n)))


def vandermonde_col(n: int, z: RationalLike) -> ExactMatrix:
    """Column (1, z, ..., z^(n-1))^T."""
    z = to_rational(z)
    out = []
    p = Fraction(1)
    for _ in range(n):
        out.append(p)
        p *= z
    return ExactMatrix.column(out)
