"""Bezoutian and resultant of a polynomial pair, the identities linking them,
and the nullity / gcd-degree theorem in its plain and padded-size forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, TheoremViolation
from .linalg import KernelBasis, nullity
from .matrix import (
    ExactMatrix,
    hankel_of,
    reverse_identity,
    toeplitz_of,
    vandermonde_col,
)
from .poly import (
    HomogeneousPoly,
    Polynomial,
    RationalLike,
    cofactors,
    degree,
    euclid_gcd,
    evaluate,
    format_rational,
    homogenize,
    to_rational,
)


def _true_degree(p: Polynomial) -> int:
    d = degree(p)
    return d if isinstance(d, int) else 0


@dataclass(frozen=True)
class BezoutPair:
    """Polynomials f, g together with the working size n >= max(deg f, deg g)."""

    f: Polynomial
    g: Polynomial
    n: int

    def __post_init__(self):
        if self.f.is_zero() and self.g.is_zero():
            raise PreconditionError("f and g are both the zero polynomial")
        if not isinstance(self.n, int) or self.n < 1:
            raise PreconditionError(f"size n must be a positive integer, got {self.n!r}")
        if self.n < self.m:
            raise PreconditionError(f"size n = {self.n} is below max(deg f, deg g) = {self.m}")

    @classmethod
    def of(cls, f: Polynomial, g: Polynomial, n: int | None = None) -> BezoutPair:
        """Build a pair; ``n`` defaults to max(deg f, deg g), but at least 1."""
        if n is None:
            if f.is_zero() and g.is_zero():
                raise PreconditionError("f and g are both the zero polynomial")
            n = max(_true_degree(f), _true_degree(g), 1)
        return cls(f, g, n)

    @property
    def m(self) -> int:
        return max(_true_degree(self.f), _true_degree(self.g))

    def swapped(self) -> BezoutPair:
        return BezoutPair(self.g, self.f, self.n)

    def resized(self, n: int) -> BezoutPair:
        return BezoutPair(self.f, self.g, n)


# Bezoutian, two independent constructions


def _poly_rows_mul_w(q: list[Fraction]) -> list[Fraction]:
    return [Fraction(0)] + q


def _poly_add(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return out


def bezoutian_divdiff(pair: BezoutPair) -> ExactMatrix:
    """Coefficient matrix of b(z, w) = (f(z)g(w) - f(w)g(z)) / (z - w).

    The numerator is viewed as a polynomial in z whose coefficients are
    polynomials in w, and divided by the monic linear factor (z - w) with
    synthetic division.  The remainder must vanish identically.
    """
    n = pair.n
    fc = pair.f.padded(n + 1)
    gc = pair.g.padded(n + 1)
    # c[a] is the coefficient of z^a, as a coefficient list in w
    c = [[fc[a] * gc[b] - fc[b] * gc[a] for b in range(n + 1)] for a in range(n + 1)]

    quot: list[list[Fraction]] = [[] for _ in range(n)]
    carry = c[n]
    quot[n - 1] = carry
    for a in range(n - 1, 0, -1):
        carry = _poly_add(c[a], _poly_rows_mul_w(carry))
        quot[a - 1] = carry
    remainder = _poly_add(c[0], _poly_rows_mul_w(carry))
    if any(remainder):
        raise TheoremViolation("f(z)g(w) - f(w)g(z) is not divisible by z - w")

    rows = []
    for j in range(n):
        q = quot[j]
        if any(q[n:]):
            raise TheoremViolation("Bezoutian coefficient exceeds w-degree n - 1")
        rows.append(q[:n] + [Fraction(0)] * (n - len(q[:n])))
    return ExactMatrix.from_rows(rows)


def bezoutian_hankel_toeplitz(pair: BezoutPair) -> ExactMatrix:
    """B = H_f T_g - H_g T_f."""
    f, g, n = pair.f, pair.g, pair.n
    return hankel_of(f, n) @ toeplitz_of(g, n) - hankel_of(g, n) @ toeplitz_of(f, n)


def resultant_matrix(pair: BezoutPair) -> ExactMatrix:
    """The 2n x 2n block matrix [[T_f, Z H_f], [T_g, Z H_g]]."""
    f, g, n = pair.f, pair.g, pair.n
    z = reverse_identity(n)
    return ExactMatrix.block([
        [toeplitz_of(f, n), z @ hankel_of(f, n)],
        [toeplitz_of(g, n), z @ hankel_of(g, n)],
    ])


# identity checks


def verify_resultant_action(pair: BezoutPair, z: RationalLike) -> bool:
    """Check R V_2n(z) == [f(z) V_n(z); g(z) V_n(z)]."""
    z = to_rational(z)
    n = pair.n
    lhs = resultant_matrix(pair) @ vandermonde_col(2 * n, z)
    vn = vandermonde_col(n, z)
    rhs = ExactMatrix.block([[vn.scale(evaluate(pair.f, z))], [vn.scale(evaluate(pair.g, z))]])
    return lhs == rhs


def _symplectic_z(n: int) -> ExactMatrix:
    z = reverse_identity(n)
    zero = ExactMatrix.zeros(n)
    return ExactMatrix.block([[zero, z], [-z, zero]])


def verify_congruence_identity(pair: BezoutPair) -> bool:
    """Check R^T [[0, Z], [-Z, 0]] R == [[0, -B], [B, 0]]."""
    n = pair.n
    r = resultant_matrix(pair)
    b = bezoutian_divdiff(pair)
    zero = ExactMatrix.zeros(n)
    lhs = r.T @ _symplectic_z(n) @ r
    rhs = ExactMatrix.block([[zero, -b], [b, zero]])
    return lhs == rhs


def verify_block_factorization(pair: BezoutPair) -> bool:
    """Check L R == [[0, I], [Z, T_f + Z H_g]] diag(B, I) L with L = [[I, 0], [T_f, Z H_f]].

    Only meaningful when deg f = n, which makes Z H_f invertible.
    """
    n = pair.n
    if degree(pair.f) != n:
        raise PreconditionError(f"block factorization needs deg f = n = {n}, got deg f = {degree(pair.f)}")
    eye = ExactMatrix.identity(n)
    zero = ExactMatrix.zeros(n)
    z = reverse_identity(n)
    tf = toeplitz_of(pair.f, n)
    zhf = z @ hankel_of(pair.f, n)
    zhg = z @ hankel_of(pair.g, n)
    b = bezoutian_divdiff(pair)

    left = ExactMatrix.block([[eye, zero], [tf, zhf]])
    anti = ExactMatrix.block([[zero, eye], [z, tf + zhg]])
    diag = ExactMatrix.block([[b, zero], [zero, eye]])
    return left @ resultant_matrix(pair) == anti @ diag @ left


# kernels and the theorem


def multiplication_matrix(pair: BezoutPair) -> ExactMatrix:
    """Matrix of (u, v) -> f u + g v from coefficient pairs of degree < n to degree < 2n."""
    return resultant_matrix(pair).T


def kernel_param_of_multiplication_operator(pair: BezoutPair) -> KernelBasis:
    """Kernel of (u, v) -> f u + g v spanned by u = -ghat q, v = fhat q for q = 1, z, ..., z^(k-1).

    Here k = (n - m) + deg gcd(f, g).  Vectors are the stacked length-n
    coefficient lists of u and v.
    """
    if pair.f.is_zero() or pair.g.is_zero():
        raise PreconditionError("kernel parametrization needs both f and g nonzero")
    fhat, ghat, h = cofactors(pair.f, pair.g)
    n = pair.n
    k = (n - pair.m) + degree(h)
    vectors = []
    for j in range(k):
        q = Polynomial.monomial(j)
        u = -(ghat * q)
        v = fhat * q
        vectors.append(tuple(u.padded(n) + v.padded(n)))
    return KernelBasis(2 * n, tuple(vectors))


@dataclass(frozen=True)
class GcdReport:
    n: int
    m: int
    nullity_B: int
    nullity_R: int
    gcd_degree_euclid: int
    infinity_multiplicity: int
    total_common_zeros: int
    gcd: Polynomial

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "nullity_B": self.nullity_B,
            "nullity_R": self.nullity_R,
            "gcd_degree_euclid": self.gcd_degree_euclid,
            "infinity_multiplicity": self.infinity_multiplicity,
            "total_common_zeros": self.total_common_zeros,
            "gcd": [format_rational(c) for c in self.gcd.coeffs],
        }


def gcd_report(pair: BezoutPair) -> GcdReport:
    """Compute both nullities and the Euclidean gcd independently, then cross-check them.

    Raises :class:`TheoremViolation` if nullity(B) != nullity(R) or either
    differs from (n - m) + deg gcd(f, g).
    """
    nb = nullity(bezoutian_hankel_toeplitz(pair))
    nr = nullity(resultant_matrix(pair))
    h = euclid_gcd(pair.f, pair.g)
    k = degree(h)
    inf = pair.n - pair.m
    report = GcdReport(
        n=pair.n,
        m=pair.m,
        nullity_B=nb,
        nullity_R=nr,
        gcd_degree_euclid=k,
        infinity_multiplicity=inf,
        total_common_zeros=k + inf,
        gcd=h,
    )
    if nb != nr:
        raise TheoremViolation(f"nullity(B) = {nb} but nullity(R) = {nr}")
    if nb != inf + k:
        raise TheoremViolation(f"nullity(B) = {nb} but n - m + deg gcd = {inf + k}")
    return report


def bezoutian_padding(f: Polynomial, g: Polynomial, n_small: int, n_big: int) -> bool:
    """Check that B at size n_big is B at size n_small bordered by zeros."""
    if n_big < n_small:
        raise PreconditionError(f"n_big = {n_big} is smaller than n_small = {n_small}")
    small = bezoutian_divdiff(BezoutPair(f, g, n_small))
    big = bezoutian_divdiff(BezoutPair(f, g, n_big))
    pad = n_big - n_small
    expected = ExactMatrix.block([
        [small, ExactMatrix.zeros(n_small, pad)],
        [ExactMatrix.zeros(pad, n_small), ExactMatrix.zeros(pad, pad)],
    ]) if pad else small
    return big == expected


def homogenized_gcd_degree(f: Polynomial, g: Polynomial, n: int) -> int:
    """Degree of the gcd of the degree-n homogenizations of f and g.

    The common power of y is split off first (those are the shared zeros at
    infinity); the remaining forms are dehomogenized and handed to Euclid.
    """
    if f.is_zero() or g.is_zero():
        raise PreconditionError("homogenized gcd needs both f and g nonzero")
    BezoutPair(f, g, n)
    fb = homogenize(f, n)
    gb = homogenize(g, n)
    e = min(fb.y_multiplicity(), gb.y_multiplicity())
    f_rest = HomogeneousPoly(fb.coeffs[: n + 1 - e], n - e).dehomogenize()
    g_rest = HomogeneousPoly(gb.coeffs[: n + 1 - e], n - e).dehomogenize()
    return e + degree(euclid_gcd(f_rest, g_rest))
