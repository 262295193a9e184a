"""Seeded random polynomials, pairs and planted-gcd instances for property runs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .poly import Polynomial, degree, euclid_gcd


def random_rational(rng: random.Random, bound: int, nonzero: bool = False) -> Fraction:
    """Numerator in [-bound, bound], denominator in [1, bound]."""
    while True:
        q = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if q or not nonzero:
            return q


def random_poly(rng: random.Random, deg: int, bound: int = 50) -> Polynomial:
    """Random polynomial of degree exactly ``deg``."""
    coeffs = [random_rational(rng, bound) for _ in range(deg)]
    coeffs.append(random_rational(rng, bound, nonzero=True))
    return Polynomial(coeffs)


def random_pair(rng: random.Random, max_degree: int, bound: int = 50) -> tuple[Polynomial, Polynomial]:
    """Two nonzero polynomials, degrees drawn uniformly from 0..max_degree, not both constant."""
    while True:
        df = rng.randint(0, max_degree)
        dg = rng.randint(0, max_degree)
        if max(df, dg) >= 1 or max_degree == 0:
            return random_poly(rng, df, bound), random_poly(rng, dg, bound)


def random_coprime_pair(rng: random.Random, deg_f: int, deg_g: int, bound: int = 50) -> tuple[Polynomial, Polynomial]:
    """Retry until the Euclidean gcd is 1."""
    while True:
        f = random_poly(rng, deg_f, bound)
        g = random_poly(rng, deg_g, bound)
        if degree(euclid_gcd(f, g)) == 0:
            return f, g


@dataclass(frozen=True)
class PlantedInstance:
    f: Polynomial
    g: Polynomial
    h: Polynomial
    fhat: Polynomial
    ghat: Polynomial

    @property
    def m(self) -> int:
        return max(degree(self.f), degree(self.g))

    @property
    def gcd_degree(self) -> int:
        return degree(self.h)


def planted_instance(
    rng: random.Random,
    gcd_degree: int,
    max_cofactor_degree: int = 10,
    bound: int = 50,
) -> PlantedInstance:
    """Pair (h fhat, h ghat) with deg h = gcd_degree and fhat, ghat coprime.

    The instance is guaranteed nonconstant overall, so max(deg f, deg g) >= 1.
    """
    if gcd_degree + max_cofactor_degree < 1:
        raise ValueError("instance would be a pair of constants")
    while True:
        df = rng.randint(0, max_cofactor_degree)
        dg = rng.randint(0, max_cofactor_degree)
        if gcd_degree + max(df, dg) >= 1:
            break
    h = random_poly(rng, gcd_degree, bound)
    fhat, ghat = random_coprime_pair(rng, df, dg, bound)
    return PlantedInstance(h * fhat, h * ghat, h, fhat, ghat)
