from fractions import Fraction

from hypothesis import settings, strategies as st

from bezout import BezoutPair, Polynomial

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-100, 100), st.integers(1, 100))
nonzero_rationals = rationals.filter(bool)


@st.composite
def polys(draw, max_degree=8, nonzero=False):
    deg = draw(st.integers(0, max_degree))
    coeffs = draw(st.lists(rationals, min_size=deg, max_size=deg))
    lead = draw(nonzero_rationals) if nonzero else draw(rationals)
    return Polynomial(coeffs + [lead])


@st.composite
def pairs(draw, max_degree=8, max_pad=3, nonzero=True):
    f = draw(polys(max_degree, nonzero=nonzero))
    g = draw(polys(max_degree, nonzero=nonzero))
    if f.is_zero() and g.is_zero():
        f = Polynomial([1])
    base = max(len(f.coeffs), len(g.coeffs), 2) - 1
    n = base + draw(st.integers(0, max_pad))
    return BezoutPair(f, g, n)


def P(*coeffs):
    return Polynomial(coeffs)
