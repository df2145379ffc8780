import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from poissonval.exactpoly import Poly

XYZ = ("x", "y", "z")


def random_poly(rng: random.Random, vars=XYZ, terms=4, deg=3, laurent=False, homogeneous=None):
    out = {}
    for _ in range(terms):
        if homogeneous is not None:
            n = len(vars)
            cuts = sorted(rng.randint(0, homogeneous) for _ in range(n - 1))
            m = tuple(b - a for a, b in zip([0] + cuts, cuts + [homogeneous]))
        elif laurent:
            m = tuple(rng.randint(-deg, deg) for _ in vars)
        else:
            m = tuple(rng.randint(0, deg) for _ in vars)
        out[m] = Fraction(rng.randint(-4, 4) or 1, rng.choice([1, 1, 2, 3]))
    return Poly(vars, out, laurent)


@st.composite
def polys(draw, vars=XYZ, max_deg=3, max_terms=4, laurent=False):
    n = draw(st.integers(0, max_terms))
    lo = -max_deg if laurent else 0
    out = {}
    for _ in range(n):
        m = tuple(draw(st.integers(lo, max_deg)) for _ in vars)
        c = draw(st.fractions(min_value=-5, max_value=5, max_denominator=4))
        out[m] = c
    return Poly(vars, out, laurent)


@pytest.fixture
def rng():
    return random.Random(1234)
