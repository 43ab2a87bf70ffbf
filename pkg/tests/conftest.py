import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from conwaygeom import Triangle, Triplet  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def rationals(draw, lo=-3, hi=3, max_den=9):
    d = draw(st.integers(1, max_den))
    return Fraction(draw(st.integers(lo * d, hi * d)), d)


@st.composite
def triangles(draw, scalene=False):
    # sides y+z, z+x, x+y with x, y, z > 0 always form a triangle
    x = draw(rationals(0, 6, 6).filter(lambda q: q > 0))
    if scalene:
        y = x + draw(rationals(0, 3, 6).filter(lambda q: q > 0))
        z = y + draw(rationals(0, 3, 6).filter(lambda q: q > 0))
        x, y, z = draw(st.permutations((x, y, z)))
    else:
        y, z = (draw(rationals(0, 6, 6).filter(lambda q: q > 0)) for _ in range(2))
    return Triangle(y + z, z + x, x + y)


@st.composite
def triplets(draw):
    return Triplet(draw(rationals()), draw(rationals()), draw(rationals()))


@pytest.fixture
def t345():
    return Triangle(3, 4, 5)


@pytest.fixture
def t456():
    return Triangle(4, 5, 6)
