import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from systoles import make_point
from systoles.mcg import McgWord

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SURFACES = ("s11", "s04")

positive_fractions = st.builds(Fraction, st.integers(1, 80), st.integers(1, 80))
positive_floats = st.floats(0.05, 20.0, allow_nan=False, allow_infinity=False)
surfaces = st.sampled_from(SURFACES)
mcg_words = st.lists(st.sampled_from(["S", "T", "Tinv"]), max_size=6).map(lambda w: McgWord(tuple(w)))


@st.composite
def exact_points(draw, surface=None):
    s = surface or draw(surfaces)
    return make_point(s, draw(positive_fractions), draw(positive_fractions))


@st.composite
def float_points(draw, surface=None):
    s = surface or draw(surfaces)
    return make_point(s, draw(positive_floats), draw(positive_floats))


def random_rational(rng, lo=1, hi=60):
    return Fraction(rng.randint(lo, hi), rng.randint(lo, hi))


def random_word(rng, max_len=6):
    return McgWord(tuple(rng.choice(("S", "T", "Tinv")) for _ in range(rng.randint(0, max_len))))


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(params=SURFACES)
def surface(request):
    return request.param


# acceptance results are collected here and echoed in the terminal summary
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
