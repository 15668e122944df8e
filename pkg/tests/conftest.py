import os
import random
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from probelab.polytope import HalfSpace, Polytope, PolytopeError  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def rec(line: str):
        ACCEPTANCE_LINES.append(line)
        print(line)
    return rec


rationals = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 6))
positive_rationals = st.builds(Fraction, st.integers(1, 12), st.integers(1, 4))


@st.composite
def polytopes(draw, dim=2, extra_max=3):
    """Box-bounded polytopes with the origin inside plus random cuts."""
    hs = []
    for i in range(dim):
        for s in (1, -1):
            eta = [0] * dim
            eta[i] = s
            hs.append(HalfSpace(tuple(eta), draw(positive_rationals)))
    for _ in range(draw(st.integers(0, extra_max))):
        eta = tuple(draw(st.lists(st.integers(-3, 3), min_size=dim, max_size=dim)))
        if not any(eta):
            continue
        hs.append(HalfSpace(eta, draw(positive_rationals)))
    return Polytope.from_halfspaces(dim, hs)


def random_polytope(rng: random.Random, dim: int) -> Polytope:
    """Random rational polytope with general normals; retried until bounded."""
    while True:
        k = rng.randint(dim + 1, dim + 4)
        hs = []
        for _ in range(k):
            eta = tuple(rng.randint(-3, 3) for _ in range(dim))
            if not any(eta):
                continue
            hs.append(HalfSpace(eta, Fraction(rng.randint(1, 12), rng.randint(1, 4))))
        try:
            return Polytope.from_halfspaces(dim, hs)
        except PolytopeError:
            continue
