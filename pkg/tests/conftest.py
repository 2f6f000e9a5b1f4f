import random

import pytest
from hypothesis import strategies as st

from olacat.weights import EligibleWeight


def random_weight(rng, n, r, spread=2, terms=3, level=None):
    """A random r-eligible weight with small coefficients."""
    if level is None:
        level = [rng.randint(-1, 1) for _ in range(n)]
    fin = {}
    for _ in range(rng.randint(0, terms)):
        p = (rng.choice([1, -1]) * rng.randint(1, r), rng.randint(1, n))
        fin[p] = fin.get(p, 0) + rng.randint(-spread, spread)
    return EligibleWeight.make(n, level, fin)


@st.composite
def weights(draw, n=None, r=3, spread=3, level=None):
    n = draw(st.integers(1, 2)) if n is None else n
    lev = level if level is not None else draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n))
    idx = st.tuples(st.integers(1, r).flatmap(lambda a: st.sampled_from([a, -a])), st.integers(1, n))
    fin = draw(st.dictionaries(idx, st.integers(-spread, spread), max_size=4))
    return EligibleWeight.make(n, lev, fin)


@pytest.fixture
def rng():
    return random.Random(20261016)


# acceptance criteria outcomes, filled by test_acceptance and printed at the end
ACCEPTANCE = {}


def record(number, ok, detail):
    ACCEPTANCE[number] = (ok, detail)
    return ok


def acceptance_lines():
    return [f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
            for k, (ok, detail) in sorted(ACCEPTANCE.items())]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines():
            terminalreporter.write_line(line)
