import random

import pytest
from hypothesis import strategies as st

from pbindex import NearBijection, PartialBijection, Permutation


@st.composite
def partial_bijections(draw, max_shift=6, support=24, shift=None):
    k = draw(st.integers(-max_shift, max_shift)) if shift is None else shift
    holes = set(range(max(0, -k))) | draw(st.sets(st.integers(0, support - 1), max_size=5))
    keys = draw(
        st.lists(st.integers(0, support - 1).filter(lambda n: n not in holes), unique=True, max_size=5)
    )
    removed = holes | set(keys)
    available = sorted(set(range(max(0, k))) | {h + k for h in removed if h + k >= 0})
    values = draw(st.permutations(available))[: len(keys)]
    return PartialBijection(k, holes, dict(zip(keys, values)))


@st.composite
def permutations(draw, support=24):
    moved = draw(st.lists(st.integers(0, support - 1), unique=True, max_size=6))
    images = draw(st.permutations(moved))
    return Permutation(0, (), dict(zip(moved, images)))


@st.composite
def near_bijections(draw, max_T=10, max_value=20, max_shift=4):
    prefix = draw(st.lists(st.integers(0, max_value - 1), max_size=max_T))
    k = draw(st.integers(max(-max_shift, -len(prefix)), max_shift))
    return NearBijection(tuple(prefix), k)


finite_sets = st.frozensets(st.integers(0, 40), max_size=10)


@pytest.fixture
def rng():
    return random.Random(20261018)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
