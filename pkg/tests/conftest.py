from fractions import Fraction

import pytest
from hypothesis import strategies as st

from majority_closure.core import ChoiceFunction, make_choice_function, pairs
from majority_closure.generators import cyclic, linear

HALF = Fraction(1, 2)


@pytest.fixture
def T3():
    return make_choice_function(3, {(0, 1), (1, 2), (0, 2)})


@pytest.fixture
def C3():
    return make_choice_function(3, {(0, 1), (1, 2), (2, 0)})


@pytest.fixture
def L4():
    return linear(4)


@pytest.fixture
def R5():
    return cyclic(5)


@st.composite
def choice_functions(draw, n_min=3, n_max=5, full=False):
    n = draw(st.integers(n_min, n_max))
    options = [0, 1] if full else [0, 1, None]
    picks = draw(st.lists(st.sampled_from(options), min_size=n * (n - 1) // 2,
                          max_size=n * (n - 1) // 2))
    decisions = tuple(None if p is None else (y if p else x)
                      for (x, y), p in zip(pairs(n), picks))
    return ChoiceFunction(n, decisions)


@st.composite
def permutations_of(draw, n):
    return tuple(draw(st.permutations(range(n))))


# one line per acceptance criterion, collected by tests/test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
