from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from majority_closure.core import ProbMatrix, all_full, make_choice_function, prob_of
from majority_closure.errors import NotFull, OutOfUnitInterval, SamePair
from majority_closure.valency import (biased_matrix, orbit_average, orbit_average_enumerated,
                                      pair_statistic, pair_statistic_from_valency, valencies,
                                      valency, valency_signature)

from conftest import HALF, choice_functions


def test_valency_examples(T3, C3):
    assert valency(T3, 0) == 2 and valency(T3, 2) == 0
    assert valencies(C3) == (1, 1, 1)
    single = make_choice_function(3, [(0, 1)])
    assert valency(single, 0) == Fraction(3, 2)
    assert valency(single, 2) == 1


def test_linear_valencies(L4):
    assert valencies(L4) == (3, 2, 1, 0)


def test_pair_statistic_examples(T3, C3):
    assert pair_statistic(T3, 0, 1) == (1, 1, 1)
    assert pair_statistic(T3, 2, 1) == (0, 0, 0)
    assert pair_statistic(C3, 0, 1) == (1, 0, 1)


def test_pair_statistic_errors(T3):
    with pytest.raises(SamePair):
        pair_statistic(T3, 1, 1)
    with pytest.raises(NotFull):
        pair_statistic(make_choice_function(3, [(0, 1)]), 0, 1)


def test_biased_matrix_examples():
    assert biased_matrix(3, 0, 1, 1, HALF, HALF) == ProbMatrix.from_entries(3, {(0, 1): 1})
    assert biased_matrix(4, 0, 1, HALF, HALF, HALF) == ProbMatrix.half(4)
    t = biased_matrix(4, 0, 1, 1, 1, 1)
    assert [t[p] for p in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]] == [1, 1, 1, 1, 1, HALF]
    with pytest.raises(OutOfUnitInterval):
        biased_matrix(3, 0, 1, 2, 0, 0)


def test_orbit_average_examples(T3, L4):
    assert orbit_average(T3, {0, 1}) == prob_of(T3)
    expected = ProbMatrix.from_entries(4, {(0, 1): 1, (0, 2): 1, (0, 3): 1, (1, 2): 1, (1, 3): 1})
    assert orbit_average_enumerated(L4, {0, 1}) == expected
    assert orbit_average(L4, {0, 1}) == expected


def test_signature_of_cycle(C3):
    sig = valency_signature(C3)
    assert set(sig.V0star) == {(1, 0)}
    assert set(sig.V1star) == {(0, 1)}
    assert not sig.Vhalf


def test_signature_of_transitive(T3):
    sig = valency_signature(T3)
    # ordered pairs where the second entry wins: (0,1), (0,2), (1,2)
    assert sig.V1 == {(1, 0): ((1, 2),), (2, 0): ((0, 2),), (2, 1): ((0, 1),)}
    assert set(sig.V1star) == {(0, 0), (1, 0), (1, 1)}
    assert sig.witness(1, (1, 1)) == (0, 1)


def test_orbit_identity_exhaustive_n4():
    for c in all_full(4):
        for x in range(4):
            for y in range(4):
                if x != y:
                    assert orbit_average_enumerated(c, {x, y}) == \
                        biased_matrix(4, x, y, *pair_statistic(c, x, y))


@given(choice_functions())
def test_valency_total(c):
    assert sum(valencies(c)) == Fraction(c.n * (c.n - 1), 2)


@given(choice_functions())
def test_shifted_sets_are_flips(c):
    sig = valency_signature(c)
    assert set(sig.V1star) == {(b, a) for a, b in sig.V0star}


@given(choice_functions(full=True), st.data())
def test_pair_statistic_two_ways(c, data):
    x, y = data.draw(st.permutations(range(c.n)))[:2]
    assert pair_statistic(c, x, y) == pair_statistic_from_valency(c, x, y)


@settings(max_examples=30)
@given(choice_functions(n_min=5, full=True), st.data())
def test_orbit_identity_n5(c, data):
    x, y = data.draw(st.permutations(range(c.n)))[:2]
    assert orbit_average_enumerated(c, {x, y}) == biased_matrix(c.n, x, y, *pair_statistic(c, x, y))
