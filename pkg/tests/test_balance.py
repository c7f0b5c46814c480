from fractions import Fraction

from hypothesis import given

from majority_closure.balance import (is_balanced, is_balanced_matrix, is_partition_balanced,
                                      is_partition_plus_balanced, is_pseudo_balanced,
                                      is_pseudo_balanced_by_search, is_super_balanced,
                                      is_weight_balanced, partition_violation,
                                      shortest_cycle_through, strong_components,
                                      weight_balance_witness)
from majority_closure.core import (ProbMatrix, all_full, all_functions, convex_combine, dual,
                                   empty_function, make_choice_function, maj, prob_of)
from majority_closure.valency import valencies

from conftest import HALF, choice_functions


def test_balanced_examples(T3, C3):
    assert is_balanced(C3)
    assert not is_balanced(T3)
    assert not any(is_balanced(c) for c in all_full(4))


def test_balanced_matrix_examples(T3, C3):
    h = ProbMatrix.half(3)
    assert is_balanced_matrix(h) and is_super_balanced(h)
    assert is_balanced_matrix(prob_of(C3))
    assert not is_balanced_matrix(prob_of(T3))
    assert not is_super_balanced(prob_of(C3))
    assert is_super_balanced(convex_combine([(HALF, prob_of(C3)), (HALF, prob_of(dual(C3)))]))


def test_pseudo_balanced_examples(T3, C3, R5):
    assert is_pseudo_balanced(C3)
    assert not is_pseudo_balanced(T3)
    assert is_pseudo_balanced(empty_function(3))
    assert not is_pseudo_balanced(make_choice_function(3, [(0, 1)]))
    assert is_pseudo_balanced(R5)


def test_strong_components(T3, C3):
    scc = strong_components(T3)
    assert scc.components == (frozenset({0}), frozenset({1}), frozenset({2}))
    assert set(scc.inter_edges) == {(0, 1), (0, 2), (1, 2)}
    assert len(strong_components(C3).components) == 1


def test_shortest_cycle(R5):
    assert shortest_cycle_through(R5, 0, 1) == (0, 1, 3)
    assert shortest_cycle_through(make_choice_function(3, [(0, 1), (1, 2), (0, 2)]), 0, 1) is None
    c4 = make_choice_function(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert shortest_cycle_through(c4, 2, 3) == (2, 3, 0, 1)


def test_partition_plus_examples(T3, C3):
    assert is_partition_plus_balanced(C3)
    assert not is_partition_plus_balanced(T3)
    assert partition_violation(T3, plus=True) == frozenset({0})
    assert not is_partition_plus_balanced(empty_function(3))


def test_partition_examples(T3, C3):
    assert is_partition_balanced(empty_function(3))
    assert is_partition_balanced(C3)
    assert not is_partition_balanced(T3)
    assert partition_violation(T3) == frozenset({0})


def test_weight_balanced_examples(T3, C3):
    w = weight_balance_witness(C3)
    assert w is not None and maj(w) == C3 and is_balanced_matrix(w)
    assert not is_weight_balanced(T3)
    assert weight_balance_witness(empty_function(3)) == ProbMatrix.half(3)


def test_taxonomy_exhaustive_n4():
    for c in all_functions(4):
        pseudo = is_pseudo_balanced(c)
        assert is_pseudo_balanced_by_search(c) == pseudo
        assert is_weight_balanced(c) == pseudo
        if pseudo:
            assert is_partition_balanced(c)
        if c.is_full:
            assert is_partition_balanced(c) == is_partition_plus_balanced(c)


@given(choice_functions())
def test_scc_matches_search(c):
    assert is_pseudo_balanced(c) == is_pseudo_balanced_by_search(c)


@given(choice_functions(n_max=4))
def test_weight_witness_is_valid(c):
    w = weight_balance_witness(c)
    assert (w is None) == (not is_pseudo_balanced(c))
    if w is not None:
        assert maj(w) == c and is_balanced_matrix(w)


@given(choice_functions(full=True))
def test_balanced_means_uniform_valency(c):
    assert is_balanced(c) == all(v == Fraction(c.n - 1, 2) for v in valencies(c))
    assert is_balanced(c) == is_balanced_matrix(prob_of(c))


@given(choice_functions())
def test_pseudo_balance_is_dual_invariant(c):
    assert is_pseudo_balanced(c) == is_pseudo_balanced(dual(c))
