from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from majority_closure.core import (IntegerProfile, Permutation, ProbMatrix, WeightedProfile,
                                   all_full, all_functions, apply_permutation, convex_combine,
                                   dual, dual_matrix, empty_function, from_code, linear_order,
                                   maj, make_choice_function, mix, permute_matrix, prob_of,
                                   sym_closure, tor_edges)
from majority_closure.errors import (ConflictingEdge, IndexOutOfRange, TooFewCandidates,
                                     WeightsDoNotSumToOne)

from conftest import HALF, choice_functions


def test_make_transitive(T3):
    assert T3.is_full
    assert tor_edges(T3) == {(0, 1), (1, 2), (0, 2)}


def test_make_empty():
    c = make_choice_function(3, set())
    assert c == empty_function(3)
    assert c.is_empty and not c.is_full
    assert tor_edges(c) == frozenset()


def test_conflicting_edge():
    with pytest.raises(ConflictingEdge):
        make_choice_function(3, [(0, 1), (1, 0)])


def test_out_of_range_and_small_n():
    with pytest.raises(IndexOutOfRange):
        make_choice_function(3, [(0, 3)])
    with pytest.raises(TooFewCandidates):
        make_choice_function(2, [(0, 1)])


def test_cycle_edges(C3):
    assert tor_edges(C3) == {(0, 1), (1, 2), (2, 0)}
    assert C3.winner(0, 2) == 0 and C3.winner(2, 0) == 0


def test_dual(T3, C3):
    assert tor_edges(dual(T3)) == {(1, 0), (2, 1), (2, 0)}
    assert dual(empty_function(3)) == empty_function(3)
    assert dual(dual(C3)) == C3


def test_apply_permutation(T3, C3):
    assert apply_permutation(C3, (1, 2, 0)) == C3
    assert apply_permutation(T3, (0, 1, 2)) == T3
    assert tor_edges(apply_permutation(T3, (2, 1, 0))) == {(2, 1), (1, 0), (2, 0)}


def test_sym_closure_sizes(T3, C3):
    assert len(sym_closure(C3)) == 2
    assert len(sym_closure(T3)) == 6
    assert len(sym_closure(empty_function(3))) == 1


def test_prob_of():
    assert prob_of(empty_function(3)) == ProbMatrix.half(3)
    t = prob_of(make_choice_function(3, [(0, 1)]))
    assert (t[0, 1], t[1, 0], t[0, 2], t[1, 2]) == (1, 0, HALF, HALF)


def test_maj():
    assert maj(ProbMatrix.half(3)).is_empty
    t = ProbMatrix.from_entries(3, {(0, 1): Fraction(2, 3)})
    assert tor_edges(maj(t)) == {(0, 1)}


def test_dual_matrix(T3):
    h = ProbMatrix.half(4)
    assert dual_matrix(h) == h
    assert dual_matrix(prob_of(T3)) == prob_of(dual(T3))
    t = ProbMatrix.from_entries(3, {(0, 1): Fraction(2, 3)})
    assert dual_matrix(t)[0, 1] == Fraction(1, 3)


def test_convex_combine(C3):
    assert convex_combine([(HALF, prob_of(C3)), (HALF, prob_of(dual(C3)))]) == ProbMatrix.half(3)
    t = prob_of(C3)
    assert convex_combine([(1, t)]) == t
    edge = ProbMatrix.from_entries(3, {(0, 1): 1})
    out = convex_combine([(Fraction(1, 3), edge), (Fraction(2, 3), ProbMatrix.half(3))])
    assert out == ProbMatrix.from_entries(3, {(0, 1): Fraction(2, 3)})
    with pytest.raises(WeightsDoNotSumToOne):
        convex_combine([(HALF, t)])


def test_enumeration_counts_and_order():
    fulls = list(all_full(4))
    assert len(fulls) == 64
    assert [c.code for c in fulls] == sorted(c.code for c in fulls)
    assert len(list(all_functions(3))) == 27
    assert len(set(all_functions(4))) == 729


def test_linear_order_top_is_winner():
    c = linear_order(3, [2, 0, 1])
    assert c.winner(0, 2) == 2 and c.winner(1, 2) == 2 and c.winner(0, 1) == 0


def test_permutation_group_ops():
    p, q = Permutation((1, 2, 0)), Permutation((0, 2, 1))
    assert p.compose(p.inverse()) == Permutation.identity(3)
    assert p.compose(q)(1) == p(q(1))


def test_weighted_profile_merge(C3):
    w = WeightedProfile.merged(3, [(C3, Fraction(1, 4)), (C3, Fraction(1, 4)), (dual(C3), HALF)])
    assert len(w.voters) == 2
    with pytest.raises(WeightsDoNotSumToOne):
        WeightedProfile(3, ((C3, HALF),))


def test_integer_profile(C3):
    p = IntegerProfile(3, ((C3, 2), (dual(C3), 1)))
    assert p.size == 3 and len(p.expanded()) == 3
    assert dict(p.as_weighted().voters)[C3] == Fraction(2, 3)


@given(choice_functions())
def test_code_round_trip(c):
    assert from_code(c.n, c.code) == c


@given(choice_functions())
def test_maj_of_embedding_is_identity(c):
    assert maj(prob_of(c)) == c


@given(choice_functions())
def test_dual_involution_and_commutes(c):
    assert dual(dual(c)) == c
    assert prob_of(dual(c)) == dual_matrix(prob_of(c))


@given(choice_functions(), st.data())
def test_permutation_commutes_with_embedding(c, data):
    pi = data.draw(st.permutations(range(c.n)))
    assert prob_of(apply_permutation(c, pi)) == permute_matrix(prob_of(c), pi)


@given(choice_functions(n_max=4))
def test_mix_of_profile_matrix(c):
    w = mix([WeightedProfile(c.n, ((c, Fraction(1)),)),
             WeightedProfile(c.n, ((dual(c), Fraction(1)),))])
    assert w.induced_matrix() == ProbMatrix.half(c.n)
