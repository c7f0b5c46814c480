"""Explicit voter profiles realizing a target majority.

Unbalanced generators: mix one single-pair-biased distribution per target
edge.  Balanced generators: mix fan-of-triangles distributions along one
covering cycle per target edge.  Everything is exact and every returned
profile is re-verified.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm
from typing import Optional, Sequence

from .balance import is_balanced, is_pseudo_balanced, shortest_cycle_through
from .config import limits
from .core import (HALF, ChoiceFunction, IntegerProfile, Permutation, ProbMatrix,
                   WeightedProfile, apply_permutation, least_permutation_mapping,
                   linear_order, mix, permutations_fixing, tor_edges)
from .errors import (BalancedFamily, BalancedTriangleMissing, DimensionMismatch,
                     NotBalanced, NotFull, NotPseudoBalanced, NotRealizable,
                     RepeatedVertex, SamePair, TooShort)
from .realizability import FCertificate, decide_family_membership, f_certificate
from .verify import verify


@dataclass(frozen=True)
class Stage:
    label: str
    profile: WeightedProfile
    matrix: ProbMatrix


@dataclass(frozen=True)
class SynthesisTrace:
    stages: tuple[Stage, ...]
    final: IntegerProfile


def _stage(label: str, profile: WeightedProfile) -> Stage:
    return Stage(label, profile, profile.induced_matrix())


def _require_full(d: ChoiceFunction) -> None:
    if not d.is_full:
        raise NotFull("generator must be full")


def _stabilizer_block(d: ChoiceFunction, sources: Sequence[int], targets: Sequence[int],
                      weight: Fraction) -> list[tuple[ChoiceFunction, Fraction]]:
    """Relabel ``sources`` onto ``targets`` (least such permutation), then
    spread ``weight`` evenly over the pointwise stabilizer of ``targets``."""
    n = d.n
    limits().check_stabilizer(n - len(targets))
    sigma = Permutation(least_permutation_mapping(n, sources, targets))
    share = weight / factorial(n - len(targets))
    return [(apply_permutation(d, Permutation(pi).compose(sigma)), share)
            for pi in permutations_fixing(n, targets)]


def pair_bias_profile(d: ChoiceFunction, x: int, y: int,
                      cert: Optional[FCertificate] = None) -> WeightedProfile:
    """Distribution over relabelings of ``d`` with ``t[x, y] > 1/2`` and every
    other pair at exactly 1/2."""
    _require_full(d)
    if x == y:
        raise SamePair(f"x = y = {x}")
    if cert is None:
        cert = f_certificate(d)
    if cert is None:
        raise BalancedFamily("generator is balanced; no single-pair bias exists")
    xs, ys = (x, y) if cert.r1 > HALF else (y, x)
    voters = []
    for entry in cert.support0 + cert.support1:
        voters += _stabilizer_block(d, entry.witness, (xs, ys), entry.weight)
    return WeightedProfile.merged(d.n, voters)


def rationalize(w: WeightedProfile) -> IntegerProfile:
    scale = lcm(*(weight.denominator for _, weight in w.voters))
    return IntegerProfile(w.n, tuple((c, int(weight * scale)) for c, weight in w.voters))


def tie_profile(d: ChoiceFunction) -> IntegerProfile:
    """Every relabeling of ``d`` once; each pair splits exactly n!/2 to n!/2."""
    _require_full(d)
    limits().check_group(d.n)
    counts: dict[ChoiceFunction, int] = {}
    for p in itertools.permutations(range(d.n)):
        e = apply_permutation(d, p)
        counts[e] = counts.get(e, 0) + 1
    return IntegerProfile(d.n, tuple(sorted(counts.items(), key=lambda cm: cm[0].code)))


def _first_triangle(d: ChoiceFunction) -> Optional[tuple[int, int, int]]:
    for a, b, c in itertools.permutations(range(d.n), 3):
        if d.winner(a, b) == b and d.winner(b, c) == c and d.winner(c, a) == a:
            return a, b, c
    return None


def _require_balanced(d: ChoiceFunction) -> None:
    _require_full(d)
    if not is_balanced(d):
        raise NotBalanced("generator is not balanced")


def triangle_profile(d: ChoiceFunction, x: int, y: int, z: int) -> WeightedProfile:
    """Induced matrix: 1 on ``x->y``, ``y->z``, ``z->x``; 1/2 everywhere else."""
    _require_balanced(d)
    if len({x, y, z}) != 3:
        raise RepeatedVertex(f"({x},{y},{z}) not distinct")
    tri = _first_triangle(d)
    if tri is None:
        raise BalancedTriangleMissing(f"no directed triangle in {d}")
    return WeightedProfile.merged(d.n, _stabilizer_block(d, tri, (x, y, z), Fraction(1)))


def cycle_profile(d: ChoiceFunction, cycle: Sequence[int]) -> WeightedProfile:
    """Fan average of triangles ``(x0, xi, xi+1)``; each cycle edge gets
    ``1/2 + 1/(2(len - 2))`` and every other pair 1/2."""
    cycle = tuple(cycle)
    if len(set(cycle)) != len(cycle):
        raise RepeatedVertex(f"cycle {cycle} repeats a vertex")
    if len(cycle) < 3:
        raise TooShort(f"cycle {cycle} has fewer than 3 vertices")
    x0 = cycle[0]
    tris = [triangle_profile(d, x0, cycle[i], cycle[i + 1]) for i in range(1, len(cycle) - 1)]
    return mix(tris)


def _canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


def covering_cycles(c: ChoiceFunction) -> list[tuple[int, ...]]:
    """One shortest cycle per edge of Tor(c), deduplicated up to rotation."""
    found: list[tuple[int, ...]] = []
    for u, v in sorted(tor_edges(c)):
        cyc = shortest_cycle_through(c, u, v)
        if cyc is None:
            raise NotPseudoBalanced(f"edge ({u},{v}) lies on no directed cycle")
        cyc = _canonical_cycle(cyc)
        if cyc not in found:
            found.append(cyc)
    return found


def _finish(stages: list[Stage], combined: WeightedProfile, target: ChoiceFunction,
            final: Optional[IntegerProfile] = None) -> SynthesisTrace:
    final = rationalize(combined) if final is None else final
    report = verify(final, target)
    if not report.passed:
        raise AssertionError(f"synthesized profile fails on pairs {report.mismatches}")
    return SynthesisTrace(tuple(stages), final)


def _tie_trace(d: ChoiceFunction, c: ChoiceFunction) -> SynthesisTrace:
    prof = tie_profile(d)
    stage = _stage("tie: all relabelings", prof.as_weighted())
    return _finish([stage], stage.profile, c, final=prof)


def synthesize_balanced(d: ChoiceFunction, c: ChoiceFunction) -> SynthesisTrace:
    _require_balanced(d)
    if d.n != c.n:
        raise DimensionMismatch("generator and target differ in n")
    if not is_pseudo_balanced(c):
        raise NotPseudoBalanced("target has an edge on no directed cycle")
    if c.is_empty:
        return _tie_trace(d, c)
    stages = [_stage(f"cycle {' '.join(map(str, cyc))}", cycle_profile(d, cyc))
              for cyc in covering_cycles(c)]
    combined = mix([s.profile for s in stages])
    stages.append(_stage("mixture", combined))
    return _finish(stages, combined, c)


def realize_balanced_target(d: ChoiceFunction, c: ChoiceFunction) -> IntegerProfile:
    return synthesize_balanced(d, c).final


def synthesize_unbalanced(d: ChoiceFunction, c: ChoiceFunction,
                          cert: Optional[FCertificate] = None) -> SynthesisTrace:
    _require_full(d)
    if d.n != c.n:
        raise DimensionMismatch("generator and target differ in n")
    if cert is None:
        cert = f_certificate(d)
    if cert is None:
        raise BalancedFamily("generator is balanced")
    if c.is_empty:
        return _tie_trace(d, c)
    stages = [_stage(f"bias {u}->{v}", pair_bias_profile(d, u, v, cert))
              for u, v in sorted(tor_edges(c))]
    combined = mix([s.profile for s in stages])
    stages.append(_stage("mixture", combined))
    return _finish(stages, combined, c)


def synthesize(d: ChoiceFunction, c: ChoiceFunction) -> SynthesisTrace:
    return synthesize_family([d], c)


def synthesize_family(generators: Sequence[ChoiceFunction], c: ChoiceFunction) -> SynthesisTrace:
    answer = decide_family_membership(generators, c)
    if not answer.member:
        raise NotRealizable("target is not pseudo-balanced and every generator is balanced")
    if answer.certificate is not None:
        return synthesize_unbalanced(answer.generator, c, answer.certificate)
    return synthesize_balanced(answer.generator, c)


def realize_target(d: ChoiceFunction, c: ChoiceFunction) -> IntegerProfile:
    """Integer profile of relabelings of ``d`` whose strict majority is ``c``."""
    return synthesize(d, c).final


def mcgarvey_classic(n: int, c: ChoiceFunction) -> IntegerProfile:
    """Two linear orders per decided pair, with tails that cancel.

    For ``b`` beating ``a`` (the rest ``z1 < ... < zk``): ``b a z1 .. zk`` and
    ``zk .. z1 b a``.  Decided pairs win 2 to 0 net; all else ties.
    """
    if c.n != n:
        raise DimensionMismatch(f"target on {c.n} candidates, n={n}")
    counts: dict[ChoiceFunction, int] = {}
    for a, b in sorted(tor_edges(c)):
        rest = [z for z in range(n) if z not in (a, b)]
        for ranking in ([b, a] + rest, rest[::-1] + [b, a]):
            voter = linear_order(n, ranking)
            counts[voter] = counts.get(voter, 0) + 1
    if not counts:
        # nothing decided: one order and its reverse tie everywhere
        base = list(range(n))
        counts = {linear_order(n, base): 1}
        rev = linear_order(n, base[::-1])
        counts[rev] = counts.get(rev, 0) + 1
    return IntegerProfile(n, tuple(sorted(counts.items(), key=lambda cm: cm[0].code)))
