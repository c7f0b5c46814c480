"""Valencies, valency-pair point sets, pair statistics and stabilizer averages."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .config import limits
from .core import (UNDEFINED, ChoiceFunction, ProbMatrix, apply_permutation,
                   convex_combine, pairs, permutations_fixing, prob_of)
from .errors import NotFull, OutOfUnitInterval, SamePair

Point = tuple[Fraction, Fraction]
PointSet = Mapping[Point, tuple[tuple[int, int], ...]]


def valency(c: ChoiceFunction, x: int) -> Fraction:
    """Pairs containing ``x`` that ``x`` loses, plus half the undecided ones."""
    lost = undecided = 0
    for y in range(c.n):
        if y == x:
            continue
        w = c.winner(x, y)
        if w is UNDEFINED:
            undecided += 1
        elif w == y:
            lost += 1
    return Fraction(2 * lost + undecided, 2)


def valencies(c: ChoiceFunction) -> tuple[Fraction, ...]:
    lost = [0] * c.n
    undecided = [0] * c.n
    for (x, y), w in zip(pairs(c.n), c.decisions):
        if w is UNDEFINED:
            undecided[x] += 1
            undecided[y] += 1
        else:
            lost[y if w == x else x] += 1
    return tuple(Fraction(2 * a + b, 2) for a, b in zip(lost, undecided))


@dataclass(frozen=True)
class ValencySignature:
    """Valencies and the point sets built from them.

    Each point set maps a 2-D point to the sorted ordered pairs witnessing it;
    the first witness is the lexicographically least.
    """
    n: int
    val: tuple[Fraction, ...]
    V0: PointSet
    V1: PointSet
    Vhalf: PointSet
    V0star: PointSet
    V1star: PointSet

    def witness(self, side: int, point: Point) -> tuple[int, int]:
        return (self.V1star if side else self.V0star)[point][0]


def _collect(items: Iterable[tuple[Point, tuple[int, int]]]) -> dict:
    acc: dict = {}
    for p, w in items:
        acc.setdefault(p, []).append(w)
    return {p: tuple(sorted(ws)) for p, ws in sorted(acc.items())}


def valency_signature(c: ChoiceFunction) -> ValencySignature:
    val = valencies(c)
    v0, v1, vh = [], [], []
    for x0 in range(c.n):
        for x1 in range(c.n):
            if x0 == x1:
                continue
            w = c.winner(x0, x1)
            p = (val[x0], val[x1])
            if w is UNDEFINED:
                vh.append((p, (x0, x1)))
            elif w == x1:
                v1.append((p, (x0, x1)))
            else:
                v0.append((p, (x0, x1)))
    one = Fraction(1)
    return ValencySignature(
        n=c.n, val=val,
        V0=_collect(v0), V1=_collect(v1), Vhalf=_collect(vh),
        V0star=_collect(((a, b - one), w) for (a, b), w in v0),
        V1star=_collect(((a - one, b), w) for (a, b), w in v1),
    )


def _require_full(c: ChoiceFunction) -> None:
    if not c.is_full:
        raise NotFull("operation needs a full choice function")


def pair_statistic(c: ChoiceFunction, x: int, y: int) -> tuple[int, Fraction, Fraction]:
    """``(l, s0, s1)``: whether ``y`` wins ``{x, y}``, and the fractions of the
    other candidates ``z`` that beat ``x`` and that beat ``y``."""
    _require_full(c)
    if x == y:
        raise SamePair(f"x = y = {x}")
    ell = 1 if c.winner(x, y) == y else 0
    others = [z for z in range(c.n) if z not in (x, y)]
    s0 = Fraction(sum(c.winner(x, z) == z for z in others), c.n - 2)
    s1 = Fraction(sum(c.winner(y, z) == z for z in others), c.n - 2)
    return ell, s0, s1


def pair_statistic_from_valency(c: ChoiceFunction, x: int, y: int) -> tuple[int, Fraction, Fraction]:
    """Same triple as :func:`pair_statistic`, computed from the two valencies."""
    _require_full(c)
    if x == y:
        raise SamePair(f"x = y = {x}")
    ell = 1 if c.winner(x, y) == y else 0
    return (ell, (valency(c, x) - ell) / (c.n - 2),
            (valency(c, y) - (1 - ell)) / (c.n - 2))


def biased_matrix(n: int, x: int, y: int, a, s0, s1) -> ProbMatrix:
    if x == y:
        raise SamePair(f"x = y = {x}")
    a, s0, s1 = Fraction(a), Fraction(s0), Fraction(s1)
    for v in (a, s0, s1):
        if not 0 <= v <= 1:
            raise OutOfUnitInterval(f"{v} not in [0,1]")
    entries = {(x, y): a}
    for z in range(n):
        if z not in (x, y):
            entries[x, z] = s0
            entries[y, z] = s1
    return ProbMatrix.from_entries(n, entries)


def orbit_average_enumerated(c: ChoiceFunction, fixed: Iterable[int]) -> ProbMatrix:
    """Average of ``prob_of`` over every relabeling fixing ``fixed`` pointwise."""
    fixed = set(fixed)
    limits().check_stabilizer(c.n - len(fixed))
    perms = list(permutations_fixing(c.n, fixed))
    w = Fraction(1, len(perms))
    return convex_combine([(w, prob_of(apply_permutation(c, p))) for p in perms])


def orbit_average(c: ChoiceFunction, fixed: Iterable[int]) -> ProbMatrix:
    fixed = sorted(set(fixed))
    if len(fixed) == 2 and c.is_full:
        x, y = fixed
        return biased_matrix(c.n, x, y, *pair_statistic(c, x, y))
    return orbit_average_enumerated(c, fixed)

