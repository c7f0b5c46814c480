"""Ground-truth pairwise majority of a profile, abstentions counting half."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from .core import (UNDEFINED, ChoiceFunction, IntegerProfile, WeightedProfile,
                   pairs)
from .errors import DimensionMismatch

Profile = Union[IntegerProfile, WeightedProfile]


class Outcome(str, enum.Enum):
    WIN = "win"
    TIE = "tie"


class PairResult(NamedTuple):
    winner: Optional[int]
    winner_count: Fraction
    loser_count: Fraction
    outcome: Outcome


def pair_masses(p: Profile) -> dict[tuple[int, int], tuple[Fraction, Fraction]]:
    """``(x, y) -> (mass for x, mass for y)`` for every ``x < y``."""
    out = {}
    for k, (x, y) in enumerate(pairs(p.n)):
        mx = my = Fraction(0)
        for voter, weight in p.voters:
            w = voter.decisions[k]
            if w is UNDEFINED:
                mx += Fraction(weight, 2)
                my += Fraction(weight, 2)
            elif w == y:
                my += weight
            else:
                mx += weight
        out[x, y] = (mx, my)
    return out


def tally(p: Profile) -> dict[tuple[int, int], PairResult]:
    out = {}
    for (x, y), (mx, my) in pair_masses(p).items():
        if mx == my:
            out[x, y] = PairResult(None, mx, my, Outcome.TIE)
        elif my > mx:
            out[x, y] = PairResult(y, my, mx, Outcome.WIN)
        else:
            out[x, y] = PairResult(x, mx, my, Outcome.WIN)
    return out


def majority_of_profile(p: Profile) -> ChoiceFunction:
    res = tally(p)
    return ChoiceFunction._trusted(p.n, tuple(res[xy].winner for xy in pairs(p.n)))


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    per_pair: dict[tuple[int, int], PairResult]
    mismatches: tuple[tuple[int, int], ...]

    @property
    def pass_(self) -> bool:
        return self.passed

    def render(self) -> str:
        lines = ["pair  winner  for  against  outcome  status"]
        for (x, y), r in self.per_pair.items():
            status = "MISMATCH" if (x, y) in self.mismatches else "ok"
            win = "-" if r.winner is None else str(r.winner)
            lines.append(f"{x} {y}  {win}  {_fmt(r.winner_count)}  {_fmt(r.loser_count)}  "
                         f"{r.outcome.value}  {status}")
        lines.append(f"result: {'pass' if self.passed else 'fail'}, "
                     f"mismatches: {len(self.mismatches)}")
        return "\n".join(lines)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def verify(p: Profile, target: ChoiceFunction) -> VerificationReport:
    if p.n != target.n:
        raise DimensionMismatch(f"profile on {p.n} candidates, target on {target.n}")
    res = tally(p)
    mismatches = tuple(xy for xy, w in zip(pairs(p.n), target.decisions)
                       if res[xy].winner != w)
    return VerificationReport(not mismatches, res, mismatches)
