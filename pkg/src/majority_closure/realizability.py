"""Deciding whether a target is a strict majority of relabeled copies of a
generator, with certificates for both answers."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .balance import is_balanced, is_pseudo_balanced, strong_components, _successors
from .core import HALF, UNDEFINED, ChoiceFunction, pairs, sym_closure
from .errors import DimensionMismatch, NotFull
from .lp import LinearProgram, Status, max_margin_feasible, solve, verify_farkas
from .valency import Point, valencies, valency_signature


@dataclass(frozen=True)
class SupportEntry:
    point: Point
    witness: tuple[int, int]
    weight: Fraction


@dataclass(frozen=True)
class FCertificate:
    """Weights on shifted valency points hitting ``(n/2 - 1, n/2 - 1)`` with
    side-1 mass ``r1 != 1/2``."""
    n: int
    r0: Fraction
    r1: Fraction
    support0: tuple[SupportEntry, ...]
    support1: tuple[SupportEntry, ...]

    @property
    def target(self) -> Point:
        h = Fraction(self.n, 2) - 1
        return (h, h)


def certificate_problems(cert: FCertificate, d: ChoiceFunction) -> list[str]:
    """Arithmetic re-check of every certificate invariant; empty when valid."""
    problems = []
    val = valencies(d)
    if cert.r0 != sum((e.weight for e in cert.support0), Fraction(0)):
        problems.append("r0 differs from side-0 weight total")
    if cert.r1 != sum((e.weight for e in cert.support1), Fraction(0)):
        problems.append("r1 differs from side-1 weight total")
    if cert.r0 + cert.r1 != 1:
        problems.append("r0 + r1 != 1")
    if cert.r1 == HALF:
        problems.append("r1 == 1/2")
    sx = sy = Fraction(0)
    for side, entries in ((0, cert.support0), (1, cert.support1)):
        for e in entries:
            if e.weight <= 0:
                problems.append(f"non-positive weight at {e.point}")
            u, v = e.witness
            if u == v or d.winner(u, v) != (v if side else u):
                problems.append(f"witness {e.witness} is not a side-{side} pair")
            expected = (val[u] - 1, val[v]) if side else (val[u], val[v] - 1)
            if expected != e.point:
                problems.append(f"witness {e.witness} gives {expected}, not {e.point}")
            sx += e.weight * e.point[0]
            sy += e.weight * e.point[1]
    if (sx, sy) != cert.target:
        problems.append(f"weighted sum {(sx, sy)} misses {cert.target}")
    return problems


def has_clause_g(d: ChoiceFunction) -> bool:
    """Some valency differs from (n-1)/2."""
    if not d.is_full:
        raise NotFull("generator must be full")
    return not is_balanced(d)


def _certificate_variables(d: ChoiceFunction):
    sig = valency_signature(d)
    variables = [(0, p) for p in sig.V0star] + [(1, p) for p in sig.V1star]
    return sig, variables


def _certificate_rows(d, variables):
    h = Fraction(d.n, 2) - 1
    return [
        ([1] * len(variables), 1),
        ([p[0] for _, p in variables], h),
        ([p[1] for _, p in variables], h),
    ]


def _small_support(variables, target: Point, r1: Fraction):
    """Weights on one or two points reaching ``target`` with side-1 mass ``r1``."""
    for j, (side, p) in enumerate(variables):
        if p == target and Fraction(side) == r1:
            return {j: Fraction(1)}
    for (i, (si, p)), (j, (sj, q)) in itertools.combinations(enumerate(variables), 2):
        # lam * p + (1 - lam) * q == target
        lam = None
        for a, b, t in zip(p, q, target):
            if a != b:
                cand = (t - b) / (a - b)
                if lam is not None and cand != lam:
                    lam = None
                    break
                lam = cand
            elif a != t:
                lam = None
                break
        else:
            if lam is None:
                continue
        if lam is None or not 0 < lam < 1:
            continue
        if lam * si + (1 - lam) * sj == r1:
            return {i: lam, j: 1 - lam}
    return None


def f_certificate(d: ChoiceFunction) -> Optional[FCertificate]:
    """Asymmetric valency certificate for the relabelings of ``d``, or None.

    The side-1 mass is pushed to its maximum (or, failing that, minimum);
    among representations at that mass the one with fewest support points
    is preferred, then the simplex vertex.
    """
    if not d.is_full:
        raise NotFull("generator must be full")
    sig, variables = _certificate_variables(d)
    rows = _certificate_rows(d, variables)
    side1 = [side for side, _ in variables]
    r1 = point = None
    for sense, better in (("maximize", lambda v: v > HALF), ("minimize", lambda v: v < HALF)):
        out = solve(LinearProgram(len(variables), side1, equalities=rows, sense=sense))
        if out.status is Status.OPTIMAL and better(out.value):
            r1, point = out.value, out.point
            break
    if r1 is None:
        return None
    h = Fraction(d.n, 2) - 1
    small = _small_support(variables, (h, h), r1)
    weights = small if small is not None else {j: w for j, w in enumerate(point) if w}
    supports: tuple[list, list] = ([], [])
    for j in sorted(weights, key=lambda j: variables[j]):
        side, p = variables[j]
        supports[side].append(SupportEntry(p, sig.witness(side, p), weights[j]))
    cert = FCertificate(d.n, 1 - r1, r1, tuple(supports[0]), tuple(supports[1]))
    problems = certificate_problems(cert, d)
    if problems:
        raise AssertionError(f"certificate failed self-check: {problems}")
    return cert


@dataclass(frozen=True)
class CertificateObstruction:
    """Farkas witnesses showing no asymmetric valency certificate exists.

    ``above``/``below`` refute side-1 mass strictly above/below 1/2 via the
    homogenized systems ``{A w - b tau = 0, ±(R(w) - tau/2) = 1, w, tau >= 0}``.
    """
    above: LinearProgram
    above_farkas: tuple[Fraction, ...]
    below: LinearProgram
    below_farkas: tuple[Fraction, ...]

    def verify(self) -> bool:
        return (verify_farkas(self.above, self.above_farkas)
                and verify_farkas(self.below, self.below_farkas))


def strict_certificate_systems(d: ChoiceFunction) -> tuple[LinearProgram, LinearProgram]:
    """Pure systems feasible iff a certificate with ``r1 > 1/2`` (resp. ``< 1/2``) exists."""
    _, variables = _certificate_variables(d)
    rows = _certificate_rows(d, variables)
    homog = [([Fraction(a) for a in coeffs] + [-Fraction(b)], 0) for coeffs, b in rows]
    side1 = [Fraction(side) for side, _ in variables]
    above = homog + [(side1 + [-HALF], 1)]
    below = homog + [([-s for s in side1] + [HALF], 1)]
    nv = len(variables) + 1
    zero = [0] * nv
    return (LinearProgram(nv, zero, equalities=above),
            LinearProgram(nv, zero, equalities=below))


def certificate_obstruction(d: ChoiceFunction) -> Optional[CertificateObstruction]:
    """Verified Farkas witnesses when both strict systems are infeasible."""
    if not d.is_full:
        raise NotFull("generator must be full")
    above, below = strict_certificate_systems(d)
    a, b = solve(above), solve(below)
    if a.status is not Status.INFEASIBLE or b.status is not Status.INFEASIBLE:
        return None
    obstruction = CertificateObstruction(above, a.farkas, below, b.farkas)
    if not obstruction.verify():
        raise AssertionError("Farkas witness failed verification")
    return obstruction


class Reason(str, enum.Enum):
    CLAUSE_G = "clause-g"
    PSEUDO_BALANCED = "pseudo-balanced"
    NOT_PSEUDO_BALANCED = "not-pseudo-balanced"


@dataclass(frozen=True)
class MembershipAnswer:
    member: bool
    reason: Reason
    certificate: Optional[FCertificate] = None
    farkas: Optional[CertificateObstruction] = None
    # for negative answers: a vertex set entered by a target edge and never left
    cut: Optional[frozenset[int]] = None
    generator: Optional[ChoiceFunction] = None


def _closed_cut(c: ChoiceFunction) -> Optional[frozenset[int]]:
    inter = strong_components(c).inter_edges
    if not inter:
        return None
    _, y = min(inter)
    succ = _successors(c)
    seen = {y}
    stack = [y]
    while stack:
        for w in succ[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def _check_dims(d: ChoiceFunction, c: ChoiceFunction) -> None:
    if not d.is_full:
        raise NotFull("generator must be full")
    if d.n != c.n:
        raise DimensionMismatch(f"generator on {d.n} candidates, target on {c.n}")


def decide_membership(d: ChoiceFunction, c: ChoiceFunction) -> MembershipAnswer:
    """Is ``c`` a strict majority of a distribution over relabelings of ``d``?"""
    return decide_family_membership([d], c)


def decide_family_membership(generators: Sequence[ChoiceFunction],
                             c: ChoiceFunction) -> MembershipAnswer:
    """Same question for the union of the generators' relabeling orbits.

    One unbalanced generator already realizes every target; otherwise the
    target must be pseudo-balanced.
    """
    generators = list(generators)
    if not generators:
        raise ValueError("empty family")
    for d in generators:
        _check_dims(d, c)
    for d in generators:
        if has_clause_g(d):
            cert = f_certificate(d)
            if cert is None:
                raise AssertionError(f"unbalanced generator without certificate: {d}")
            return MembershipAnswer(True, Reason.CLAUSE_G, certificate=cert, generator=d)
    if is_pseudo_balanced(c):
        return MembershipAnswer(True, Reason.PSEUDO_BALANCED, generator=generators[0])
    return MembershipAnswer(False, Reason.NOT_PSEUDO_BALANCED,
                            farkas=certificate_obstruction(generators[0]),
                            cut=_closed_cut(c), generator=generators[0])


def oracle_program(d: ChoiceFunction, c: ChoiceFunction) -> tuple[LinearProgram, list[ChoiceFunction]]:
    """Margin LP over weights on the whole relabeling orbit of ``d``."""
    _check_dims(d, c)
    orbit = sorted(sym_closure(d), key=lambda e: e.code)
    k = len(orbit)
    equalities = [([Fraction(1)] * k + [Fraction(0)], Fraction(1))]
    inequalities = []
    for idx, ((x, y), w) in enumerate(zip(pairs(c.n), c.decisions)):
        # mass for y, abstainers counting half
        mass_y = [Fraction(1) if e.decisions[idx] == y else
                  (HALF if e.decisions[idx] is UNDEFINED else Fraction(0)) for e in orbit]
        if w is UNDEFINED:
            equalities.append((mass_y + [Fraction(0)], HALF))
        else:
            mass = mass_y if w == y else [1 - m for m in mass_y]
            inequalities.append(([-m for m in mass] + [Fraction(1)], -HALF))
    return LinearProgram(k + 1, equalities=equalities, inequalities=inequalities), orbit


def oracle_membership(d: ChoiceFunction, c: ChoiceFunction) -> bool:
    """Brute-force ground truth by LP over the full relabeling orbit."""
    lp, _ = oracle_program(d, c)
    ok, _ = max_margin_feasible(lp)
    return ok
