"""Exhaustive small-n sweeps: decision vs brute-force oracle, synthesis of
every realizable target, and the balance-taxonomy census."""
from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .balance import (is_balanced, is_partition_balanced, is_partition_plus_balanced,
                      is_pseudo_balanced, is_weight_balanced)
from .core import ChoiceFunction, all_full, all_functions, from_code
from .errors import ScopeTooLarge, TooFewCandidates
from .generators import cyclic, linear, random_tournament
from .realizability import decide_membership, oracle_membership
from .synthesis import realize_target
from .verify import verify

MAX_N = 5


class Mode(str, enum.Enum):
    DECIDE_VS_ORACLE = "decide-vs-oracle"
    SYNTHESIZE_ALL = "synthesize-all"
    CLASSIFY = "classify"


@dataclass
class EnumerationReport:
    n: int
    mode: Mode
    families_tested: int = 0
    targets_tested: int = 0
    agreements: int = 0
    disagreements: list = field(default_factory=list)
    realizable_count: int = 0
    pseudo_balanced_count: int = 0
    counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def lines(self) -> list[str]:
        out = [f"mode: {self.mode.value}", f"n: {self.n}"]
        if self.mode is Mode.CLASSIFY:
            k = self.counts
            out.append(f"full: {k['full']}, pseudo-balanced: {k['full_pseudo']}; "
                       f"partial: {k['all']}, pseudo-balanced: {k['all_pseudo']}")
            out.append(f"strong tournaments: {k['full_pseudo']}")
        out.append(f"families tested: {self.families_tested}")
        out.append(f"targets tested: {self.targets_tested}")
        out.append(f"agreements: {self.agreements}")
        out.append(f"realizable: {self.realizable_count}")
        out.append(f"pseudo-balanced: {self.pseudo_balanced_count}")
        out.append(f"disagreements: {len(self.disagreements)}")
        if self.disagreements:
            out.append(f"first disagreement: {self.disagreements[0]}")
        return out

    def machine_lines(self) -> list[str]:
        out = [f"mode={self.mode.value}", f"n={self.n}",
               f"families_tested={self.families_tested}",
               f"targets_tested={self.targets_tested}", f"agreements={self.agreements}",
               f"disagreements={len(self.disagreements)}",
               f"realizable_count={self.realizable_count}",
               f"pseudo_balanced_count={self.pseudo_balanced_count}"]
        out += [f"{k}={v}" for k, v in sorted(self.counts.items())]
        return out

    def render(self) -> str:
        return "\n".join(self.lines() + ["", "# machine-readable"] + self.machine_lines()) + "\n"


def default_generators(n: int) -> list[ChoiceFunction]:
    """All full generators for n <= 4; a fixed sample at n = 5."""
    if n <= 4:
        return list(all_full(n))
    return [cyclic(n), linear(n), random_tournament(n, seed=1)]


def default_targets(n: int, mode: Mode) -> list[ChoiceFunction]:
    if n == 3:
        return list(all_functions(3))
    return list(all_full(n))


def _check_scope(n: int) -> None:
    if n < 3:
        raise TooFewCandidates(f"need at least 3 candidates, got {n}")
    if n > MAX_N:
        raise ScopeTooLarge(f"exhaustive sweeps are limited to n <= {MAX_N}")


def _pmap(fn: Callable, items: Sequence, workers: int) -> list:
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * workers))))


def _decide_vs_oracle(job):
    """(realizable, agrees, pseudo-balanced target, oracle verdict)."""
    n, dcode, ccode = job
    d, c = from_code(n, dcode), from_code(n, ccode)
    decided, checked = decide_membership(d, c).member, oracle_membership(d, c)
    return decided, decided == checked, is_pseudo_balanced(c), checked


def _synthesize(job):
    """(realizable, verified or nothing to build, pseudo-balanced target, verified)."""
    n, dcode, ccode = job
    d, c = from_code(n, dcode), from_code(n, ccode)
    if not decide_membership(d, c).member:
        return False, True, is_pseudo_balanced(c), None
    passed = verify(realize_target(d, c), c).passed
    return True, passed, is_pseudo_balanced(c), passed


def _classify(code_n):
    code, n = code_n
    c = from_code(n, code)
    pseudo = is_pseudo_balanced(c)
    return (c.is_full, pseudo, is_weight_balanced(c), is_partition_balanced(c),
            is_partition_plus_balanced(c), c.is_full and is_balanced(c))


def enumerate_check(n: int, mode: Mode | str,
                    generators: Optional[Iterable[ChoiceFunction]] = None,
                    targets: Optional[Iterable[ChoiceFunction]] = None,
                    workers: int = 1) -> EnumerationReport:
    """Run one sweep; the report is identical for any worker count."""
    _check_scope(n)
    mode = Mode(mode)
    report = EnumerationReport(n, mode)

    if mode is Mode.CLASSIFY:
        funcs = list(targets) if targets is not None else list(all_functions(n))
        rows = _pmap(_classify, [(c.code, n) for c in funcs], workers)
        counts = dict.fromkeys(
            ["full", "full_pseudo", "full_weight", "full_partition", "full_partition_plus",
             "full_balanced", "all", "all_pseudo", "all_weight", "all_partition"], 0)
        report.families_tested = 1
        report.targets_tested = len(funcs)
        for c, (full, pseudo, weight, part, part_plus, bal) in zip(funcs, rows):
            counts["all"] += 1
            counts["all_pseudo"] += pseudo
            counts["all_weight"] += weight
            counts["all_partition"] += part
            if full:
                counts["full"] += 1
                counts["full_pseudo"] += pseudo
                counts["full_weight"] += weight
                counts["full_partition"] += part
                counts["full_partition_plus"] += part_plus
                counts["full_balanced"] += bal
            report.pseudo_balanced_count += pseudo
            broken = (weight != pseudo or (weight and not part)
                      or (full and part != part_plus) or (full and weight and not part_plus))
            if broken:
                report.disagreements.append({"target": c, "pseudo": pseudo, "weight": weight,
                                             "partition": part, "partition_plus": part_plus})
            else:
                report.agreements += 1
        report.counts = counts
        return report

    gens = list(generators) if generators is not None else default_generators(n)
    tgts = list(targets) if targets is not None else default_targets(n, mode)
    report.families_tested = len(gens)
    report.targets_tested = len(tgts)
    jobs = [(n, d.code, c.code) for d in gens for c in tgts]
    fn = _decide_vs_oracle if mode is Mode.DECIDE_VS_ORACLE else _synthesize
    for (_, dcode, ccode), (realizable, agrees, pseudo, checked) in zip(jobs, _pmap(fn, jobs, workers)):
        report.realizable_count += realizable
        report.pseudo_balanced_count += pseudo
        if agrees:
            report.agreements += 1
        else:
            report.disagreements.append({"generator": from_code(n, dcode),
                                         "target": from_code(n, ccode),
                                         "decided": realizable, "checked": checked})
    return report
