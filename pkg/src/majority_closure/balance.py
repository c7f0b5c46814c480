"""Balance taxonomy of choice functions and probability matrices."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .config import limits
from .core import HALF, UNDEFINED, ChoiceFunction, ProbMatrix, pairs, tor_edges
from .lp import LinearProgram, max_margin_feasible
from .valency import valencies


def _successors(c: ChoiceFunction) -> list[list[int]]:
    succ: list[list[int]] = [[] for _ in range(c.n)]
    for x, y in sorted(tor_edges(c)):
        succ[x].append(y)
    return succ


@dataclass(frozen=True)
class SccDecomposition:
    component_of: tuple[int, ...]
    components: tuple[frozenset[int], ...]
    inter_edges: frozenset[tuple[int, int]]


def strong_components(c: ChoiceFunction) -> SccDecomposition:
    """Tarjan's algorithm on Tor(c); components are numbered by least member."""
    succ = _successors(c)
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    stack: list[int] = []
    on_stack: set[int] = set()
    found: list[frozenset[int]] = []
    counter = 0

    def visit(v: int) -> None:
        nonlocal counter
        index[v] = low[v] = counter
        counter += 1
        stack.append(v)
        on_stack.add(v)
        for w in succ[v]:
            if w not in index:
                visit(w)
                low[v] = min(low[v], low[w])
            elif w in on_stack:
                low[v] = min(low[v], index[w])
        if low[v] == index[v]:
            comp = set()
            while True:
                w = stack.pop()
                on_stack.discard(w)
                comp.add(w)
                if w == v:
                    break
            found.append(frozenset(comp))

    for v in range(c.n):
        if v not in index:
            visit(v)
    components = tuple(sorted(found, key=min))
    component_of = [0] * c.n
    for k, comp in enumerate(components):
        for v in comp:
            component_of[v] = k
    inter = frozenset((x, y) for x, y in tor_edges(c) if component_of[x] != component_of[y])
    return SccDecomposition(tuple(component_of), components, inter)


def is_balanced(c: ChoiceFunction) -> bool:
    target = Fraction(c.n - 1, 2)
    return all(v == target for v in valencies(c))


def is_balanced_matrix(t: ProbMatrix) -> bool:
    target = Fraction(t.n - 1, 2)
    return all(t.row_sum(x) == target for x in range(t.n))


def is_super_balanced(t: ProbMatrix) -> bool:
    return all(v == HALF for v in t.upper)


def is_pseudo_balanced(c: ChoiceFunction) -> bool:
    """Every edge of Tor(c) lies on a directed cycle."""
    return not strong_components(c).inter_edges


def _distances_to(succ: list[list[int]], target: int) -> list[Optional[int]]:
    pred: list[list[int]] = [[] for _ in succ]
    for x, ys in enumerate(succ):
        for y in ys:
            pred[y].append(x)
    dist: list[Optional[int]] = [None] * len(succ)
    dist[target] = 0
    queue = deque([target])
    while queue:
        v = queue.popleft()
        for u in pred[v]:
            if dist[u] is None:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def shortest_cycle_through(c: ChoiceFunction, u: int, v: int) -> Optional[tuple[int, ...]]:
    """Shortest directed cycle ``(u, v, ...)`` using the edge ``u -> v``.

    Among shortest cycles the lexicographically least is returned.  ``None``
    when no path leads from ``v`` back to ``u``.
    """
    if c.winner(u, v) != v:
        raise ValueError(f"({u},{v}) is not an edge")
    succ = _successors(c)
    # the cycle never revisits u before closing, so drop edges leaving u
    trimmed = [ys if x != u else [] for x, ys in enumerate(succ)]
    dist = _distances_to(trimmed, u)
    if dist[v] is None:
        return None
    path = [u, v]
    cur = v
    while dist[cur] > 1:
        cur = min(w for w in trimmed[cur] if dist[w] is not None and dist[w] == dist[cur] - 1)
        path.append(cur)
    return tuple(path)


def is_pseudo_balanced_by_search(c: ChoiceFunction) -> bool:
    """Per-edge cycle search; independent of the strong-component route."""
    return all(shortest_cycle_through(c, x, y) is not None for x, y in tor_edges(c))


def _subsets_by_popcount(n: int):
    full = (1 << n) - 1
    masks = [m for m in range(1, full)]
    masks.sort(key=lambda m: (bin(m).count("1"), [i for i in range(n) if m >> i & 1]))
    return masks


def _crossing(c: ChoiceFunction, mask: int) -> tuple[bool, bool]:
    """(some edge enters Y from outside, some edge leaves Y)."""
    into = out = False
    for x, y in tor_edges(c):
        xin, yin = bool(mask >> x & 1), bool(mask >> y & 1)
        if yin and not xin:
            into = True
        elif xin and not yin:
            out = True
    return into, out


def partition_violation(c: ChoiceFunction, plus: bool = False) -> Optional[frozenset[int]]:
    """First subset ``Y`` (by size, then lexicographically) breaking the
    partition (``plus=False``) or partition-plus (``plus=True``) condition."""
    limits().check_subsets(c.n)
    for mask in _subsets_by_popcount(c.n):
        into, out = _crossing(c, mask)
        if (not into) if plus else (into != out):
            return frozenset(i for i in range(c.n) if mask >> i & 1)
    return None


def is_partition_plus_balanced(c: ChoiceFunction) -> bool:
    return partition_violation(c, plus=True) is None


def is_partition_balanced(c: ChoiceFunction) -> bool:
    return partition_violation(c, plus=False) is None


def weight_balance_program(c: ChoiceFunction) -> tuple[LinearProgram, list[tuple[int, int]]]:
    """Margin LP over the decided pairs; undecided pairs are pinned at 1/2."""
    decided = [(k, xy) for k, (xy, w) in enumerate(zip(pairs(c.n), c.decisions))
               if w is not UNDEFINED]
    col = {k: j for j, (k, _) in enumerate(decided)}
    nv = len(decided) + 1
    target = Fraction(c.n - 1, 2)
    equalities = []
    for v in range(c.n):
        row = [Fraction(0)] * nv
        rhs = target
        for k, (x, y) in enumerate(pairs(c.n)):
            if v not in (x, y):
                continue
            if k not in col:
                rhs -= HALF
            elif v == x:
                row[col[k]] += 1
            else:
                row[col[k]] -= 1
                rhs -= 1
        equalities.append((row, rhs))
    inequalities = []
    for j, (k, (x, y)) in enumerate(decided):
        row = [Fraction(0)] * nv
        row[-1] = Fraction(1)
        if c.decisions[k] == y:
            row[j] = Fraction(-1)
            inequalities.append((row, -HALF))
        else:
            row[j] = Fraction(1)
            inequalities.append((row, HALF))
    uppers = [Fraction(1)] * len(decided) + [None]
    lp = LinearProgram(nv, equalities=equalities, inequalities=inequalities,
                       upper_bounds=uppers)
    return lp, [xy for _, xy in decided]


def weight_balance_witness(c: ChoiceFunction) -> Optional[ProbMatrix]:
    """A balanced matrix whose strict majority is ``c``, or None."""
    lp, decided = weight_balance_program(c)
    ok, point = max_margin_feasible(lp)
    if not ok:
        return None
    entries = {xy: t for xy, t in zip(decided, point)}
    return ProbMatrix.from_entries(c.n, entries)


def is_weight_balanced(c: ChoiceFunction) -> bool:
    return weight_balance_witness(c) is not None
