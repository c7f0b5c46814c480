"""Choice functions on pairs, probability matrices, profiles and the
permutation action on them.

Candidates are the integers ``0..n-1``.  A choice function stores one
decision per unordered pair ``{x, y}`` (``x < y``, lexicographic order): the
winner, or :data:`UNDEFINED` for an abstention.  A directed edge ``(x, y)``
means ``y`` is chosen from ``{x, y}``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .config import limits
from .errors import (ConflictingEdge, DimensionMismatch, IndexOutOfRange,
                     TooFewCandidates, WeightsDoNotSumToOne)

UNDEFINED = None
HALF = Fraction(1, 2)


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Unordered pairs ``(x, y)`` with ``x < y`` in lexicographic order."""
    return tuple(itertools.combinations(range(n), 2))


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict[tuple[int, int], int]:
    index = {}
    for k, (x, y) in enumerate(pairs(n)):
        index[x, y] = k
        index[y, x] = k
    return index


def _check_n(n: int) -> None:
    if n < 3:
        raise TooFewCandidates(f"need at least 3 candidates, got {n}")


@dataclass(frozen=True)
class ChoiceFunction:
    n: int
    decisions: tuple

    def __post_init__(self):
        _check_n(self.n)
        ps = pairs(self.n)
        if len(self.decisions) != len(ps):
            raise DimensionMismatch(
                f"expected {len(ps)} decisions for n={self.n}, got {len(self.decisions)}")
        for (x, y), w in zip(ps, self.decisions):
            if w is not UNDEFINED and w != x and w != y:
                raise ValueError(f"winner {w} is not a member of pair {{{x},{y}}}")

    @classmethod
    def _trusted(cls, n: int, decisions: tuple) -> "ChoiceFunction":
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "decisions", decisions)
        return obj

    def winner(self, x: int, y: int):
        return self.decisions[pair_index(self.n)[x, y]]

    @property
    def is_full(self) -> bool:
        return UNDEFINED not in self.decisions

    @property
    def is_empty(self) -> bool:
        return all(w is UNDEFINED for w in self.decisions)

    def edges(self) -> frozenset[tuple[int, int]]:
        return tor_edges(self)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tor_edges(self))

    @property
    def code(self) -> int:
        """Base-3 encoding: digit 0 undefined, 1 for ``x -> y``, 2 for ``y -> x``.

        Pair ``k`` (lexicographic) carries weight ``3**k``.  Restricted to full
        functions the order agrees with the edge bitmap ``sum(bit_k * 2**k)``.
        """
        code = 0
        for k, ((x, y), w) in enumerate(zip(pairs(self.n), self.decisions)):
            if w is not UNDEFINED:
                code += (1 if w == y else 2) * 3 ** k
        return code

    def __repr__(self):
        return f"ChoiceFunction(n={self.n}, edges={self.sorted_edges()})"


def make_choice_function(n: int, edges: Iterable[tuple[int, int]]) -> ChoiceFunction:
    """Build the choice function whose tournament has exactly ``edges``."""
    _check_n(n)
    index = pair_index(n)
    decisions: list = [UNDEFINED] * len(pairs(n))
    seen = {}
    for x, y in edges:
        if not (0 <= x < n and 0 <= y < n):
            raise IndexOutOfRange(f"edge ({x},{y}) outside 0..{n - 1}")
        if x == y:
            raise IndexOutOfRange(f"self-loop ({x},{y})")
        k = index[x, y]
        if k in seen and seen[k] != y:
            raise ConflictingEdge(f"both ({x},{y}) and ({y},{x}) given")
        seen[k] = y
        decisions[k] = y
    return ChoiceFunction._trusted(n, tuple(decisions))


def empty_function(n: int) -> ChoiceFunction:
    _check_n(n)
    return ChoiceFunction._trusted(n, (UNDEFINED,) * len(pairs(n)))


def from_code(n: int, code: int) -> ChoiceFunction:
    decisions = []
    for x, y in pairs(n):
        code, digit = divmod(code, 3)
        decisions.append(UNDEFINED if digit == 0 else (y if digit == 1 else x))
    return ChoiceFunction._trusted(n, tuple(decisions))


def all_full(n: int) -> Iterator[ChoiceFunction]:
    """Every full choice function on ``n`` candidates, in edge-bitmap order."""
    ps = pairs(n)
    for bits in range(2 ** len(ps)):
        yield ChoiceFunction._trusted(
            n, tuple(y if bits >> k & 1 == 0 else x for k, (x, y) in enumerate(ps)))


def all_functions(n: int) -> Iterator[ChoiceFunction]:
    """Every (partial) choice function, in base-3 code order."""
    for code in range(3 ** len(pairs(n))):
        yield from_code(n, code)


def tor_edges(c: ChoiceFunction) -> frozenset[tuple[int, int]]:
    return frozenset((y if w == x else x, w)
                     for (x, y), w in zip(pairs(c.n), c.decisions) if w is not UNDEFINED)


def linear_order(n: int, ranking: Sequence[int]) -> ChoiceFunction:
    """Voter preferring ``ranking[0]`` over ``ranking[1]`` over ... ."""
    pos = {v: i for i, v in enumerate(ranking)}
    if sorted(pos) != list(range(n)):
        raise ValueError(f"ranking must list each of 0..{n - 1} once")
    return ChoiceFunction._trusted(
        n, tuple(x if pos[x] < pos[y] else y for x, y in pairs(n)))


def dual(c: ChoiceFunction) -> ChoiceFunction:
    return ChoiceFunction._trusted(c.n, tuple(
        UNDEFINED if w is UNDEFINED else (y if w == x else x)
        for (x, y), w in zip(pairs(c.n), c.decisions)))


# -- permutations ---------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self ∘ other``: apply ``other`` first."""
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))


def _images(pi) -> tuple[int, ...]:
    return pi.images if isinstance(pi, Permutation) else tuple(pi)


def apply_permutation(c: ChoiceFunction, pi) -> ChoiceFunction:
    """Relabel ``c``: the result picks ``pi(y)`` from ``{pi(x), pi(y)}``
    exactly when ``c`` picks ``y`` from ``{x, y}``."""
    img = _images(pi)
    if len(img) != c.n:
        raise DimensionMismatch(f"permutation on {len(img)} points, function on {c.n}")
    index = pair_index(c.n)
    out: list = [UNDEFINED] * len(c.decisions)
    for (x, y), w in zip(pairs(c.n), c.decisions):
        if w is not UNDEFINED:
            out[index[img[x], img[y]]] = img[w]
    return ChoiceFunction._trusted(c.n, tuple(out))


def permutations_fixing(n: int, fixed: Iterable[int] = ()) -> Iterator[tuple[int, ...]]:
    """All permutations fixing ``fixed`` pointwise, lexicographic in images."""
    fixed = sorted(set(fixed))
    free = [i for i in range(n) if i not in fixed]
    base = list(range(n))
    for perm in itertools.permutations(free):
        img = base[:]
        for src, dst in zip(free, perm):
            img[src] = dst
        yield tuple(img)


def least_permutation_mapping(n: int, sources: Sequence[int],
                              targets: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least permutation sending ``sources[i]`` to ``targets[i]``."""
    img = [-1] * n
    for s, t in zip(sources, targets):
        img[s] = t
    rest = iter(sorted(set(range(n)) - set(targets)))
    for i in range(n):
        if img[i] < 0:
            img[i] = next(rest)
    return tuple(img)


def sym_closure(d: ChoiceFunction) -> frozenset[ChoiceFunction]:
    limits().check_group(d.n)
    return frozenset(apply_permutation(d, p) for p in itertools.permutations(range(d.n)))


# -- probability matrices -------------------------------------------------

@dataclass(frozen=True)
class ProbMatrix:
    """Pairwise weights ``t[x, y]`` with ``t[x, y] + t[y, x] == 1``.

    Only the entries with ``x < y`` are stored, so the complement invariant
    holds by construction.
    """
    n: int
    upper: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.upper) != len(pairs(self.n)):
            raise DimensionMismatch("wrong number of entries")
        for t in self.upper:
            if not 0 <= t <= 1:
                raise ValueError(f"entry {t} outside [0,1]")

    @classmethod
    def _trusted(cls, n: int, upper: tuple) -> "ProbMatrix":
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "upper", upper)
        return obj

    @classmethod
    def from_entries(cls, n: int, entries: dict) -> "ProbMatrix":
        """Build from ordered-pair entries; missing pairs default to 1/2."""
        upper = []
        for x, y in pairs(n):
            if (x, y) in entries:
                t = Fraction(entries[x, y])
                if (y, x) in entries and Fraction(entries[y, x]) != 1 - t:
                    raise ValueError(f"entries at ({x},{y}) and ({y},{x}) do not sum to 1")
            elif (y, x) in entries:
                t = 1 - Fraction(entries[y, x])
            else:
                t = HALF
            upper.append(t)
        return cls(n, tuple(upper))

    @classmethod
    def half(cls, n: int) -> "ProbMatrix":
        return cls._trusted(n, (HALF,) * len(pairs(n)))

    def __getitem__(self, xy: tuple[int, int]) -> Fraction:
        x, y = xy
        t = self.upper[pair_index(self.n)[x, y]]
        return t if x < y else 1 - t

    def entries(self) -> dict[tuple[int, int], Fraction]:
        out = {}
        for (x, y), t in zip(pairs(self.n), self.upper):
            out[x, y] = t
            out[y, x] = 1 - t
        return out

    def row_sum(self, x: int) -> Fraction:
        return sum((self[x, y] for y in range(self.n) if y != x), Fraction(0))


def dual_matrix(t: ProbMatrix) -> ProbMatrix:
    return ProbMatrix._trusted(t.n, tuple(1 - v for v in t.upper))


def permute_matrix(t: ProbMatrix, pi) -> ProbMatrix:
    """``t'[pi(x), pi(y)] = t[x, y]``."""
    img = _images(pi)
    index = pair_index(t.n)
    out = [HALF] * len(t.upper)
    for (x, y), v in zip(pairs(t.n), t.upper):
        u, w = img[x], img[y]
        out[index[u, w]] = v if u < w else 1 - v
    return ProbMatrix._trusted(t.n, tuple(out))


_ONE, _ZERO = Fraction(1), Fraction(0)


def prob_of(d: ChoiceFunction) -> ProbMatrix:
    return ProbMatrix._trusted(d.n, tuple(
        HALF if w is UNDEFINED else (_ONE if w == y else _ZERO)
        for (x, y), w in zip(pairs(d.n), d.decisions)))


def maj(t: ProbMatrix) -> ChoiceFunction:
    return ChoiceFunction._trusted(t.n, tuple(
        y if v > HALF else (x if v < HALF else UNDEFINED)
        for (x, y), v in zip(pairs(t.n), t.upper)))


def convex_combine(parts: Sequence[tuple[Fraction, ProbMatrix]]) -> ProbMatrix:
    parts = list(parts)
    if not parts:
        raise WeightsDoNotSumToOne("no parts")
    n = parts[0][1].n
    total = Fraction(0)
    acc = [Fraction(0)] * len(pairs(n))
    for w, t in parts:
        w = Fraction(w)
        if w <= 0:
            raise ValueError(f"weight {w} is not positive")
        if t.n != n:
            raise DimensionMismatch("matrices on different candidate sets")
        total += w
        for k, v in enumerate(t.upper):
            acc[k] += w * v
    if total != 1:
        raise WeightsDoNotSumToOne(f"weights sum to {total}")
    return ProbMatrix._trusted(n, tuple(acc))


# -- profiles -------------------------------------------------------------

@dataclass(frozen=True)
class WeightedProfile:
    n: int
    voters: tuple[tuple[ChoiceFunction, Fraction], ...]

    def __post_init__(self):
        for c, w in self.voters:
            if c.n != self.n:
                raise DimensionMismatch("voter on a different candidate set")
            if w <= 0:
                raise ValueError(f"voter weight {w} is not positive")
        total = sum((w for _, w in self.voters), Fraction(0))
        if total != 1:
            raise WeightsDoNotSumToOne(f"weights sum to {total}")

    @classmethod
    def merged(cls, n: int, voters: Iterable[tuple[ChoiceFunction, Fraction]]) -> "WeightedProfile":
        """Sum weights of repeated voters; order voters by their code."""
        acc: dict[ChoiceFunction, Fraction] = {}
        for c, w in voters:
            acc[c] = acc.get(c, Fraction(0)) + Fraction(w)
        return cls(n, tuple(sorted(acc.items(), key=lambda cw: cw[0].code)))

    def induced_matrix(self) -> ProbMatrix:
        return convex_combine([(w, prob_of(c)) for c, w in self.voters])


def mix(profiles: Sequence[WeightedProfile], weights: Sequence[Fraction] | None = None) -> WeightedProfile:
    """Convex mixture of weighted profiles (uniform by default)."""
    profiles = list(profiles)
    if weights is None:
        weights = [Fraction(1, len(profiles))] * len(profiles)
    n = profiles[0].n
    return WeightedProfile.merged(
        n, ((c, a * w) for a, p in zip(weights, profiles) for c, w in p.voters))


@dataclass(frozen=True)
class IntegerProfile:
    n: int
    voters: tuple[tuple[ChoiceFunction, int], ...]

    def __post_init__(self):
        if not self.voters:
            raise ValueError("profile needs at least one voter")
        for c, m in self.voters:
            if c.n != self.n:
                raise DimensionMismatch("voter on a different candidate set")
            if int(m) != m or m < 1:
                raise ValueError(f"multiplicity {m} is not a positive integer")

    @property
    def size(self) -> int:
        return sum(m for _, m in self.voters)

    def as_weighted(self) -> WeightedProfile:
        total = self.size
        return WeightedProfile.merged(self.n, ((c, Fraction(m, total)) for c, m in self.voters))

    def expanded(self) -> list[ChoiceFunction]:
        return [c for c, m in self.voters for _ in range(m)]
