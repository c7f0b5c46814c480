from __future__ import annotations

import random

from .core import ChoiceFunction, linear_order, make_choice_function, pairs
from .errors import CyclicNeedsOddN

KINDS = ("linear", "cyclic", "random")


def linear(n: int) -> ChoiceFunction:
    """``c{i, j} = max(i, j)``; valencies ``n-1, ..., 0``."""
    return linear_order(n, list(range(n - 1, -1, -1)))


def cyclic(n: int) -> ChoiceFunction:
    """Rotational tournament: ``i -> i+j (mod n)`` for ``1 <= j <= (n-1)/2``."""
    if n % 2 == 0:
        raise CyclicNeedsOddN(f"rotational tournament needs odd n, got {n}")
    return make_choice_function(
        n, {(i, (i + j) % n) for i in range(n) for j in range(1, (n - 1) // 2 + 1)})


def random_tournament(n: int, seed: int = 0) -> ChoiceFunction:
    rng = random.Random(seed)
    return make_choice_function(n, {(x, y) if rng.random() < 0.5 else (y, x) for x, y in pairs(n)})


def generate_family(kind: str, n: int, seed: int = 0) -> ChoiceFunction:
    if kind == "linear":
        return linear(n)
    if kind == "cyclic":
        return cyclic(n)
    if kind == "random":
        return random_tournament(n, seed)
    raise ValueError(f"unknown family kind {kind!r}; expected one of {KINDS}")
