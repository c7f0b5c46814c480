"""Line-based text formats for tournaments, profiles and synthesis traces.

Tournament file::

    # optional comments
    n 3
    0 1
    1 2

One directed edge ``u v`` per line (``v`` is chosen from ``{u, v}``); absent
pairs are undecided.  Profile file: the same header, then blocks
``voter <multiplicity>`` followed by that voter's edges and a blank line.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .core import ChoiceFunction, IntegerProfile, make_choice_function, pairs
from .errors import MajorityClosureError, ParseError


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def _lines(text: str):
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if line.lstrip().startswith("#"):
            continue
        yield lineno, line.strip()


def _header(lines) -> int:
    for lineno, line in lines:
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or parts[0] != "n":
            raise ParseError(f"expected header 'n <count>', got {line!r}", lineno)
        n = _int(parts[1], lineno)
        if n < 3:
            raise ParseError(f"need at least 3 candidates, got {n}", lineno)
        return n
    raise ParseError("missing header 'n <count>'")


def _edge(line: str, lineno: int, n: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"expected an edge 'u v', got {line!r}", lineno)
    u, v = _int(parts[0], lineno), _int(parts[1], lineno)
    if not (0 <= u < n and 0 <= v < n):
        raise ParseError(f"index out of range 0..{n - 1} in {line!r}", lineno)
    if u == v:
        raise ParseError(f"self-loop {line!r}", lineno)
    return u, v


def _build(n: int, edges: list[tuple[int, int, int]]) -> ChoiceFunction:
    seen: dict[frozenset, int] = {}
    for u, v, lineno in edges:
        key = frozenset((u, v))
        if key in seen:
            raise ParseError(f"pair {{{u},{v}}} already given on line {seen[key]}", lineno)
        seen[key] = lineno
    try:
        return make_choice_function(n, [(u, v) for u, v, _ in edges])
    except MajorityClosureError as exc:
        raise ParseError(str(exc)) from exc


def parse_tournament(text: str) -> ChoiceFunction:
    lines = _lines(text)
    n = _header(lines)
    edges = []
    for lineno, line in lines:
        if line:
            edges.append((*_edge(line, lineno, n), lineno))
    return _build(n, edges)


def format_edges(c: ChoiceFunction) -> list[str]:
    return [f"{u} {v}" for u, v in c.sorted_edges()]


def format_tournament(c: ChoiceFunction) -> str:
    return "\n".join([f"n {c.n}"] + format_edges(c)) + "\n"


def parse_profile(text: str) -> IntegerProfile:
    lines = _lines(text)
    n = _header(lines)
    voters = []
    current = None

    def close():
        if current is not None:
            mult, edges = current
            voters.append((_build(n, edges), mult))

    for lineno, line in lines:
        if not line:
            close()
            current = None
            continue
        parts = line.split()
        if parts[0] == "voter":
            close()
            if len(parts) != 2:
                raise ParseError(f"expected 'voter <multiplicity>', got {line!r}", lineno)
            mult = _int(parts[1], lineno)
            if mult < 1:
                raise ParseError(f"multiplicity must be positive, got {mult}", lineno)
            current = (mult, [])
        else:
            if current is None:
                raise ParseError("edge line outside a voter block", lineno)
            current[1].append((*_edge(line, lineno, n), lineno))
    close()
    if not voters:
        raise ParseError("profile has no voters")
    return IntegerProfile(n, tuple(voters))


def format_profile(p: IntegerProfile) -> str:
    out = [f"n {p.n}"]
    for c, mult in sorted(p.voters, key=lambda cm: cm[0].code):
        out.append(f"voter {mult}")
        out.extend(format_edges(c))
        out.append("")
    return "\n".join(out) + "\n"


def format_trace(stages: Iterable) -> str:
    """Stage-by-stage voters and induced matrices, rationals as ``p/q``."""
    out = []
    for stage in stages:
        out.append(f"stage {stage.label}")
        for c, w in stage.profile.voters:
            out.append(f"voter {format_rational(w)} " + " ".join(f"{u}->{v}" for u, v in c.sorted_edges()))
        out.append("matrix")
        for (x, y), t in zip(pairs(stage.matrix.n), stage.matrix.upper):
            out.append(f"{x} {y} {format_rational(t)}")
        out.append("")
    return "\n".join(out) + "\n"
