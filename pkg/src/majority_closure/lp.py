"""Exact rational linear programming.

Dense two-phase simplex over :class:`fractions.Fraction` with Bland's
anti-cycling rule.  Programs are tiny (at most a few hundred variables), so
clarity wins over speed.  Phase 1 also yields a Farkas witness when a program
in pure form (equalities, ``x >= 0``, nothing else) is infeasible.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Sequence

from .errors import MalformedProgram

Row = tuple[Sequence, object]


class Status(str, enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    """``sense`` the objective subject to equalities, ``a·x <= b`` rows and bounds.

    ``lower_bounds`` defaults to all zeros; a ``None`` entry makes that
    variable free below.  ``upper_bounds`` defaults to no upper bounds.
    """
    num_vars: int
    objective: Sequence = ()
    equalities: Sequence[Row] = ()
    inequalities: Sequence[Row] = ()
    lower_bounds: Optional[Sequence] = None
    upper_bounds: Optional[Sequence] = None
    sense: str = "maximize"

    def lower(self, j: int):
        return Fraction(0) if self.lower_bounds is None else self.lower_bounds[j]

    def upper(self, j: int):
        return None if self.upper_bounds is None else self.upper_bounds[j]

    @property
    def is_pure(self) -> bool:
        """Equalities plus nonnegativity and nothing else."""
        return (not self.inequalities
                and all(self.lower(j) == 0 for j in range(self.num_vars))
                and all(self.upper(j) is None for j in range(self.num_vars)))


@dataclass(frozen=True)
class LpOutcome:
    status: Status
    point: Optional[tuple[Fraction, ...]] = None
    value: Optional[Fraction] = None
    # For infeasible pure programs: y with y·A <= 0 columnwise and y·b > 0.
    farkas: Optional[tuple[Fraction, ...]] = field(default=None, compare=False)


def _validate(lp: LinearProgram) -> None:
    if lp.num_vars < 1:
        raise MalformedProgram("need at least one variable")
    objective = lp.objective or [0] * lp.num_vars
    if len(objective) != lp.num_vars:
        raise MalformedProgram("objective length differs from num_vars")
    for rows, kind in ((lp.equalities, "equality"), (lp.inequalities, "inequality")):
        for coeffs, _ in rows:
            if len(coeffs) != lp.num_vars:
                raise MalformedProgram(f"{kind} row of length {len(coeffs)}, expected {lp.num_vars}")
    for bounds in (lp.lower_bounds, lp.upper_bounds):
        if bounds is not None and len(bounds) != lp.num_vars:
            raise MalformedProgram("bound vector length differs from num_vars")
    if lp.sense not in ("maximize", "minimize"):
        raise MalformedProgram(f"unknown sense {lp.sense!r}")


def _pivot(T: list[list[Fraction]], cost: list[Fraction], basis: list[int], i: int, j: int) -> None:
    row = T[i]
    p = row[j]
    if p != 1:
        row = [v / p for v in row]
        T[i] = row
    nz = [k for k, v in enumerate(row) if v]
    for r, other in enumerate(T):
        if r != i:
            f = other[j]
            if f:
                for k in nz:
                    other[k] -= f * row[k]
    f = cost[j]
    if f:
        for k in nz:
            cost[k] -= f * row[k]
    basis[i] = j


def _run(T, cost, basis, allowed: int) -> bool:
    """Minimize with Bland's rule over columns ``< allowed``; False if unbounded."""
    while True:
        j = next((k for k in range(allowed) if cost[k] < 0), None)
        if j is None:
            return True
        best = None
        for i, row in enumerate(T):
            a = row[j]
            if a > 0:
                key = (row[-1] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return False
        _pivot(T, cost, basis, best[1], j)


def _standard_form(lp: LinearProgram):
    """Rewrite as ``min c·z, A z = b, z >= 0``; return the pieces plus the
    recipe ``x_j = offset_j + sum(sign * z_col)`` for recovering ``x``."""
    ncols = 0
    recipe = []
    bound_rows = []
    for j in range(lp.num_vars):
        lo, hi = lp.lower(j), lp.upper(j)
        if lo is not None:
            lo = Fraction(lo)
            recipe.append((lo, [(ncols, 1)]))
            if hi is not None:
                bound_rows.append((ncols, Fraction(hi) - lo))
            ncols += 1
        elif hi is not None:
            recipe.append((Fraction(hi), [(ncols, -1)]))
            ncols += 1
        else:
            recipe.append((Fraction(0), [(ncols, 1), (ncols + 1, -1)]))
            ncols += 2

    def expand(coeffs):
        row = [Fraction(0)] * ncols
        const = Fraction(0)
        for j, a in enumerate(coeffs):
            if a:
                a = Fraction(a)
                off, cols = recipe[j]
                const += a * off
                for col, sign in cols:
                    row[col] += sign * a
        return row, const

    rows, rhs, slack_of = [], [], []
    for coeffs, b in lp.equalities:
        row, const = expand(coeffs)
        rows.append(row)
        rhs.append(Fraction(b) - const)
        slack_of.append(False)
    for coeffs, b in lp.inequalities:
        row, const = expand(coeffs)
        rows.append(row)
        rhs.append(Fraction(b) - const)
        slack_of.append(True)
    for col, width in bound_rows:
        row = [Fraction(0)] * ncols
        row[col] = Fraction(1)
        rows.append(row)
        rhs.append(width)
        slack_of.append(True)
    nslack = sum(slack_of)
    s = ncols
    for row, has_slack in zip(rows, slack_of):
        row.extend([Fraction(0)] * nslack)
        if has_slack:
            row[s] = Fraction(1)
            s += 1
    ncols += nslack

    objective = lp.objective or [0] * lp.num_vars
    sign = -1 if lp.sense == "maximize" else 1
    cost, _ = expand([sign * Fraction(a) for a in objective])
    cost.extend([Fraction(0)] * nslack)
    return rows, rhs, cost, recipe, ncols


def solve(lp: LinearProgram) -> LpOutcome:
    _validate(lp)
    A, b, c, recipe, N = _standard_form(lp)
    m = len(A)

    # phase 1: artificial basis, rows flipped so that b >= 0
    flips = [1] * m
    T = []
    for i in range(m):
        row = A[i][:]
        rhs = b[i]
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
            flips[i] = -1
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T.append(row + art + [rhs])
    basis = list(range(N, N + m))
    cost = [Fraction(0)] * (N + m + 1)
    for row in T:
        for k in range(N):
            cost[k] -= row[k]
        cost[-1] -= row[-1]
    _run(T, cost, basis, N)
    infeasibility = -cost[-1]
    if infeasibility > 0:
        farkas = None
        if lp.is_pure:
            farkas = tuple(flips[i] * (1 - cost[N + i]) for i in range(m))
        return LpOutcome(Status.INFEASIBLE, farkas=farkas)

    # drive zero-level artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(T):
        if basis[i] >= N:
            j = next((k for k in range(N) if T[i][k]), None)
            if j is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, cost, basis, i, j)
        i += 1

    # phase 2
    cost = c + [Fraction(0)] * m + [Fraction(0)]
    for i, row in enumerate(T):
        cb = cost[basis[i]]
        if cb:
            for k, v in enumerate(row):
                if v:
                    cost[k] -= cb * v
    if not _run(T, cost, basis, N):
        return LpOutcome(Status.UNBOUNDED)

    z = [Fraction(0)] * N
    for i, row in enumerate(T):
        z[basis[i]] = row[-1]
    point = tuple(off + sum((sign * z[col] for col, sign in cols), Fraction(0))
                  for off, cols in recipe)
    objective = lp.objective or [0] * lp.num_vars
    value = sum((Fraction(a) * v for a, v in zip(objective, point)), Fraction(0))
    return LpOutcome(Status.OPTIMAL, point, value)


def residuals(lp: LinearProgram, point: Sequence[Fraction]) -> list[Fraction]:
    """Equality residuals; zero everywhere for an exact solution."""
    return [sum((Fraction(a) * x for a, x in zip(coeffs, point)), Fraction(0)) - Fraction(rhs)
            for coeffs, rhs in lp.equalities]


def is_feasible_point(lp: LinearProgram, point: Sequence[Fraction]) -> bool:
    if any(r != 0 for r in residuals(lp, point)):
        return False
    for coeffs, rhs in lp.inequalities:
        if sum((Fraction(a) * x for a, x in zip(coeffs, point)), Fraction(0)) > rhs:
            return False
    for j, x in enumerate(point):
        lo, hi = lp.lower(j), lp.upper(j)
        if lo is not None and x < lo or hi is not None and x > hi:
            return False
    return True


def verify_farkas(lp: LinearProgram, y: Sequence[Fraction]) -> bool:
    """Check ``y`` proves ``{A x = b, x >= 0}`` infeasible: ``yA <= 0``, ``yb > 0``."""
    if not lp.is_pure or len(y) != len(lp.equalities):
        return False
    for j in range(lp.num_vars):
        if sum((Fraction(yi) * Fraction(coeffs[j]) for yi, (coeffs, _) in zip(y, lp.equalities)),
               Fraction(0)) > 0:
            return False
    return sum((Fraction(yi) * Fraction(b) for yi, (_, b) in zip(y, lp.equalities)), Fraction(0)) > 0


def max_margin_feasible(lp: LinearProgram) -> tuple[bool, Optional[tuple[Fraction, ...]]]:
    """Maximize the last variable (the margin); feasible iff the optimum is > 0.

    Strict rows are expected in the form ``a·x - margin >= b`` (given as
    ``-a·x + margin <= -b``).
    """
    objective = [0] * (lp.num_vars - 1) + [1]
    prog = replace(lp, objective=objective, sense="maximize")
    out = solve(prog)
    if out.status is Status.UNBOUNDED:
        uppers = list(prog.upper_bounds) if prog.upper_bounds is not None else [None] * prog.num_vars
        uppers[-1] = Fraction(1)
        out = solve(replace(prog, upper_bounds=uppers))
    if out.status is not Status.OPTIMAL:
        return False, None
    return out.value > 0, out.point
