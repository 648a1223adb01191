"""Exact rational linear programming: a small dense two-phase simplex.

Bland's rule is used for both the entering and the leaving variable, so the
method terminates on degenerate problems, which are the norm for the cone
queries this package asks. Problems here have a handful of variables and
rows; there is no presolve or scaling.

>>> p = LinearProgram(1, [([1], "<=", 1)], objective=[1])
>>> out = solve(p)
>>> out.status, out.value
(<Status.OPTIMAL: 'optimal'>, Fraction(1, 1))
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import MalformedProgram
from .gambles import parse_rational

RELATIONS = ("<=", "==", ">=")


class Status(str, enum.Enum):
    INFEASIBLE = "infeasible"
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    FEASIBLE_POINT = "feasible-point"


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    rel: str
    rhs: Fraction

    def holds(self, x: Sequence[Fraction]) -> bool:
        lhs = sum((a * v for a, v in zip(self.coeffs, x)), Fraction(0))
        if self.rel == "<=":
            return lhs <= self.rhs
        if self.rel == ">=":
            return lhs >= self.rhs
        return lhs == self.rhs


def _rationals(seq, what):
    try:
        return tuple(parse_rational(a) for a in seq)
    except ValueError as exc:
        raise MalformedProgram(f"{what}: {exc}") from exc


@dataclass(frozen=True)
class LinearProgram:
    """``maximize objective . x`` subject to ``constraints``.

    Constraints are ``(coeffs, rel, rhs)`` triples with ``rel`` one of
    ``"<="``, ``"=="``, ``">="``. ``nonneg[j]`` marks ``x[j] >= 0``; by default
    every variable is nonnegative. Without an objective the program is a
    pure feasibility question.
    """

    num_vars: int
    constraints: tuple[Constraint, ...] = ()
    objective: tuple[Fraction, ...] | None = None
    nonneg: tuple[bool, ...] | None = None

    def __post_init__(self):
        n = self.num_vars
        if not isinstance(n, int) or n < 0:
            raise MalformedProgram(f"bad variable count {n!r}")
        rows = []
        for c in self.constraints:
            if not isinstance(c, Constraint):
                coeffs, rel, rhs = c
                if rel not in RELATIONS:
                    raise MalformedProgram(f"unknown relation {rel!r}")
                c = Constraint(_rationals(coeffs, "coefficient"), rel,
                               _rationals([rhs], "bound")[0])
            if len(c.coeffs) != n:
                raise MalformedProgram(
                    f"constraint has {len(c.coeffs)} coefficients, expected {n}")
            rows.append(c)
        object.__setattr__(self, "constraints", tuple(rows))
        if self.objective is not None:
            obj = _rationals(self.objective, "objective")
            if len(obj) != n:
                raise MalformedProgram(f"objective has {len(obj)} entries, expected {n}")
            object.__setattr__(self, "objective", obj)
        nonneg = (True,) * n if self.nonneg is None else tuple(bool(f) for f in self.nonneg)
        if len(nonneg) != n:
            raise MalformedProgram("nonneg flags do not match the variable count")
        object.__setattr__(self, "nonneg", nonneg)

    def is_feasible_point(self, x: Sequence[Fraction]) -> bool:
        """Exact substitution check of every constraint and sign flag."""
        if len(x) != self.num_vars:
            return False
        if any(f and v < 0 for f, v in zip(self.nonneg, x)):
            return False
        return all(c.holds(x) for c in self.constraints)

    def value_at(self, x: Sequence[Fraction]) -> Fraction:
        if self.objective is None:
            return Fraction(0)
        return sum((a * v for a, v in zip(self.objective, x)), Fraction(0))


@dataclass(frozen=True)
class LPOutcome:
    status: Status
    point: tuple[Fraction, ...] | None = None
    value: Fraction | None = None

    @property
    def feasible(self) -> bool:
        return self.status is not Status.INFEASIBLE


class _Tableau:
    """Rows ``T[i] = B^-1 [A | b]`` plus a reduced-cost row for maximisation.

    ``obj[j]`` holds the reduced cost of column ``j`` and ``obj[-1]`` holds
    minus the current objective value.
    """

    def __init__(self, rows, basis):
        self.T = rows
        self.basis = basis
        self.obj = None

    def set_cost(self, cost):
        ncols = len(cost)
        obj = list(cost) + [Fraction(0)]
        for row, b in zip(self.T, self.basis):
            cb = cost[b]
            if cb:
                for j in range(ncols):
                    obj[j] -= cb * row[j]
                obj[-1] -= cb * row[-1]
        self.obj = obj

    def pivot(self, r, c):
        row = self.T[r]
        piv = row[c]
        if piv != 1:
            row = [a / piv for a in row]
            self.T[r] = row
        for i, other in enumerate(self.T):
            f = other[c]
            if i != r and f:
                self.T[i] = [a - f * b for a, b in zip(other, row)]
        if self.obj is not None:
            f = self.obj[c]
            if f:
                self.obj = [a - f * b for a, b in zip(self.obj, row)]
        self.basis[r] = c

    def run(self, ncols):
        """Bland-rule primal simplex over columns ``0..ncols-1``.

        Returns ``True`` at an optimum, ``False`` if unbounded.
        """
        while True:
            c = next((j for j in range(ncols) if self.obj[j] > 0), None)
            if c is None:
                return True
            best = None
            for i, row in enumerate(self.T):
                a = row[c]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], c)

    def solution(self, ncols):
        x = [Fraction(0)] * ncols
        for row, b in zip(self.T, self.basis):
            if b < ncols:
                x[b] = row[-1]
        return x


def solve(p: LinearProgram) -> LPOutcome:
    """Solve ``p`` exactly.

    Returns ``INFEASIBLE``; ``FEASIBLE_POINT`` (no objective) with a point;
    ``OPTIMAL`` with an optimal point and value; or ``UNBOUNDED`` with a
    feasible point from which the objective increases without bound.
    """
    n = p.num_vars
    # structural columns: x_j, or x_j+ and x_j- for free variables
    split = []
    for j in range(n):
        split.append((j, 1))
        if not p.nonneg[j]:
            split.append((j, -1))
    ns = len(split)

    rows = []
    for c in p.constraints:
        coeffs = [c.coeffs[j] * s for j, s in split]
        rel, rhs = c.rel, c.rhs
        if rhs < 0:
            coeffs = [-a for a in coeffs]
            rhs = -rhs
            rel = {"<=": ">=", ">=": "<=", "==": "=="}[rel]
        rows.append((coeffs, rel, rhs))

    n_slack = sum(1 for _, rel, _ in rows if rel != "==")
    n_art = sum(1 for _, rel, _ in rows if rel != "<=")
    ncols = ns + n_slack + n_art
    zero = Fraction(0)

    T, basis = [], []
    s_col, a_col = ns, ns + n_slack
    for coeffs, rel, rhs in rows:
        row = coeffs + [zero] * (n_slack + n_art) + [rhs]
        if rel == "<=":
            row[s_col] = Fraction(1)
            basis.append(s_col)
            s_col += 1
        else:
            if rel == ">=":
                row[s_col] = Fraction(-1)
                s_col += 1
            row[a_col] = Fraction(1)
            basis.append(a_col)
            a_col += 1
        T.append(row)

    tab = _Tableau(T, basis)
    first_art = ns + n_slack
    if n_art:
        tab.set_cost([zero] * first_art + [Fraction(-1)] * n_art)
        tab.run(ncols)
        if tab.obj[-1] != 0:
            return LPOutcome(Status.INFEASIBLE)
        # drive zero-valued artificials out of the basis; drop redundant rows
        r = 0
        while r < len(tab.T):
            if tab.basis[r] >= first_art:
                c = next((j for j in range(first_art) if tab.T[r][j] != 0), None)
                if c is None:
                    del tab.T[r]
                    del tab.basis[r]
                    continue
                tab.pivot(r, c)
            r += 1
        tab.T = [row[:first_art] + [row[-1]] for row in tab.T]
    ncols = first_art

    def recover(xs):
        x = [zero] * n
        for (j, s), v in zip(split, xs):
            x[j] += s * v
        return tuple(x)

    if p.objective is None:
        return LPOutcome(Status.FEASIBLE_POINT, recover(tab.solution(ns)), zero)

    cost = [p.objective[j] * s for j, s in split] + [zero] * n_slack
    tab.set_cost(cost)
    bounded = tab.run(ncols)
    x = recover(tab.solution(ns))
    if not bounded:
        return LPOutcome(Status.UNBOUNDED, x, None)
    return LPOutcome(Status.OPTIMAL, x, p.value_at(x))


def feasible(p: LinearProgram) -> LPOutcome:
    """Feasibility version of :func:`solve`, ignoring any objective."""
    return solve(LinearProgram(p.num_vars, p.constraints, None, p.nonneg))
