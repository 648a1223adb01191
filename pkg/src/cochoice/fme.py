"""Fourier-Motzkin elimination, used only as an independent check on :mod:`ratlp`.

Exponential in the number of variables; fine for the three-variable
programs it is pointed at.
"""

from __future__ import annotations

from fractions import Fraction

from .ratlp import LinearProgram, Status


def _as_le_rows(p: LinearProgram):
    """Rewrite every constraint (and sign flag) as ``a . x <= b``."""
    rows = []
    for c in p.constraints:
        a, b = list(c.coeffs), c.rhs
        if c.rel in ("<=", "=="):
            rows.append((a, b))
        if c.rel in (">=", "=="):
            rows.append(([-v for v in a], -b))
    for j, flag in enumerate(p.nonneg):
        if flag:
            rows.append(([Fraction(-1) if i == j else Fraction(0)
                          for i in range(p.num_vars)], Fraction(0)))
    return rows


def eliminate(rows, j):
    """Project the system ``a . x <= b`` along coordinate ``j``."""
    pos, neg, out = [], [], []
    for a, b in rows:
        if a[j] > 0:
            pos.append((a, b))
        elif a[j] < 0:
            neg.append((a, b))
        else:
            out.append((a, b))
    for ap, bp in pos:
        for an, bn in neg:
            s, t = -an[j], ap[j]
            a = [s * x + t * y for x, y in zip(ap, an)]
            a[j] = Fraction(0)
            out.append((a, s * bp + t * bn))
    # drop duplicate rows to slow the blow-up
    seen, uniq = set(), []
    for a, b in out:
        key = (tuple(a), b)
        if key not in seen:
            seen.add(key)
            uniq.append((a, b))
    return uniq


def fm_status(p: LinearProgram):
    """``(status, value)`` for ``p`` by elimination.

    An extra variable ``t`` is tied to the objective (``t == c . x``); every
    original variable is eliminated and what remains bounds ``t`` alone.
    """
    n = p.num_vars
    rows = [(a + [Fraction(0)], b) for a, b in _as_le_rows(p)]
    if p.objective is not None:
        c = list(p.objective)
        rows.append((c + [Fraction(-1)], Fraction(0)))
        rows.append(([-v for v in c] + [Fraction(1)], Fraction(0)))
    for j in range(n):
        rows = eliminate(rows, j)
    upper, lower = [], []
    for a, b in rows:
        t = a[n]
        if t > 0:
            upper.append(b / t)
        elif t < 0:
            lower.append(b / t)
        elif b < 0:
            return Status.INFEASIBLE, None
    if upper and lower and max(lower) > min(upper):
        return Status.INFEASIBLE, None
    if p.objective is None:
        return Status.FEASIBLE_POINT, None
    if not upper:
        return Status.UNBOUNDED, None
    return Status.OPTIMAL, min(upper)
