"""Finitely generated sets of desirable gambles.

A :class:`DesirGenerators` value stands for the convex cone
``posi(L>0 ∪ G)``: all positive linear combinations of the generators ``G``
and of the strictly positive gambles. Membership and coherence reduce to
small exact LPs over the generator coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import IncoherentGenerators
from .gambles import (Gamble, GambleSet, PossibilitySpace, as_gamble,
                      as_gamble_set, is_strictly_positive, stack)
from .ratlp import LinearProgram, Status, solve

ZERO = Fraction(0)
ONE = Fraction(1)


class DesirGenerators:
    """The cone ``posi(L>0 ∪ gens)`` over ``space``; duplicate generators are merged."""

    __slots__ = ("space", "gens")

    def __init__(self, space: PossibilitySpace | int, gens: Iterable = ()):
        if isinstance(space, int):
            space = PossibilitySpace.of_size(space)
        self.space = space
        gs = GambleSet(gens)
        for g in gs:
            space.check(g)
        self.gens: tuple[Gamble, ...] = gs.members

    def __eq__(self, other):
        if not isinstance(other, DesirGenerators):
            return NotImplemented
        return self.space == other.space and self.gens == other.gens

    def __hash__(self):
        return hash((self.space, self.gens))

    def __repr__(self):
        return f"DesirGenerators({self.space.size}, {[g.to_json() for g in self.gens]})"

    def with_gens(self, more: Iterable) -> DesirGenerators:
        return DesirGenerators(self.space, self.gens + tuple(as_gamble(g) for g in more))

    def prefers(self, u, v) -> bool:
        """Strict preference ``u > v``, i.e. ``u - v`` is desirable."""
        return cone_contains(self, as_gamble(u) - as_gamble(v))


@dataclass(frozen=True)
class ConeWitness:
    """``u == sum(lam[j] * gens[j]) + residual`` with ``lam >= 0``, ``residual >= 0``.

    Either ``sum(lam) > 0`` or ``residual`` is strictly positive, which is
    exactly what membership of ``posi(L>0 ∪ gens)`` requires.
    """

    lam: tuple[Fraction, ...]
    residual: Gamble

    def check(self, Dg: DesirGenerators, u: Gamble) -> bool:
        if len(self.lam) != len(Dg.gens) or any(x < 0 for x in self.lam):
            return False
        if any(x < 0 for x in self.residual):
            return False
        if sum(self.lam) == 0 and not is_strictly_positive(self.residual):
            return False
        return stack(Dg.gens, self.lam, Dg.space.size) + self.residual == u


def _membership_lp(Dg: DesirGenerators, u: Gamble, at_least_one=False) -> LinearProgram:
    # maximize sum(lam) s.t. sum_j lam_j g_j <= u entrywise, lam >= 0
    m = len(Dg.gens)
    rows = [([g[i] for g in Dg.gens], "<=", u[i]) for i in range(Dg.space.size)]
    if at_least_one:
        rows.append(([ONE] * m, ">=", ONE))
    return LinearProgram(m, rows, objective=None if at_least_one else [ONE] * m)


def cone_witness(Dg: DesirGenerators, u) -> ConeWitness | None:
    """A witness that ``u`` lies in the cone, or ``None`` if it does not."""
    u = Dg.space.check(as_gamble(u))
    m = len(Dg.gens)
    if is_strictly_positive(u):
        return ConeWitness((ZERO,) * m, u)
    if m == 0:
        return None
    if u in Dg.gens:
        lam = tuple(ONE if g == u else ZERO for g in Dg.gens)
        return ConeWitness(lam, Dg.space.zero())
    out = solve(_membership_lp(Dg, u))
    if out.status is Status.OPTIMAL:
        if out.value <= 0:
            return None
        lam = out.point
    elif out.status is Status.UNBOUNDED:
        # a recession ray exists, so some feasible point has sum(lam) >= 1
        lam = solve(_membership_lp(Dg, u, at_least_one=True)).point
    else:
        return None
    return ConeWitness(tuple(lam), u - stack(Dg.gens, lam, Dg.space.size))


def cone_contains(Dg: DesirGenerators, u) -> bool:
    return cone_witness(Dg, u) is not None


def incoherence_witness(Dg: DesirGenerators) -> tuple[Fraction, ...] | None:
    """Weights ``mu >= 0`` summing to one with ``sum(mu[j] * gens[j]) <= 0``.

    Such weights exist exactly when the zero gamble is in the cone. ``None``
    means the generators are coherent.
    """
    m = len(Dg.gens)
    if m == 0:
        return None
    rows = [([g[i] for g in Dg.gens], "<=", ZERO) for i in range(Dg.space.size)]
    rows.append(([ONE] * m, "==", ONE))
    out = solve(LinearProgram(m, rows))
    return None if out.status is Status.INFEASIBLE else out.point


def is_coherent(Dg: DesirGenerators) -> bool:
    return incoherence_witness(Dg) is None


def check_incoherence_witness(Dg: DesirGenerators, mu) -> bool:
    if len(mu) != len(Dg.gens) or any(x < 0 for x in mu) or sum(mu) <= 0:
        return False
    return all(x <= 0 for x in stack(Dg.gens, mu, Dg.space.size))


def kd_contains(Dg: DesirGenerators, B, *, assume_coherent=False) -> bool:
    """Whether ``B`` meets the cone, i.e. ``B`` belongs to the binary model of ``Dg``.

    Only defined for coherent generators; pass ``assume_coherent=True`` to
    skip the check when the caller has already made it.
    """
    B = as_gamble_set(B)
    if not assume_coherent and not is_coherent(Dg):
        raise IncoherentGenerators(f"{Dg!r} contains the zero gamble")
    return any(cone_contains(Dg, b) for b in B)
