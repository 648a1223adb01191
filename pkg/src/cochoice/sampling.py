"""Seeded generators for small random instances.

Entries are rationals ``p/q`` with ``p`` in ``[-4, 4]`` and ``q`` in ``[1, 4]``.
All functions take a :class:`random.Random` so that runs are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .choice import Engine
from .desirability import DesirGenerators, is_coherent
from .gambles import Assessment, Gamble, GambleSet, PossibilitySpace, is_strictly_positive
from .ratlp import LinearProgram

NUM = (-4, 4)
DEN = (1, 4)


def rational(rng: random.Random, num=NUM, den=DEN) -> Fraction:
    return Fraction(rng.randint(*num), rng.randint(*den))


def gamble(rng: random.Random, n: int) -> Gamble:
    return Gamble(rational(rng) for _ in range(n))


def positive_gamble(rng: random.Random, n: int) -> Gamble:
    while True:
        u = Gamble(Fraction(rng.randint(0, 4), rng.randint(*DEN)) for _ in range(n))
        if is_strictly_positive(u):
            return u


def nonneg_gamble(rng: random.Random, n: int) -> Gamble:
    return Gamble(Fraction(rng.randint(0, 3), rng.randint(*DEN)) for _ in range(n))


def nonpositive_gamble(rng: random.Random, n: int) -> Gamble:
    return -nonneg_gamble(rng, n)


def gamble_set(rng: random.Random, n: int, lo: int = 0, hi: int = 3) -> GambleSet:
    return GambleSet(gamble(rng, n) for _ in range(rng.randint(lo, hi)))


def assessment(rng: random.Random, n: int, max_sets: int = 3, max_size: int = 3) -> Assessment:
    k = rng.choices(range(max_sets + 1), [1] + [3] * max_sets)[0]
    return Assessment(PossibilitySpace.of_size(n),
                      [gamble_set(rng, n, 1, max_size) for _ in range(k)])


def consistent_assessment(rng: random.Random, sizes=(2, 3, 4), max_sets=3, max_size=3,
                          tries=1000):
    """Draw assessments until one is consistent; returns the assessment and its engine."""
    for _ in range(tries):
        A = assessment(rng, rng.choice(sizes), max_sets, max_size)
        eng = Engine(A)
        if eng.is_consistent():
            return A, eng
    raise RuntimeError("no consistent assessment found")


def coherent_generators(rng: random.Random, n: int, max_gens: int = 3) -> DesirGenerators:
    while True:
        Dg = DesirGenerators(n, [gamble(rng, n) for _ in range(rng.randint(0, max_gens))])
        if is_coherent(Dg):
            return Dg


def query_sets(rng: random.Random, A: Assessment, count: int) -> list[GambleSet]:
    """A mix of random sets and sets built from the assessment, so positives occur."""
    n = A.space.size
    zero = A.space.zero()
    out = []
    for _ in range(count):
        kind = rng.randrange(6)
        if kind == 0 or not A.sets:
            B = gamble_set(rng, n, 0, 3)
        elif kind == 1:
            B = rng.choice(A.sets)
        elif kind == 2:
            B = rng.choice(A.sets) | gamble_set(rng, n, 0, 2)
        elif kind == 3:
            B = rng.choice(A.sets).with_(zero)
        elif kind == 4:
            Q = rng.choice(A.sets)
            # perturb upward: dominated members are replaced by dominating ones
            B = GambleSet(u + nonneg_gamble(rng, n) for u in Q)
        else:
            B = gamble_set(rng, n, 1, 2).with_(positive_gamble(rng, n))
        out.append(B)
    return out


def positive_weights(rng: random.Random) -> tuple[Fraction, Fraction]:
    """``(lam, mu) >= 0`` with ``lam + mu > 0``."""
    while True:
        lam = Fraction(rng.randint(0, 3), rng.randint(1, 3))
        mu = Fraction(rng.randint(0, 3), rng.randint(1, 3))
        if lam + mu > 0:
            return lam, mu


def linear_program(rng: random.Random, max_vars: int = 3, max_rows: int = 4) -> LinearProgram:
    n = rng.randint(0, max_vars)
    rows = [([rational(rng, (-3, 3), (1, 2)) for _ in range(n)],
             rng.choice(("<=", "==", ">=")),
             rational(rng, (-3, 3), (1, 1)))
            for _ in range(rng.randint(0, max_rows))]
    objective = None if rng.random() < 0.2 else [rational(rng, (-2, 2), (1, 1)) for _ in range(n)]
    nonneg = [rng.random() < 0.7 for _ in range(n)]
    return LinearProgram(n, rows, objective, nonneg)
