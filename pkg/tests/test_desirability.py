import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cochoice import DesirGenerators, Gamble, GambleSet, IncoherentGenerators, is_strictly_positive
from cochoice.desirability import (check_incoherence_witness, cone_contains, cone_witness,
                                   incoherence_witness, is_coherent, kd_contains)
from cochoice.sampling import coherent_generators

from conftest import gambles

G = lambda *xs: Gamble(xs)  # noqa: E731
S = lambda *gs: GambleSet(G(*g) for g in gs)  # noqa: E731

weights = st.builds(F, st.integers(1, 4), st.integers(1, 4))
coherent = st.integers(0, 2**32).map(lambda s: coherent_generators(random.Random(s), 3))


def test_membership_examples():
    assert cone_contains(DesirGenerators(2), G(1, 0))
    assert cone_contains(DesirGenerators(2, [G(1, -1)]), G(2, -1))
    assert not cone_contains(DesirGenerators(2, [G(1, -1)]), G(1, -2))
    assert not cone_contains(DesirGenerators(2), G(0, 0))


def test_coherence_examples():
    assert is_coherent(DesirGenerators(2))
    assert not is_coherent(DesirGenerators(2, [G(-1, -1)]))
    assert not is_coherent(DesirGenerators(2, [G(1, -1), G(-1, 1)]))
    assert is_coherent(DesirGenerators(2, [G(1, -1), G(-1, 2)]))


def test_incoherence_witness_checks():
    Dg = DesirGenerators(2, [G(1, -1), G(-1, 1), G(3, 3)])
    mu = incoherence_witness(Dg)
    assert check_incoherence_witness(Dg, mu)
    assert not check_incoherence_witness(Dg, (0, 0, 1))


def test_kd_examples():
    Dg = DesirGenerators(2, [G(1, -1)])
    assert kd_contains(Dg, S((-1, 1), (2, -1)))
    assert not kd_contains(Dg, S((-1, 1)))
    assert not kd_contains(DesirGenerators(2), S())
    with pytest.raises(IncoherentGenerators):
        kd_contains(DesirGenerators(2, [G(-1, 0)]), S((1, 1)))


def test_preference():
    Dg = DesirGenerators(2, [G(1, -1)])
    assert Dg.prefers(G(3, 0), G(1, 1))
    assert not Dg.prefers(G(1, 1), G(3, 0))


def test_unbounded_membership_gets_a_witness():
    Dg = DesirGenerators(2, [G(1, -1), G(-1, 1)])
    w = cone_witness(Dg, G(0, 0))
    assert w is not None and w.check(Dg, G(0, 0))


@settings(max_examples=60, deadline=None)
@given(coherent)
def test_d1_zero_not_in_coherent_cone(Dg):
    assert not cone_contains(Dg, Dg.space.zero())


@settings(max_examples=60, deadline=None)
@given(coherent, st.lists(st.builds(F, st.integers(0, 4), st.integers(1, 4)), min_size=3, max_size=3))
def test_d2_positive_gambles_are_desirable(Dg, xs):
    u = Gamble(xs)
    if is_strictly_positive(u):
        assert cone_contains(Dg, u)


@settings(max_examples=60, deadline=None)
@given(coherent, gambles(3), gambles(3), weights, weights)
def test_d3_closed_under_positive_combinations(Dg, u, v, lam, mu):
    # shift toward the cone so both draws are members fairly often
    if Dg.gens:
        u, v = u + 2 * Dg.gens[0], v + 2 * Dg.gens[-1]
    if cone_contains(Dg, u) and cone_contains(Dg, v):
        assert cone_contains(Dg, lam * u + mu * v)


@settings(max_examples=60, deadline=None)
@given(coherent, gambles(3))
def test_witness_checks_out(Dg, u):
    w = cone_witness(Dg, u)
    if w is not None:
        assert w.check(Dg, u)


@settings(max_examples=60, deadline=None)
@given(coherent, gambles(3), gambles(3))
def test_more_generators_never_shrink_the_cone(Dg, g, u):
    if cone_contains(Dg, u):
        assert cone_contains(Dg.with_gens([g]), u)


@settings(max_examples=40, deadline=None)
@given(coherent, st.lists(gambles(3), max_size=3), st.lists(gambles(3), min_size=1, max_size=2))
def test_kd_is_monotone_under_supersets(Dg, B, extra):
    B1 = GambleSet(B)
    if kd_contains(Dg, B1):
        assert kd_contains(Dg, B1 | GambleSet(extra))
