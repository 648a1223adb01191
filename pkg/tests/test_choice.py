import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cochoice import (Assessment, DesirGenerators, Engine, Gamble, GambleSet,
                      InconsistentAssessment, SelectionCapExceeded, binarity_evidence, choose,
                      consistent, kd_contains, natex_contains, reject, singleton_desirable)
from cochoice.choice import (BinaryWitness, EmptySetWitness, InconsistencyCertificate, Selection, Verdict,
                             check_binarity_report, check_choice, check_consistency_verdict,
                             check_membership_verdict, evidence_from_json, evidence_to_json)
from cochoice.sampling import coherent_generators, consistent_assessment, query_sets

G = lambda *xs: Gamble(xs)  # noqa: E731
S = lambda *gs: GambleSet(G(*g) for g in gs)  # noqa: E731
TWO_SIDED = Assessment(2, [S((1, -1), (-1, 1))])
EMPTY = Assessment(2)
O3 = S((0, 0), (1, 1), (-1, -1))
seeds = st.integers(0, 2**32)


def test_consistency_examples():
    v = consistent(TWO_SIDED)
    assert v.answer and isinstance(v.evidence, Selection)
    assert consistent(EMPTY).answer
    v = consistent(Assessment(2, [S()]))
    assert not v.answer and isinstance(v.evidence, EmptySetWitness)
    bad = Assessment(2, [S((-1, -1), (-2, 0))])
    v = consistent(bad)
    assert not v.answer and isinstance(v.evidence, InconsistencyCertificate)
    for A in (TWO_SIDED, EMPTY, bad, Assessment(2, [S()])):
        assert check_consistency_verdict(A, consistent(A))


def test_natural_extension_examples():
    pos = natex_contains(TWO_SIDED, S((1, -1), (-1, 1)))
    neg = natex_contains(TWO_SIDED, S((1, -1)))
    assert pos.answer and not neg.answer
    assert isinstance(neg.evidence, BinaryWitness)
    assert check_membership_verdict(TWO_SIDED, S((1, -1), (-1, 1)), pos)
    assert check_membership_verdict(TWO_SIDED, S((1, -1)), neg)
    assert not natex_contains(TWO_SIDED, S()).answer
    assert not natex_contains(TWO_SIDED, S((0, 0))).answer
    assert not natex_contains(EMPTY, S((0, 0))).answer


def test_vacuous_choice_keeps_only_the_dominating_option():
    assert choose(EMPTY, O3).chosen == S((1, 1))
    assert reject(EMPTY, O3, G(-1, -1)).answer
    assert not reject(EMPTY, O3, G(1, 1)).answer


def test_two_sided_choice():
    O = S((0, 0), (1, -1), (-1, 1))
    r = choose(TWO_SIDED, O)
    assert r.chosen == S((1, -1), (-1, 1))
    assert r.rejected == S((0, 0))
    assert check_choice(TWO_SIDED, O, r)
    assert choose(TWO_SIDED, S()).chosen == S()


def test_singleton_options_are_never_rejected():
    assert not reject(TWO_SIDED, S((1, -1)), G(1, -1)).answer


def test_reject_requires_membership():
    with pytest.raises(ValueError):
        reject(EMPTY, O3, G(2, 2))


def test_singletons():
    assert singleton_desirable(EMPTY, G(1, 0))
    assert not singleton_desirable(TWO_SIDED, G(1, -1))
    assert not singleton_desirable(TWO_SIDED, G(0, 0))


def test_binarity_cases():
    r = binarity_evidence(TWO_SIDED, S((1, -1), (-1, 1)))
    assert r.case == "non-binary" and len(r.singleton_verdicts) == 2
    assert check_binarity_report(TWO_SIDED, S((1, -1), (-1, 1)), r)
    r = binarity_evidence(EMPTY, S((1, 0), (-1, -1)))
    assert (r.case, r.witness) == ("binary-explained", G(1, 0))
    assert binarity_evidence(EMPTY, S((-1, -1))).case == "not-member"


def test_inconsistent_assessment_has_no_extension():
    with pytest.raises(InconsistentAssessment):
        natex_contains(Assessment(2, [S((-1, -1))]), S((1, 1)))
    with pytest.raises(InconsistentAssessment):
        choose(Assessment(2, [S()]), O3)


def test_selection_cap():
    A = Assessment(2, [S((1, 0), (0, 1), (1, 1)), S((2, 0), (0, 2), (2, 2))])
    with pytest.raises(SelectionCapExceeded):
        Engine(A, cap=8).consistent()
    assert Engine(A, cap=9).consistent().answer


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        natex_contains(TWO_SIDED, [[1, 2, 3]])


def test_evidence_json_round_trip():
    A = Assessment(2, [S((-1, -1), (-2, 0))])
    for ev in (consistent(TWO_SIDED).evidence, natex_contains(TWO_SIDED, S((1, -1))).evidence,
               natex_contains(TWO_SIDED, S((1, -1), (-1, 1))).evidence, consistent(A).evidence,
               EmptySetWitness(), None):
        assert evidence_from_json(evidence_to_json(ev)) == ev


def test_tampered_evidence_is_caught():
    B = S((1, -1), (-1, 1))
    v = natex_contains(TWO_SIDED, B)
    assert check_membership_verdict(TWO_SIDED, S((1, -1)), v).reason == "rs_step failed"
    assert check_membership_verdict(TWO_SIDED, B, Verdict(False)).reason == "missing binary witness"
    w = BinaryWitness(Selection((G(1, -1),)))
    assert check_membership_verdict(TWO_SIDED, S((1, -1)), Verdict(False, None, w)).reason \
        == "query set meets witness cone"


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_binary_collapse(seed):
    rng = random.Random(seed)
    Dg = coherent_generators(rng, rng.choice((2, 3)))
    A = Assessment(Dg.space, [[g] for g in Dg.gens])
    eng = Engine(A)
    for B in query_sets(rng, A, 5):
        assert eng.natex_contains(B).answer == kd_contains(Dg, B)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_every_verdict_carries_checkable_evidence(seed):
    rng = random.Random(seed)
    A, eng = consistent_assessment(rng)
    for B in query_sets(rng, A, 4):
        assert check_membership_verdict(A, B, eng.natex_contains(B))


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_threads_do_not_change_answers(seed):
    rng = random.Random(seed)
    A, seq = consistent_assessment(rng)
    par = Engine(A, workers=3)
    assert seq.consistent() == par.consistent()
    for B in query_sets(rng, A, 4):
        assert seq.natex_contains(B) == par.natex_contains(B)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_assessment_sets_are_in_the_extension(seed):
    A, eng = consistent_assessment(random.Random(seed))
    assert all(eng.natex_contains(Q).answer for Q in A.sets)
    assert not eng.natex_contains(GambleSet()).answer


def test_selection_cone_generators():
    sel = Selection((G(1, -1),))
    assert sel.generators(TWO_SIDED) == DesirGenerators(2, [G(1, -1)])
    assert sel.is_valid_for(TWO_SIDED)
    assert not Selection((G(1, 1),)).is_valid_for(TWO_SIDED)
