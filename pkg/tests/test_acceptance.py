"""Acceptance criteria A1 to A8, one test each.

Every test prints a single ``PASS``/``FAIL`` line; the lines are repeated in
the terminal summary so they show up in a plain ``pytest -v`` run.
"""

import io
import time

import pytest

from cochoice import Assessment, Gamble, GambleSet, binarity_evidence, choose, consistent, natex_contains
from cochoice.choice import check_binarity_report, check_choice, check_membership_verdict
from cochoice.cli import run_selftest
from cochoice.corpus import default_corpus
from cochoice import suites

from conftest import ACCEPTANCE_LINES

SEED = 42
TIME_LIMIT = 300.0


def report(tag, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} {tag}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


@pytest.fixture(scope="module")
def axiom_run():
    start = time.perf_counter()
    rep = suites.axioms(seed=SEED, count=200)
    return rep, time.perf_counter() - start


@pytest.fixture(scope="module")
def collapse_run():
    return suites.binary_collapse(seed=SEED, count=100, queries=20)


def test_a1_axiom_suite(axiom_run):
    rep, elapsed = axiom_run
    ok = rep.cases == 200 and not rep.violations and elapsed < TIME_LIMIT
    assert report("A1 axioms K0-K4", ok,
                  f"{rep.cases} assessments, {rep.checks} checks, {len(rep.violations)} violations, "
                  f"{elapsed:.1f}s (limit {TIME_LIMIT:.0f}s)"), rep.violations[:3]


def test_a2_binary_collapse(collapse_run):
    rep = collapse_run
    ok = rep.cases == 100 and rep.checks == 2000 and not rep.violations
    assert report("A2 binary collapse", ok,
                  f"{rep.cases} generator lists x 20 queries, {len(rep.violations)} disagreements"), \
        rep.violations[:3]


def test_a3_certificate_soundness(axiom_run, collapse_run):
    reps = [axiom_run[0], collapse_run]
    checked = sum(r.evidence_checked for r in reps)
    failures = [f for r in reps for f in r.evidence_failures]
    ok = checked > 0 and not failures
    assert report("A3 certificate soundness", ok,
                  f"{checked} verdicts re-checked, {checked - len(failures)} passed"), failures[:3]


def G(*xs):
    return Gamble(xs)


def S(*gs):
    return GambleSet(G(*g) for g in gs)


def test_a4_micro_corpus():
    two_sided = Assessment(2, [S((1, -1), (-1, 1))])
    options = S((0, 0), (1, -1), (-1, 1))
    r = choose(two_sided, options)
    pos = natex_contains(two_sided, S((1, -1), (-1, 1)))
    neg = natex_contains(two_sided, S((1, -1)))
    bin_rep = binarity_evidence(two_sided, S((1, -1), (-1, 1)))
    derived = {
        "consistent two-sided": consistent(two_sided).answer is True,
        "inconsistent all selections": consistent(Assessment(2, [S((-1, -1), (-2, 0))])).answer is False,
        "natex positive": pos.answer and bool(check_membership_verdict(two_sided, S((1, -1), (-1, 1)), pos)),
        "natex negative": not neg.answer and bool(check_membership_verdict(two_sided, S((1, -1)), neg)),
        "choose": (r.chosen, r.rejected) == (S((1, -1), (-1, 1)), S((0, 0)))
                  and bool(check_choice(two_sided, options, r)),
        "non-binary": bin_rep.case == "non-binary"
                      and bool(check_binarity_report(two_sided, S((1, -1), (-1, 1)), bin_rep)),
    }
    corpus = [(c.name, *c.passes()) for c in default_corpus()]
    bad = [k for k, v in derived.items() if not v] + [f"{n}: got {got!r}" for n, good, got in corpus if not good]
    ok = not bad
    assert report("A4 micro-corpus", ok,
                  f"{len(derived)} derived examples and {len(corpus)} corpus cases, {len(bad)} mismatches"), bad


def test_a5_operator_identity():
    rep = suites.operator_identity(seed=SEED, count=100)
    ok = rep.cases == 100 and not rep.violations
    assert report("A5 Rs = Rn after Su", ok,
                  f"{rep.cases} base collections, {rep.checks} queries, {len(rep.violations)} disagreements"), \
        rep.violations[:3]


def test_a6_lp_oracle():
    rep = suites.lp_oracle(seed=SEED, count=200)
    ok = rep.cases == 200 and not rep.violations
    assert report("A6 LP oracle", ok,
                  f"{rep.cases} programs, {rep.checks} checks, {len(rep.violations)} disagreements"), \
        rep.violations[:3]


def test_a7_stability():
    reps = [suites.dominating_replacement(seed=SEED, count=100),
            suites.rn_stability(seed=SEED, count=100),
            suites.monotone_inference(seed=SEED, count=100)]
    ok = all(r.cases == 100 and r.ok for r in reps)
    detail = ", ".join(f"{r.name} {r.cases} cases {len(r.violations) + len(r.evidence_failures)} failures"
                       for r in reps)
    assert report("A7 stability", ok, detail), [v for r in reps for v in r.violations][:3]


def test_a8_determinism():
    runs = []
    for _ in range(2):
        out = io.StringIO()
        code = run_selftest(SEED, out=out)
        runs.append((code, out.getvalue()))
    identical = runs[0][1] == runs[1][1]
    det = suites.determinism(seed=SEED, count=200)
    ok = identical and runs[0][0] == 0 and det.cases == 200 and not det.violations
    assert report("A8 determinism", ok,
                  f"selftest --seed {SEED} twice byte-identical={identical} exit={runs[0][0]}; "
                  f"parallel vs sequential {det.checks} comparisons, {len(det.violations)} differences"), \
        (runs[0][1], det.violations[:3])
