"""Randomized property suites over the engine.

Each suite draws its instances from a :class:`random.Random` seeded with a
string derived from the run seed, so a suite's output does not depend on
which other suites ran before it. A suite returns a :class:`SuiteReport`;
``violations`` lists every failed check in a readable form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import sampling
from .choice import Engine, check_membership_verdict
from .desirability import kd_contains
from .fme import fm_status
from .gambles import Assessment, GambleSet, strip_nonpositive
from .operators import rn_member, rs_member, su_closure
from .ratlp import Status, solve


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    checks: int = 0
    violations: list[str] = field(default_factory=list)
    evidence_checked: int = 0
    evidence_failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.evidence_failures

    def expect(self, cond: bool, what: str):
        self.checks += 1
        if not cond:
            self.violations.append(what)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (f"{status} {self.name}: cases={self.cases} checks={self.checks} "
                f"violations={len(self.violations)} evidence={self.evidence_checked} "
                f"evidence_failures={len(self.evidence_failures)}")


def suite_rng(seed, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


class Probe:
    """Memoized membership queries on one engine; every fresh verdict has its evidence checked."""

    def __init__(self, engine: Engine, report: SuiteReport, check_evidence: bool = True):
        self.engine = engine
        self.report = report
        self.check_evidence = check_evidence
        self.memo: dict = {}

    def __call__(self, B) -> bool:
        B = GambleSet(B)
        if B not in self.memo:
            v = self.engine.natex_contains(B)
            if self.check_evidence:
                res = check_membership_verdict(self.engine.assessment, B, v)
                self.report.evidence_checked += 1
                if not res:
                    self.report.evidence_failures.append(
                        f"{self.engine.assessment!r} B={B}: {res.reason}")
            self.memo[B] = v.answer
        return self.memo[B]


def _combine(rng, B1: GambleSet, B2: GambleSet) -> GambleSet:
    out = []
    for u in B1:
        for v in B2:
            lam, mu = sampling.positive_weights(rng)
            out.append(lam * u + mu * v)
    return GambleSet(out)


def axioms(seed=0, count=200, queries=6) -> SuiteReport:
    """K0 to K4 and inclusion of the assessment on random consistent assessments."""
    rep = SuiteReport("axioms")
    rng = suite_rng(seed, "axioms")
    for _ in range(count):
        A, eng = sampling.consistent_assessment(rng)
        rep.cases += 1
        member = Probe(eng, rep)
        n = A.space.size
        ctx = repr(A)
        rep.expect(not member(GambleSet()), f"K0 {ctx}")
        for Q in A.sets:
            rep.expect(member(Q), f"inclusion {ctx} Q={Q}")
        for _ in range(2):
            u = sampling.positive_gamble(rng, n)
            rep.expect(member([u]), f"K2 {ctx} u={u}")
        Bs = sampling.query_sets(rng, A, queries)
        positives = [B for B in Bs if member(B)] + list(A.sets)
        zero = A.space.zero()
        for B in positives:
            if zero in B:
                rep.expect(member(B.without(zero)), f"K1 {ctx} B={B}")
            bigger = B | sampling.gamble_set(rng, n, 1, 2)
            rep.expect(member(bigger), f"K4 {ctx} B={B} B2={bigger}")
        for _ in range(2):
            if positives:
                B1, B2 = rng.choice(positives), rng.choice(positives)
                C = _combine(rng, B1, B2)
                rep.expect(member(C), f"K3 {ctx} B1={B1} B2={B2} C={C}")
    return rep


def binary_collapse(seed=0, count=100, queries=20) -> SuiteReport:
    """Singleton assessments behave exactly like the binary model of their generators."""
    rep = SuiteReport("binary-collapse")
    rng = suite_rng(seed, "binary-collapse")
    for _ in range(count):
        n = rng.choice((2, 3, 4))
        Dg = sampling.coherent_generators(rng, n)
        A = Assessment(Dg.space, [[g] for g in Dg.gens])
        member = Probe(Engine(A), rep)
        rep.cases += 1
        for B in sampling.query_sets(rng, A, queries):
            want = kd_contains(Dg, B)
            rep.expect(member(B) == want, f"{A!r} B={B} kd={want}")
    return rep


def operator_identity(seed=0, count=100, queries=10, universe_size=5) -> SuiteReport:
    """``Rs(K)`` equals ``Rn(Su(K))`` on a finite universe of gambles."""
    rep = SuiteReport("operator-identity")
    rng = suite_rng(seed, "operator-identity")
    for _ in range(count):
        n = rng.choice((1, 2))
        pool = [sampling.gamble(rng, n) for _ in range(universe_size)]
        pool += [sampling.nonpositive_gamble(rng, n) for _ in range(2)]
        U = GambleSet(pool)
        K = [GambleSet(rng.sample(U.members, rng.randint(0, min(3, len(U)))))
             for _ in range(rng.randint(0, 3))]
        closure = su_closure(K, U)
        rep.cases += 1
        for _ in range(queries):
            B = GambleSet(rng.sample(U.members, rng.randint(0, len(U))))
            lhs = rs_member(K, B)
            rhs = rn_member(closure, B)
            rep.expect(lhs == rhs, f"K={[str(Q) for Q in K]} B={B} rs={lhs} rn_su={rhs}")
    return rep


def lp_oracle(seed=0, count=200) -> SuiteReport:
    """Simplex status, value and point against Fourier-Motzkin elimination."""
    rep = SuiteReport("lp-oracle")
    rng = suite_rng(seed, "lp-oracle")
    for _ in range(count):
        p = sampling.linear_program(rng)
        out = solve(p)
        status, value = fm_status(p)
        rep.cases += 1
        rep.expect(out.status is status, f"{p} simplex={out.status} fm={status}")
        if out.status is Status.OPTIMAL and status is Status.OPTIMAL:
            rep.expect(out.value == value, f"{p} value {out.value} != {value}")
        if out.point is not None:
            rep.expect(p.is_feasible_point(out.point), f"{p} point {out.point} infeasible")
    return rep


def dominating_replacement(seed=0, count=100) -> SuiteReport:
    rep = SuiteReport("dominating-replacement")
    rng = suite_rng(seed, "dominating-replacement")
    while rep.cases < count:
        A, eng = sampling.consistent_assessment(rng)
        member = Probe(eng, rep)
        positives = [B for B in sampling.query_sets(rng, A, 4) if B and member(B)]
        if not positives:
            continue
        B = rng.choice(positives)
        v = rng.choice(B.members)
        v2 = v + sampling.nonneg_gamble(rng, A.space.size)
        B2 = B.without(v).with_(v2)
        rep.cases += 1
        rep.expect(member(B2), f"{A!r} B={B} v={v} v'={v2}")
    return rep


def rn_stability(seed=0, count=100) -> SuiteReport:
    """Removing nonpositive options never changes membership."""
    rep = SuiteReport("rn-stability")
    rng = suite_rng(seed, "rn-stability")
    while rep.cases < count:
        A, eng = sampling.consistent_assessment(rng)
        member = Probe(eng, rep)
        n = A.space.size
        extra = GambleSet(sampling.nonpositive_gamble(rng, n) for _ in range(rng.randint(1, 2)))
        base = rng.choice(A.sets) if A.sets and rng.random() < 0.6 else sampling.gamble_set(rng, n, 0, 2)
        B = base | extra
        S = strip_nonpositive(B)
        if S == B:
            continue
        rep.cases += 1
        rep.expect(member(B) == member(S), f"{A!r} B={B} stripped={S}")
    return rep


def monotone_inference(seed=0, count=100, queries=4) -> SuiteReport:
    """Enlarging a consistent assessment never loses a desirable gamble set."""
    rep = SuiteReport("monotone-inference")
    rng = suite_rng(seed, "monotone-inference")
    while rep.cases < count:
        A, eng = sampling.consistent_assessment(rng)
        n = A.space.size
        A2 = A.extended([sampling.gamble_set(rng, n, 1, 3)])
        eng2 = Engine(A2)
        if not eng2.is_consistent():
            continue
        rep.cases += 1
        small, large = Probe(eng, rep), Probe(eng2, rep)
        for B in sampling.query_sets(rng, A, queries) + sampling.query_sets(rng, A2, queries):
            if small(B):
                rep.expect(large(B), f"{A!r} < {A2!r} B={B}")
    return rep


def determinism(seed=0, count=200, queries=6, workers=4) -> SuiteReport:
    """Sequential and thread-pool engines give identical verdicts, witnesses included."""
    rep = SuiteReport("determinism")
    rng = suite_rng(seed, "axioms")
    for _ in range(count):
        A, _eng = sampling.consistent_assessment(rng)
        seq, par = Engine(A), Engine(A, workers=workers)
        rep.cases += 1
        rep.expect(seq.consistent() == par.consistent(), f"consistent {A!r}")
        for B in sampling.query_sets(rng, A, queries):
            rep.expect(seq.natex_contains(B) == par.natex_contains(B), f"{A!r} B={B}")
    return rep


SUITES = {
    "axioms": axioms,
    "binary-collapse": binary_collapse,
    "operator-identity": operator_identity,
    "lp-oracle": lp_oracle,
    "dominating-replacement": dominating_replacement,
    "rn-stability": rn_stability,
    "monotone-inference": monotone_inference,
    "determinism": determinism,
}
