"""Hand-derived micro-corpus: small worked examples with known answers.

Each :class:`Case` pairs a zero-argument callable with the value it must
return. Errors are compared by exception class name, so ``"ParseError"`` is
a valid expectation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from . import choice, desirability, gambles, operators
from .gambles import Assessment, Gamble, GambleSet
from .operators import (ASSESSMENT, POSITIVE_SINGLETON, Base, IncoherentEvidence,
                        MemberEvidence, PosiCertificate)
from .ratlp import LinearProgram, Status, solve

F = Fraction


@dataclass(frozen=True)
class Case:
    name: str
    run: Callable[[], Any]
    expected: Any

    def evaluate(self):
        try:
            return self.run()
        except Exception as exc:  # the corpus records errors as values
            return type(exc).__name__

    def passes(self) -> tuple[bool, Any]:
        got = self.evaluate()
        return got == self.expected, got


def G(*xs) -> Gamble:
    return Gamble(xs)


def S(*gs) -> GambleSet:
    return GambleSet(G(*g) for g in gs)


def A2(*sets) -> Assessment:
    return Assessment(2, [S(*Q) for Q in sets])


TWO_SIDED = A2([(1, -1), (-1, 1)])
EMPTY = A2()
O3 = S((0, 0), (1, 1), (-1, -1))


def _gamble_cases():
    pos, nonpos = gambles.is_strictly_positive, gambles.is_nonpositive
    return [
        Case("positive (1,0)", lambda: pos(G(1, 0)), True),
        Case("positive (0,0)", lambda: pos(G(0, 0)), False),
        Case("positive (1,-1/2)", lambda: pos(G(1, F(-1, 2))), False),
        Case("nonpositive (0,0)", lambda: nonpos(G(0, 0)), True),
        Case("nonpositive (-1,-2)", lambda: nonpos(G(-1, -2)), True),
        Case("nonpositive (1,-1)", lambda: nonpos(G(1, -1)), False),
        Case("strip mixed", lambda: gambles.strip_nonpositive(S((1, -1), (-1, 0), (0, 0))), S((1, -1))),
        Case("strip empty", lambda: gambles.strip_nonpositive(S()), S()),
        Case("strip positive", lambda: gambles.strip_nonpositive(S((2, 3))), S((2, 3))),
        Case("shift by zero", lambda: gambles.shift_set(S((1, 1), (0, 0)), G(0, 0)), S((1, 1), (0, 0))),
        Case("shift by (1,1)", lambda: gambles.shift_set(S((1, 1), (0, 0)), G(1, 1)), S((0, 0), (-1, -1))),
        Case("shift singleton", lambda: gambles.shift_set(S((2, 0)), G(2, 0)), S((0, 0))),
        Case("rational 3/4", lambda: gambles.format_rational(gambles.parse_rational("3/4")), "3/4"),
        Case("rational -2", lambda: gambles.format_rational(gambles.parse_rational("-2")), "-2"),
        Case("rational 1/0", lambda: gambles.parse_rational("1/0"), "ParseError"),
    ]


def _lp_cases():
    return [
        Case("lp bounded max", lambda: (lambda o: (o.status, o.value))(
            solve(LinearProgram(1, [([1], "<=", 1)], [1]))), (Status.OPTIMAL, F(1))),
        Case("lp infeasible", lambda: solve(LinearProgram(1, [([-1], ">=", 1)])).status,
             Status.INFEASIBLE),
        Case("lp unbounded", lambda: solve(LinearProgram(
            2, [([1, -1], "<=", 0), ([-1, 1], "<=", 0)], [1, 1])).status, Status.UNBOUNDED),
    ]


def _desirability_cases():
    D = desirability.DesirGenerators
    cc, coh, kd = desirability.cone_contains, desirability.is_coherent, desirability.kd_contains
    return [
        Case("cone empty G, (1,0)", lambda: cc(D(2), G(1, 0)), True),
        Case("cone (1,-1) has (2,-1)", lambda: cc(D(2, [G(1, -1)]), G(2, -1)), True),
        Case("cone (1,-1) lacks (1,-2)", lambda: cc(D(2, [G(1, -1)]), G(1, -2)), False),
        Case("coherent empty", lambda: coh(D(2)), True),
        Case("incoherent (-1,-1)", lambda: coh(D(2, [G(-1, -1)])), False),
        Case("incoherent both directions", lambda: coh(D(2, [G(1, -1), G(-1, 1)])), False),
        Case("kd meets", lambda: kd(D(2, [G(1, -1)]), S((-1, 1), (2, -1))), True),
        Case("kd empty set", lambda: kd(D(2), S()), False),
        Case("kd misses", lambda: kd(D(2, [G(1, -1)]), S((-1, 1))), False),
    ]


def _choice_cases():
    nat = lambda A, B: choice.natex_contains(A, B).answer  # noqa: E731
    rej = lambda A, O, u: choice.reject(A, O, u).answer  # noqa: E731
    return [
        Case("consistent empty", lambda: choice.consistent(EMPTY).answer, True),
        Case("inconsistent with empty set", lambda: choice.consistent(A2([])).answer, False),
        Case("consistent two-sided", lambda: choice.consistent(TWO_SIDED).answer, True),
        Case("inconsistent all selections", lambda: choice.consistent(
            A2([(-1, -1), (-2, 0)])).answer, False),
        Case("natex includes assessment", lambda: nat(TWO_SIDED, S((1, -1), (-1, 1))), True),
        Case("natex excludes one side", lambda: nat(TWO_SIDED, S((1, -1))), False),
        Case("natex excludes empty set", lambda: nat(TWO_SIDED, S()), False),
        Case("natex excludes {0}", lambda: nat(TWO_SIDED, S((0, 0))), False),
        Case("natex excludes {0}, vacuous", lambda: nat(EMPTY, S((0, 0))), False),
        Case("reject dominated", lambda: rej(EMPTY, O3, G(-1, -1)), True),
        Case("keep dominating", lambda: rej(EMPTY, O3, G(1, 1)), False),
        Case("singleton never rejected", lambda: rej(TWO_SIDED, S((1, -1)), G(1, -1)), False),
        Case("choose vacuous", lambda: choice.choose(EMPTY, O3).chosen, S((1, 1))),
        Case("choose empty option set", lambda: choice.choose(TWO_SIDED, S()).chosen, S()),
        Case("choose two-sided", lambda: (lambda r: (r.chosen, r.rejected))(
            choice.choose(TWO_SIDED, S((0, 0), (1, -1), (-1, 1)))),
            (S((1, -1), (-1, 1)), S((0, 0)))),
        Case("singleton positive", lambda: choice.singleton_desirable(EMPTY, G(1, 0)), True),
        Case("singleton one side", lambda: choice.singleton_desirable(TWO_SIDED, G(1, -1)), False),
        Case("singleton zero", lambda: choice.singleton_desirable(TWO_SIDED, G(0, 0)), False),
        Case("binarity non-binary", lambda: choice.binarity_evidence(
            TWO_SIDED, S((1, -1), (-1, 1))).case, "non-binary"),
        Case("binarity explained", lambda: (lambda r: (r.case, r.witness))(
            choice.binarity_evidence(EMPTY, S((1, 0), (-1, -1)))), ("binary-explained", G(1, 0))),
        Case("binarity not member", lambda: choice.binarity_evidence(
            EMPTY, S((-1, -1))).case, "not-member"),
    ]


def _identity_cert():
    Q = S((1, -1), (-1, 1))
    return PosiCertificate.make([Base(ASSESSMENT, Q)], {(0,): [1], (1,): [1]})


def _operator_cases():
    ps = operators.produced_set
    Q = S((1, -1), (-1, 1))
    two = PosiCertificate.make(
        [Base(ASSESSMENT, Q), Base(POSITIVE_SINGLETON, S((0, 1)))],
        {(Q.index(G(1, -1)), 0): [1, 1], (Q.index(G(-1, 1)), 0): [1, 0]})
    halve = PosiCertificate.make([Base(ASSESSMENT, S((2, 0)))], {(0,): [F(1, 2)]})
    zero_vec = PosiCertificate.make([Base(ASSESSMENT, Q)], {(0,): [1], (1,): [0]})
    wide = PosiCertificate.make([Base(ASSESSMENT, Q), Base(POSITIVE_SINGLETON, S((1, 0)))],
                                {(0, 0): [1, 0], (1, 0): [1, 1]})
    vmc = operators.verify_membership_certificate
    A21 = A2([(2, -1)])
    hyp = {(G(2, -1),): MemberEvidence(G(1, 0), (F(1, 2),))}
    return [
        Case("produced identity", lambda: ps(_identity_cert()), Q),
        Case("produced two bases", lambda: ps(two), S((1, 0), (-1, 1))),
        Case("produced scaling", lambda: ps(halve), S((1, 0))),
        Case("rs_step drops nonpositive", lambda: operators.rs_step(S((1, 0), (-1, -1)), S((1, 0))), True),
        Case("rs_step superset", lambda: operators.rs_step(S((1, 0)), S((1, 0), (5, 5))), True),
        Case("rs_step uncovered", lambda: operators.rs_step(S((1, 0), (0, 1)), S((1, 0))), False),
        Case("verify identity", lambda: vmc(TWO_SIDED, Q, _identity_cert()).ok, True),
        Case("verify zero vector", lambda: vmc(TWO_SIDED, Q, zero_vec).reason,
             "coefficient sum not positive"),
        Case("verify outside B", lambda: vmc(TWO_SIDED, S((1, -1)), wide).reason, "rs_step failed"),
        Case("build identity", lambda: operators.produced_set(operators.build_membership_certificate(
            TWO_SIDED, Q, {(G(1, -1),): MemberEvidence(G(1, -1), (1,)),
                           (G(-1, 1),): MemberEvidence(G(-1, 1), (1,))})), Q),
        Case("build hypothetical", lambda: (lambda c: (
            [b.set for b in c.bases], c.coeffs, vmc(A21, S((1, 0)), c).ok))(
            operators.build_membership_certificate(A21, S((1, 0)), hyp)),
            ([S((2, -1)), S((1, 0)), S((0, 1))], (((0, 0, 0), (F(1, 2), F(0), F(1, 2))),), True)),
        Case("build vacuous", lambda: (lambda c: (operators.produced_set(c), vmc(EMPTY, S((1, 0)), c).ok))(
            operators.build_membership_certificate(EMPTY, S((1, 0)), {(): MemberEvidence(G(1, 0), ())})),
            (S((1, 0)), True)),
        Case("build incoherent evidence", lambda: operators.produced_set(
            operators.build_inconsistency_certificate(A2([(-1, -1)]), {(G(-1, -1),): IncoherentEvidence((1,))})),
            S((0, 0))),
        Case("su superset", lambda: operators.su_member([S((1, 0))], S((1, 0), (5, 5))), True),
        Case("su not covered", lambda: operators.su_member([S((1, 0), (0, 1))], S((1, 0))), False),
        Case("su empty K", lambda: operators.su_member([], S()), False),
        Case("rn strip", lambda: operators.rn_member([S((1, 0), (-1, -1))], S((1, 0))), True),
        Case("rn not subset", lambda: operators.rn_member([S((1, 0), (-1, -1))], S((1, 0), (5, 5))), False),
        Case("rn identity", lambda: operators.rn_member([S((1, 0))], S((1, 0))), True),
    ]


def default_corpus() -> list[Case]:
    return (_gamble_cases() + _lp_cases() + _desirability_cases()
            + _choice_cases() + _operator_cases())
