"""Consistency, natural extension and choice for a finite assessment.

The natural extension of an assessment ``A`` is decided through selections:
a selection picks one gamble from every set in ``A`` and generates the cone
``D = posi(L>0 ∪ picks)``. Then

* ``A`` is consistent iff it does not contain the empty set and some
  selection generates a coherent cone;
* ``B`` is in the natural extension iff ``B`` meets the cone of every
  selection whose cone is coherent.

Every coherent set of desirable gamble sets containing ``A`` is an
intersection of binary models, each of which contains the cone of some
selection; conversely the binary model of a coherent selection cone is
itself a coherent model containing ``A``. Nothing is taken on trust,
though: positive answers come with a :class:`~cochoice.operators.PosiCertificate`
checked against the literal operator definitions, and negative answers with
a :class:`BinaryWitness`.

>>> A = Assessment(2, [[[1, -1], [-1, 1]]])
>>> natex_contains(A, [[1, -1], [-1, 1]]).answer, natex_contains(A, [[1, -1]]).answer
(True, False)
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .desirability import (DesirGenerators, cone_contains,
                           cone_witness, incoherence_witness, is_coherent)
from .errors import InconsistentAssessment, SelectionCapExceeded
from .gambles import (Assessment, Gamble, GambleSet, as_gamble, as_gamble_set,
                      is_nonpositive, parse_gamble, shift_set)
from .operators import (CheckResult, IncoherentEvidence, MemberEvidence, OK,
                        PosiCertificate, build_inconsistency_certificate,
                        build_membership_certificate, fail,
                        verify_inconsistency_certificate,
                        verify_membership_certificate)

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class Selection:
    """One pick per set of the assessment, aligned with its canonical set order."""

    picks: tuple[Gamble, ...]

    def generators(self, A: Assessment) -> DesirGenerators:
        return DesirGenerators(A.space, self.picks)

    def is_valid_for(self, A: Assessment) -> bool:
        return (len(self.picks) == len(A.sets)
                and all(u in Q for u, Q in zip(self.picks, A.sets)))

    def to_json(self):
        return [u.to_json() for u in self.picks]


@dataclass(frozen=True)
class BinaryWitness:
    """A selection whose cone is coherent and misses the queried set.

    Its binary model is a coherent extension of the assessment that leaves
    the queried set out.
    """

    selection: Selection


@dataclass(frozen=True)
class EmptySetWitness:
    """The assessment contains the empty set."""


@dataclass(frozen=True)
class InconsistencyCertificate:
    """A certificate whose produced set is exactly ``{0}``."""

    cert: PosiCertificate


@dataclass(frozen=True)
class Verdict:
    answer: bool
    positive_evidence: object = None
    negative_evidence: object = None

    @property
    def evidence(self):
        return self.positive_evidence if self.answer else self.negative_evidence

    def to_json(self) -> dict:
        return {"answer": self.answer, "evidence": evidence_to_json(self.evidence)}


def evidence_to_json(ev) -> dict | None:
    if ev is None:
        return None
    if isinstance(ev, PosiCertificate):
        return {"kind": "posi-certificate", **ev.to_json()}
    if isinstance(ev, InconsistencyCertificate):
        return {"kind": "inconsistency-certificate", **ev.cert.to_json()}
    if isinstance(ev, BinaryWitness):
        return {"kind": "binary-witness", "selection": ev.selection.to_json()}
    if isinstance(ev, Selection):
        return {"kind": "coherent-selection", "selection": ev.to_json()}
    if isinstance(ev, EmptySetWitness):
        return {"kind": "empty-set"}
    raise TypeError(f"unknown evidence {ev!r}")


def evidence_from_json(doc):
    if doc is None:
        return None
    kind = doc.get("kind")
    if kind == "posi-certificate":
        return PosiCertificate.from_json(doc)
    if kind == "inconsistency-certificate":
        return InconsistencyCertificate(PosiCertificate.from_json(doc))
    if kind in ("binary-witness", "coherent-selection"):
        sel = Selection(tuple(parse_gamble(u) for u in doc["selection"]))
        return BinaryWitness(sel) if kind == "binary-witness" else sel
    if kind == "empty-set":
        return EmptySetWitness()
    raise ValueError(f"unknown evidence kind {kind!r}")


@dataclass(frozen=True)
class ChoiceResult:
    chosen: GambleSet
    rejected: GambleSet
    verdicts: tuple[tuple[Gamble, Verdict], ...] = field(default=(), compare=False)


@dataclass(frozen=True)
class BinarityReport:
    """How a queried set sits in the natural extension.

    ``case`` is ``"not-member"``, ``"binary-explained"`` (``witness`` is a
    member whose singleton is already in the extension) or ``"non-binary"``
    (no singleton of ``B`` is in the extension although ``B`` is, so the
    extension is not determined by its singletons).
    """

    case: str
    verdict: Verdict
    witness: Gamble | None = None
    singleton_verdicts: tuple[tuple[Gamble, Verdict], ...] = ()


@dataclass(frozen=True)
class _SelectionInfo:
    selection: Selection
    key: frozenset
    mu: tuple[Fraction, ...] | None  # position-aligned incoherence weights

    @property
    def coherent(self) -> bool:
        return self.mu is None


def _align(picks, gens, weights):
    """Move weights indexed by distinct generators onto selection positions."""
    out = [Fraction(0)] * len(picks)
    for g, w in zip(gens, weights):
        out[picks.index(g)] = w
    return tuple(out)


def _first_member(args):
    Dg, B = args
    for b in B:
        # a coherent cone holds no nonpositive gamble
        if is_nonpositive(b):
            continue
        w = cone_witness(Dg, b)
        if w is not None:
            return b, w
    return None


class Engine:
    """Membership queries against the natural extension of one assessment.

    ``cap`` bounds the number of selections enumerated. ``workers > 1``
    evaluates the distinct selection cones on a thread pool; results and
    witnesses do not depend on it, since witnesses are always the first in
    canonical selection order.
    """

    def __init__(self, assessment: Assessment, *, cap: int = DEFAULT_CAP, workers: int = 1):
        self.assessment = assessment
        self.cap = cap
        self.workers = workers

    @property
    def selection_count(self) -> int:
        return math.prod(len(Q) for Q in self.assessment.sets)

    def _map(self, fn, items):
        if self.workers > 1 and len(items) > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                return list(pool.map(fn, items))
        return [fn(x) for x in items]

    @cached_property
    def _distinct(self) -> dict:
        """Distinct selection cones keyed by pick set, in order of first appearance."""
        A = self.assessment
        count = self.selection_count
        if count > self.cap:
            raise SelectionCapExceeded(count, self.cap)
        distinct = {}
        for info in self._raw_selections():
            if info[1] not in distinct:
                distinct[info[1]] = DesirGenerators(A.space, info[0])
        return distinct

    def _raw_selections(self):
        for picks in itertools.product(*(Q.members for Q in self.assessment.sets)):
            yield picks, frozenset(picks)

    @cached_property
    def _analysis(self) -> tuple[_SelectionInfo, ...]:
        cones = self._distinct
        keys = list(cones)
        mus = dict(zip(keys, self._map(incoherence_witness, [cones[k] for k in keys])))
        out = []
        for picks, key in self._raw_selections():
            mu = mus[key]
            if mu is not None:
                mu = _align(picks, cones[key].gens, mu)
            out.append(_SelectionInfo(Selection(picks), key, mu))
        return tuple(out)

    def _check(self, B) -> GambleSet:
        B = as_gamble_set(B)
        for b in B:
            self.assessment.space.check(b)
        return B

    # -- queries ------------------------------------------------------------

    def consistent(self) -> Verdict:
        A = self.assessment
        if any(len(Q) == 0 for Q in A.sets):
            return Verdict(False, negative_evidence=EmptySetWitness())
        for info in self._analysis:
            if info.coherent:
                return Verdict(True, positive_evidence=info.selection)
        per = {info.selection.picks: IncoherentEvidence(info.mu) for info in self._analysis}
        cert = build_inconsistency_certificate(A, per)
        return Verdict(False, negative_evidence=InconsistencyCertificate(cert))

    def is_consistent(self) -> bool:
        return self.consistent().answer

    def _require_consistent(self):
        if not self.consistent().answer:
            raise InconsistentAssessment("the natural extension of an inconsistent assessment is undefined")

    def natex_contains(self, B) -> Verdict:
        """Is ``B`` a desirable gamble set under the natural extension?"""
        B = self._check(B)
        self._require_consistent()
        cones = self._distinct
        coherent_keys = []
        seen = set()
        for info in self._analysis:
            if info.coherent and info.key not in seen:
                seen.add(info.key)
                coherent_keys.append(info.key)
        found = dict(zip(coherent_keys,
                         self._map(_first_member, [(cones[k], B) for k in coherent_keys])))
        per = {}
        for info in self._analysis:
            picks = info.selection.picks
            if not info.coherent:
                per[picks] = IncoherentEvidence(info.mu)
                continue
            hit = found[info.key]
            if hit is None:
                return Verdict(False, negative_evidence=BinaryWitness(info.selection))
            b, w = hit
            per[picks] = MemberEvidence(b, _align(picks, cones[info.key].gens, w.lam))
        cert = build_membership_certificate(self.assessment, B, per)
        return Verdict(True, positive_evidence=cert)

    def reject(self, O, u) -> Verdict:
        """Is ``u`` rejected from the option set ``O``?"""
        O = self._check(O)
        u = as_gamble(u)
        if u not in O:
            raise ValueError(f"{u} is not in the option set {O}")
        return self.natex_contains(shift_set(O, u))

    def choose(self, O) -> ChoiceResult:
        O = self._check(O)
        self._require_consistent()
        verdicts = tuple((u, self.reject(O, u)) for u in O)
        rejected = GambleSet(u for u, v in verdicts if v.answer)
        return ChoiceResult(O - rejected, rejected, verdicts)

    def singleton_verdict(self, u) -> Verdict:
        u = self.assessment.space.check(as_gamble(u))
        return self.natex_contains(GambleSet([u]))

    def singleton_desirable(self, u) -> bool:
        return self.singleton_verdict(u).answer

    def binarity_evidence(self, B) -> BinarityReport:
        B = self._check(B)
        v = self.natex_contains(B)
        if not v.answer:
            return BinarityReport("not-member", v)
        singles = []
        for u in B:
            sv = self.singleton_verdict(u)
            if sv.answer:
                return BinarityReport("binary-explained", v, u, ((u, sv),))
            singles.append((u, sv))
        return BinarityReport("non-binary", v, None, tuple(singles))


# -- functional front end ----------------------------------------------------

def consistent(A: Assessment, **kw) -> Verdict:
    return Engine(A, **kw).consistent()


def natex_contains(A: Assessment, B, **kw) -> Verdict:
    return Engine(A, **kw).natex_contains(B)


def reject(A: Assessment, O, u, **kw) -> Verdict:
    return Engine(A, **kw).reject(O, u)


def choose(A: Assessment, O, **kw) -> ChoiceResult:
    return Engine(A, **kw).choose(O)


def singleton_desirable(A: Assessment, u, **kw) -> bool:
    return Engine(A, **kw).singleton_desirable(u)


def binarity_evidence(A: Assessment, B, **kw) -> BinarityReport:
    return Engine(A, **kw).binarity_evidence(B)


# -- evidence checking -----------------------------------------------------

def check_binary_witness(A: Assessment, B, w: BinaryWitness) -> CheckResult:
    """Re-derive coherence of the witness cone and that it misses every member of ``B``."""
    B = as_gamble_set(B)
    sel = w.selection
    if not sel.is_valid_for(A):
        return fail("selection does not match assessment")
    Dg = sel.generators(A)
    if not is_coherent(Dg):
        return fail("witness cone not coherent")
    if any(cone_contains(Dg, b) for b in B):
        return fail("query set meets witness cone")
    return OK


def check_coherent_selection(A: Assessment, sel: Selection) -> CheckResult:
    if not sel.is_valid_for(A):
        return fail("selection does not match assessment")
    if not is_coherent(sel.generators(A)):
        return fail("selection cone not coherent")
    return OK


def check_membership_verdict(A: Assessment, B, v: Verdict) -> CheckResult:
    """Check the evidence of a :meth:`Engine.natex_contains` verdict for ``B``."""
    if v.answer:
        if not isinstance(v.positive_evidence, PosiCertificate):
            return fail("missing certificate")
        return verify_membership_certificate(A, B, v.positive_evidence)
    if not isinstance(v.negative_evidence, BinaryWitness):
        return fail("missing binary witness")
    return check_binary_witness(A, B, v.negative_evidence)


def check_consistency_verdict(A: Assessment, v: Verdict) -> CheckResult:
    if v.answer:
        if not isinstance(v.positive_evidence, Selection):
            return fail("missing coherent selection")
        if any(len(Q) == 0 for Q in A.sets):
            return fail("assessment contains the empty set")
        return check_coherent_selection(A, v.positive_evidence)
    ev = v.negative_evidence
    if isinstance(ev, EmptySetWitness):
        return OK if any(len(Q) == 0 for Q in A.sets) else fail("no empty set in assessment")
    if isinstance(ev, InconsistencyCertificate):
        return verify_inconsistency_certificate(A, ev.cert)
    return fail("missing inconsistency evidence")


def check_choice(A: Assessment, O, result: ChoiceResult) -> CheckResult:
    O = as_gamble_set(O)
    if (result.chosen | result.rejected) != O or len(result.chosen) + len(result.rejected) != len(O):
        return fail("choice is not a partition of the option set")
    if sorted(u for u, _ in result.verdicts) != list(O.members):
        return fail("verdicts do not cover the option set")
    for u, v in result.verdicts:
        if (u in result.rejected) != v.answer:
            return fail("verdict disagrees with partition")
        res = check_membership_verdict(A, shift_set(O, u), v)
        if not res:
            return res
    return OK


def check_binarity_report(A: Assessment, B, rep: BinarityReport) -> CheckResult:
    res = check_membership_verdict(A, B, rep.verdict)
    if not res:
        return res
    for u, sv in rep.singleton_verdicts:
        res = check_membership_verdict(A, GambleSet([u]), sv)
        if not res:
            return res
    if rep.case == "not-member":
        return OK if not rep.verdict.answer else fail("case disagrees with verdict")
    if not rep.verdict.answer:
        return fail("case disagrees with verdict")
    if rep.case == "binary-explained":
        ok = rep.witness in as_gamble_set(B) and any(
            u == rep.witness and sv.answer for u, sv in rep.singleton_verdicts)
        return OK if ok else fail("binary witness not established")
    covered = {u for u, _ in rep.singleton_verdicts}
    ok = covered == set(as_gamble_set(B)) and not any(sv.answer for _, sv in rep.singleton_verdicts)
    return OK if ok else fail("non-binary evidence incomplete")
