"""Certificates for membership in ``Rs(Posi(L>0^s ∪ A))`` and their checkers.

The image of ``Posi`` is uncountable, so it is never built. A
:class:`PosiCertificate` names finitely many base sets ``Q_1..Q_n`` and a
coefficient vector for every tuple in ``Q_1 x ... x Q_n``; the set it
produces is one concrete member of ``Posi``. The checkers here only use set
arithmetic and the definitions of the operators, never an LP, so they are an
independent second route to every positive answer of the engine.

Also here: set-level membership tests for the superset closure ``Su``, the
removal of nonpositive options ``Rn`` and their composite ``Rs``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import CertificateError, ParseError
from .gambles import (Assessment, Gamble, GambleSet, as_gamble_set,
                      format_rational, is_strictly_positive,
                      parse_gamble_set, parse_rational, stack, strip_nonpositive)

ASSESSMENT = "assessment"
POSITIVE_SINGLETON = "positive-singleton"
TAGS = (ASSESSMENT, POSITIVE_SINGLETON)


class CheckResult(NamedTuple):
    ok: bool
    reason: str = "ok"

    def __bool__(self):
        return self.ok


OK = CheckResult(True)


def fail(reason: str) -> CheckResult:
    return CheckResult(False, reason)


@dataclass(frozen=True)
class Base:
    tag: str
    set: GambleSet


@dataclass(frozen=True)
class PosiCertificate:
    """Base sets and one coefficient vector per tuple of their members.

    ``coeffs`` is a sorted tuple of ``(index_tuple, lambda_vector)`` pairs;
    ``index_tuple[k]`` indexes the canonical member order of ``bases[k]``.
    """

    bases: tuple[Base, ...]
    coeffs: tuple[tuple[tuple[int, ...], tuple[Fraction, ...]], ...]

    @classmethod
    def make(cls, bases: Iterable[Base], coeffs: Mapping) -> PosiCertificate:
        return cls(tuple(bases), tuple(sorted(
            (tuple(k), tuple(parse_rational(x) for x in v)) for k, v in coeffs.items())))

    def coeff_map(self) -> dict:
        return dict(self.coeffs)

    def to_json(self) -> dict:
        return {
            "bases": [{"tag": b.tag, "set": b.set.to_json()} for b in self.bases],
            "coeffs": [{"tuple": list(k), "lambda": [format_rational(x) for x in v]}
                       for k, v in self.coeffs],
        }

    @classmethod
    def from_json(cls, doc) -> PosiCertificate:
        try:
            bases = [Base(b["tag"], parse_gamble_set(b["set"])) for b in doc["bases"]]
            coeffs = {tuple(int(i) for i in c["tuple"]): c["lambda"] for c in doc["coeffs"]}
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed certificate: {exc}") from exc
        return cls.make(bases, coeffs)


def _tuples(bases: Sequence[Base]):
    return itertools.product(*(range(len(b.set)) for b in bases))


def produced_set(cert: PosiCertificate) -> GambleSet:
    """The set ``{sum_k lambda_k u_k : u in Q_1 x ... x Q_n}`` named by ``cert``.

    Raises :class:`CertificateError` if a tuple is missing or extra, or a
    coefficient vector has the wrong length, a negative entry or a zero sum.
    """
    n = len(cert.bases)
    table = cert.coeff_map()
    expected = set()
    out = []
    for idx in _tuples(cert.bases):
        expected.add(idx)
        lam = table.get(idx)
        if lam is None:
            raise CertificateError("missing tuple", str(list(idx)))
        if len(lam) != n:
            raise CertificateError("coefficient length mismatch", str(list(idx)))
        if any(x < 0 for x in lam):
            raise CertificateError("negative coefficient", str(list(idx)))
        if sum(lam) <= 0:
            raise CertificateError("coefficient sum not positive", str(list(idx)))
        us = [b.set.members[i] for b, i in zip(cert.bases, idx)]
        out.append(stack(us, lam, len(us[0])))
    extra = set(table) - expected
    if extra:
        raise CertificateError("extra tuple", str(list(min(extra))))
    try:
        return GambleSet(out)
    except ValueError as exc:
        raise CertificateError("dimension mismatch", str(exc)) from exc


def rs_step(produced, B) -> bool:
    """``B`` is in ``Rs({produced})``: dropping the nonpositive members of ``produced`` leaves a subset of ``B``."""
    return strip_nonpositive(produced).issubset(as_gamble_set(B))


def _check_bases(A: Assessment, cert: PosiCertificate) -> CheckResult:
    for b in cert.bases:
        if b.tag == ASSESSMENT:
            if b.set not in A:
                return fail("base not in assessment")
        elif b.tag == POSITIVE_SINGLETON:
            if len(b.set) != 1:
                return fail("positive base not a singleton")
            (e,) = b.set
            if len(e) != A.space.size or not is_strictly_positive(e):
                return fail("positive base not strictly positive")
        else:
            return fail("unknown base tag")
    return OK


def verify_membership_certificate(A: Assessment, B, cert: PosiCertificate) -> CheckResult:
    """Check that ``cert`` literally shows ``B`` in ``Rs(Posi(L>0^s ∪ A))``."""
    B = as_gamble_set(B)
    res = _check_bases(A, cert)
    if not res:
        return res
    try:
        produced = produced_set(cert)
    except CertificateError as exc:
        return fail(exc.reason)
    if not rs_step(produced, B):
        return fail("rs_step failed")
    return OK


def verify_inconsistency_certificate(A: Assessment, cert: PosiCertificate) -> CheckResult:
    """Check that ``cert`` produces exactly ``{0}``, so ``{0}`` is in ``Posi(L>0^s ∪ A)``."""
    res = _check_bases(A, cert)
    if not res:
        return res
    try:
        produced = produced_set(cert)
    except CertificateError as exc:
        return fail(exc.reason)
    if produced != GambleSet([A.space.zero()]):
        return fail("produced set is not {0}")
    return OK


# -- building certificates from per-selection evidence ---------------------

@dataclass(frozen=True)
class MemberEvidence:
    """``b`` is in ``B`` and ``b - sum(lam[k] * picks[k]) >= 0``."""

    b: Gamble
    lam: tuple[Fraction, ...]


@dataclass(frozen=True)
class IncoherentEvidence:
    """``mu >= 0``, ``mu != 0`` and ``sum(mu[k] * picks[k]) <= 0``."""

    mu: tuple[Fraction, ...]


def _frame(A: Assessment):
    N = A.space.size
    bases = [Base(ASSESSMENT, Q) for Q in A.sets]
    bases += [Base(POSITIVE_SINGLETON, GambleSet([A.space.indicator(x)])) for x in range(N)]
    return bases, N


def _selections(A: Assessment):
    for idx in itertools.product(*(range(len(Q)) for Q in A.sets)):
        yield idx, tuple(Q.members[i] for Q, i in zip(A.sets, idx))


def _weights(vec, m, idx):
    if len(vec) != m:
        raise CertificateError("evidence length mismatch", str(list(idx)))
    vec = tuple(parse_rational(x) for x in vec)
    if any(x < 0 for x in vec):
        raise CertificateError("negative evidence weight", str(list(idx)))
    return vec


def build_membership_certificate(A: Assessment, B, per_selection: Mapping) -> PosiCertificate:
    """Assemble a certificate for ``B`` in the natural extension of ``A``.

    ``per_selection`` maps each selection (the tuple of picks, one per set of
    ``A`` in canonical order) to :class:`MemberEvidence` or
    :class:`IncoherentEvidence`. The bases are all sets of ``A`` followed by
    the indicator singletons ``{e_x}``; nonnegative residuals are absorbed by
    the indicators, so each coherent selection produces its ``b`` exactly and
    each incoherent one produces a nonpositive gamble that ``Rs`` discards.
    """
    B = as_gamble_set(B)
    bases, N = _frame(A)
    m = len(A.sets)
    zeros = (0,) * N
    table = {}
    for idx, picks in _selections(A):
        ev = per_selection.get(picks)
        if isinstance(ev, MemberEvidence):
            if ev.b not in B:
                raise CertificateError("evidence gamble not in query set", str(ev.b))
            lam = _weights(ev.lam, m, idx)
            h = ev.b - stack(picks, lam, N)
            if any(x < 0 for x in h):
                raise CertificateError("negative residual", str(list(idx)))
            coeff = lam + h.values
        elif isinstance(ev, IncoherentEvidence):
            mu = _weights(ev.mu, m, idx)
            if m == 0 or any(x > 0 for x in stack(picks, mu, N)):
                raise CertificateError("combination not nonpositive", str(list(idx)))
            coeff = mu + (Fraction(0),) * N
        else:
            raise CertificateError("missing selection evidence", str(list(idx)))
        if sum(coeff) <= 0:
            raise CertificateError("coefficient sum not positive", str(list(idx)))
        table[idx + zeros] = coeff
    return PosiCertificate.make(bases, table)


def build_inconsistency_certificate(A: Assessment, per_selection: Mapping) -> PosiCertificate:
    """Certificate producing exactly ``{0}`` from incoherence weights of every selection."""
    bases, N = _frame(A)
    m = len(A.sets)
    zeros = (0,) * N
    table = {}
    for idx, picks in _selections(A):
        ev = per_selection.get(picks)
        if not isinstance(ev, IncoherentEvidence):
            raise CertificateError("missing selection evidence", str(list(idx)))
        mu = _weights(ev.mu, m, idx)
        c = stack(picks, mu, N)
        if sum(mu) <= 0 or any(x > 0 for x in c):
            raise CertificateError("combination not nonpositive", str(list(idx)))
        table[idx + zeros] = mu + tuple(-x for x in c)
    return PosiCertificate.make(bases, table)


# -- Su, Rn, Rs membership over a finite base collection -------------------

def su_member(baseK: Iterable, B) -> bool:
    """``B`` in ``Su(K)``: some base is a subset of ``B``."""
    B = as_gamble_set(B)
    return any(as_gamble_set(Q).issubset(B) for Q in baseK)


def rn_member(baseK: Iterable, B) -> bool:
    """``B`` in ``Rn(K)``: some base ``Q`` has ``Q minus nonpositives ⊆ B ⊆ Q``."""
    B = as_gamble_set(B)
    for Q in baseK:
        Q = as_gamble_set(Q)
        if strip_nonpositive(Q).issubset(B) and B.issubset(Q):
            return True
    return False


def rs_member(baseK: Iterable, B) -> bool:
    """``B`` in ``Rs(K)``: some base with its nonpositive options removed is a subset of ``B``."""
    return any(rs_step(Q, B) for Q in baseK)


def su_closure(baseK: Iterable, universe) -> list[GambleSet]:
    """Every subset of ``universe`` that contains some base: ``Su(K)`` cut down to a finite universe."""
    universe = as_gamble_set(universe)
    bases = [as_gamble_set(Q) for Q in baseK]
    out = []
    for r in range(len(universe) + 1):
        for combo in itertools.combinations(universe.members, r):
            S = GambleSet(combo)
            if any(Q.issubset(S) for Q in bases):
                out.append(S)
    return out
