"""Possibility spaces, gambles, gamble sets and assessments.

Everything here is immutable and uses :class:`fractions.Fraction`; floats
are refused at the door. Gamble sets and assessments keep their members in
a canonical (lexicographic) order so that every derived output is
deterministic.

>>> A = GambleSet([["1", "-1"], ["-1", 0], [0, 0]])
>>> print(strip_nonpositive(A))
{(1, -1)}
>>> print(shift_set(GambleSet([[1, 1], [0, 0]]), Gamble([1, 1])))
{(-1, -1), (0, 0)}
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, ParseError

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or an integer string into an exact rational.

    Python ints and Fractions pass through; floats, bools and decimal
    strings are rejected.

    >>> parse_rational("3/4"), parse_rational("-2"), parse_rational("6/8")
    (Fraction(3, 4), Fraction(-2, 1), Fraction(3, 4))
    """
    if type(text) is Fraction:
        return text
    if isinstance(text, bool):
        raise ParseError(f"not a rational: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"not a rational: {text!r}")
    m = _RATIONAL.match(text)
    if m is None:
        raise ParseError(f"not a rational: {text!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Fraction) -> str:
    # Fraction.__str__ is already "p/q" in lowest terms, "p" when q == 1
    return str(q)


@dataclass(frozen=True)
class PossibilitySpace:
    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        if not labels:
            raise ParseError("possibility space needs at least one state")
        if any(not isinstance(x, str) for x in labels):
            raise ParseError("state labels must be strings")
        if len(set(labels)) != len(labels):
            raise ParseError(f"duplicate state label in {list(labels)}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def of_size(cls, n: int) -> PossibilitySpace:
        return cls(tuple(f"x{i + 1}" for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.labels)

    def check(self, u: Gamble) -> Gamble:
        if len(u) != self.size:
            raise DimensionMismatch(
                f"gamble of length {len(u)} on a space of {self.size} states")
        return u

    def indicator(self, i: int) -> Gamble:
        return Gamble(1 if j == i else 0 for j in range(self.size))

    def zero(self) -> Gamble:
        return Gamble([0] * self.size)


@dataclass(frozen=True, order=True)
class Gamble:
    """A reward vector with one exact rational entry per state.

    Ordering is lexicographic on the entries. Supports ``u + v``, ``u - v``,
    ``-u`` and scaling by a rational (``q * u``).
    """

    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable):
        object.__setattr__(self, "values", tuple(parse_rational(v) for v in values))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def _same_dim(self, other: Gamble):
        if len(self) != len(other):
            raise DimensionMismatch(f"lengths {len(self)} and {len(other)} differ")

    def __add__(self, other: Gamble) -> Gamble:
        self._same_dim(other)
        return Gamble(a + b for a, b in zip(self.values, other.values))

    def __sub__(self, other: Gamble) -> Gamble:
        self._same_dim(other)
        return Gamble(a - b for a, b in zip(self.values, other.values))

    def __neg__(self) -> Gamble:
        return Gamble(-a for a in self.values)

    def __rmul__(self, scalar) -> Gamble:
        q = parse_rational(scalar)
        return Gamble(q * a for a in self.values)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.values)

    def dominates(self, other: Gamble) -> bool:
        """Pointwise ``self >= other``."""
        self._same_dim(other)
        return all(a >= b for a, b in zip(self.values, other.values))

    def __str__(self):
        return "(" + ", ".join(format_rational(a) for a in self.values) + ")"

    def __repr__(self):
        return f"Gamble({[format_rational(a) for a in self.values]})"

    def to_json(self) -> list[str]:
        return [format_rational(a) for a in self.values]


def as_gamble(u) -> Gamble:
    return u if isinstance(u, Gamble) else Gamble(u)


def _check_space(u: Gamble, space: PossibilitySpace | None):
    if space is not None:
        space.check(u)


def is_strictly_positive(u, space: PossibilitySpace | None = None) -> bool:
    """True iff ``u >= 0`` everywhere and ``u != 0``."""
    u = as_gamble(u)
    _check_space(u, space)
    return all(a >= 0 for a in u) and any(a > 0 for a in u)


def is_nonpositive(u, space: PossibilitySpace | None = None) -> bool:
    u = as_gamble(u)
    _check_space(u, space)
    return all(a <= 0 for a in u)


class GambleSet:
    """A finite set of distinct gambles, possibly empty, in canonical order.

    Duplicates are merged silently. All members must share one length.
    """

    __slots__ = ("members", "_set")

    def __init__(self, members: Iterable = ()):
        gs = {as_gamble(u) for u in members}
        lengths = {len(u) for u in gs}
        if len(lengths) > 1:
            raise DimensionMismatch(f"gamble set mixes lengths {sorted(lengths)}")
        self.members: tuple[Gamble, ...] = tuple(sorted(gs))
        self._set = frozenset(gs)

    @property
    def dim(self) -> int | None:
        return len(self.members[0]) if self.members else None

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, u):
        return as_gamble(u) in self._set

    def __eq__(self, other):
        if not isinstance(other, GambleSet):
            return NotImplemented
        return self._set == other._set

    def __hash__(self):
        return hash(self._set)

    def __lt__(self, other: GambleSet):
        return self.members < other.members

    def issubset(self, other: GambleSet) -> bool:
        return self._set <= other._set

    def __or__(self, other: GambleSet) -> GambleSet:
        return GambleSet(self.members + other.members)

    def __sub__(self, other: GambleSet) -> GambleSet:
        return GambleSet(u for u in self.members if u not in other._set)

    def without(self, u) -> GambleSet:
        u = as_gamble(u)
        return GambleSet(v for v in self.members if v != u)

    def with_(self, u) -> GambleSet:
        return GambleSet(self.members + (as_gamble(u),))

    def index(self, u) -> int:
        return self.members.index(as_gamble(u))

    def __str__(self):
        return "{" + ", ".join(str(u) for u in self.members) + "}"

    def __repr__(self):
        return f"GambleSet({[u.to_json() for u in self.members]})"

    def to_json(self) -> list[list[str]]:
        return [u.to_json() for u in self.members]


def as_gamble_set(A) -> GambleSet:
    return A if isinstance(A, GambleSet) else GambleSet(A)


def strip_nonpositive(A) -> GambleSet:
    """Drop every member that is pointwise ``<= 0``."""
    A = as_gamble_set(A)
    return GambleSet(u for u in A if not is_nonpositive(u))


def shift_set(A, u) -> GambleSet:
    """``{w - u : w in A}``; ``u`` is rejected from ``A`` iff this set is desirable."""
    A = as_gamble_set(A)
    u = as_gamble(u)
    return GambleSet(w - u for w in A)


class Assessment:
    """A finite set of gamble sets over one possibility space."""

    __slots__ = ("space", "sets")

    def __init__(self, space: PossibilitySpace | int, sets: Iterable = ()):
        if isinstance(space, int):
            space = PossibilitySpace.of_size(space)
        self.space = space
        canon = {as_gamble_set(Q) for Q in sets}
        for Q in canon:
            for u in Q:
                space.check(u)
        self.sets: tuple[GambleSet, ...] = tuple(sorted(canon))

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, Q):
        return as_gamble_set(Q) in self.sets

    def __eq__(self, other):
        if not isinstance(other, Assessment):
            return NotImplemented
        return self.space == other.space and self.sets == other.sets

    def __hash__(self):
        return hash((self.space, self.sets))

    def extended(self, more: Iterable) -> Assessment:
        return Assessment(self.space, self.sets + tuple(more))

    def __repr__(self):
        return f"Assessment({list(self.space.labels)}, {[Q.to_json() for Q in self.sets]})"

    def to_json(self) -> dict:
        return {"space": list(self.space.labels),
                "assessment": [Q.to_json() for Q in self.sets]}


# -- text formats ---------------------------------------------------------

def parse_gamble(obj, space: PossibilitySpace | None = None) -> Gamble:
    if not isinstance(obj, list):
        raise ParseError(f"gamble must be a JSON array, got {obj!r}")
    u = Gamble(obj)
    _check_space(u, space)
    return u


def parse_gamble_set(obj, space: PossibilitySpace | None = None) -> GambleSet:
    if not isinstance(obj, list):
        raise ParseError(f"gamble set must be a JSON array, got {obj!r}")
    return GambleSet(parse_gamble(g, space) for g in obj)


def parse_space(obj) -> PossibilitySpace:
    if not isinstance(obj, list):
        raise ParseError("'space' must be an array of state labels")
    return PossibilitySpace(tuple(obj))


def assessment_from_json(doc: dict) -> Assessment:
    if not isinstance(doc, dict) or "space" not in doc:
        raise ParseError("document needs a 'space' field")
    space = parse_space(doc["space"])
    sets = doc.get("assessment", [])
    if not isinstance(sets, list):
        raise ParseError("'assessment' must be an array of gamble sets")
    return Assessment(space, [parse_gamble_set(Q, space) for Q in sets])


def loads_assessment(text: str) -> Assessment:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return assessment_from_json(doc)


def dumps(obj) -> str:
    """Canonical compact JSON; the same value always yields the same bytes."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def dumps_assessment(A: Assessment) -> str:
    return dumps(A.to_json())


def stack(vectors: Sequence[Gamble], coeffs: Sequence[Fraction], dim: int) -> Gamble:
    """Linear combination ``sum(coeffs[k] * vectors[k])`` of length ``dim``."""
    acc = [Fraction(0)] * dim
    for c, u in zip(coeffs, vectors):
        if c:
            for i, a in enumerate(u):
                acc[i] += c * a
    return Gamble(acc)
