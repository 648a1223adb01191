import json
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cochoice import (Assessment, DimensionMismatch, Gamble, GambleSet, ParseError,
                      PossibilitySpace, is_nonpositive, is_strictly_positive,
                      shift_set, strip_nonpositive)
from cochoice.gambles import (dumps_assessment, format_rational, loads_assessment,
                              parse_gamble, parse_rational)

from conftest import gamble_sets, gambles


@pytest.mark.parametrize("text,value", [("3/4", F(3, 4)), ("-2", F(-2)), ("6/8", F(3, 4)),
                                        ("0", F(0)), (" -1/3 ", F(-1, 3)), (5, F(5))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1/0", "0.5", "1e3", "abc", "", "1/-2", 0.5, True, None])
def test_parse_rational_rejects(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


def test_format_round_trip():
    for q in (F(3, 4), F(-2), F(0), F(-7, 3)):
        assert parse_rational(format_rational(q)) == q
    assert format_rational(F(-2)) == "-2"


def test_positivity():
    assert is_strictly_positive(Gamble([1, 0]))
    assert not is_strictly_positive(Gamble([0, 0]))
    assert not is_strictly_positive(Gamble([1, F(-1, 2)]))
    assert is_nonpositive(Gamble([0, 0]))
    assert is_nonpositive(Gamble([-1, -2]))
    assert not is_nonpositive(Gamble([1, -1]))


def test_space_checks_dimension():
    with pytest.raises(DimensionMismatch):
        is_strictly_positive(Gamble([1, 2, 3]), PossibilitySpace.of_size(2))
    with pytest.raises(DimensionMismatch):
        Gamble([1, 2]) + Gamble([1])


def test_gamble_rejects_floats():
    with pytest.raises(ParseError):
        Gamble([0.5, 1])


def test_strip_and_shift():
    S = GambleSet([Gamble([1, -1]), Gamble([-1, 0]), Gamble([0, 0])])
    assert strip_nonpositive(S) == GambleSet([Gamble([1, -1])])
    assert strip_nonpositive(GambleSet()) == GambleSet()
    O = GambleSet([Gamble([1, 1]), Gamble([0, 0])])
    assert shift_set(O, Gamble([1, 1])) == GambleSet([Gamble([0, 0]), Gamble([-1, -1])])
    assert shift_set(GambleSet([Gamble([2, 0])]), Gamble([2, 0])) == GambleSet([Gamble([0, 0])])


def test_gamble_set_is_a_set():
    a, b = Gamble([1, 0]), Gamble([0, 1])
    assert GambleSet([a, b, a]) == GambleSet([b, a])
    assert len(GambleSet([a, b, a])) == 2
    assert hash(GambleSet([a, b])) == hash(GambleSet([b, a]))


def test_assessment_json_round_trip():
    text = '{"space": ["rain", "sun"], "assessment": [[["1", "-1"], ["-1", "1"]], [["1/2", "0"]]]}'
    A = loads_assessment(text)
    assert A.space.labels == ("rain", "sun")
    assert len(A) == 2
    assert loads_assessment(dumps_assessment(A)) == A


def test_assessment_rejects_ragged():
    with pytest.raises(DimensionMismatch):
        loads_assessment(json.dumps({"space": ["a", "b"], "assessment": [[["1"], ["1", "2"]]]}))


def test_assessment_dedupes_sets():
    Q = GambleSet([Gamble([1, -1])])
    assert len(Assessment(2, [Q, Q])) == 1


def test_parse_gamble_against_space():
    sp = PossibilitySpace.of_size(3)
    assert parse_gamble(["1", "-1/2", "0"], sp) == Gamble([1, F(-1, 2), 0])
    with pytest.raises(DimensionMismatch):
        parse_gamble(["1"], sp)


@given(gambles(3))
def test_positive_and_nonpositive_are_exclusive(u):
    assert not (is_strictly_positive(u) and is_nonpositive(u))


@given(gambles(3))
def test_positive_means_nonneg_and_nonzero(u):
    assert is_strictly_positive(u) == (all(x >= 0 for x in u) and not u.is_zero())


@given(gamble_sets(2, 5))
def test_strip_is_idempotent_and_a_subset(S):
    T = strip_nonpositive(S)
    assert strip_nonpositive(T) == T
    assert T.issubset(S)
    assert all(not is_nonpositive(u) for u in T)


@given(gamble_sets(2), gambles(2))
def test_shift_is_invertible(S, u):
    assert shift_set(shift_set(S, u), -u) == S
    assert len(shift_set(S, u)) == len(S)


@given(st.lists(gambles(2), max_size=4))
def test_gamble_set_order_independent(us):
    assert GambleSet(us) == GambleSet(reversed(us))
