import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wdcert.errors import CoprimalityError, DomainError, UnsupportedSlope
from wdcert.seifert import SeifertSphere, SurgerySlope, TorusKnotParams, moser_surgery, normalize_seifert


def test_normalize_sorts():
    s = normalize_seifert(5, 3, 2, +1)
    assert s.fibers == (2, 3, 5) and s.orientation == 1
    assert str(s) == "Σ(2,3,5)"


def test_normalize_negative_orientation():
    s = normalize_seifert(2, 3, 23, -1)
    assert s == SeifertSphere(2, 3, 23, -1)
    assert str(s) == "-Σ(2,3,23)"


def test_normalize_rejects_shared_factor():
    with pytest.raises(CoprimalityError):
        normalize_seifert(2, 4, 5, +1)


def test_negation_flips_sign_only():
    s = normalize_seifert(2, 3, 7)
    assert (-s).fibers == s.fibers
    assert (-s).orientation == -1
    assert -(-s) == s


def test_json_round_trip():
    s = normalize_seifert(2, 3, 23, -1)
    assert s.to_json() == {"sign": -1, "fibers": [2, 3, 23]}
    assert SeifertSphere.from_json(s.to_json()) == s


@given(st.integers(1, 60), st.integers(1, 60), st.integers(1, 60), st.sampled_from([1, -1]))
def test_normalize_idempotent(a, b, c, sign):
    if math.gcd(a, b) != 1 or math.gcd(a, c) != 1 or math.gcd(b, c) != 1:
        with pytest.raises(CoprimalityError):
            normalize_seifert(a, b, c, sign)
        return
    s = normalize_seifert(a, b, c, sign)
    assert normalize_seifert(*s.fibers, s.orientation) == s


def test_torus_knot_sorts_and_validates():
    assert TorusKnotParams(3, 2) == TorusKnotParams(2, 3)
    with pytest.raises(CoprimalityError):
        TorusKnotParams(2, 4)
    with pytest.raises(DomainError):
        TorusKnotParams(1, 5)
    assert TorusKnotParams(1, 5, allow_unknot=True).is_unknot


def test_slope_parse():
    assert SurgerySlope.parse("1/4") == SurgerySlope(1, 4)
    assert SurgerySlope.parse("-5") == SurgerySlope(-5, 1)
    assert SurgerySlope.parse("2/4") == SurgerySlope(1, 2)
    with pytest.raises(DomainError):
        SurgerySlope(1, 0)
    with pytest.raises(CoprimalityError):
        SurgerySlope(2, 4)


@pytest.mark.parametrize(
    "n, expected",
    [(1, (2, 3, 5)), (4, (2, 3, 23)), (2, (2, 3, 11))],
)
def test_moser_trefoil(n, expected):
    s = moser_surgery(TorusKnotParams(2, 3), SurgerySlope(1, n))
    assert s.fibers == expected and s.orientation == -1


def test_moser_rejects_other_slopes():
    with pytest.raises(UnsupportedSlope):
        moser_surgery(TorusKnotParams(2, 3), SurgerySlope(-1, 1))
    with pytest.raises(UnsupportedSlope):
        moser_surgery(TorusKnotParams(2, 3), SurgerySlope(3, 2))


@given(st.integers(2, 25), st.integers(2, 25), st.integers(1, 8))
def test_moser_fiber_multiset(p, q, n):
    if p == q or math.gcd(p, q) != 1:
        return
    s = moser_surgery(TorusKnotParams(p, q), SurgerySlope(1, n))
    assert sorted(s.fibers) == sorted((p, q, n * p * q - 1))
    assert s.orientation == -1
