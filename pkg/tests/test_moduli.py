import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import dedekind_direct, dimension_mpmath
from wdcert.errors import CoprimalityError, DomainError, EvaluationDisagreement
from wdcert.moduli import (
    bubbling_bound_holds,
    dedekind_sum,
    dimension_exact,
    dimension_float,
    moduli_dimension,
    ordering_key,
    sawtooth,
)
from wdcert.seifert import normalize_seifert


def test_sawtooth():
    assert sawtooth(Fraction(1, 2)) == 0
    assert sawtooth(Fraction(3)) == 0
    assert sawtooth(Fraction(1, 3)) == Fraction(-1, 6)
    assert sawtooth(Fraction(-1, 3)) == Fraction(1, 6)


@pytest.mark.parametrize("b, c, expected", [(1, 2, Fraction(0)), (1, 3, Fraction(1, 18)), (2, 3, Fraction(-1, 18))])
def test_dedekind_examples(b, c, expected):
    assert dedekind_sum(b, c) == expected


def test_dedekind_rejects_common_factor():
    with pytest.raises(CoprimalityError):
        dedekind_sum(2, 4)
    with pytest.raises(DomainError):
        dedekind_sum(1, 0)


def test_dedekind_matches_defining_series():
    for c in range(1, 80):
        for b in range(-c, 2 * c):
            if math.gcd(b, c) == 1:
                assert dedekind_sum(b, c) == dedekind_direct(b, c), (b, c)


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_reciprocity(b, c):
    if math.gcd(b, c) != 1:
        return
    lhs = dedekind_sum(b, c) + dedekind_sum(c, b)
    assert lhs == Fraction(-1, 4) + (Fraction(b, c) + Fraction(c, b) + Fraction(1, b * c)) / 12


@given(st.integers(2, 10**5), st.data())
def test_antisymmetry(c, data):
    b = data.draw(st.integers(1, c - 1))
    if math.gcd(b, c) != 1:
        return
    assert dedekind_sum(c - b, c) == -dedekind_sum(b, c)


@pytest.mark.parametrize("fibers", [(2, 3, 5), (2, 3, 11)])
def test_dimension_is_one(fibers):
    report = moduli_dimension(normalize_seifert(*fibers))
    assert report.dimension == 1
    assert report.residual < 1e-6


def test_dimension_orientation_independent():
    s = normalize_seifert(2, 3, 7)
    assert moduli_dimension(s).dimension == moduli_dimension(-s).dimension


def test_float_route_against_high_precision():
    rng = random.Random(7)
    cases = [(2, 3, 5), (2, 3, 7), (3, 4, 5), (5, 7, 11), (7, 11, 13)]
    for _ in range(10):
        a, b, c = rng.sample(range(2, 40), 3)
        if math.gcd(a, b) == math.gcd(a, c) == math.gcd(b, c) == 1:
            cases.append((a, b, c))
    for fibers in cases:
        reference = dimension_mpmath(fibers)
        assert abs(dimension_float(fibers) - float(reference)) < 1e-9
        assert abs(float(dimension_exact(fibers)) - float(reference)) < 1e-9


def test_exact_route_more_fibers():
    # the closed form is not tied to three fibers
    fibers = (2, 3, 5, 7)
    assert abs(float(dimension_exact(fibers)) - dimension_float(fibers)) < 1e-9


def test_tolerance_bounds():
    s = normalize_seifert(2, 3, 5)
    with pytest.raises(DomainError):
        moduli_dimension(s, tolerance=1e-2)


def test_disagreement_detected(monkeypatch):
    import wdcert.moduli as moduli

    s = normalize_seifert(2, 3, 7)
    monkeypatch.setattr(moduli, "dimension_float", lambda fibers: 0.9)
    with pytest.raises(EvaluationDisagreement):
        moduli.moduli_dimension(s)
    monkeypatch.setattr(moduli, "dimension_float", lambda fibers: -1.01)
    with pytest.raises(EvaluationDisagreement):
        moduli.moduli_dimension(s)
    monkeypatch.setattr(moduli, "dimension_float", lambda fibers: -1.0005)
    assert moduli.moduli_dimension(s).dimension == -1
    with pytest.raises(EvaluationDisagreement):
        moduli.moduli_dimension(s, tolerance=1e-4)


def test_report_json():
    report = moduli_dimension(normalize_seifert(2, 3, 5))
    data = report.to_json()
    assert data["fibers"] == [2, 3, 5] and data["dimension"] == 1 and data["residual"] < 1e-6


@pytest.mark.parametrize("p, q, k, expected", [(2, 3, 1, 30), (2, 3, 2, 66), (2, 7, 1, 182)])
def test_ordering_key(p, q, k, expected):
    assert ordering_key(p, q, k) == expected


def test_ordering_key_domain():
    for bad in [(2, 2, 1), (1, 3, 1), (2, 3, 0)]:
        with pytest.raises(DomainError):
            ordering_key(*bad)


def test_bubbling_bound():
    assert bubbling_bound_holds(2, 3, 1)
    assert bubbling_bound_holds(3, 5, 4)
    with pytest.raises(DomainError):
        bubbling_bound_holds(2, 2, 1)


@given(st.integers(2, 30), st.integers(2, 30), st.integers(1, 20))
def test_ordering_key_increasing_in_k(p, q, k):
    if math.gcd(p, q) != 1:
        return
    assert ordering_key(p, q, k) < ordering_key(p, q, k + 1)
