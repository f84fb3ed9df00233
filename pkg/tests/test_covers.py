import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import alexander_sympy, torus_alexander_sympy
from wdcert.covers import (
    LONGITUDE_FIRST,
    SeifertMatrix,
    alexander_from_seifert,
    alexander_torus,
    decompose_cover,
    determinant_from_seifert,
    double_seifert_matrix,
    h1_order,
)
from wdcert.errors import DepthError, ShapeError
from wdcert.intlinalg import determinant
from wdcert.laurent import T, LaurentPolynomial
from wdcert.seifert import TorusKnotParams

GRID = [(p, q) for q in range(2, 8) for p in range(2, q) if math.gcd(p, q) == 1]


def coeffs(poly):
    if poly.is_zero():
        return []
    return [poly.as_dict().get(e, 0) for e in range(poly.high + 1)]


@pytest.mark.parametrize("p, q, expected", [(2, 3, T**2 - T + 1), (2, 5, T**4 - T**3 + T**2 - T + 1)])
def test_alexander_torus_examples(p, q, expected):
    assert alexander_torus(TorusKnotParams(p, q)) == expected


def test_alexander_unknot():
    assert alexander_torus(TorusKnotParams(1, 7, allow_unknot=True)) == LaurentPolynomial.constant(1)


@pytest.mark.parametrize("p, q", GRID + [(3, 10), (5, 12)])
def test_alexander_torus_oracle(p, q):
    poly = alexander_torus(TorusKnotParams(p, q))
    assert coeffs(poly) == torus_alexander_sympy(p, q)
    assert poly.symmetrized().inverted() == poly.symmetrized()
    assert abs(poly(1)) == 1
    assert abs(poly(-1)) % 2 == 1


def test_double_seifert_matrix():
    assert double_seifert_matrix(0).entries == ((-1, 1), (0, 0))
    assert double_seifert_matrix(-2).entries == ((-1, 1), (0, -2))
    assert double_seifert_matrix(1).entries == ((-1, 1), (0, 1))


def test_alexander_from_seifert_examples():
    assert alexander_from_seifert(double_seifert_matrix(0)) == LaurentPolynomial.constant(1)
    assert alexander_from_seifert(double_seifert_matrix(-2)) == 2 * T**2 - 3 * T + 2
    assert alexander_from_seifert(SeifertMatrix(())) == LaurentPolynomial.constant(1)


def test_determinant_examples():
    assert determinant_from_seifert(double_seifert_matrix(0)) == 1
    assert determinant_from_seifert(double_seifert_matrix(-2)) == 7
    assert determinant_from_seifert(SeifertMatrix(())) == 1


seifert_matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(seifert_matrices)
def test_alexander_matches_sympy(rows):
    V = SeifertMatrix(rows)
    assert coeffs(alexander_from_seifert(V)) == alexander_sympy(rows)


@given(seifert_matrices)
def test_alexander_at_minus_one_is_determinant(rows):
    V = SeifertMatrix(rows)
    assert abs(alexander_from_seifert(V)(-1)) == determinant_from_seifert(V)


@given(st.integers(-20, 20))
def test_twisted_double_polynomials(n):
    poly = alexander_from_seifert(double_seifert_matrix(n))
    assert abs(poly(1)) == 1
    assert poly.symmetrized().inverted() == poly.symmetrized()
    assert poly.unit_equivalent((-n) * (T - 1) ** 2 + T)


def test_decomposition_depth_one():
    d = decompose_cover(TorusKnotParams(2, 3), 1)
    assert d.pattern.mutual_linking == 2 and d.pattern.depth == 0
    # companion meridian -> (-2, 1)
    assert all((g[0][0], g[1][0]) == (-2, 1) for g in d.gluings)
    assert h1_order(d) == 1


@pytest.mark.parametrize("p, q, r", [(2, 3, 2), (2, 5, 3)])
def test_decomposition_splice_form(p, q, r):
    d = decompose_cover(TorusKnotParams(p, q), r)
    assert d.pattern.depth == r - 1 and d.pattern.twist == -2 and d.pattern.mutual_linking == 0
    assert all(g == ((0, 1), (1, 0)) for g in d.gluings)
    assert len(d.companions) == 2
    assert h1_order(d) == 1


def test_decomposition_depth_error():
    with pytest.raises(DepthError):
        decompose_cover(TorusKnotParams(2, 3), 0)


def test_gluings_must_be_unimodular():
    d = decompose_cover(TorusKnotParams(2, 3), 2)
    with pytest.raises(ShapeError):
        d.with_gluings([((2, 0), (0, 1)), ((1, 0), (0, 1))])


@pytest.mark.parametrize("r", [1, 2, 3])
def test_presentation_is_square_and_det_matches(r):
    d = decompose_cover(TorusKnotParams(2, 3), r)
    assert abs(determinant(d.presentation())) == h1_order(d)


def test_identity_gluing_negative_control():
    identity = ((1, 0), (0, 1))
    d1 = decompose_cover(TorusKnotParams(2, 3), 1).with_gluings([identity, identity])
    d2 = decompose_cover(TorusKnotParams(2, 3), 2).with_gluings([identity, identity])
    # generators m1, m2, u1, u2; relations u_j = m_j and lk * m_other = 0
    assert h1_order(d1) == 4
    assert h1_order(d2) == 0


def test_transposed_reading_is_not_a_homology_sphere():
    d = decompose_cover(TorusKnotParams(2, 3), 1, convention=LONGITUDE_FIRST)
    assert h1_order(d) == 4


def test_decomposition_json():
    data = decompose_cover(TorusKnotParams(2, 5), 3).to_json()
    assert data["pattern_piece"]["label"] == "S^3 - N(D^2_-2(T(2,4)))"
    assert data["gluings"] == [[[0, 1], [1, 0]], [[0, 1], [1, 0]]]
