import sys
from dataclasses import replace
from pathlib import Path

import pytest
import sympy as sp

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from src.errors import NormalizationError, RankError
from src.exact import exact_matrix, identity, mat_inverse, mat_mul
from src.invariants import InvariantSpace, invariant_of_h0_hinf
from src.levelt import cp_levelt
from src.stokes import (
    closed_form_stokes,
    coxeter_element,
    gram_from_invariant,
    reflections_from_gram,
    sign_twist,
    solve_stokes,
    stokes_matrix,
)

S_K3 = exact_matrix([[1, 0, 0], [-3, 1, 0], [3, -3, 1]])


def test_closed_form_examples():
    assert closed_form_stokes(2) == exact_matrix([[1, 0], [-2, 1]])
    assert closed_form_stokes(3) == S_K3
    assert closed_form_stokes(4)[3, :] == exact_matrix([[-4, 6, -4, 1]])


def test_gram_normalization_k2_and_k3():
    g2 = gram_from_invariant(invariant_of_h0_hinf(2), 2)
    g3 = gram_from_invariant(invariant_of_h0_hinf(3), 3)

    assert g2.g == exact_matrix([[2, -2], [-2, 2]])
    assert (g2.symmetry, g2.parity, g2.t_diag, g2.r) == ("symmetric", "even", 2, -1)
    assert g3.g == exact_matrix([[0, 3, -3], [-3, 0, 3], [3, -3, 0]])
    assert (g3.symmetry, g3.parity, g3.t_diag, g3.r) == ("antisymmetric", "odd", 0, 1)


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("scale", [7, sp.Rational(-2, 3)])
def test_gram_is_scale_invariant(k, scale):
    space = invariant_of_h0_hinf(k)
    scaled = InvariantSpace(k=k, basis=tuple(scale * x for x in space.basis))

    assert gram_from_invariant(scaled, k).g == gram_from_invariant(space, k).g


def test_gram_rejects_wrong_dimension():
    space = InvariantSpace(k=2, basis=(identity(2), exact_matrix([[0, 1], [1, 0]])))

    with pytest.raises(NormalizationError, match="dimension 2"):
        gram_from_invariant(space, 2)


def test_gram_rejects_zero_sub_diagonal():
    space = InvariantSpace(k=2, basis=(identity(2),))

    with pytest.raises(NormalizationError, match="sub-diagonal"):
        gram_from_invariant(space, 2)


def test_k2_reflections_and_coxeter():
    rs = reflections_from_gram(gram_from_invariant(invariant_of_h0_hinf(2), 2))

    assert rs.reflections[0] == cp_levelt(2).h1
    assert rs.reflections[1] == exact_matrix([[1, 2], [0, -1]])
    coxeter, agree = coxeter_element(rs)
    assert agree
    assert coxeter == exact_matrix([[3, 2], [-2, -1]])


def test_coxeter_element_reports_route_mismatch():
    rs = reflections_from_gram(gram_from_invariant(invariant_of_h0_hinf(2), 2))
    swapped = replace(rs, reflections=rs.reflections[::-1])

    coxeter, agree = coxeter_element(swapped)

    assert not agree
    assert coxeter == exact_matrix([[-1, -2], [2, 3]])


@pytest.mark.parametrize("k", [2, 3, 4])
def test_stokes_result_records_coxeter_routes(k):
    record = next(c for c in stokes_matrix(k).identities if c.ref == "coxeter-uv")
    assert record.passed


def test_solve_stokes_k3():
    gram = gram_from_invariant(invariant_of_h0_hinf(3), 3)
    coxeter, _ = coxeter_element(reflections_from_gram(gram))

    s = solve_stokes(coxeter, gram.g)

    assert s == S_K3
    assert mat_mul(identity(3) - coxeter, s) == gram.g


def test_solve_stokes_invertible_branch():
    coxeter = exact_matrix([[0, 0], [0, 0]])
    g = exact_matrix([[1, 0], [5, 1]])

    assert solve_stokes(coxeter, g) == g


@pytest.mark.parametrize("k", range(2, 11))
def test_stokes_matches_closed_form(k):
    result = stokes_matrix(k)

    assert result.matches_closed_form
    assert result.s == closed_form_stokes(k)
    assert [c.name for c in result.identities if not c.passed] == []


@pytest.mark.parametrize("k", [3, 5, 7])
def test_odd_k_uses_transvections(k):
    result = stokes_matrix(k)

    assert result.gram.symmetry == "antisymmetric"
    assert result.s - result.s.T == result.gram.g
    assert result.coxeter == mat_mul(result.s.T, mat_inverse(result.s))
    assert result.reflections.reflections[0] == mat_inverse(cp_levelt(k).h1)


@pytest.mark.parametrize("k", [2, 4, 6])
def test_even_k_degeneracy(k):
    result = stokes_matrix(k)
    s = result.s
    ones = sp.ImmutableMatrix([1] * k)
    alternating = sp.ImmutableMatrix([(-1) ** i for i in range(k)])
    twisted = sign_twist(s)

    assert result.gram.symmetry == "symmetric"
    assert (s + s.T).det() == 0
    assert mat_mul(s + s.T, ones) == sp.zeros(k, 1)
    assert mat_mul(twisted + twisted.T, alternating) == sp.zeros(k, 1)
    assert result.coxeter == -mat_mul(s.T, mat_inverse(s))


def test_sign_twist_and_r_one_extras():
    result = stokes_matrix(2)

    assert result.extras["sign_twisted"] == exact_matrix([[1, 0], [2, 1]])
    assert result.extras["r_one"] == result.extras["sign_twisted"]
    assert stokes_matrix(4).extras["r_one"] != stokes_matrix(4).extras["sign_twisted"]
    assert "r_one" not in stokes_matrix(3).extras


def test_stokes_matrix_rejects_rank_one():
    with pytest.raises(RankError):
        stokes_matrix(1)
