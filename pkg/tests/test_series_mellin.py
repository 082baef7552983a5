import logging
import sys
from pathlib import Path

import mpmath
import pytest
import sympy as sp

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from src.errors import RankError
from src.exact import exact_matrix, identity, mat_mul
from src.series import (
    AffineForm,
    SeriesCoeffs,
    apply_hg_operator,
    cayley_L,
    closed_form_check,
    evaluate_I0,
    form_symbols,
    kummer_substitution_check,
    mellin_exponents,
    mellin_gamma_recurrence,
    mellin_identities,
    series_coefficients,
    specialize,
)


# ==========================================
# 정칙해 급수
# ==========================================

def test_series_coefficients_examples():
    assert series_coefficients(2, 4).coeffs == (1, 2, 6, 20, 70)
    assert series_coefficients(3, 2).coeffs == (1, 6, 90)
    assert series_coefficients(5, 0).coeffs == (1,)


def test_series_coefficients_rejects_negative_order():
    with pytest.raises(ValueError):
        series_coefficients(2, -1)


@pytest.mark.parametrize("k", range(2, 7))
def test_operator_annihilates_truncated_series(k):
    residual = apply_hg_operator(k, series_coefficients(k, 12))

    assert residual.vanishes
    assert residual.first_nonzero_degree is None


def test_operator_detects_perturbed_coefficient():
    perturbed = SeriesCoeffs(k=2, coeffs=(1, 2, 7, 20, 70))

    residual = apply_hg_operator(2, perturbed)

    assert not residual.vanishes
    assert residual.first_nonzero_degree == 2
    assert residual.coeffs[2] == 4


@pytest.mark.parametrize("k", range(2, 7))
def test_closed_form_and_kummer_checks(k):
    assert closed_form_check(k, 50).passed
    assert kummer_substitution_check(k).passed


def test_evaluate_I0_inside_radius():
    evaluation = evaluate_I0(2, "1/8", 40)

    assert evaluation.within_radius
    with mpmath.workdps(50):
        assert abs(evaluation.value - mpmath.sqrt(2)) <= evaluation.tail_bound


def test_evaluate_I0_at_zero():
    evaluation = evaluate_I0(3, 0, 5)

    assert evaluation.value == 1
    assert evaluation.tail_bound == 0


def test_evaluate_I0_outside_radius_warns(caplog):
    with caplog.at_level(logging.WARNING):
        evaluation = evaluate_I0(3, "1/27", 10)

    assert not evaluation.within_radius
    assert evaluation.tail_bound == mpmath.inf
    assert "수렴 반경" in caplog.text


# ==========================================
# Cayley 행렬과 Mellin 지수
# ==========================================

def test_cayley_matrix_k2():
    cm = cayley_L(2)

    assert cm.l == exact_matrix(
        [
            [1, 0, 0, 1, 0],
            [0, 1, 0, 1, 0],
            [0, 0, 0, 1, 0],
            [1, 1, 0, 0, 1],
            [0, 0, 1, 0, 1],
        ]
    )
    assert mat_mul(cm.l, cm.l_inv) == identity(5)


@pytest.mark.parametrize("k", range(2, 9))
def test_cayley_matrix_is_unimodular(k):
    cm = cayley_L(k)

    assert abs(cm.l.det()) == 1
    assert all(x.is_integer for x in cm.l_inv)


def test_mellin_exponent_forms_k3():
    forms = mellin_exponents(3)

    assert len(forms) == 6
    assert forms[0].constant == 1
    assert (forms[0].coefficient("i0"), forms[0].coefficient("z"), forms[0].coefficient("v2")) == (1, 1, -1)
    assert forms[3].constant == -3
    assert forms[3].coefficient("z") == -3
    assert forms[3].coefficient("v1") == 1
    assert forms[5].as_expr() == sp.Symbol("z")


def test_specialized_forms():
    z = sp.Symbol("z")

    assert specialize(mellin_exponents(2), 2) == [z, z, 1 - 2 * z, 1 - z, z]


def test_affine_form_rejects_non_linear_expression():
    syms = form_symbols(2)
    z = syms[2]

    with pytest.raises(ValueError, match="affine"):
        AffineForm.from_expr(z**2 + 1, syms)
    with pytest.raises(ValueError, match="unexpected"):
        AffineForm.from_expr(z + sp.Symbol("w"), syms)


@pytest.mark.parametrize("k", [2, 3, 5])
def test_mellin_identities_pass(k):
    assert all(c.passed for c in mellin_identities(k))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_gamma_recurrence_and_reduction(k):
    recurrence, reduction = mellin_gamma_recurrence(k, z=0.3 + 0.2j, precision=30)

    assert recurrence.passed, recurrence.detail
    assert reduction.passed, reduction.detail


def test_series_rejects_rank_one():
    with pytest.raises(RankError):
        series_coefficients(1, 3)
    with pytest.raises(RankError):
        cayley_L(1)
