import sys
from pathlib import Path

import pytest
import sympy as sp

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from src.errors import PseudoReflectionError, RankError, SingularMatrixError, SnapFailureError
from src.exact import charpoly, exact_matrix, identity, mat_pow, rank
from src.levelt import (
    CharCoeffPair,
    ExponentData,
    char_coeffs_from_exponents,
    companion_h0,
    companion_hinf,
    cp_char_coeffs,
    cp_exponents,
    cp_levelt,
    h1_from,
    levelt_from_exponents,
)


def test_cp_char_coeffs_examples():
    c2 = cp_char_coeffs(2)
    assert c2.a_coeffs == (0, -1)
    assert c2.b_coeffs == (-2, 1)
    c3 = cp_char_coeffs(3)
    assert c3.a_coeffs == (0, 0, -1)
    assert c3.b_coeffs == (-3, 3, -1)
    assert cp_char_coeffs(5).b_coeffs == (-5, 10, -10, 5, -1)


def test_cp_char_coeffs_rejects_small_rank():
    with pytest.raises(RankError):
        cp_char_coeffs(1)


def test_char_coeffs_from_cube_roots_of_unity():
    e = ExponentData(k=3, alpha=("1/3", "2/3", 1), beta=(0, 0, 0))
    c = char_coeffs_from_exponents(e, precision=40)
    assert c.a_coeffs == (0, 0, -1)
    assert c.b_coeffs == (-3, 3, -1)


def test_char_coeffs_keep_negative_signs():
    # t^2 - t + 1, (t - 1)(t + 1), (t + 1)^2
    e = ExponentData(k=2, alpha=("1/6", "5/6"), beta=(0, "1/2"))
    c = char_coeffs_from_exponents(e, precision=40)
    assert c.a_coeffs == (-1, 1)
    assert c.b_coeffs == (0, -1)

    e = ExponentData(k=2, alpha=("1/2", "1/2"), beta=(0, 0))
    c = char_coeffs_from_exponents(e, precision=40)
    assert c.a_coeffs == (2, 1)
    assert c.b_coeffs == (-2, 1)


def test_char_coeffs_from_exponents_matches_cp_preset():
    for k in range(2, 7):
        assert char_coeffs_from_exponents(cp_exponents(k)) == cp_char_coeffs(k)


@pytest.mark.parametrize(
    "alpha",
    [
        ("1/5", "1/7", 0),  # 복소 계수
        ("1/5", "4/5", 0),  # 실수지만 무리수 계수
    ],
)
def test_char_coeffs_rejects_non_galois_stable(alpha):
    e = ExponentData(k=3, alpha=alpha, beta=(0, 0, 0))
    with pytest.raises(SnapFailureError):
        char_coeffs_from_exponents(e, precision=40)


def test_exponent_data_length_is_checked():
    with pytest.raises(ValueError, match="exactly k=3"):
        ExponentData(k=3, alpha=(0, 0), beta=(0, 0, 0))


def test_companion_h0_examples():
    assert companion_h0(cp_char_coeffs(3)) == exact_matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    assert companion_h0(cp_char_coeffs(2)) == exact_matrix([[0, 1], [1, 0]])


def test_companion_hinf_examples():
    assert companion_hinf(cp_char_coeffs(2)) == exact_matrix([[2, 1], [-1, 0]])
    hinf3 = companion_hinf(cp_char_coeffs(3))
    assert hinf3 == exact_matrix([[3, 1, 0], [-3, 0, 1], [1, 0, 0]])
    assert list(hinf3[:, 0]) == [3, -3, 1]


def test_companion_hinf_singular_when_bk_zero():
    with pytest.raises(SingularMatrixError):
        companion_hinf(CharCoeffPair(a_coeffs=(0, -1), b_coeffs=(-1, 0)))


def test_h1_examples():
    h1_k2 = cp_levelt(2).h1
    assert h1_k2 == exact_matrix([[-1, 0], [2, 1]])
    h1_k3 = cp_levelt(3).h1
    assert list(h1_k3[:, 0]) == [1, -3, 3]
    assert h1_k3[:, 1:] == identity(3)[:, 1:]


def test_h1_rejects_identity_input():
    with pytest.raises(PseudoReflectionError, match="rank"):
        h1_from(identity(3), identity(3))


@pytest.mark.parametrize("k", range(2, 11))
def test_cp_levelt_properties(k):
    lev = cp_levelt(k)
    t = sp.Symbol("t")
    assert charpoly(lev.h0) == sp.Poly(t**k - 1, t).all_coeffs()
    assert charpoly(lev.hinf) == sp.Poly((t - 1) ** k, t).all_coeffs()
    assert mat_pow(lev.h0, k) == identity(k)
    assert rank(identity(k) - lev.h1) == 1
    assert lev.h1.det() == (-1) ** (k - 1)
    assert lev.h1.trace() == (k - 1) + (-1) ** (k - 1)


@pytest.mark.parametrize("k", range(2, 7))
def test_h1_first_column_pattern(k):
    h1 = cp_levelt(k).h1
    expected = [(-1) ** (k - 1 - m) * sp.binomial(k, m) for m in range(k)]
    assert list(h1[:, 0]) == expected


def test_levelt_from_exponents_reproduces_preset():
    lev = levelt_from_exponents(cp_exponents(4))
    assert lev.h0 == cp_levelt(4).h0
    assert lev.h1 == cp_levelt(4).h1
