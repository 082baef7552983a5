import sys
from fractions import Fraction
from pathlib import Path

import pytest
import sympy as sp

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from src.errors import DimensionMismatchError, SingularMatrixError
from src.exact import (
    cayley_hamilton_residual,
    charpoly,
    exact_matrix,
    format_scalar,
    identity,
    kernel_basis,
    mat_inverse,
    mat_mul,
    mat_pow,
    matrix_to_strings,
    rank,
    to_rational,
)

H0_K3 = exact_matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
HINF_K3 = exact_matrix([[3, 1, 0], [-3, 0, 1], [1, 0, 0]])


def test_to_rational_accepts_strings_fractions_and_ints():
    assert to_rational("6/8") == sp.Rational(3, 4)
    assert to_rational(Fraction(-2, 4)) == sp.Rational(-1, 2)
    assert to_rational(5) == 5
    assert to_rational("6/8").q == 4


def test_to_rational_rejects_bool():
    with pytest.raises(TypeError):
        to_rational(True)


def test_mat_mul_examples():
    assert mat_mul(identity(3), identity(3)) == identity(3)
    assert mat_mul(mat_mul(H0_K3, H0_K3), H0_K3) == identity(3)
    swap = exact_matrix([[0, 1], [1, 0]])
    hinf = exact_matrix([[2, 1], [-1, 0]])
    assert mat_mul(swap, hinf) == exact_matrix([[-1, 0], [2, 1]])


def test_mat_mul_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        mat_mul(identity(2), identity(3))


def test_mat_inverse_examples():
    assert mat_inverse(identity(4)) == identity(4)
    s = exact_matrix([[1, 0], [-2, 1]])
    assert mat_inverse(s) == exact_matrix([[1, 0], [2, 1]])


def test_mat_inverse_singular():
    with pytest.raises(SingularMatrixError, match="singular"):
        mat_inverse(exact_matrix([[1, 1], [1, 1]]))


def test_mat_inverse_rational_entries_round_trip():
    a = exact_matrix([["1/2", "3"], ["-2/3", "5/7"]])
    assert mat_mul(a, mat_inverse(a)) == identity(2)


def test_mat_pow_negative_uses_inverse():
    assert mat_mul(mat_pow(HINF_K3, -2), mat_pow(HINF_K3, 2)) == identity(3)
    assert mat_pow(HINF_K3, 0) == identity(3)


def test_charpoly_examples():
    assert charpoly(H0_K3) == [1, 0, 0, -1]
    assert charpoly(HINF_K3) == [1, -3, 3, -1]
    assert charpoly(exact_matrix([[0, 0], [0, 0]])) == [1, 0, 0]


@pytest.mark.parametrize("k", range(2, 7))
def test_cayley_hamilton(k):
    a = sp.ImmutableMatrix(k, k, lambda i, j: sp.Rational((i + 2 * j) % 5 - 2, j + 1))
    assert cayley_hamilton_residual(a) == sp.zeros(k, k)


def test_kernel_basis_examples():
    assert kernel_basis(identity(3)) == []
    (v,) = kernel_basis(exact_matrix([[1, 1], [1, 1]]))
    assert v[0] == -v[1] != 0


def test_rank_nullity():
    matrices = [
        identity(3),
        exact_matrix([[1, 1], [1, 1]]),
        exact_matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]]),
        exact_matrix([[0, 0, 0], [0, 0, 0]]),
    ]
    for a in matrices:
        assert rank(a) + len(kernel_basis(a)) == a.cols


def test_matrix_to_strings_uses_exact_fractions():
    a = exact_matrix([["1/2", -3], [0, "4/2"]])
    assert matrix_to_strings(a) == [["1/2", "-3"], ["0", "2"]]
    assert format_scalar(sp.Rational(-7, 3)) == "-7/3"
