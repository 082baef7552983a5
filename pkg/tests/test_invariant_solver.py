import sys
from pathlib import Path

import pytest
import sympy as sp

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from src.errors import DimensionMismatchError
from src.exact import exact_matrix, identity
from src.groups import cp_generators
from src.invariants import (
    canonical_invariant,
    invariant_of_h0_hinf,
    quadratic_invariant_space,
    same_subspace,
    structure_report,
)


def test_identity_group_leaves_everything_invariant():
    space = quadratic_invariant_space([identity(2)], 2)

    assert space.dimension == 4
    assert space.basis == (
        exact_matrix([[1, 0], [0, 0]]),
        exact_matrix([[0, 1], [0, 0]]),
        exact_matrix([[0, 0], [1, 0]]),
        exact_matrix([[0, 0], [0, 1]]),
    )


def test_k2_invariant():
    space = quadratic_invariant_space(cp_generators(2).generators(), 2)

    assert space.dimension == 1
    assert space.basis[0] == exact_matrix([[1, -1], [-1, 1]])


def test_k3_invariant_is_antisymmetric_circulant():
    space = invariant_of_h0_hinf(3)

    assert space.basis[0] == exact_matrix([[0, 1, -1], [-1, 0, 1], [1, -1, 0]])


@pytest.mark.parametrize("k", range(2, 11))
def test_invariant_space_is_one_dimensional(k):
    space = quadratic_invariant_space(cp_generators(k).generators(), k)

    assert space.dimension == 1


@pytest.mark.parametrize("k", range(2, 7))
def test_h0_hinf_route_agrees_with_full_group(k):
    full = quadratic_invariant_space(cp_generators(k).generators(), k)

    assert same_subspace(invariant_of_h0_hinf(k, cross_check=True), full)


@pytest.mark.parametrize("k", range(2, 8))
def test_canonical_invariant_spans_solver_output(k):
    x = invariant_of_h0_hinf(k, cross_check=False).basis[0]
    candidate = canonical_invariant(k)
    pivot = next(v for v in x if v != 0)
    scale = next(v for v in candidate if v != 0) / pivot

    assert candidate == sp.ImmutableMatrix(x * scale)


def test_generator_shape_is_checked():
    with pytest.raises(DimensionMismatchError):
        quadratic_invariant_space([identity(3)], 2)


def test_structure_report_even_k():
    report = structure_report(canonical_invariant(4), 4)

    assert report.passed
    assert report.symmetry == "symmetric"
    assert report.circulant
    assert report.bands[0] == 2
    assert report.bands[1] == report.bands[-3] == -4
    assert report.bands[2] == report.bands[-2] == 6
    assert report.scale == 1
    assert report.annihilates_ones
    assert not report.invertible
    assert report.toeplitz_inverse is None


def test_structure_report_odd_k():
    report = structure_report(canonical_invariant(5), 5)

    assert report.passed
    assert report.symmetry == "antisymmetric"
    assert report.zero_diagonal
    assert report.band_law
    assert report.scale == 1


def test_structure_report_normalized_k2_scale():
    report = structure_report(exact_matrix([[1, -1], [-1, 1]]), 2)

    assert report.scale == sp.Rational(1, 2)
    assert report.bands == {-1: -1, 0: 1, 1: -1}


def test_structure_report_flags_non_invariant():
    report = structure_report(exact_matrix([[1, 2], [3, 4]]), 2)

    assert not report.passed
    assert report.symmetry == "none"
    assert report.invertible
