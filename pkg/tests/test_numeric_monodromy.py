import sys
from pathlib import Path

import numpy as np
import pytest

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from src.errors import StepFailureError
from src.levelt import cp_levelt
from src.numeric import (
    LoopSpec,
    companion_system,
    compare_invariants,
    default_loop,
    loop_monodromy,
    riemann_fuchs_numeric,
    singular_value_profile,
    tolerance_ladder,
)

CHECK_TOL = 1e-6


def test_companion_system_tail_k2():
    system = companion_system(2, "zeta")

    # (theta - 1/2)(theta - 1) = theta^2 - 3/2 theta + 1/2
    assert system.tail == pytest.approx((0.5, -1.5))
    assert system.singular_points == (0j, 1 + 0j)


def test_companion_system_lambda_plane_singularities():
    system = companion_system(3, "lambda")

    assert len(system.singular_points) == 4
    assert all(abs(abs(p) - 1) < 1e-12 for p in system.singular_points[1:])


def test_companion_system_rejects_unknown_plane():
    with pytest.raises(ValueError):
        companion_system(3, "mu")


def test_path_through_singular_point_is_rejected():
    system = companion_system(3, "zeta")
    # -1 -> 0.5 직선이 zeta = 0 을 지남
    loop = LoopSpec(base_point=-1 + 0j, center=1 + 0j, radius=0.5)

    with pytest.raises(StepFailureError, match="singular point"):
        loop_monodromy(system, loop, tol=1e-8)


@pytest.mark.slow
def test_contractible_loop_is_identity():
    system = companion_system(3, "zeta")
    loop = LoopSpec(base_point=-1 + 0j, center=-1 + 0.3j, radius=0.2)

    phi = loop_monodromy(system, loop, tol=1e-10)

    assert np.max(np.abs(phi.values - np.eye(3))) < CHECK_TOL


@pytest.mark.slow
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_loop_around_zero_matches_h0(k):
    system = companion_system(k, "zeta")

    phi = loop_monodromy(system, default_loop(system, "0"), tol=1e-10)

    assert compare_invariants(phi, cp_levelt(k).h0, CHECK_TOL).passed


@pytest.mark.slow
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_loop_around_one_matches_h1(k):
    system = companion_system(k, "zeta")

    phi = loop_monodromy(system, default_loop(system, "1"), tol=1e-10)
    report = compare_invariants(phi, cp_levelt(k).h1, CHECK_TOL)
    sv = singular_value_profile(phi)

    assert report.passed, report
    assert sv[0] > 1e-3
    assert np.all(sv[1:] < CHECK_TOL)


@pytest.mark.slow
@pytest.mark.parametrize("k", [2, 3])
def test_loop_around_infinity_is_unipotent(k):
    system = companion_system(k, "zeta")

    phi = loop_monodromy(system, default_loop(system, "inf"), tol=1e-10)

    assert compare_invariants(phi, cp_levelt(k).hinf, CHECK_TOL).passed


@pytest.mark.slow
@pytest.mark.parametrize("k", [2, 3, 4])
def test_numeric_riemann_fuchs(k):
    result = riemann_fuchs_numeric(k, tol=1e-10, check_tol=CHECK_TOL)

    assert result.passed, result
    assert result.inf_residual < CHECK_TOL
    assert "inf" in result.loops


@pytest.mark.slow
def test_loop_around_infinity_closes_the_product():
    system = companion_system(3, "zeta")
    phi = {
        around: loop_monodromy(system, default_loop(system, around), tol=1e-10).values
        for around in ("0", "1", "inf")
    }

    product = phi["inf"] @ phi["0"] @ phi["1"]

    assert np.max(np.abs(product - np.eye(3))) < CHECK_TOL


@pytest.mark.slow
def test_tolerance_ladder_is_monotone():
    deviations, monotone = tolerance_ladder(3, [1e-6, 1e-8, 1e-10])

    assert len(deviations) == 3
    assert monotone
    assert deviations[-1] < CHECK_TOL
