# 파일: src/numeric/monodromy.py
"""
수치 모노드로미

zeta 평면:   (zeta - 1) theta^k v = sum_j p_j theta^j v,   prod_{l=1..k} (theta - l/k) = theta^k + sum_j p_j theta^j
lambda 평면: (lambda^k - 1) theta^k v = sum_j q_j theta^j v, prod_{l=1..k} (theta - l)   = theta^k + sum_j q_j theta^j

Y = (v, theta v, ..., theta^{k-1} v) 로 두면 dY/dz = A(z) Y / z 이고 A 는 마지막 행만 z 에 의존하는 동반행렬입니다.
기본점에서 Phi = id 로 시작해 고리를 따라 적분한 Phi(끝) 이 모노드로미입니다.
프레임이 Levelt 프레임과 다르므로 비교는 공액 불변량 (trace, det, 특성다항식) 으로만 합니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import solve_ivp

from src.config.settings import get_pipeline_config
from src.errors import StepFailureError, require_rank
from src.exact import ExactMatrix, charpoly

logger = logging.getLogger(__name__)

PathPiece = Callable[[float], Tuple[complex, complex]]


@dataclass(frozen=True)
class CompanionSystem:
    k: int
    plane: str  # "zeta" | "lambda"
    tail: Tuple[float, ...]  # p_0..p_{k-1} (또는 q_j)
    singular_points: Tuple[complex, ...]  # 유한 특이점. inf 는 항상 특이점

    def denominator(self, z: complex) -> complex:
        return z - 1 if self.plane == "zeta" else z**self.k - 1

    def coefficient(self, z: complex) -> np.ndarray:
        """dY/dz = coefficient(z) @ Y"""
        k = self.k
        a = np.zeros((k, k), dtype=complex)
        a[np.arange(k - 1), np.arange(1, k)] = 1.0
        a[k - 1, :] = np.asarray(self.tail) / self.denominator(z)
        return a / z


@dataclass(frozen=True)
class LoopSpec:
    """base -> waypoints -> 원 진입점 -> 원 한 바퀴 -> 같은 경로로 복귀

    center 가 None 이면 무한대 주위 고리 (원점 중심 원을 시계 방향으로) 입니다.
    """

    base_point: complex
    center: Optional[complex]
    radius: float
    samples: int = 400
    waypoints: Tuple[complex, ...] = ()
    clockwise: bool = False

    @property
    def circle_center(self) -> complex:
        return 0j if self.center is None else complex(self.center)

    @property
    def orientation(self) -> int:
        return 1 if (self.center is not None) != self.clockwise else -1


@dataclass(frozen=True, eq=False)
class NumericMatrix:
    values: np.ndarray
    estimated_error: float


@dataclass(frozen=True)
class ComparisonReport:
    trace_deviation: float
    det_deviation: float
    charpoly_deviation: float
    tol: float

    @property
    def max_deviation(self) -> float:
        return max(self.trace_deviation, self.det_deviation, self.charpoly_deviation)

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tol


@dataclass(frozen=True)
class RiemannFuchsNumeric:
    k: int
    residual: float
    big_loop_charpoly_deviation: float
    inf_residual: float
    tol: float
    loops: Tuple[str, ...] = field(default=("0", "1", "big", "inf"))

    @property
    def passed(self) -> bool:
        return max(self.residual, self.big_loop_charpoly_deviation, self.inf_residual) <= self.tol


# ==========================================
# 시스템
# ==========================================

def companion_system(k: int, plane: str = "zeta") -> CompanionSystem:
    require_rank(k)
    if plane == "zeta":
        roots = [l / k for l in range(1, k + 1)]
        singular: Tuple[complex, ...] = (0j, 1 + 0j)
    elif plane == "lambda":
        roots = [float(l) for l in range(1, k + 1)]
        singular = (0j,) + tuple(np.exp(2j * np.pi * i / k) for i in range(k))
    else:
        raise ValueError(f"plane must be 'zeta' or 'lambda', got {plane!r}")

    poly = np.poly(roots)  # [1, c_{k-1}, ..., c_0]
    tail = tuple(float(poly[k - j]) for j in range(k))
    return CompanionSystem(k=k, plane=plane, tail=tail, singular_points=singular)


# ==========================================
# 경로
# ==========================================

def _segment(a: complex, b: complex) -> PathPiece:
    return lambda t: (a + (b - a) * t, b - a)


def _arc(center: complex, radius: float, start_angle: float, orientation: int) -> PathPiece:
    sweep = 2 * np.pi * orientation

    def piece(t: float) -> Tuple[complex, complex]:
        phase = np.exp(1j * (start_angle + sweep * t))
        return center + radius * phase, 1j * sweep * radius * phase

    return piece


def _pieces(loop: LoopSpec) -> List[PathPiece]:
    center = loop.circle_center
    route = [complex(loop.base_point), *map(complex, loop.waypoints)]
    direction = route[-1] - center
    if abs(direction) == 0:
        raise StepFailureError("approach point coincides with the loop center")
    entry = center + loop.radius * direction / abs(direction)
    route.append(entry)

    outward = [_segment(a, b) for a, b in zip(route, route[1:]) if abs(b - a) > 1e-15]
    inward = [_segment(b, a) for a, b in reversed(list(zip(route, route[1:]))) if abs(b - a) > 1e-15]
    circle = _arc(center, loop.radius, float(np.angle(direction)), loop.orientation)
    return outward + [circle] + inward


def _validate(system: CompanionSystem, loop: LoopSpec, pieces: Sequence[PathPiece]) -> None:
    margin = loop.radius / 10
    ts = np.linspace(0.0, 1.0, loop.samples)
    for piece in pieces:
        points = np.array([piece(t)[0] for t in ts])
        for p in system.singular_points:
            closest = float(np.min(np.abs(points - p)))
            if closest < margin:
                logger.warning(f"[Numeric] 경로가 특이점 {p} 에 {closest:.3g} 까지 접근")
                raise StepFailureError(
                    f"path passes within {closest:.3g} of singular point {p} (margin {margin:.3g})"
                )


def loop_monodromy(
    system: CompanionSystem, loop: LoopSpec, tol: Optional[float] = None
) -> NumericMatrix:
    tol = tol or get_pipeline_config().numeric_tol
    k = system.k
    pieces = _pieces(loop)
    _validate(system, loop, pieces)

    phi = np.eye(k, dtype=complex)
    steps = 0
    for piece in pieces:

        def rhs(t: float, y: np.ndarray, piece: PathPiece = piece) -> np.ndarray:
            z, dz = piece(t)
            return (system.coefficient(z) @ y.reshape(k, k) * dz).ravel()

        sol = solve_ivp(rhs, (0.0, 1.0), phi.ravel(), method="DOP853", rtol=tol, atol=tol)
        if sol.status != 0:
            raise StepFailureError(f"integrator failed: {sol.message}")
        phi = sol.y[:, -1].reshape(k, k)
        steps += sol.t.size

    estimated = tol * steps * max(1.0, float(np.max(np.abs(phi))))
    logger.debug(f"[Numeric] k={k} {system.plane} 고리 center={loop.center} steps={steps}")
    return NumericMatrix(values=phi, estimated_error=estimated)


def default_loop(system: CompanionSystem, around: str, base_point: Optional[complex] = None) -> LoopSpec:
    """zeta 평면 기본 고리: "0", "1", "big" (0 과 1 을 함께 감싸는 반시계 원), "inf" """
    base = complex(base_point if base_point is not None else get_pipeline_config().base_point)
    if system.plane != "zeta":
        raise ValueError("default loops are defined on the zeta plane")
    if around == "0":
        return LoopSpec(base_point=base, center=0j, radius=0.5)
    if around == "1":
        return LoopSpec(base_point=base, center=1 + 0j, radius=0.5, waypoints=(0.5 - 0.5j,))
    if around == "big":
        return LoopSpec(base_point=base, center=0.5 + 0j, radius=1.5)
    if around == "inf":
        return LoopSpec(base_point=base, center=None, radius=1.5)
    raise ValueError(f"unknown loop {around!r}")


# ==========================================
# 비교
# ==========================================

def compare_invariants(num: NumericMatrix, exact: ExactMatrix, tol: float) -> ComparisonReport:
    m = np.asarray(num.values, dtype=complex)
    if m.shape != exact.shape:
        raise ValueError(f"shape {m.shape} vs {exact.shape}")
    reference = np.array([float(c) for c in charpoly(exact)], dtype=complex)
    return ComparisonReport(
        trace_deviation=float(abs(np.trace(m) - float(exact.trace()))),
        det_deviation=float(abs(np.linalg.det(m) - float(exact.det()))),
        charpoly_deviation=float(np.max(np.abs(np.poly(m) - reference))),
        tol=tol,
    )


def singular_value_profile(num: NumericMatrix) -> np.ndarray:
    """id - M 의 특이값 (내림차순)"""
    m = np.asarray(num.values, dtype=complex)
    return np.linalg.svd(np.eye(m.shape[0]) - m, compute_uv=False)


def riemann_fuchs_numeric(k: int, tol: Optional[float] = None, check_tol: float = 1e-6) -> RiemannFuchsNumeric:
    """Phi_big = Phi_0 Phi_1, Phi_inf Phi_0 Phi_1 = id, charpoly(Phi_big) = (t - 1)^k"""
    system = companion_system(k, "zeta")
    phi0 = loop_monodromy(system, default_loop(system, "0"), tol).values
    phi1 = loop_monodromy(system, default_loop(system, "1"), tol).values
    big = loop_monodromy(system, default_loop(system, "big"), tol).values
    phi_inf = loop_monodromy(system, default_loop(system, "inf"), tol).values

    residual = float(np.max(np.abs(big - phi0 @ phi1)))
    # 무한대 고리는 big 고리의 역방향
    inf_residual = float(np.max(np.abs(phi_inf @ phi0 @ phi1 - np.eye(k))))
    unipotent = np.poly(np.ones(k))
    deviation = float(np.max(np.abs(np.poly(big) - unipotent)))
    return RiemannFuchsNumeric(
        k=k,
        residual=residual,
        big_loop_charpoly_deviation=deviation,
        inf_residual=inf_residual,
        tol=check_tol,
    )


def tolerance_ladder(
    k: int, ladder: Optional[Sequence[float]] = None, around: str = "0"
) -> Tuple[List[float], bool]:
    """허용오차를 줄일수록 불변량 편차가 (잡음 바닥 안에서) 단조 감소하는지"""
    from src.levelt import cp_levelt

    ladder = list(ladder or get_pipeline_config().tolerance_ladder)
    system = companion_system(k, "zeta")
    lev = cp_levelt(k)
    exact = lev.h0 if around == "0" else lev.h1
    deviations = [
        compare_invariants(loop_monodromy(system, default_loop(system, around), tol), exact, tol).max_deviation
        for tol in ladder
    ]
    floor = min(ladder)
    monotone = all(b <= a + floor for a, b in zip(deviations, deviations[1:]))
    return deviations, monotone
