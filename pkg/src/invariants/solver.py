# 파일: src/invariants/solver.py
"""
이차 불변량 솔버

X 를 행 우선으로 k^2 벡터화하면 vec(g X g^T) = (g ⊗ g) vec(X) 이므로
각 생성원마다 (g ⊗ g - id) vec(X) = 0 을 풉니다.
생성원을 하나씩 적용하며 영공간을 좁혀 가므로 k = 10 에서도 첫 블록만 100 x 100 입니다.

CP^{k-1} 군의 불변량은 1차원 순환(circulant) 행렬
    X_ij = x_{(j - i) mod k},  x_0 = 1 + (-1)^k,  x_d = (-1)^d C(k, d)
의 스칼라배이며 (1, ..., 1) 을 항상 소멸시킵니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import sympy as sp

from src.errors import DimensionMismatchError, RouteMismatchError, require_rank
from src.exact import ExactMatrix, identity, kernel_basis, mat_inverse, mat_mul

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantSpace:
    k: int
    basis: Tuple[ExactMatrix, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class StructureReport:
    k: int
    symmetry: str  # "symmetric" | "antisymmetric" | "none"
    zero_diagonal: bool
    circulant: bool
    bands: Dict[int, sp.Rational]
    scale: Optional[sp.Rational]
    band_law: bool
    annihilates_ones: bool
    invertible: bool
    toeplitz_inverse: Optional[bool] = None
    recurrence: Optional[bool] = None
    failures: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.failures


def _constraint_block(g: ExactMatrix) -> ExactMatrix:
    k = g.rows
    return sp.ImmutableMatrix(sp.kronecker_product(g, g)) - identity(k * k)


def _canonical_rows(vectors: Sequence[ExactMatrix]) -> List[ExactMatrix]:
    """기저를 RREF 로 정규화: 각 벡터의 첫 0 아닌 성분 = +1, 조립 순서와 무관"""
    if not vectors:
        return []
    stacked = sp.Matrix.hstack(*vectors).T
    reduced, pivots = stacked.rref()
    return [sp.ImmutableMatrix(reduced.row(r)) for r in range(len(pivots))]


def quadratic_invariant_space(gens: Sequence[ExactMatrix], k: int) -> InvariantSpace:
    for g in gens:
        if g.shape != (k, k):
            raise DimensionMismatchError(f"generator shape {g.shape}, expected ({k},{k})")

    n = k * k
    span = identity(n)  # 열 = 현재 후보 공간의 기저
    for g in gens:
        if span.cols == 0:
            break
        reduced = mat_mul(_constraint_block(g), span)
        kernel = kernel_basis(reduced)
        if not kernel:
            span = sp.ImmutableMatrix(sp.zeros(n, 0))
            break
        span = mat_mul(span, sp.ImmutableMatrix(sp.Matrix.hstack(*kernel)))

    columns = [span.col(c) for c in range(span.cols)]
    rows = _canonical_rows(columns)
    basis = tuple(sp.ImmutableMatrix(k, k, list(r)) for r in rows)
    logger.debug(f"[Invariant] k={k} 생성원 {len(gens)}개, 불변량 차원 {len(basis)}")
    return InvariantSpace(k=k, basis=basis)


def same_subspace(a: InvariantSpace, b: InvariantSpace) -> bool:
    return a.k == b.k and a.basis == b.basis


@lru_cache(maxsize=32)
def _h0_hinf_space(k: int) -> InvariantSpace:
    from src.levelt import cp_levelt

    lev = cp_levelt(k)
    return quadratic_invariant_space([lev.h0, lev.hinf], k)


def invariant_of_h0_hinf(k: int, cross_check: bool = True) -> InvariantSpace:
    """H0 = <h0, hinf> 의 불변량. cross_check 이면 H 전체의 불변량과 같은지 확인"""
    require_rank(k)
    space = _h0_hinf_space(k)
    if cross_check:
        from src.groups import cp_generators

        full = quadratic_invariant_space(cp_generators(k).generators(), k)
        if not same_subspace(space, full):
            raise RouteMismatchError(
                f"k={k}: invariant of <h0, hinf> (dim {space.dimension}) "
                f"differs from invariant of H (dim {full.dimension})"
            )
    return space


def canonical_invariant(k: int) -> ExactMatrix:
    """x_d = (-1)^d C(k, d) 인 순환 불변량 (정규화 전)"""
    require_rank(k)
    x = [sp.Integer((-1) ** d * sp.binomial(k, d)) for d in range(k)]
    x[0] = sp.Integer(1 + (-1) ** k)
    return sp.ImmutableMatrix(k, k, lambda i, j: x[(j - i) % k])


# ==========================================
# 구조 분류
# ==========================================

def _bands(x: ExactMatrix) -> Optional[Dict[int, sp.Rational]]:
    """대각선 j - i = d 가 상수이면 {d: 값}, 아니면 None"""
    k = x.rows
    bands: Dict[int, sp.Rational] = {}
    for d in range(-(k - 1), k):
        values = {x[i, i + d] for i in range(k) if 0 <= i + d < k}
        if len(values) != 1:
            return None
        bands[d] = values.pop()
    return bands


def _band_law(
    bands: Dict[int, sp.Rational], k: int, symmetry: str
) -> Tuple[Optional[sp.Rational], Optional[int]]:
    """(scale, 첫 실패 d) 를 반환"""
    if symmetry == "antisymmetric":
        scale = (bands[1] - bands[-1]) / (2 * (-1) * k)
        for d in range(1, k):
            expected = 2 * (-1) ** d * sp.binomial(k, d) * scale
            if bands[d] + bands[-d] != 0 or bands[d] - bands[-d] != expected:
                return scale, d
        return scale, None
    if symmetry == "symmetric":
        scale = bands[0] / 2
        for d in range(1, k):
            expected = (-1) ** d * sp.binomial(k, d) * scale
            if bands[d] != expected or bands[-d] != expected:
                return scale, d
        return scale, None
    return None, 0


def _inverse_recurrence(inv_bands: Dict[int, sp.Rational], k: int) -> bool:
    for shift in range(1, k):
        total = sum(
            (-1) ** i * sp.binomial(k, i) * inv_bands.get(i - shift, 0) for i in range(k)
        )
        if total != 0:
            return False
    return True


def structure_report(x: ExactMatrix, k: int) -> StructureReport:
    if x.shape != (k, k):
        raise DimensionMismatchError(f"invariant shape {x.shape}, expected ({k},{k})")

    failures: List[str] = []
    if x == x.T:
        symmetry = "symmetric"
    elif x == -x.T:
        symmetry = "antisymmetric"
    else:
        symmetry = "none"
        failures.append("neither symmetric nor antisymmetric")

    zero_diagonal = all(x[i, i] == 0 for i in range(k))
    if symmetry == "antisymmetric" and not zero_diagonal:
        failures.append("antisymmetric invariant with non-zero diagonal")

    bands = _bands(x) or {}
    circulant = bool(bands) and all(bands[d] == bands[d - k] for d in range(1, k))
    if not circulant:
        failures.append("bands do not wrap: y_d != y_(d-k)")

    scale, bad_band = (None, 0)
    if bands:
        scale, bad_band = _band_law(bands, k, symmetry)
    band_law = bad_band is None
    if not band_law:
        failures.append(f"binomial band law fails at band {bad_band}")

    ones = sp.ImmutableMatrix([1] * k)
    annihilates_ones = mat_mul(x, ones) == sp.zeros(k, 1)

    invertible = x.det() != 0
    toeplitz_inverse = recurrence = None
    if invertible:
        inv_bands = _bands(mat_inverse(x))
        toeplitz_inverse = inv_bands is not None
        recurrence = bool(inv_bands) and _inverse_recurrence(inv_bands, k)
        if not toeplitz_inverse:
            failures.append("inverse is not Toeplitz")

    if failures:
        logger.warning(f"[Invariant] k={k} 구조 위반: {failures[0]}")
    return StructureReport(
        k=k,
        symmetry=symmetry,
        zero_diagonal=zero_diagonal,
        circulant=circulant,
        bands=bands,
        scale=scale,
        band_law=band_law,
        annihilates_ones=annihilates_ones,
        invertible=invertible,
        toeplitz_inverse=toeplitz_inverse,
        recurrence=recurrence,
        failures=tuple(failures),
    )
