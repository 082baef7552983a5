# 파일: src/levelt/companion.py
"""
Levelt 정규형

초기하 방정식의 지수 (alpha, beta) 로부터
    det(t - h0)   = prod (t - e^{2 pi i alpha_l}) = t^k + A_1 t^{k-1} + ... + A_k
    det(t - hinf^{-1}) = prod (t - e^{2 pi i beta_l}) = t^k + B_1 t^{k-1} + ... + B_k
를 만족하는 동반행렬을 만들고, h1 = (h0 hinf)^{-1} 가 의사반사인지 확인합니다.

CP^{k-1} 의 경우 alpha_l = l/k, beta_l = 0 이므로
    h0 는 순환 치환 행렬, hinf 는 단일 Jordan 블록을 갖는 멱단 행렬입니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple

import mpmath
import sympy as sp

from src.config.settings import get_pipeline_config
from src.errors import PseudoReflectionError, SingularMatrixError, SnapFailureError, require_rank
from src.exact import ExactMatrix, identity, mat_inverse, mat_mul, rank, to_rational
from src.utils.precision import mp_precision

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExponentData:
    k: int
    alpha: Tuple[sp.Rational, ...]
    beta: Tuple[sp.Rational, ...]

    def __post_init__(self) -> None:
        require_rank(self.k, minimum=1)
        if len(self.alpha) != self.k or len(self.beta) != self.k:
            raise ValueError(
                f"alpha/beta must have exactly k={self.k} entries "
                f"(got {len(self.alpha)}, {len(self.beta)})"
            )
        object.__setattr__(self, "alpha", tuple(to_rational(a) for a in self.alpha))
        object.__setattr__(self, "beta", tuple(to_rational(b) for b in self.beta))


@dataclass(frozen=True)
class CharCoeffPair:
    """A_1..A_k (h0) 와 B_1..B_k (hinf^{-1})"""

    a_coeffs: Tuple[sp.Rational, ...]
    b_coeffs: Tuple[sp.Rational, ...]

    @property
    def k(self) -> int:
        return len(self.a_coeffs)


@dataclass(frozen=True)
class LeveltTriple:
    k: int
    h0: ExactMatrix
    hinf: ExactMatrix
    h1: ExactMatrix


def cp_exponents(k: int) -> ExponentData:
    require_rank(k)
    return ExponentData(
        k=k,
        alpha=tuple(sp.Rational(l, k) for l in range(1, k + 1)),
        beta=tuple(sp.Integer(0) for _ in range(k)),
    )


def cp_char_coeffs(k: int) -> CharCoeffPair:
    """t^k - 1 과 (t - 1)^k 의 계수"""
    require_rank(k)
    a = [sp.Integer(0)] * (k - 1) + [sp.Integer(-1)]
    b = [sp.Integer((-1) ** i * sp.binomial(k, i)) for i in range(1, k + 1)]
    return CharCoeffPair(a_coeffs=tuple(a), b_coeffs=tuple(b))


# ==========================================
# 지수 -> 계수 (고정밀 전개 + 유리수 스냅)
# ==========================================

def _galois_stable(exponents: Sequence[sp.Rational]) -> bool:
    """{e^{2 pi i a}} 가 t -> t^m (gcd(m, D) = 1) 에 대해 닫혀 있는지"""
    residues = sorted(sp.Rational(a) % 1 for a in exponents)
    denom = lcm(*[int(r.q) for r in residues]) if residues else 1
    for m in range(2, denom):
        if gcd(m, denom) != 1:
            continue
        image = sorted((m * r) % 1 for r in residues)
        if image != residues:
            return False
    return True


def _expand_roots(exponents: Sequence[sp.Rational]) -> List[mpmath.mpc]:
    """prod (t - e^{2 pi i a}) 의 계수 [1, c_1, ..., c_k] (현재 mp 정밀도)"""
    coeffs: List[mpmath.mpc] = [mpmath.mpc(1)]
    for a in exponents:
        root = mpmath.expjpi(mpmath.mpf(2 * a.p) / a.q)
        shifted = coeffs + [mpmath.mpc(0)]
        for i in range(1, len(shifted)):
            shifted[i] -= root * coeffs[i - 1]
        coeffs = shifted
    return coeffs


def _snap(values: Sequence[mpmath.mpc], precision: int, bound: int) -> Tuple[sp.Rational, ...]:
    tol = mpmath.mpf(10) ** (-(precision // 2))
    snapped = []
    for idx, value in enumerate(values):
        if abs(value.imag) > tol:
            raise SnapFailureError(
                f"coefficient {idx} has imaginary part {mpmath.nstr(value.imag, 5)}"
            )
        man, exp = value.real.man_exp
        # man_exp 는 부호 없는 가수
        if value.real < 0:
            man = -man
        candidate = (sp.Integer(man) * sp.Integer(2) ** exp).limit_denominator(bound)
        if abs(value.real - mpmath.mpf(candidate.p) / candidate.q) > tol:
            raise SnapFailureError(
                f"coefficient {idx} = {mpmath.nstr(value.real, 12)} is not a rational "
                f"with denominator <= {bound}"
            )
        snapped.append(candidate)
    return tuple(snapped)


def char_coeffs_from_exponents(
    e: ExponentData,
    precision: Optional[int] = None,
    denominator_bound: Optional[int] = None,
) -> CharCoeffPair:
    config = get_pipeline_config()
    precision = precision or config.precision_digits
    bound = denominator_bound or config.snap_denominator_bound

    result = []
    for label, exponents in (("alpha", e.alpha), ("beta", e.beta)):
        with mp_precision(2 * precision):
            raw = _expand_roots(exponents)[1:]
            try:
                coeffs = _snap(raw, precision, bound)
            except SnapFailureError as exc:
                logger.warning(f"[Levelt] {label} 계수 스냅 실패: {exc}")
                raise
        if not _galois_stable(exponents):
            logger.warning(f"[Levelt] {label} 지수가 Galois 작용에 닫혀 있지 않음")
            raise SnapFailureError(
                f"{label} multiset is not closed under the Galois action; "
                "only the numeric path applies"
            )
        result.append(coeffs)
    return CharCoeffPair(a_coeffs=result[0], b_coeffs=result[1])


# ==========================================
# 동반행렬
# ==========================================

def _companion(coeffs: Sequence[sp.Rational]) -> ExactMatrix:
    """부대각 1, 마지막 열 (-c_k, ..., -c_1)"""
    k = len(coeffs)
    m = sp.zeros(k, k)
    for i in range(1, k):
        m[i, i - 1] = 1
    for i in range(k):
        m[i, k - 1] = -coeffs[k - 1 - i]
    return sp.ImmutableMatrix(m)


def companion_h0(c: CharCoeffPair) -> ExactMatrix:
    return _companion(c.a_coeffs)


def companion_hinf(c: CharCoeffPair) -> ExactMatrix:
    if c.b_coeffs[-1] == 0:
        raise SingularMatrixError("B_k = 0: (hinf)^{-1} is singular")
    return mat_inverse(_companion(c.b_coeffs))


def h1_from(h0: ExactMatrix, hinf: ExactMatrix) -> ExactMatrix:
    h1 = mat_inverse(mat_mul(h0, hinf))
    defect = rank(identity(h1.rows) - h1)
    if defect != 1:
        raise PseudoReflectionError(f"rank(id - h1) = {defect}, expected 1")
    return h1


def levelt_from_exponents(e: ExponentData, precision: Optional[int] = None) -> LeveltTriple:
    c = char_coeffs_from_exponents(e, precision=precision)
    h0 = companion_h0(c)
    hinf = companion_hinf(c)
    return LeveltTriple(k=e.k, h0=h0, hinf=hinf, h1=h1_from(h0, hinf))


@lru_cache(maxsize=32)
def cp_levelt(k: int) -> LeveltTriple:
    c = cp_char_coeffs(k)
    h0 = companion_h0(c)
    hinf = companion_hinf(c)
    return LeveltTriple(k=k, h0=h0, hinf=hinf, h1=h1_from(h0, hinf))
