# 파일: src/series/recurrence.py
"""
s = 0 에서의 정칙해

    I_0(s) = sum_{m >= 0} (km)! / (m!)^k  s^m

연산자  theta^k - k^k s (theta + 1/k) ... (theta + k/k)  에서 얻는 점화식
    m^k c_m = (km)(km-1)...(km-k+1) c_{m-1}
으로 계수를 만들고 닫힌 형태와 대조합니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple, Union

import mpmath
import sympy as sp

from src.config.settings import get_pipeline_config
from src.errors import require_rank
from src.exact import IdentityCheck, check_true, to_rational
from src.utils.precision import mp_precision

logger = logging.getLogger(__name__)

_S = sp.Symbol("s")
_THETA = sp.Symbol("theta")
_ZETA = sp.Symbol("zeta")


@dataclass(frozen=True)
class SeriesCoeffs:
    k: int
    coeffs: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def as_poly(self) -> sp.Poly:
        return sp.Poly(list(reversed(self.coeffs)), _S)


@dataclass(frozen=True)
class SeriesResidual:
    k: int
    order: int
    coeffs: Tuple[sp.Rational, ...]  # s^0 .. s^order

    @property
    def vanishes(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def first_nonzero_degree(self) -> Optional[int]:
        return next((n for n, c in enumerate(self.coeffs) if c != 0), None)


@dataclass(frozen=True)
class I0Evaluation:
    k: int
    s: mpmath.mpf
    terms: int
    value: mpmath.mpf
    tail_bound: mpmath.mpf
    within_radius: bool


def series_coefficients(k: int, n: int) -> SeriesCoeffs:
    require_rank(k)
    if n < 0:
        raise ValueError(f"truncation order must be >= 0, got {n}")

    coeffs = [1]
    for m in range(1, n + 1):
        numerator = int(sp.ff(k * m, k)) * coeffs[-1]
        c_m, remainder = divmod(numerator, m**k)
        if remainder:
            raise ArithmeticError(f"recurrence is not integral at m={m}")
        coeffs.append(c_m)

    for m, c_m in enumerate(coeffs):
        if c_m * sp.factorial(m) ** k != sp.factorial(k * m):
            raise ArithmeticError(f"c_{m} disagrees with (km)!/(m!)^k")
    return SeriesCoeffs(k=k, coeffs=tuple(coeffs))


def _theta(poly: sp.Poly) -> sp.Poly:
    """theta = s d/ds"""
    return sp.Poly(_S * poly.diff(_S).as_expr(), _S) if not poly.is_zero else poly


def apply_hg_operator(k: int, sc: SeriesCoeffs) -> SeriesResidual:
    """[theta^k - k^k s prod(theta + l/k)] I_0 를 s^0..s^N 까지 잘라서 반환"""
    f = sc.as_poly()

    left = f
    for _ in range(k):
        left = _theta(left)

    right = f
    for l in range(1, k + 1):
        right = _theta(right) + right * sp.Rational(l, k)
    right = right * sp.Poly(k**k * _S, _S)

    residual = left - right
    coeffs = tuple(sp.Rational(residual.coeff_monomial(_S**n)) for n in range(sc.order + 1))
    result = SeriesResidual(k=k, order=sc.order, coeffs=coeffs)
    if not result.vanishes:
        logger.warning(f"[Series] k={k} 잔차가 차수 {result.first_nonzero_degree} 에서 0 이 아님")
    return result


def evaluate_I0(
    k: int,
    s: Union[int, str, sp.Rational, float],
    n: int,
    precision: Optional[int] = None,
) -> I0Evaluation:
    """부분합과 비율 판정 꼬리 한계  c_{n+1}|s|^{n+1} / (1 - k^k |s|)"""
    require_rank(k)
    precision = precision or get_pipeline_config().precision_digits
    with mp_precision(precision):
        if isinstance(s, float):
            s_val = mpmath.mpf(s)
        else:
            q = to_rational(s)
            s_val = mpmath.mpf(q.p) / q.q

        coeffs = series_coefficients(k, n + 1).coeffs
        value = mpmath.fsum(mpmath.mpf(c) * s_val**m for m, c in enumerate(coeffs[:-1]))
        ratio = mpmath.mpf(k) ** k * abs(s_val)
        within = ratio < 1
        if within:
            tail = mpmath.mpf(coeffs[-1]) * abs(s_val) ** (n + 1) / (1 - ratio)
        else:
            logger.warning(
                f"[Series] |s| = {mpmath.nstr(abs(s_val), 8)} >= k^-k = 1/{k**k}; "
                "수렴 반경 밖이므로 꼬리 한계가 없습니다"
            )
            tail = mpmath.inf
    return I0Evaluation(k=k, s=s_val, terms=n + 1, value=value, tail_bound=tail, within_radius=within)


# ==========================================
# zeta = 1 / (k^k s) 치환
# ==========================================

def _operator_in_s(k: int) -> Dict[int, sp.Poly]:
    """{s 의 거듭제곱: theta_s 다항식}"""
    product = sp.Poly(sp.prod([_THETA + sp.Rational(l, k) for l in range(1, k + 1)]), _THETA)
    return {0: sp.Poly(_THETA**k, _THETA), 1: product * (-(k**k))}


def _operator_in_zeta(k: int) -> Dict[int, sp.Poly]:
    """zeta theta^k - (theta - 1/k) ... (theta - k/k)"""
    product = sp.Poly(sp.prod([_THETA - sp.Rational(l, k) for l in range(1, k + 1)]), _THETA)
    return {1: sp.Poly(_THETA**k, _THETA), 0: -product}


def kummer_substitution(k: int) -> Dict[int, sp.Poly]:
    """s = zeta^{-1} / k^k, theta_s = -theta_zeta 를 대입한 뒤 왼쪽에서 zeta 를 곱함"""
    transformed: Dict[int, sp.Poly] = {}
    for power, poly in _operator_in_s(k).items():
        flipped = sp.Poly(poly.as_expr().subs(_THETA, -_THETA), _THETA)
        scaled = flipped * sp.Rational(1, k**k) ** power
        transformed[1 - power] = scaled
    return transformed


def kummer_substitution_check(k: int) -> IdentityCheck:
    require_rank(k)
    transformed = kummer_substitution(k)
    target = _operator_in_zeta(k)
    sign = (-1) ** k
    ok = set(transformed) == set(target) and all(
        sp.expand(transformed[p].as_expr() - sign * target[p].as_expr()) == 0 for p in target
    )
    return check_true(
        "zeta = 1/(k^k s) maps the s-operator to (-1)^k times the zeta-operator",
        "kummer-substitution",
        ok,
    )


def closed_form_check(k: int, n: int) -> IdentityCheck:
    """점화식 계수 = (km)!/(m!)^k, m <= n (series_coefficients 가 내부에서 대조)"""
    try:
        series_coefficients(k, n)
    except ArithmeticError as exc:
        return check_true(f"c_m = (km)!/(m!)^k, m <= {n}", "holomorphic-solution", False, str(exc))
    return check_true(f"c_m = (km)!/(m!)^k, m <= {n}", "holomorphic-solution", True)
