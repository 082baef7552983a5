# 파일: src/series/mellin.py
"""
Cayley 트릭과 Mellin 지수

변수 순서 (x_0..x_{k-1}, s, y_1, y_2) 에 대해 단항식
    T_i = y_1 x_i (i < k),  T_k = y_1,  T_{k+1} = y_2 x_0...x_{k-1},  T_{k+2} = y_2 s
의 지수 행렬 L (Log T = L · Log Xi) 은 unimodular 이며,
(i + 1, z, v_1, v_2) · L^{-1} 이 Gamma 인자의 인수 L_0 .. L_{k+2} 를 줍니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Mapping, Optional, Sequence, Tuple, Union

import mpmath
import sympy as sp

from src.config.settings import get_pipeline_config
from src.errors import require_rank
from src.exact import ExactMatrix, IdentityCheck, check_matrix_equal, check_true, identity, mat_inverse, mat_mul
from src.utils.precision import mp_precision

logger = logging.getLogger(__name__)


def form_symbols(k: int) -> Tuple[sp.Symbol, ...]:
    """(i0, ..., i_{k-1}, z, v1, v2)"""
    return tuple(sp.symbols(f"i0:{k}")) + sp.symbols("z v1 v2")


@dataclass(frozen=True)
class AffineForm:
    constant: sp.Rational
    coefficients: Tuple[Tuple[str, sp.Rational], ...]

    @classmethod
    def from_expr(cls, expr: sp.Expr, symbols: Sequence[sp.Symbol]) -> "AffineForm":
        expr = sp.expand(expr)
        unknown = expr.free_symbols - set(symbols)
        if unknown:
            raise ValueError(f"unexpected symbols {sorted(map(str, unknown))}")
        coeffs = tuple((str(sym), sp.Rational(expr.coeff(sym))) for sym in symbols)
        constant = sp.Rational(expr.subs({sym: 0 for sym in symbols}))
        if sp.expand(expr - constant - sum(c * sym for (_, c), sym in zip(coeffs, symbols))) != 0:
            raise ValueError(f"expression is not affine-linear: {expr}")
        return cls(constant=constant, coefficients=coeffs)

    @property
    def symbol_names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.coefficients)

    def coefficient(self, name: str) -> sp.Rational:
        return dict(self.coefficients)[name]

    def as_expr(self) -> sp.Expr:
        return self.constant + sum(c * sp.Symbol(name) for name, c in self.coefficients)

    def substitute(self, values: Mapping[str, Union[int, sp.Expr]]) -> sp.Expr:
        return sp.expand(self.as_expr().subs({sp.Symbol(n): v for n, v in values.items()}))

    def __str__(self) -> str:
        return str(self.as_expr())


@dataclass(frozen=True)
class CayleyMatrix:
    k: int
    l: ExactMatrix
    l_inv: ExactMatrix


def _cayley_rows(k: int) -> ExactMatrix:
    n = k + 3
    s_col, y1_col, y2_col = k, k + 1, k + 2
    l = sp.zeros(n, n)
    for i in range(k):
        l[i, i] = 1
        l[i, y1_col] = 1
    l[k, y1_col] = 1
    for i in range(k):
        l[k + 1, i] = 1
    l[k + 1, y2_col] = 1
    l[k + 2, s_col] = 1
    l[k + 2, y2_col] = 1
    return sp.ImmutableMatrix(l)


def _displayed_inverse(k: int) -> ExactMatrix:
    n = k + 3
    inv = sp.zeros(n, n)
    for i in range(k):
        inv[i, i] = 1
        inv[i, k] = -1
    for i in range(k):
        inv[k, i] = 1
        inv[k + 2, i] = -1
    inv[k, k] = -k
    inv[k, k + 1] = -1
    inv[k, k + 2] = 1
    inv[k + 1, k] = 1
    inv[k + 2, k] = k
    inv[k + 2, k + 1] = 1
    return sp.ImmutableMatrix(inv)


def cayley_L(k: int) -> CayleyMatrix:
    require_rank(k)
    l = _cayley_rows(k)
    l_inv = mat_inverse(l)
    if l_inv != _displayed_inverse(k):
        raise ArithmeticError(f"k={k}: inverse of L does not match the displayed pattern")
    return CayleyMatrix(k=k, l=l, l_inv=l_inv)


def closed_exponent_forms(k: int) -> List[sp.Expr]:
    syms = form_symbols(k)
    idx, z, v1, v2 = syms[:k], syms[k], syms[k + 1], syms[k + 2]
    forms = [z + idx[l] + 1 - v2 for l in range(k)]
    forms.append(-sum(i + 1 for i in idx) + v1 + k * (v2 - z))
    forms.append(-z + v2)
    forms.append(z)
    return forms


def mellin_exponents(k: int) -> List[AffineForm]:
    """(i + 1, z, v1, v2) · L^{-1} 을 닫힌 형태와 기호별로 대조"""
    cm = cayley_L(k)
    syms = form_symbols(k)
    row = sp.Matrix([[syms[l] + 1 for l in range(k)] + list(syms[k:])])
    values = row * sp.Matrix(cm.l_inv)

    forms = [AffineForm.from_expr(values[0, c], syms) for c in range(k + 3)]
    for c, (form, expected) in enumerate(zip(forms, closed_exponent_forms(k))):
        if form != AffineForm.from_expr(expected, syms):
            raise ArithmeticError(f"k={k}: exponent form {c} = {form}, expected {expected}")
    return forms


SPECIALIZATION = {"v1": 1, "v2": 1}


def specialize(forms: Sequence[AffineForm], k: int) -> List[sp.Expr]:
    """i = 0, v1 = v2 = 1"""
    values = {f"i{l}": 0 for l in range(k)}
    values.update(SPECIALIZATION)
    return [f.substitute(values) for f in forms]


# ==========================================
# Gamma 인자 수치 검증 (mpmath)
# ==========================================

def _phi(z, k: int):
    return mpmath.gamma(z) ** k / mpmath.gamma(k * z)


def mellin_gamma_recurrence(
    k: int, z: Union[complex, float] = 0.3 + 0.2j, precision: Optional[int] = None
) -> Tuple[IdentityCheck, IdentityCheck]:
    """phi(z) = Gamma(z)^k / Gamma(kz) 의 차분방정식과 Gamma 곱 축약"""
    require_rank(k)
    precision = precision or get_pipeline_config().precision_digits
    with mp_precision(precision):
        tol = mpmath.mpf(10) ** (-(precision // 2))
        zz = mpmath.mpmathify(z)

        lhs = _phi(zz + 1, k) / _phi(zz, k)
        rhs = zz**k / mpmath.rf(k * zz, k)
        recurrence_err = abs(lhs - rhs) / abs(rhs)

        z_sym = sp.Symbol("z")
        arguments = [
            sp.lambdify(z_sym, a, modules="mpmath") for a in specialize(mellin_exponents(k), k)
        ]
        product = mpmath.fprod(mpmath.gamma(f(zz)) for f in arguments)
        reduced = _phi(zz, k) * mpmath.pi**2 / (mpmath.sinpi(zz) * mpmath.sinpi(k * zz))
        product_err = abs(product - reduced) / abs(reduced)

    logger.debug(
        f"[Mellin] k={k} 점화 오차 {mpmath.nstr(recurrence_err, 3)}, "
        f"Gamma 곱 오차 {mpmath.nstr(product_err, 3)}"
    )
    return (
        check_true(
            "phi(z+1)/phi(z) = z^k / (kz)_k",
            "mellin-difference",
            recurrence_err < tol,
            f"relative error {mpmath.nstr(recurrence_err, 5)}",
        ),
        check_true(
            "prod Gamma(L_l) = phi(z) pi^2 / (sin(pi z) sin(pi k z))",
            "gamma-reduction",
            product_err < tol,
            f"relative error {mpmath.nstr(product_err, 5)}",
        ),
    )


def mellin_identities(k: int) -> List[IdentityCheck]:
    cm = cayley_L(k)
    syms = form_symbols(k)
    forms = mellin_exponents(k)
    z = sp.Symbol("z")
    expected_special = [z] * k + [1 - k * z, 1 - z, z]
    return [
        check_matrix_equal("L L^-1 = id", "cayley-trick", mat_mul(cm.l, cm.l_inv), identity(k + 3)),
        check_true("det L = +-1", "cayley-trick", abs(cm.l.det()) == 1),
        check_true(
            "exponent forms match closed forms",
            "exponent-forms",
            all(
                f == AffineForm.from_expr(e, syms)
                for f, e in zip(forms, closed_exponent_forms(k))
            ),
        ),
        check_true(
            "i=0, v1=v2=1 gives (z,...,z,1-kz,1-z,z)",
            "exponent-forms",
            [sp.expand(a - b) for a, b in zip(specialize(forms, k), expected_special)] == [0] * (k + 3),
        ),
    ]
