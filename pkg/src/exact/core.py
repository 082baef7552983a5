# 파일: src/exact/core.py
"""
정확 유리수 행렬 커널

모든 군/불변량 계산은 sympy의 Rational / ImmutableMatrix 위에서 수행됩니다.
행렬은 열벡터에 왼쪽에서 작용합니다 (M·v). 부동소수점은 이 모듈에 없습니다.

사용 예:
    from src.exact import exact_matrix, mat_mul, charpoly

    h0 = exact_matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    charpoly(h0)   # [1, 0, 0, -1]  ->  t^3 - 1
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import sympy as sp
from sympy.polys.matrices import DomainMatrix

from src.errors import DimensionMismatchError, SingularMatrixError

ExactScalar = sp.Rational
ExactMatrix = sp.ImmutableMatrix

ScalarLike = Union[int, str, Fraction, sp.Rational]


def to_rational(value: ScalarLike) -> sp.Rational:
    """int / "p/q" 문자열 / Fraction / Rational 을 약분된 Rational 로 변환"""
    if isinstance(value, sp.Rational):
        return value
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    if isinstance(value, bool):
        raise TypeError("bool is not an exact scalar")
    if isinstance(value, int):
        return sp.Integer(value)
    if isinstance(value, str):
        try:
            return sp.Rational(value.strip())
        except (TypeError, ValueError, sp.SympifyError):
            raise ValueError(f"not an exact rational: {value!r}") from None
    if isinstance(value, sp.Basic) and value.is_Rational:
        return sp.Rational(value)
    raise TypeError(f"not an exact rational: {value!r}")


def exact_matrix(rows: Iterable[Sequence[ScalarLike]]) -> ExactMatrix:
    return sp.ImmutableMatrix([[to_rational(x) for x in row] for row in rows])


def identity(k: int) -> ExactMatrix:
    return sp.ImmutableMatrix(sp.eye(k))


def _require_square(a: ExactMatrix, what: str) -> None:
    if a.rows != a.cols:
        raise DimensionMismatchError(f"{what}: matrix must be square, got {a.rows}x{a.cols}")


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise DimensionMismatchError(
            f"mat_mul: {a.rows}x{a.cols} times {b.rows}x{b.cols}"
        )
    return sp.ImmutableMatrix(a * b)


def mat_inverse(a: ExactMatrix) -> ExactMatrix:
    _require_square(a, "mat_inverse")
    if a.det(method="bareiss") == 0:
        raise SingularMatrixError(f"matrix is singular ({a.rows}x{a.cols})")
    return sp.ImmutableMatrix(a.inv(method="GE"))


def mat_pow(a: ExactMatrix, n: int) -> ExactMatrix:
    """정수 거듭제곱. 음수 지수는 정확 역행렬을 경유"""
    _require_square(a, "mat_pow")
    if n < 0:
        return mat_pow(mat_inverse(a), -n)
    return sp.ImmutableMatrix(a ** n) if n else identity(a.rows)


def charpoly(a: ExactMatrix) -> List[sp.Rational]:
    """det(t·id - a)의 계수 [1, c_1, ..., c_k] (Berkowitz, 나눗셈 없음)"""
    _require_square(a, "charpoly")
    t = sp.Dummy("t")
    poly = a.charpoly(t)
    return [to_rational(c) for c in poly.all_coeffs()]


def cayley_hamilton_residual(a: ExactMatrix) -> ExactMatrix:
    """p(a) 를 Horner 로 계산. Cayley–Hamilton 이면 영행렬"""
    coeffs = charpoly(a)
    acc = sp.zeros(a.rows, a.cols)
    for c in coeffs:
        acc = acc * a + c * sp.eye(a.rows)
    return sp.ImmutableMatrix(acc)


def _domain(a: ExactMatrix) -> DomainMatrix:
    return DomainMatrix.from_Matrix(sp.Matrix(a)).to_field()


def kernel_basis(a: ExactMatrix) -> List[ExactMatrix]:
    """오른쪽 영공간의 기저 (열벡터 목록). 단사이면 빈 목록

    QQ 위 DomainMatrix 소거를 사용하므로 k^2 x k^2 규모의 불변량 시스템도 빠릅니다.
    """
    if a.cols == 0:
        return []
    null = _domain(a).nullspace().to_Matrix()
    return [sp.ImmutableMatrix(null.row(r).T) for r in range(null.rows)]


def rank(a: ExactMatrix) -> int:
    if a.rows == 0 or a.cols == 0:
        return 0
    return int(_domain(a).rank())


def is_identity(a: ExactMatrix) -> bool:
    return a.rows == a.cols and a == identity(a.rows)


def first_mismatch(
    a: ExactMatrix, b: ExactMatrix
) -> Optional[Tuple[int, int, sp.Rational, sp.Rational]]:
    """처음으로 다른 (i, j, a_ij, b_ij). 같으면 None"""
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape {a.shape} vs {b.shape}")
    for i in range(a.rows):
        for j in range(a.cols):
            if a[i, j] != b[i, j]:
                return i, j, a[i, j], b[i, j]
    return None


def format_scalar(x: ScalarLike) -> str:
    q = to_rational(x)
    return str(q.p) if q.q == 1 else f"{q.p}/{q.q}"


def matrix_to_strings(a: ExactMatrix) -> List[List[str]]:
    return [[format_scalar(a[i, j]) for j in range(a.cols)] for i in range(a.rows)]
