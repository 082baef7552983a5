# 파일: src/errors.py
"""
hgstokes 예외 계층

검증 실패(항등식 불일치)는 예외가 아니라 보고서로 반환합니다.
여기 정의된 예외는 입력 자체가 잘못되었거나 파이프라인이
더 진행할 수 없는 경우에만 사용합니다.
"""

from __future__ import annotations


class HGSError(Exception):
    """hgstokes 공통 기반 예외"""


class RankError(HGSError, ValueError):
    """k < 2 등 허용되지 않는 랭크"""


class DimensionMismatchError(HGSError, ValueError):
    """행렬 크기 불일치"""


class SingularMatrixError(HGSError, ArithmeticError):
    """행렬식이 0인 행렬의 역행렬 요청"""


class PseudoReflectionError(HGSError):
    """rank(id - M) != 1"""


class SnapFailureError(HGSError):
    """고정밀 계수를 유리수로 스냅할 수 없음 (Galois 불안정 지수)"""


class NormalizationError(HGSError):
    """불변량을 Gram 정규형으로 스케일링할 수 없음"""


class RouteMismatchError(HGSError):
    """두 계산 경로(예: Coxeter 원소)가 정확히 일치하지 않음"""


class IndexOutOfRangeError(HGSError, IndexError):
    """뮤테이션 슬롯 번호 범위 오류"""


class StepFailureError(HGSError):
    """수치 적분 실패 (특이점 근접 등)"""


def require_rank(k: int, minimum: int = 2) -> int:
    if not isinstance(k, int) or isinstance(k, bool) or k < minimum:
        raise RankError(f"k must be an integer >= {minimum}, got {k!r}")
    return k
