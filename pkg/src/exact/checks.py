# 파일: src/exact/checks.py
"""항등식 검증 결과 레코드"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import ExactMatrix, first_mismatch, format_scalar


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    ref: str
    passed: bool
    detail: str = ""


def check_matrix_equal(
    name: str, ref: str, lhs: ExactMatrix, rhs: ExactMatrix
) -> IdentityCheck:
    if lhs.shape != rhs.shape:
        return IdentityCheck(name, ref, False, f"shape {lhs.shape} vs {rhs.shape}")
    diff: Optional[tuple] = first_mismatch(lhs, rhs)
    if diff is None:
        return IdentityCheck(name, ref, True)
    i, j, a, b = diff
    return IdentityCheck(
        name, ref, False, f"entry ({i},{j}): {format_scalar(a)} != {format_scalar(b)}"
    )


def check_true(name: str, ref: str, condition: bool, detail: str = "") -> IdentityCheck:
    return IdentityCheck(name, ref, bool(condition), "" if condition else detail)
