# 파일: src/euler/mutation.py
"""
Euler 형식 chi 와 K-이론적 뮤테이션

chi(O(-i), O(-j)) = C(k+i-j-1, i-j)  (i >= j) 인 단위 하삼각 행렬에
슬롯 (i-1, i) 의 기저 변환 P 를 m -> P m P^T 로 작용시킵니다.
P 의 행은 새 기저 벡터를 옛 좌표로 쓴 것이며 c = m[i, i-1] 입니다.

    left :  e'_{i-1} = e_i,              e'_i = e_{i-1} - c e_i
    right:  e'_{i-1} = e_i - c e_{i-1},  e'_i = e_{i-1}

두 방향은 서로 역이고 단위 하삼각 형태를 보존합니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

import sympy as sp

from src.errors import DimensionMismatchError, IndexOutOfRangeError, require_rank
from src.exact import ExactMatrix, IdentityCheck, check_matrix_equal, check_true, identity, mat_mul

logger = logging.getLogger(__name__)

DIRECTIONS = ("left", "right")


@dataclass(frozen=True)
class ChiMatrix:
    k: int
    chi: ExactMatrix


@dataclass(frozen=True)
class BraidWord:
    """(슬롯 i, 역원 여부) 의 나열. 왼쪽부터 차례로 적용"""

    letters: Tuple[Tuple[int, bool], ...]

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "BraidWord":
        return cls(letters=tuple((int(i), False) for i in indices))

    def inverse(self) -> "BraidWord":
        return BraidWord(letters=tuple((i, not inv) for i, inv in reversed(self.letters)))

    def validate(self, k: int) -> None:
        for i, _ in self.letters:
            if not 1 <= i <= k - 1:
                raise IndexOutOfRangeError(f"braid letter {i} outside 1..{k - 1}")


@dataclass(frozen=True)
class ChiStokesReport:
    k: int
    chi_times_s_is_identity: bool
    directions_passing: Tuple[str, ...]
    twisted: Dict[str, ExactMatrix]
    identities: Tuple[IdentityCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.identities)


def chi_matrix(k: int) -> ChiMatrix:
    require_rank(k)
    chi = sp.ImmutableMatrix(
        k, k, lambda i, j: sp.binomial(k + i - j - 1, i - j) if i >= j else 0
    )
    return ChiMatrix(k=k, chi=chi)


def reorder_matrix(k: int) -> ExactMatrix:
    """J_{i, k-1-i} = 1"""
    return sp.ImmutableMatrix(k, k, lambda i, j: 1 if i + j == k - 1 else 0)


def _mutation_basis(m: ExactMatrix, i: int, direction: str) -> ExactMatrix:
    k = m.rows
    c = m[i, i - 1]
    p = sp.Matrix(identity(k))
    p[i - 1, :] = sp.zeros(1, k)
    p[i, :] = sp.zeros(1, k)
    if direction == "left":
        p[i - 1, i] = 1
        p[i, i - 1] = 1
        p[i, i] = -c
    elif direction == "right":
        p[i - 1, i] = 1
        p[i - 1, i - 1] = -c
        p[i, i - 1] = 1
    else:
        raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")
    return sp.ImmutableMatrix(p)


def mutate(m: ExactMatrix, i: int, direction: str = "left") -> ExactMatrix:
    if m.rows != m.cols:
        raise DimensionMismatchError(f"mutate: matrix must be square, got {m.shape}")
    if not 1 <= i <= m.rows - 1:
        raise IndexOutOfRangeError(f"mutation slot {i} outside 1..{m.rows - 1}")
    p = _mutation_basis(m, i, direction)
    return mat_mul(mat_mul(p, m), p.T)


def _opposite(direction: str) -> str:
    return "right" if direction == "left" else "left"


def apply_braid_word(m: ExactMatrix, word: BraidWord, direction: str = "left") -> ExactMatrix:
    word.validate(m.rows)
    for i, inverse in word.letters:
        m = mutate(m, i, _opposite(direction) if inverse else direction)
    return m


def half_twist_word(k: int) -> BraidWord:
    """beta = b_1 (b_2 b_1) ... (b_{k-1} ... b_1)"""
    indices: List[int] = []
    for top in range(1, k):
        indices.extend(range(top, 0, -1))
    return BraidWord.from_indices(indices)


def verify_chi_stokes(k: int, s) -> ChiStokesReport:
    """chi S = id 와 J beta(chi) J = S^T 를 두 뮤테이션 방향에 대해 확인"""
    require_rank(k)
    s_matrix: ExactMatrix = getattr(s, "s", s)
    if s_matrix.shape != (k, k):
        raise DimensionMismatchError(f"Stokes matrix shape {s_matrix.shape}, expected ({k},{k})")

    chi = chi_matrix(k).chi
    j = reorder_matrix(k)
    word = half_twist_word(k)

    checks = [check_matrix_equal("chi S = id", "euler-stokes", mat_mul(chi, s_matrix), identity(k))]
    twisted: Dict[str, ExactMatrix] = {}
    passing: List[str] = []
    for direction in DIRECTIONS:
        image = mat_mul(mat_mul(j, apply_braid_word(chi, word, direction)), j)
        twisted[direction] = image
        check = check_matrix_equal(
            f"S^T = J beta(chi) J [{direction}]", "braid-half-twist", image, s_matrix.T
        )
        checks.append(check)
        if check.passed:
            passing.append(direction)

    checks.append(
        check_true(
            "half twist holds for some mutation direction",
            "braid-half-twist",
            bool(passing),
        )
    )
    logger.debug(f"[Euler] k={k} 통과 방향: {passing}")
    return ChiStokesReport(
        k=k,
        chi_times_s_is_identity=checks[0].passed,
        directions_passing=tuple(passing),
        twisted=twisted,
        identities=tuple(checks),
    )
