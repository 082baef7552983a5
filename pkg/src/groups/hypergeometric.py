# 파일: src/groups/hypergeometric.py
"""
Kummer 피복 zeta = lambda^k 위의 모노드로미 생성원

    M_1        = h1 = (h0 hinf)^{-1}
    M_{w^i}    = hinf^{-i} h1 hinf^{i}      (i = 1..k-1, w = e^{2 pi i / k})
    M_inf      = hinf^k
    M_0        = h0^k = id

Riemann–Fuchs 관계  M_inf M_{w^{k-1}} ... M_w M_1 = id 는 순서에 민감하므로
곱셈 순서를 그대로 유지합니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

import sympy as sp

from src.errors import PseudoReflectionError, require_rank
from src.exact import (
    ExactMatrix,
    IdentityCheck,
    charpoly,
    check_matrix_equal,
    check_true,
    first_mismatch,
    format_scalar,
    identity,
    is_identity,
    mat_mul,
    mat_pow,
    rank,
)
from src.levelt import LeveltTriple, cp_levelt

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupPresentation:
    k: int
    m1: ExactMatrix
    m_omega: Tuple[ExactMatrix, ...]
    m_inf: ExactMatrix
    labels: Tuple[str, ...]
    levelt: LeveltTriple

    def generators(self) -> List[ExactMatrix]:
        """[M_1, M_w, ..., M_{w^{k-1}}, M_inf]"""
        return [self.m1, *self.m_omega, self.m_inf]


@dataclass(frozen=True)
class RelationReport:
    passed: bool
    product: ExactMatrix
    first_mismatch: Optional[Tuple[int, int, str, str]] = None


@dataclass(frozen=True)
class PseudoReflectionCheck:
    is_pseudo_reflection: bool
    is_reflection: bool

    def __bool__(self) -> bool:
        return self.is_pseudo_reflection


def is_pseudo_reflection(m: ExactMatrix) -> PseudoReflectionCheck:
    if m.rows != m.cols:
        return PseudoReflectionCheck(False, False)
    pseudo = rank(identity(m.rows) - m) == 1
    reflection = pseudo and is_identity(mat_mul(m, m))
    return PseudoReflectionCheck(pseudo, reflection)


@lru_cache(maxsize=32)
def cp_generators(k: int) -> GroupPresentation:
    require_rank(k)
    lev = cp_levelt(k)

    if not is_identity(mat_pow(lev.h0, k)):
        raise PseudoReflectionError(f"h0^{k} != id; Levelt data is inconsistent")

    m_omega = []
    for i in range(1, k):
        m = mat_mul(mat_mul(mat_pow(lev.hinf, -i), lev.h1), mat_pow(lev.hinf, i))
        if not is_pseudo_reflection(m):
            raise PseudoReflectionError(f"M_w^{i} is not a pseudo-reflection")
        m_omega.append(m)

    labels = ("1",) + tuple(f"w^{i}" for i in range(1, k)) + ("inf",)
    logger.debug(f"[Group] k={k} 생성원 {len(labels)}개 구성")
    return GroupPresentation(
        k=k,
        m1=lev.h1,
        m_omega=tuple(m_omega),
        m_inf=mat_pow(lev.hinf, k),
        labels=labels,
        levelt=lev,
    )


def riemann_fuchs_product(g: GroupPresentation) -> ExactMatrix:
    """M_inf · M_{w^{k-1}} · ... · M_w · M_1"""
    product = g.m1
    for m in g.m_omega:
        product = mat_mul(m, product)
    return mat_mul(g.m_inf, product)


def verify_riemann_fuchs(g: GroupPresentation) -> RelationReport:
    product = riemann_fuchs_product(g)
    diff = first_mismatch(product, identity(g.k))
    if diff is None:
        return RelationReport(passed=True, product=product)
    i, j, a, b = diff
    logger.warning(f"[Group] Riemann–Fuchs 불일치 k={g.k} ({i},{j}): {a} != {b}")
    return RelationReport(
        passed=False,
        product=product,
        first_mismatch=(i, j, format_scalar(a), format_scalar(b)),
    )


def local_exponent_check(k: int) -> List[IdentityCheck]:
    """국소 모노드로미의 스펙트럼과 군 관계 요약"""
    g = cp_generators(k)
    lev = g.levelt
    t = sp.Symbol("t")
    target_h0 = [sp.Integer(c) for c in sp.Poly(t**k - 1, t).all_coeffs()]
    target_hinf = [sp.Integer(c) for c in sp.Poly((t - 1) ** k, t).all_coeffs()]
    special = (-1) ** (k - 1)
    id_k = identity(k)

    checks = [
        check_true("charpoly(h0) = t^k - 1", "local-exponents-0", charpoly(lev.h0) == target_h0),
        check_true(
            "charpoly(hinf) = (t-1)^k", "local-exponents-inf", charpoly(lev.hinf) == target_hinf
        ),
        check_matrix_equal("h0^k = id", "kummer-cover", mat_pow(lev.h0, k), id_k),
        check_true(
            "rank(hinf - id) = k-1",
            "local-exponents-inf",
            rank(lev.hinf - id_k) == k - 1,
            "hinf is not a single unipotent Jordan block",
        ),
        check_true(
            "rank(id - h1) = 1", "pseudo-reflection", rank(id_k - lev.h1) == 1
        ),
        check_true("det(h1) = (-1)^(k-1)", "pseudo-reflection", lev.h1.det() == special),
        check_true(
            "trace(h1) = (k-1) + (-1)^(k-1)",
            "pseudo-reflection",
            lev.h1.trace() == (k - 1) + special,
        ),
    ]

    rf = verify_riemann_fuchs(g)
    checks.append(
        check_true(
            "M_inf M_w^(k-1) ... M_w M_1 = id",
            "riemann-fuchs",
            rf.passed,
            f"first mismatch {rf.first_mismatch}",
        )
    )
    reference = charpoly(g.m1)
    checks.append(
        check_true(
            "M_w^i pseudo-reflections conjugate to M_1",
            "kummer-generators",
            all(is_pseudo_reflection(m).is_pseudo_reflection for m in g.m_omega)
            and all(charpoly(m) == reference for m in g.m_omega),
        )
    )
    checks.append(
        check_true("charpoly(M_inf) = (t-1)^k", "kummer-generators", charpoly(g.m_inf) == target_hinf)
    )
    return checks
