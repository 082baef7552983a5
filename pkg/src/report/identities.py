# 파일: src/report/identities.py
"""
섹션별 보고서 생성과 전체 항등식 검증 스위트

각 section_* 함수는 ReportDocument 하나를 반환하며 CLI 서브커맨드와 1:1 로 대응합니다.
verify_range 는 k 마다 run_identity_suite 를 병렬로 실행하고 k 순으로 정렬해 모읍니다.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional

import mpmath
import numpy as np

from src.config.settings import PipelineConfig, get_pipeline_config
from src.errors import HGSError, require_rank
from src.euler import chi_matrix, verify_chi_stokes
from src.exact import IdentityCheck, check_true, format_scalar
from src.groups import cp_generators, local_exponent_check
from src.invariants import invariant_of_h0_hinf, structure_report
from src.levelt import cp_levelt
from src.numeric import (
    companion_system,
    compare_invariants,
    default_loop,
    loop_monodromy,
    riemann_fuchs_numeric,
    singular_value_profile,
    tolerance_ladder,
)
from src.series import (
    apply_hg_operator,
    cayley_L,
    closed_form_check,
    evaluate_I0,
    kummer_substitution_check,
    mellin_exponents,
    mellin_gamma_recurrence,
    mellin_identities,
    series_coefficients,
    specialize,
)
from src.stokes import stokes_matrix
from src.utils.parallel import is_error, run_tasks_parallel

from .schema import ReportDocument, VerifySummary, matrix_payload, records

logger = logging.getLogger(__name__)


# ==========================================
# 섹션
# ==========================================

def section_generators(k: int) -> ReportDocument:
    g = cp_generators(k)
    lev = g.levelt
    matrices = {"h0": lev.h0, "hinf": lev.hinf, "h1": lev.h1, "M_1": g.m1, "M_inf": g.m_inf}
    for i, m in enumerate(g.m_omega, start=1):
        matrices[f"M_w^{i}"] = m
    return ReportDocument(
        k=k,
        section="generators",
        matrix=matrix_payload(lev.h1),
        identities=records(local_exponent_check(k)),
        matrices={name: matrix_payload(m) for name, m in matrices.items()},
        values={"labels": list(g.labels)},
    )


def _invariant_checks(k: int) -> tuple:
    try:
        space = invariant_of_h0_hinf(k, cross_check=True)
        agree = True
    except HGSError as exc:
        logger.warning(f"[Report] k={k} 불변량 교차검증 실패: {exc}")
        space = invariant_of_h0_hinf(k, cross_check=False)
        agree = False

    checks: List[IdentityCheck] = [
        check_true("dim X^H = 1", "quadratic-invariant", space.dimension == 1, f"dimension {space.dimension}"),
        check_true("X^H0 = X^H", "quadratic-invariant", agree),
    ]
    report = structure_report(space.basis[0], k) if space.dimension == 1 else None
    if report is not None:
        expected = "symmetric" if k % 2 == 0 else "antisymmetric"
        checks.extend(
            [
                check_true(
                    f"X is {expected}",
                    "invariant-parity",
                    report.symmetry == expected,
                    f"got {report.symmetry}",
                ),
                check_true("bands wrap: y_d = y_(d-k)", "circulant-bands", report.circulant),
                check_true("binomial band law", "circulant-bands", report.band_law, "; ".join(report.failures)),
                check_true("X (1,...,1) = 0", "invariant-kernel", report.annihilates_ones),
            ]
        )
    return space, report, checks


def section_invariant(k: int) -> ReportDocument:
    space, report, checks = _invariant_checks(k)
    values: Dict[str, object] = {"dimension": space.dimension}
    if report is not None:
        values.update(
            {
                "symmetry": report.symmetry,
                "scale": format_scalar(report.scale) if report.scale is not None else None,
                "invertible": report.invertible,
                "toeplitz_inverse": "n/a" if report.toeplitz_inverse is None else report.toeplitz_inverse,
            }
        )
    return ReportDocument(
        k=k,
        section="invariant",
        matrix=matrix_payload(space.basis[0]) if space.dimension else [],
        identities=records(checks),
        values={key: v for key, v in values.items() if v is not None},
    )


def section_stokes(k: int) -> ReportDocument:
    result = stokes_matrix(k)
    matrices = {
        "G": result.gram.g,
        "coxeter": result.coxeter,
        **{f"R_{j}": r for j, r in enumerate(result.reflections.reflections)},
        **result.extras,
    }
    checks = list(result.identities)
    return ReportDocument(
        k=k,
        section="stokes",
        matrix=matrix_payload(result.s),
        identities=records(checks),
        matrices={name: matrix_payload(m) for name, m in matrices.items()},
        values={
            "parity": result.gram.parity,
            "symmetry": result.gram.symmetry,
            "r": format_scalar(result.gram.r),
            "matches_closed_form": result.matches_closed_form,
        },
        notes=result.convention_notes,
    )


def section_chi(k: int) -> ReportDocument:
    report = verify_chi_stokes(k, stokes_matrix(k))
    return ReportDocument(
        k=k,
        section="chi",
        matrix=matrix_payload(chi_matrix(k).chi),
        identities=records(report.identities),
        matrices={f"J beta(chi) J [{d}]": matrix_payload(m) for d, m in report.twisted.items()},
        values={"directions_passing": list(report.directions_passing)},
    )


def section_series(k: int, terms: int = 10, s: Optional[str] = None) -> ReportDocument:
    sc = series_coefficients(k, terms)
    residual = apply_hg_operator(k, sc)
    closed_order = 50 if k <= 6 else 20
    checks = [
        closed_form_check(k, max(terms, closed_order)),
        check_true(
            f"operator annihilates I_0 through degree {terms}",
            "hypergeometric-operator",
            residual.vanishes,
            f"first non-zero degree {residual.first_nonzero_degree}",
        ),
        kummer_substitution_check(k),
    ]
    values: Dict[str, object] = {"coefficients": [str(c) for c in sc.coeffs]}
    if s is not None:
        evaluation = evaluate_I0(k, s, terms)
        values["I0"] = {
            "s": s,
            "value": mpmath.nstr(evaluation.value, 30),
            "tail_bound": mpmath.nstr(evaluation.tail_bound, 5),
            "within_radius": evaluation.within_radius,
        }
    return ReportDocument(k=k, section="series", identities=records(checks), values=values)


def section_mellin(k: int) -> ReportDocument:
    cm = cayley_L(k)
    forms = mellin_exponents(k)
    checks = list(mellin_identities(k)) + list(mellin_gamma_recurrence(k))
    return ReportDocument(
        k=k,
        section="mellin",
        matrix=matrix_payload(cm.l),
        identities=records(checks),
        matrices={"L_inv": matrix_payload(cm.l_inv)},
        values={
            "forms": [str(f) for f in forms],
            "specialized": [str(a) for a in specialize(forms, k)],
        },
    )


def _complex_pair(z: complex) -> List[float]:
    return [float(np.real(z)), float(np.imag(z))]


def section_monodromy(k: int, tol: Optional[float] = None, check_tol: float = 1e-6) -> ReportDocument:
    config = get_pipeline_config()
    tol = tol or config.numeric_tol
    lev = cp_levelt(k)
    system = companion_system(k, "zeta")

    around0 = loop_monodromy(system, default_loop(system, "0"), tol)
    around1 = loop_monodromy(system, default_loop(system, "1"), tol)
    cmp0 = compare_invariants(around0, lev.h0, check_tol)
    cmp1 = compare_invariants(around1, lev.h1, check_tol)
    sv = singular_value_profile(around1)
    rf = riemann_fuchs_numeric(k, tol, check_tol)
    deviations, monotone = tolerance_ladder(k)

    checks = [
        check_true("loop around 0 ~ h0 (conjugation invariants)", "local-exponents-0", cmp0.passed,
                   f"max deviation {cmp0.max_deviation:.3e}"),
        check_true("loop around 1 ~ h1 (conjugation invariants)", "pseudo-reflection", cmp1.passed,
                   f"max deviation {cmp1.max_deviation:.3e}"),
        check_true("id - M_1 has numerical rank 1", "pseudo-reflection",
                   bool(sv[0] > 1e-3 and np.all(sv[1:] < check_tol))),
        check_true("Phi_big = Phi_0 Phi_1, Phi_inf Phi_0 Phi_1 = id, charpoly (t-1)^k", "riemann-fuchs",
                   rf.passed, f"residual {rf.residual:.3e}, inf residual {rf.inf_residual:.3e}"),
        check_true("deviation decreases along tolerance ladder", "convergence", monotone),
    ]
    numeric = {
        "tol": tol,
        "base_point": _complex_pair(config.base_point),
        "loop_0": {
            "charpoly": [_complex_pair(c) for c in np.poly(around0.values)],
            "max_deviation": cmp0.max_deviation,
            "estimated_error": around0.estimated_error,
        },
        "loop_1": {
            "charpoly": [_complex_pair(c) for c in np.poly(around1.values)],
            "max_deviation": cmp1.max_deviation,
            "estimated_error": around1.estimated_error,
            "singular_values": [float(x) for x in sv],
        },
        "riemann_fuchs_residual": rf.residual,
        "riemann_fuchs_inf_residual": rf.inf_residual,
        "tolerance_ladder": {str(t): d for t, d in zip(config.tolerance_ladder, deviations)},
    }
    return ReportDocument(k=k, section="monodromy", identities=records(checks), numeric=numeric)


SECTIONS = {
    "generators": section_generators,
    "invariant": section_invariant,
    "stokes": section_stokes,
    "chi": section_chi,
    "mellin": section_mellin,
}


# ==========================================
# 전체 스위트
# ==========================================

def run_identity_suite(k: int, with_numeric: bool = False) -> ReportDocument:
    require_rank(k)
    docs = [builder(k) for builder in SECTIONS.values()]
    docs.append(section_series(k, terms=20))
    if with_numeric:
        docs.append(section_monodromy(k))

    identities = []
    for doc in docs:
        for record in doc.identities:
            identities.append(record.model_copy(update={"name": f"{doc.section}: {record.name}"}))
    result = ReportDocument(k=k, section="verify", identities=identities)
    for record in result.failed:
        logger.warning(f"[Verify] k={k} 실패: {record.name} ({record.detail})")
    return result


def verify_range(
    k_min: int,
    k_max: int,
    with_numeric: bool = False,
    config: Optional[PipelineConfig] = None,
) -> VerifySummary:
    config = config or get_pipeline_config()
    require_rank(k_min)
    if k_max < k_min:
        raise ValueError(f"k_max ({k_max}) < k_min ({k_min})")

    tasks = {k: (run_identity_suite, (k, with_numeric)) for k in range(k_min, k_max + 1)}
    results = run_tasks_parallel(tasks, max_workers=config.max_workers, timeout=config.verify_timeout)

    reports, errors = [], {}
    for k in sorted(results):
        if is_error(results[k]):
            errors[str(k)] = f"{type(results[k]).__name__}: {results[k]}"
        else:
            reports.append(results[k])
    passed = not errors and all(r.passed for r in reports)
    return VerifySummary(k_min=k_min, k_max=k_max, passed=passed, reports=reports, errors=errors)
