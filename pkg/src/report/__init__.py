"""보고서 스키마, 출력기, 항등식 스위트."""

from .identities import (
    SECTIONS,
    run_identity_suite,
    section_chi,
    section_generators,
    section_invariant,
    section_mellin,
    section_monodromy,
    section_series,
    section_stokes,
    verify_range,
)
from .render import FORMATS, render, render_latex, render_text
from .schema import IdentityRecord, ReportDocument, VerifySummary, to_canonical_json

__all__ = [
    "FORMATS",
    "IdentityRecord",
    "ReportDocument",
    "SECTIONS",
    "VerifySummary",
    "render",
    "render_latex",
    "render_text",
    "run_identity_suite",
    "section_chi",
    "section_generators",
    "section_invariant",
    "section_mellin",
    "section_monodromy",
    "section_series",
    "section_stokes",
    "to_canonical_json",
    "verify_range",
]
