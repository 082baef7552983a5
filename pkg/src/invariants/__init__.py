"""이차 불변량 g X g^T = X."""

from .solver import (
    InvariantSpace,
    StructureReport,
    canonical_invariant,
    invariant_of_h0_hinf,
    quadratic_invariant_space,
    same_subspace,
    structure_report,
)

__all__ = [
    "InvariantSpace",
    "StructureReport",
    "canonical_invariant",
    "invariant_of_h0_hinf",
    "quadratic_invariant_space",
    "same_subspace",
    "structure_report",
]
