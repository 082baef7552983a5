"""동반 ODE 시스템의 수치 모노드로미 교차검증."""

from .monodromy import (
    ComparisonReport,
    CompanionSystem,
    LoopSpec,
    NumericMatrix,
    RiemannFuchsNumeric,
    companion_system,
    compare_invariants,
    default_loop,
    loop_monodromy,
    riemann_fuchs_numeric,
    singular_value_profile,
    tolerance_ladder,
)

__all__ = [
    "ComparisonReport",
    "CompanionSystem",
    "LoopSpec",
    "NumericMatrix",
    "RiemannFuchsNumeric",
    "companion_system",
    "compare_invariants",
    "default_loop",
    "loop_monodromy",
    "riemann_fuchs_numeric",
    "singular_value_profile",
    "tolerance_ladder",
]
