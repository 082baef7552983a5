"""초기하 모노드로미 군 H 와 그 관계식."""

from .hypergeometric import (
    GroupPresentation,
    PseudoReflectionCheck,
    RelationReport,
    cp_generators,
    is_pseudo_reflection,
    local_exponent_check,
    riemann_fuchs_product,
    verify_riemann_fuchs,
)

__all__ = [
    "GroupPresentation",
    "PseudoReflectionCheck",
    "RelationReport",
    "cp_generators",
    "is_pseudo_reflection",
    "local_exponent_check",
    "riemann_fuchs_product",
    "verify_riemann_fuchs",
]
