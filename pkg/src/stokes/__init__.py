"""불변량 -> Gram -> 반사 -> Coxeter -> Stokes 행렬."""

from .pipeline import (
    GramData,
    ReflectionSet,
    StokesResult,
    closed_form_stokes,
    coxeter_element,
    gram_from_invariant,
    reflections_from_gram,
    sign_twist,
    solve_stokes,
    stokes_matrix,
)

__all__ = [
    "GramData",
    "ReflectionSet",
    "StokesResult",
    "closed_form_stokes",
    "coxeter_element",
    "gram_from_invariant",
    "reflections_from_gram",
    "sign_twist",
    "solve_stokes",
    "stokes_matrix",
]
