"""정칙해 급수, 초기하 연산자, Cayley/Mellin 구조."""

from .mellin import (
    AffineForm,
    CayleyMatrix,
    cayley_L,
    closed_exponent_forms,
    form_symbols,
    mellin_exponents,
    mellin_gamma_recurrence,
    mellin_identities,
    specialize,
)
from .recurrence import (
    I0Evaluation,
    SeriesCoeffs,
    SeriesResidual,
    apply_hg_operator,
    closed_form_check,
    evaluate_I0,
    kummer_substitution,
    kummer_substitution_check,
    series_coefficients,
)

__all__ = [
    "AffineForm",
    "CayleyMatrix",
    "I0Evaluation",
    "SeriesCoeffs",
    "SeriesResidual",
    "apply_hg_operator",
    "cayley_L",
    "closed_exponent_forms",
    "closed_form_check",
    "evaluate_I0",
    "form_symbols",
    "kummer_substitution",
    "kummer_substitution_check",
    "mellin_exponents",
    "mellin_gamma_recurrence",
    "mellin_identities",
    "series_coefficients",
    "specialize",
]
