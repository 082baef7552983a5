"""정확(유리수) 선형대수 커널."""

from .core import (
    ExactMatrix,
    ExactScalar,
    cayley_hamilton_residual,
    charpoly,
    exact_matrix,
    first_mismatch,
    format_scalar,
    identity,
    is_identity,
    kernel_basis,
    mat_inverse,
    mat_mul,
    mat_pow,
    matrix_to_strings,
    rank,
    to_rational,
)
from .checks import IdentityCheck, check_matrix_equal, check_true

__all__ = [
    "IdentityCheck",
    "check_matrix_equal",
    "check_true",
    "ExactMatrix",
    "ExactScalar",
    "cayley_hamilton_residual",
    "charpoly",
    "exact_matrix",
    "first_mismatch",
    "format_scalar",
    "identity",
    "is_identity",
    "kernel_basis",
    "mat_inverse",
    "mat_mul",
    "mat_pow",
    "matrix_to_strings",
    "rank",
    "to_rational",
]
