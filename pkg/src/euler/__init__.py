"""Beilinson 컬렉션의 Euler 형식과 braid 뮤테이션."""

from .mutation import (
    BraidWord,
    ChiMatrix,
    ChiStokesReport,
    apply_braid_word,
    chi_matrix,
    half_twist_word,
    mutate,
    reorder_matrix,
    verify_chi_stokes,
)

__all__ = [
    "BraidWord",
    "ChiMatrix",
    "ChiStokesReport",
    "apply_braid_word",
    "chi_matrix",
    "half_twist_word",
    "mutate",
    "reorder_matrix",
    "verify_chi_stokes",
]
