"""Levelt 동반행렬 h0, h_inf, h1."""

from .companion import (
    CharCoeffPair,
    ExponentData,
    LeveltTriple,
    char_coeffs_from_exponents,
    companion_h0,
    companion_hinf,
    cp_char_coeffs,
    cp_exponents,
    cp_levelt,
    h1_from,
    levelt_from_exponents,
)

__all__ = [
    "CharCoeffPair",
    "ExponentData",
    "LeveltTriple",
    "char_coeffs_from_exponents",
    "companion_h0",
    "companion_hinf",
    "cp_char_coeffs",
    "cp_exponents",
    "cp_levelt",
    "h1_from",
    "levelt_from_exponents",
]
