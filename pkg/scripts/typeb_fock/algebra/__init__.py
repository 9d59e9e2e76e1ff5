"""
Точная алгебра: рациональные числа, многочлены от (alpha, q), векторы и матрицы
"""

from .rational import as_fraction, parse_rational, format_rational, RationalLike
from .poly import BivariatePoly, poly_mul, poly_eval, ALPHA, Q
from .linear import (
    VectorQ,
    MatrixQ,
    vector,
    matrix,
    basis_vector,
    zero_vector,
    identity_matrix,
    dot,
    mat_vec,
    transpose,
    to_numpy,
)

__all__ = [
    "as_fraction",
    "parse_rational",
    "format_rational",
    "RationalLike",
    "BivariatePoly",
    "poly_mul",
    "poly_eval",
    "ALPHA",
    "Q",
    "VectorQ",
    "MatrixQ",
    "vector",
    "matrix",
    "basis_vector",
    "zero_vector",
    "identity_matrix",
    "dot",
    "mat_vec",
    "transpose",
    "to_numpy",
]
