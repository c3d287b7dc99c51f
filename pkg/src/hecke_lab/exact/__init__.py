"""Exact scalars, polynomials and dense linear algebra."""

from .matrix import ExactMatrix, matrix_kernel, same_span, span_matrix
from .poly import Poly, apply_matrix, demazure
from .scalar import I, ONE, ZERO, Scalar, as_scalar, format_scalar, parse_scalar

__all__ = [
    "ExactMatrix", "I", "ONE", "Poly", "Scalar", "ZERO", "apply_matrix", "as_scalar",
    "demazure", "format_scalar", "matrix_kernel", "parse_scalar", "same_span", "span_matrix",
]
