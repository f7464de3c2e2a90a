"""Linear-time determinants of tridiagonal matrices."""

from fractions import Fraction

from . import _core
from ._core import (
    DetResult,
    ParseError,
    SignedLogValue,
    TridiagonalMatrix,
    ZeroPivotError,
    det_hybrid,
    det_hybrid_scaled,
    det_three_term,
    det_two_term,
    dense_det_float,
    format_matrix,
    gen_example,
    is_positive_definite,
    lu_factorize,
    parse_matrix,
    pivot_sequence,
)

__all__ = [
    "DetResult",
    "ParseError",
    "SignedLogValue",
    "TridiagonalMatrix",
    "ZeroPivotError",
    "closed_form_det",
    "dense_det_exact",
    "dense_det_float",
    "det_detgtri",
    "det_hybrid",
    "det_hybrid_scaled",
    "det_three_term",
    "det_two_term",
    "format_matrix",
    "gen_example",
    "is_positive_definite",
    "lu_factorize",
    "parse_matrix",
    "pivot_sequence",
]


def det_detgtri(m: TridiagonalMatrix) -> Fraction:
    """Exact determinant via symbolic zero-pivot substitution."""
    return Fraction(_core.det_detgtri(m))


def dense_det_exact(m: TridiagonalMatrix) -> Fraction:
    return Fraction(_core.dense_det_exact(m))


def closed_form_det(family: str, n: int) -> int:
    return int(_core.closed_form_det(family, n))
