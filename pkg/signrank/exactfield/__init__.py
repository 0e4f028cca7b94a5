"""Exact scalar arithmetic in ℚ ⊂ ℚ(√d) and in F[α]."""

from signrank.exactfield.context import QQ, FieldContext, Scalar, context_of, sign
from signrank.exactfield.polynomial import Polynomial
from signrank.exactfield.quadratic import QuadraticNumber, is_squarefree
from signrank.exactfield.rational import Rational, format_rational, parse_rational, to_rational
from signrank.exactfield.roots import (
    poly_eval,
    quadratic_field_roots,
    rational_roots,
    sturm_root_count,
    sturm_sequence,
)

__all__ = [
    "QQ",
    "FieldContext",
    "Scalar",
    "context_of",
    "sign",
    "Polynomial",
    "QuadraticNumber",
    "is_squarefree",
    "Rational",
    "format_rational",
    "parse_rational",
    "to_rational",
    "poly_eval",
    "quadratic_field_roots",
    "rational_roots",
    "sturm_root_count",
    "sturm_sequence",
]
