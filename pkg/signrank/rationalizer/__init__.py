"""Sign-preserving rational substitution for matrices over F[α]."""

from signrank.rationalizer.denominators import ClearedMatrix, RatioMatrix, clear_denominators, poly_matrix
from signrank.rationalizer.substitution import (
    EntryReport,
    NeedsRefinement,
    Rationalization,
    RationalizationCertificate,
    evaluate,
    rank_at,
    rank_over_function_field,
    rationalize,
    recheck_rationalization,
    refine_window,
)
from signrank.rationalizer.window import Window

__all__ = [
    "ClearedMatrix",
    "RatioMatrix",
    "clear_denominators",
    "poly_matrix",
    "EntryReport",
    "NeedsRefinement",
    "Rationalization",
    "RationalizationCertificate",
    "evaluate",
    "rank_at",
    "rank_over_function_field",
    "rationalize",
    "recheck_rationalization",
    "refine_window",
    "Window",
]
