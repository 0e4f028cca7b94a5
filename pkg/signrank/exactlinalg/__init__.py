"""Exact matrices, sign patterns and elementary minimum-rank bounds."""

from signrank.exactlinalg.matrix import (
    Block,
    ExactMatrix,
    Fill,
    all_minors_vanish,
    block_assemble,
    determinant,
    rank,
)
from signrank.exactlinalg.minrank import (
    MinrankWitness,
    NotImproved,
    minrank_upper_search,
    triangle_lower_bound,
    verify_witness,
)
from signrank.exactlinalg.patterns import Sign, SignPattern, sgn

__all__ = [
    "Block",
    "ExactMatrix",
    "Fill",
    "all_minors_vanish",
    "block_assemble",
    "determinant",
    "rank",
    "MinrankWitness",
    "NotImproved",
    "minrank_upper_search",
    "triangle_lower_bound",
    "verify_witness",
    "Sign",
    "SignPattern",
    "sgn",
]
