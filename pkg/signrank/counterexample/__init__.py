"""The nine-point counterexample bundle: construction, verification, storage."""

from signrank.counterexample.bundle import (
    PATTERN_NAMES,
    CounterexampleBundle,
    assemble_matrices,
    build_bundle,
    construct_bundle,
    normalize_affine,
    sign_pattern_suite,
    verify_bundle,
)
from signrank.counterexample.storage import BUNDLE_FILES, FIGURE_FILE, load_bundle, write_bundle, write_report

__all__ = [
    "PATTERN_NAMES",
    "CounterexampleBundle",
    "assemble_matrices",
    "build_bundle",
    "construct_bundle",
    "normalize_affine",
    "sign_pattern_suite",
    "verify_bundle",
    "BUNDLE_FILES",
    "FIGURE_FILE",
    "load_bundle",
    "write_bundle",
    "write_report",
]
