"""Sign-preserving substitution α ↦ β for matrices over F[α].

The substitution is a ring homomorphism F[α] → F, so every minor that
vanishes over F(α) still vanishes after it; a root-free window makes each
entry's sign constant, so β anywhere inside keeps the sign pattern.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Tuple, Union

from signrank.core.errors import ContextMismatch, SignRankError
from signrank.exactfield import sign, sturm_root_count
from signrank.exactlinalg import ExactMatrix, all_minors_vanish, rank
from signrank.rationalizer.window import Window

logger = logging.getLogger(__name__)

Entry = Tuple[int, int]


@dataclass(frozen=True)
class EntryReport:
    row: int
    col: int
    root_count: int
    sign_at_beta: int


@dataclass(frozen=True)
class RationalizationCertificate:
    """Evidence that M* = M(β) keeps the sign pattern and does not raise the rank."""
    beta: Fraction
    window: Window
    per_entry: Tuple[EntryReport, ...]
    rank_before: int
    rank_after: int


@dataclass(frozen=True)
class Rationalization:
    matrix: ExactMatrix
    certificate: RationalizationCertificate


@dataclass(frozen=True)
class NeedsRefinement:
    """Entries with a root in the window (or on its boundary); shrink and retry."""
    window: Window
    entries: Tuple[Entry, ...]
    reason: str = "roots in window"


RationalizeResult = Union[Rationalization, NeedsRefinement]


def _require_polynomial(m: ExactMatrix) -> None:
    if m.context.kind != "PolyOver":
        raise ContextMismatch(f"expected a matrix over F[α], got {m.context}")


def rank_over_function_field(m: ExactMatrix) -> int:
    """Rank over F(α) by fraction-free elimination with polynomial pivots."""
    _require_polynomial(m)
    return rank(m)


def evaluate(m: ExactMatrix, beta: Any) -> ExactMatrix:
    """Entrywise P_ij(β), landing in the base field."""
    _require_polynomial(m)
    base = m.context.base
    return m.map(lambda p: base.coerce(p(beta)), base)


def rank_at(m: ExactMatrix, beta: Any) -> int:
    return rank(evaluate(m, beta))


def _nonzero_entries(m: ExactMatrix):
    for i in range(m.rows):
        for j in range(m.cols):
            if not m[i, j].is_zero:
                yield i, j, m[i, j]


def rationalize(m: ExactMatrix, w: Window) -> RationalizeResult:
    """β = midpoint of a root-free window; both guarantees are re-verified."""
    _require_polynomial(m)
    on_boundary = []
    inside = []
    counts = {}
    for i, j, p in _nonzero_entries(m):
        if p(w.lo) == 0 or p(w.hi) == 0:
            on_boundary.append((i, j))
            continue
        counts[i, j] = sturm_root_count(p, w.lo, w.hi)
        if counts[i, j]:
            inside.append((i, j))
    if on_boundary:
        return NeedsRefinement(w, tuple(on_boundary), "endpoint")
    if inside:
        logger.debug("entries %s have roots in %s", inside, w)
        return NeedsRefinement(w, tuple(inside))

    beta = w.midpoint
    star = evaluate(m, beta)
    reports = []
    for i, j, p in _nonzero_entries(m):
        s = sign(star[i, j])
        if s == 0 or s != sign(p(w.lo)):
            raise SignRankError(f"entry ({i}, {j}) changed sign inside a root-free window")
        reports.append(EntryReport(i, j, counts[i, j], s))
    for i in range(m.rows):
        for j in range(m.cols):
            if m[i, j].is_zero and not star.context.is_zero(star[i, j]):
                raise SignRankError(f"zero entry ({i}, {j}) became nonzero")
    before = rank_over_function_field(m)
    after = rank(star)
    if after > before or (before < min(m.rows, m.cols) and not all_minors_vanish(star, before + 1)):
        raise SignRankError(f"substitution raised the rank from {before} to {after}")
    return Rationalization(star, RationalizationCertificate(beta, w, tuple(reports), before, after))


def recheck_rationalization(
    certificate: RationalizationCertificate,
    evaluated: ExactMatrix,
    source: Optional[ExactMatrix] = None,
) -> bool:
    """Recompute a rationalization certificate against M* and, when given, the matrix over F[α].

    Signs, root counts and ranks are recomputed; only β and the window are
    taken from the certificate.
    """
    w = certificate.window
    if not w.contains(certificate.beta):
        logger.debug("β = %s lies outside %s", certificate.beta, w)
        return False
    if certificate.rank_after > certificate.rank_before or rank(evaluated) != certificate.rank_after:
        logger.debug("recorded ranks %d → %d do not hold", certificate.rank_before, certificate.rank_after)
        return False
    reports = {(e.row, e.col): e for e in certificate.per_entry}
    matched = 0
    for i in range(evaluated.rows):
        for j in range(evaluated.cols):
            s = sign(evaluated[i, j])
            report = reports.get((i, j))
            if report is None:
                if s != 0:
                    logger.debug("entry (%d, %d) is nonzero but has no report", i, j)
                    return False
                continue
            matched += 1
            if s == 0 or s != report.sign_at_beta or report.root_count:
                logger.debug("entry (%d, %d) disagrees with its report", i, j)
                return False
    if matched != len(certificate.per_entry):
        logger.debug("certificate reports entries outside the matrix")
        return False
    if source is None:
        return True

    _require_polynomial(source)
    if source.shape != evaluated.shape or evaluate(source, certificate.beta) != evaluated:
        logger.debug("M* is not the source matrix at β = %s", certificate.beta)
        return False
    for i, j, p in _nonzero_entries(source):
        if p(w.lo) == 0 or p(w.hi) == 0 or sturm_root_count(p, w.lo, w.hi):
            logger.debug("entry (%d, %d) has a root in or on %s", i, j, w)
            return False
    return rank_over_function_field(source) == certificate.rank_before


def refine_window(
    m: ExactMatrix,
    w: Window,
    anchor: Optional[Fraction] = None,
    max_steps: int = 64,
) -> RationalizeResult:
    """Shrink ``w`` around ``anchor`` (default: its midpoint) until rationalize succeeds.

    Terminates whenever the anchor is not a root of any nonzero entry.
    """
    anchor = w.midpoint if anchor is None else Fraction(anchor)
    result = rationalize(m, w)
    for step in range(max_steps):
        if isinstance(result, Rationalization):
            return result
        w = w.shrink_around(anchor)
        logger.debug("refinement step %d: %s", step + 1, w)
        result = rationalize(m, w)
    return result
