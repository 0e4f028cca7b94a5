"""Turning a matrix of polynomial ratios into a polynomial matrix."""

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Optional, Sequence, Tuple

from signrank.core.errors import DimensionMismatch, EndpointIsRoot, ZeroDenominator
from signrank.exactfield import QQ, FieldContext, Polynomial, sign, sturm_root_count
from signrank.exactlinalg import ExactMatrix
from signrank.rationalizer.window import Window

logger = logging.getLogger(__name__)

Ratio = Tuple[Polynomial, Polynomial]


def poly_matrix(rows: Sequence[Sequence[object]], base: FieldContext = QQ) -> ExactMatrix:
    """A matrix over F[α]; plain scalars become constant polynomials."""
    return ExactMatrix.from_rows(rows, FieldContext.polynomials(base))


@dataclass(frozen=True)
class RatioMatrix:
    """Entries numerator/denominator over one base field."""
    base: FieldContext
    entries: Tuple[Tuple[Ratio, ...], ...]

    def __post_init__(self) -> None:
        context = FieldContext.polynomials(self.base)
        grid = tuple(
            tuple((context.coerce(num), context.coerce(den)) for num, den in row) for row in self.entries
        )
        if not grid or not grid[0] or any(len(row) != len(grid[0]) for row in grid):
            raise DimensionMismatch("ratio grid must be rectangular and nonempty")
        object.__setattr__(self, "entries", grid)

    @classmethod
    def from_polynomials(cls, matrix: ExactMatrix) -> "RatioMatrix":
        one = Polynomial.constant(1, matrix.context.base)
        return cls(matrix.context.base, tuple(tuple((p, one) for p in row) for row in matrix.entries))


@dataclass(frozen=True)
class ClearedMatrix:
    """``matrix`` = multiplier · M entrywise; the multiplier is positive on the window when one was given."""
    matrix: ExactMatrix
    multiplier: Polynomial


def clear_denominators(m: RatioMatrix, window: Optional[Window] = None) -> ClearedMatrix:
    """Multiply by the lcm of all denominators, sign-fixed to be positive on ``window``."""
    denominators = [den for row in m.entries for _, den in row]
    if any(den.is_zero for den in denominators):
        raise ZeroDenominator("a ratio has the zero polynomial as denominator")
    multiplier = reduce(lambda a, b: a.lcm(b), denominators).monic()
    if window is not None:
        try:
            roots = sturm_root_count(multiplier, window.lo, window.hi)
        except EndpointIsRoot as exc:
            raise ZeroDenominator(f"a denominator vanishes at the window endpoint {exc.endpoint}") from exc
        if roots:
            raise ZeroDenominator(f"a denominator vanishes inside {window}")
        if sign(multiplier(window.midpoint)) < 0:
            multiplier = -multiplier
    logger.debug("clearing denominators with multiplier %s", multiplier)
    rows = [[num * multiplier.exact_div(den) for num, den in row] for row in m.entries]
    return ClearedMatrix(poly_matrix(rows, m.base), multiplier)
