"""Exact matrices over one FieldContext: rank, minors, block assembly."""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import Any, Callable, List, Optional, Sequence, Tuple, Union

from signrank.core.config import settings
from signrank.core.errors import ContextMismatch, DimensionMismatch, MinorOrderOutOfRange
from signrank.exactfield import QQ, FieldContext, Polynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExactMatrix:
    """rows × cols grid of exact scalars, all in ``context``."""
    context: FieldContext
    entries: Tuple[Tuple[Any, ...], ...]

    def __post_init__(self) -> None:
        grid = tuple(tuple(self.context.coerce(x) for x in row) for row in self.entries)
        if not grid or not grid[0]:
            raise DimensionMismatch("matrices need at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise DimensionMismatch("ragged entry grid")
        object.__setattr__(self, "entries", grid)

    # -- constructors ---------------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], context: FieldContext = QQ) -> "ExactMatrix":
        return cls(context, tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, n: int, context: FieldContext = QQ) -> "ExactMatrix":
        return cls(context, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int, context: FieldContext = QQ) -> "ExactMatrix":
        return cls(context, tuple((0,) * cols for _ in range(rows)))

    # -- shape and access -----------------------------------------------------
    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Any:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[Any, ...]:
        return self.entries[i]

    def column(self, j: int) -> Tuple[Any, ...]:
        return tuple(row[j] for row in self.entries)

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(self.context, tuple(zip(*self.entries)))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(self.context, tuple(tuple(self.entries[i][j] for j in col_idx) for i in row_idx))

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "ExactMatrix":
        return self.submatrix(row_perm, col_perm)

    def map(self, fn: Callable[[Any], Any], context: Optional[FieldContext] = None) -> "ExactMatrix":
        return ExactMatrix(context or self.context, tuple(tuple(fn(x) for x in row) for row in self.entries))

    def with_entry(self, i: int, j: int, value: Any) -> "ExactMatrix":
        grid = [list(row) for row in self.entries]
        grid[i][j] = value
        return ExactMatrix(self.context, tuple(tuple(row) for row in grid))

    def nonzero_count(self) -> int:
        return sum(1 for row in self.entries for x in row if not self.context.is_zero(x))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.T

    # -- arithmetic -----------------------------------------------------------
    def _check_context(self, other: "ExactMatrix") -> None:
        if other.context != self.context:
            raise ContextMismatch(f"{self.context} vs {other.context}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_context(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return ExactMatrix(
            self.context,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "ExactMatrix":
        return self.map(lambda x: -x)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_context(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        zero = self.context.zero()
        columns = list(zip(*other.entries))
        grid = []
        for row in self.entries:
            out = []
            for col in columns:
                acc = zero
                for a, b in zip(row, col):
                    acc = acc + a * b
                out.append(acc)
            grid.append(tuple(out))
        return ExactMatrix(self.context, tuple(grid))

    def scale(self, factor: Any) -> "ExactMatrix":
        factor = self.context.coerce(factor)
        return self.map(lambda x: x * factor)

    def nullspace(self) -> List[Tuple[Any, ...]]:
        """Basis of {v : M v = 0} from the reduced row echelon form (fields only)."""
        if self.context.kind == "PolyOver":
            raise ContextMismatch("nullspace is computed over fields only")
        grid = [list(row) for row in self.entries]
        pivots: List[int] = []
        r = 0
        for c in range(self.cols):
            pivot = next((i for i in range(r, self.rows) if grid[i][c] != 0), None)
            if pivot is None:
                continue
            grid[r], grid[pivot] = grid[pivot], grid[r]
            inv = grid[r][c]
            grid[r] = [x / inv for x in grid[r]]
            for i in range(self.rows):
                if i != r and grid[i][c] != 0:
                    f = grid[i][c]
                    grid[i] = [a - f * b for a, b in zip(grid[i], grid[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        basis = []
        zero, one = self.context.zero(), self.context.one()
        for free in (c for c in range(self.cols) if c not in pivots):
            v = [zero] * self.cols
            v[free] = one
            for row_index, pc in enumerate(pivots):
                v[pc] = -grid[row_index][free]
            basis.append(tuple(v))
        return basis


# -- fraction-free elimination ------------------------------------------------

def _weight(x: Any) -> int:
    if isinstance(x, Polynomial):
        return x.degree
    if isinstance(x, Fraction):
        return x.numerator.bit_length() + x.denominator.bit_length()
    if isinstance(x, int):
        return x.bit_length()
    return 0


def _integer_rows(m: ExactMatrix) -> List[List[int]]:
    """Scale each row of a rational matrix to integers (rank-preserving)."""
    out = []
    for row in m.entries:
        scale = lcm(*(x.denominator for x in row))
        out.append([int(x * scale) for x in row])
    return out


def _nonzero(x: Any) -> bool:
    if isinstance(x, Polynomial):
        return not x.is_zero
    return x != 0


def _find_pivot(grid: List[List[Any]], k: int) -> Optional[Tuple[int, int]]:
    best: Optional[Tuple[int, int]] = None
    best_weight = 0
    for i in range(k, len(grid)):
        for j in range(k, len(grid[0])):
            x = grid[i][j]
            if not _nonzero(x):
                continue
            w = _weight(x)
            if best is None or w < best_weight:
                best, best_weight = (i, j), w
                if w <= 0:
                    return best
    return best


def _bareiss(grid: List[List[Any]], one: Any, exact_div: Callable[[Any, Any], Any]) -> Tuple[int, int, Any]:
    """Bareiss elimination with full pivoting.

    Returns (rank, permutation sign, last pivot); for a square nonsingular
    input the determinant is sign · last pivot.
    """
    n_rows, n_cols = len(grid), len(grid[0])
    zero = one * 0
    prev: Any = one
    perm_sign = 1
    rank = 0
    for k in range(min(n_rows, n_cols)):
        found = _find_pivot(grid, k)
        if found is None:
            break
        pi, pj = found
        if pi != k:
            grid[k], grid[pi] = grid[pi], grid[k]
            perm_sign = -perm_sign
        if pj != k:
            for row in grid:
                row[k], row[pj] = row[pj], row[k]
            perm_sign = -perm_sign
        pivot = grid[k][k]
        row_k = grid[k]
        for i in range(k + 1, n_rows):
            row_i = grid[i]
            lead = row_i[k]
            for j in range(k + 1, n_cols):
                row_i[j] = exact_div(row_i[j] * pivot - lead * row_k[j], prev)
            row_i[k] = zero
        prev = pivot
        rank += 1
    return rank, perm_sign, prev


def _elimination_input(m: ExactMatrix) -> Tuple[List[List[Any]], Any, Callable[[Any, Any], Any]]:
    if m.context.kind == "Q":
        return _integer_rows(m), 1, lambda a, b: a // b
    return [list(row) for row in m.entries], m.context.one(), m.context.exact_div


def rank(m: ExactMatrix) -> int:
    """Exact rank; over F[α] this is the rank over the fraction field F(α)."""
    grid, one, div = _elimination_input(m)
    r, _, _ = _bareiss(grid, one, div)
    return r


def determinant(m: ExactMatrix) -> Any:
    if m.rows != m.cols:
        raise DimensionMismatch(f"determinant of a {m.rows}×{m.cols} matrix")
    grid = [list(row) for row in m.entries]
    r, perm_sign, last = _bareiss(grid, m.context.one(), m.context.exact_div)
    if r < m.rows:
        return m.context.zero()
    return last if perm_sign > 0 else -last


def all_minors_vanish(m: ExactMatrix, k: int, enumeration_limit: Optional[int] = None) -> bool:
    """True iff every k×k minor of ``m`` is zero.

    Minors are enumerated literally while their count stays under the
    configured limit; beyond it the equivalent test rank(m) < k is used.
    """
    if not 1 <= k <= min(m.rows, m.cols):
        raise MinorOrderOutOfRange(f"k={k} outside 1..{min(m.rows, m.cols)}")
    limit = enumeration_limit or settings.minor_enumeration_limit
    count = comb(m.rows, k) * comb(m.cols, k)
    if count > limit:
        logger.debug("%d minors of order %d exceed the enumeration limit; using rank", count, k)
        return rank(m) < k
    for row_idx in combinations(range(m.rows), k):
        for col_idx in combinations(range(m.cols), k):
            if not m.context.is_zero(determinant(m.submatrix(row_idx, col_idx))):
                return False
    return True


# -- block assembly -------------------------------------------------------------

class Fill(str, Enum):
    """Named blocks whose size is inferred from their block row and column."""
    ZERO = "zero"
    IDENTITY = "identity"


Block = Union[ExactMatrix, Fill]


def block_assemble(blocks: Sequence[Sequence[Block]]) -> ExactMatrix:
    """Assemble a grid of blocks (e.g. [[I₃, C], [D, E]]) into one matrix."""
    if not blocks or not blocks[0] or any(len(r) != len(blocks[0]) for r in blocks):
        raise DimensionMismatch("block grid must be rectangular and nonempty")
    concrete = [b for row in blocks for b in row if isinstance(b, ExactMatrix)]
    if not concrete:
        raise DimensionMismatch("at least one concrete block is needed to fix sizes")
    context = concrete[0].context
    for b in concrete:
        if b.context != context:
            raise ContextMismatch(f"{b.context} vs {context}")

    def size(values: List[Optional[int]], what: str, index: int) -> int:
        known = {v for v in values if v is not None}
        if len(known) != 1:
            raise DimensionMismatch(f"block {what} {index} has sizes {sorted(known) or 'undetermined'}")
        return known.pop()

    heights = [
        size([b.rows if isinstance(b, ExactMatrix) else None for b in row], "row", i)
        for i, row in enumerate(blocks)
    ]
    widths = [
        size([row[j].cols if isinstance(row[j], ExactMatrix) else None for row in blocks], "column", j)
        for j in range(len(blocks[0]))
    ]
    grid: List[List[Any]] = []
    for bi, row in enumerate(blocks):
        for r in range(heights[bi]):
            out: List[Any] = []
            for bj, block in enumerate(row):
                if isinstance(block, ExactMatrix):
                    out.extend(block.entries[r])
                elif block is Fill.IDENTITY:
                    if heights[bi] != widths[bj]:
                        raise DimensionMismatch(f"identity block {heights[bi]}×{widths[bj]} is not square")
                    out.extend(1 if r == c else 0 for c in range(widths[bj]))
                else:
                    out.extend([0] * widths[bj])
            grid.append(out)
    return ExactMatrix.from_rows(grid, context)
