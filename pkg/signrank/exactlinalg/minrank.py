"""Elementary bounds on the minimum rank of a sign pattern.

Lower bound: largest permuted-triangular submatrix with nonzero diagonal.
Upper bound: seeded alternating search for low-rank factorizations W·H whose
product has the required sign pattern, verified in exact arithmetic.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import linprog

from signrank.core.models import SearchBudget
from signrank.exactfield import QQ
from signrank.exactlinalg.matrix import ExactMatrix, rank
from signrank.exactlinalg.patterns import Sign, SignPattern, sgn

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinrankWitness:
    """A matrix in the sign class of ``pattern`` together with its claimed rank."""
    pattern: SignPattern
    witness: ExactMatrix
    rank: int


@dataclass(frozen=True)
class NotImproved:
    """The search found nothing below the generic full-rank realization."""
    pattern: SignPattern
    baseline: MinrankWitness
    attempted_ranks: Tuple[int, ...] = field(default_factory=tuple)


SearchResult = Union[MinrankWitness, NotImproved]


def verify_witness(w: MinrankWitness) -> bool:
    """Recompute sgn and rank; both must match the stored claims."""
    if not w.witness.context.admits_sign:
        return False
    return sgn(w.witness) == w.pattern and rank(w.witness) == w.rank


def triangle_lower_bound(pattern: SignPattern) -> int:
    """Size of the largest submatrix permutable to triangular form with nonzero diagonal.

    Picking row i with a nonzero in the surviving column set C leaves
    C ∩ zeros(i) for the rows still to come; row i can never be picked again,
    so the search state is the column set alone.
    """
    n_cols = pattern.cols
    zero_masks = []
    for row in pattern.entries:
        mask = 0
        for j, x in enumerate(row):
            if x is Sign.ZERO:
                mask |= 1 << j
        zero_masks.append(mask)
    full = (1 << n_cols) - 1

    @lru_cache(maxsize=None)
    def best(columns: int) -> int:
        children = {columns & z for z in zero_masks if columns & ~z & full}
        result = 0
        for child in sorted(children, key=lambda c: (-bin(c).count("1"), c)):
            if 1 + bin(child).count("1") <= result:
                continue
            result = max(result, 1 + best(child))
        return result

    return best(full)


# -- randomized upper-bound search --------------------------------------------------

def _exact_signs_hold(W: List[List[Fraction]], h: List[Fraction], pattern_col: Sequence[Sign]) -> bool:
    for w, want in zip(W, pattern_col):
        value = sum((a * b for a, b in zip(w, h)), Fraction(0))
        if Sign.of((value > 0) - (value < 0)) is not want:
            return False
    return True


def _rationalize(vector: np.ndarray, bound: int) -> List[Fraction]:
    peak = float(np.max(np.abs(vector))) if vector.size else 0.0
    if peak == 0.0:
        return [Fraction(0)] * len(vector)
    return [Fraction(float(x) / peak).limit_denominator(bound) for x in vector]


def _solve_column(W: List[List[Fraction]], pattern_col: Sequence[Sign], bound: int) -> Tuple[List[Fraction], bool]:
    """Find h with sgn(W h) = pattern_col: zeros exactly, strict signs by a margin LP."""
    r = len(W[0])
    zero_rows = [w for w, s in zip(W, pattern_col) if s is Sign.ZERO]
    strict = [(w, s.value_int) for w, s in zip(W, pattern_col) if s is not Sign.ZERO]
    if zero_rows:
        basis = ExactMatrix.from_rows(zero_rows, QQ).nullspace()
    else:
        basis = [tuple(Fraction(int(i == j)) for j in range(r)) for i in range(r)]
    if not basis or not strict:
        h = [Fraction(0)] * r
        return h, not strict
    N = np.array([[float(x) for x in b] for b in basis]).T  # r × k
    G = np.array([[s * float(v) for v in np.array([float(x) for x in w]) @ N] for w, s in strict])
    k = N.shape[1]
    c = np.zeros(k + 1)
    c[-1] = -1.0
    A_ub = np.hstack([-G, np.ones((len(strict), 1))])
    res = linprog(c, A_ub=A_ub, b_ub=np.zeros(len(strict)), bounds=[(-1, 1)] * k + [(None, 1)], method="highs")
    if not res.success:
        return [Fraction(0)] * r, False
    y = res.x[:k]
    for denominator in (bound, bound * bound, 10**6):
        coords = _rationalize(y, denominator)
        h = [sum((coords[t] * basis[t][i] for t in range(k)), Fraction(0)) for i in range(r)]
        if _exact_signs_hold(W, h, pattern_col):
            return h, True
    return h, False


def _solve_side(W: List[List[Fraction]], pattern: SignPattern, bound: int) -> Tuple[List[List[Fraction]], bool]:
    """Columns h_j for every pattern column; returns H as a list of columns."""
    columns, feasible = [], True
    for j in range(pattern.cols):
        h, ok = _solve_column(W, [pattern[i, j] for i in range(pattern.rows)], bound)
        columns.append(h)
        feasible = feasible and ok
    return columns, feasible


def _initial_factor(pattern: SignPattern, r: int, attempt: int, rng: np.random.Generator, bound: int) -> List[List[Fraction]]:
    S = np.array([[x.value_int for x in row] for row in pattern.entries], dtype=float)
    if attempt == 0:
        U, s, _ = np.linalg.svd(S, full_matrices=False)
        W0 = U[:, :r] * np.sqrt(s[:r])
    else:
        W0 = rng.standard_normal((pattern.rows, r))
    peak = float(np.max(np.abs(W0))) or 1.0
    ints = np.rint(W0 / peak * bound).astype(int)
    return [[Fraction(int(x)) for x in row] for row in ints]


def _product(W: List[List[Fraction]], H_columns: List[List[Fraction]]) -> ExactMatrix:
    rows = [[sum((a * b for a, b in zip(w, h)), Fraction(0)) for h in H_columns] for w in W]
    return ExactMatrix.from_rows(rows, QQ)


def _search_rank(pattern: SignPattern, r: int, budget: SearchBudget, rng: np.random.Generator) -> Optional[ExactMatrix]:
    for attempt in range(budget.restarts):
        W = _initial_factor(pattern, r, attempt, rng, budget.entry_bound)
        for _ in range(budget.iterations):
            H_columns, ok = _solve_side(W, pattern, budget.entry_bound)
            if ok:
                candidate = _product(W, H_columns)
                if sgn(candidate) == pattern:
                    return candidate
            W_columns, ok = _solve_side(H_columns, pattern.T, budget.entry_bound)
            W = W_columns
            if ok:
                candidate = _product(W, H_columns)
                if sgn(candidate) == pattern:
                    return candidate
    return None


def minrank_upper_search(pattern: SignPattern, budget: Optional[SearchBudget] = None) -> SearchResult:
    """Best low-rank rational witness found for ``pattern`` within ``budget``.

    The ±1/0 sign matrix is the baseline. NotImproved is returned when the
    best witness is full rank while the triangle bound leaves room below it.
    """
    budget = budget or SearchBudget.from_settings()
    rng = np.random.default_rng(budget.seed)
    baseline_matrix = pattern.sign_matrix()
    baseline = MinrankWitness(pattern, baseline_matrix, rank(baseline_matrix))
    lower = triangle_lower_bound(pattern)
    ceiling = baseline.rank - 1
    if budget.max_rank is not None:
        ceiling = min(ceiling, budget.max_rank)
    attempted = []
    for r in range(max(lower, 1), ceiling + 1):
        attempted.append(r)
        logger.debug("searching rank %d witnesses for a %d×%d pattern", r, pattern.rows, pattern.cols)
        found = _search_rank(pattern, r, budget, rng)
        if found is not None:
            witness = MinrankWitness(pattern, found, rank(found))
            logger.info("found rank %d witness (lower bound %d)", witness.rank, lower)
            return witness
    full_rank = min(pattern.rows, pattern.cols)
    if baseline.rank == full_rank and lower < full_rank:
        return NotImproved(pattern, baseline, tuple(attempted))
    return baseline
