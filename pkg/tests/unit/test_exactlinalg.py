"""Unit tests for exact matrices, sign patterns and minimum-rank bounds."""

from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
import sympy

from signrank.core.errors import (
    ContextMismatch,
    DimensionMismatch,
    MinorOrderOutOfRange,
    PolynomialSignUndefined,
    SerializationError,
)
from signrank.core.models import SearchBudget
from signrank.exactfield import QQ, FieldContext, Polynomial, QuadraticNumber
from signrank.exactlinalg import (
    ExactMatrix,
    Fill,
    MinrankWitness,
    NotImproved,
    Sign,
    SignPattern,
    all_minors_vanish,
    block_assemble,
    determinant,
    minrank_upper_search,
    rank,
    sgn,
    triangle_lower_bound,
    verify_witness,
)


def _sympy_matrix(rows):
    return sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in rows])


@pytest.mark.unit
class TestExactMatrix:
    """Test rank, determinant and minors over ℚ, ℚ(√5) and ℚ[α]."""

    @pytest.mark.parametrize(
        "rows",
        [
            [[1, 2], [2, 4]],
            [[1, 2, 3], [4, 5, 6], [7, 8, 10]],
            [[0, 0, 0], [0, 0, 0]],
            [[Fraction(1, 2), Fraction(1, 3), 1], [3, 2, 6], [1, 0, -1], [4, 2, 5]],
            [[2, -1, 0, 3], [4, -2, 0, 6], [0, 1, 1, 1]],
        ],
    )
    def test_rank_matches_sympy(self, rows):
        """It should agree with sympy on the exact rank."""
        # Arrange
        m = ExactMatrix.from_rows(rows)

        # Act & Assert
        assert rank(m) == _sympy_matrix(rows).rank()

    @pytest.mark.parametrize(
        "rows",
        [
            [[2, 3], [1, 4]],
            [[0, 1, 2], [3, 0, 5], [7, 8, 0]],
            [[1, 2, 3], [4, 5, 6], [7, 8, 9]],
            [[Fraction(1, 2), 1], [Fraction(-3, 4), Fraction(5, 7)]],
        ],
    )
    def test_determinant_matches_sympy(self, rows):
        """It should reproduce sympy's determinant exactly."""
        expected = _sympy_matrix(rows).det()
        assert determinant(ExactMatrix.from_rows(rows)) == Fraction(int(expected.p), int(expected.q))

    def test_rank_over_quadratic_field(self, q5, golden_ratio):
        """It should see the dependency φ(φ − 1) = 1 in ℚ(√5)."""
        # Arrange
        m = ExactMatrix.from_rows([[golden_ratio, 1], [1, golden_ratio - 1]], q5)

        # Act & Assert
        assert rank(m) == 1
        assert determinant(m) == 0

    def test_rank_over_function_field(self, x):
        """It should compute the rank over ℚ(α) with fraction-free steps."""
        # Arrange
        ring = FieldContext.polynomials(QQ)
        singular = ExactMatrix.from_rows([[x, x * x], [1, x]], ring)
        regular = ExactMatrix.from_rows([[x, 1], [1, x]], ring)

        # Act & Assert
        assert rank(singular) == 1
        assert rank(regular) == 2
        assert determinant(regular) == x * x - 1

    def test_all_minors_vanish_agrees_with_enumeration(self):
        """It should match literal minor expansion and the rank fallback."""
        # Arrange
        rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1], [3, 4, 7]]
        m = ExactMatrix.from_rows(rows)

        # Act
        literal = {
            k: all(
                _sympy_matrix(rows).extract(list(r), list(c)).det() == 0
                for r in combinations(range(4), k)
                for c in combinations(range(3), k)
            )
            for k in (1, 2, 3)
        }

        # Assert
        for k, expected in literal.items():
            assert all_minors_vanish(m, k) == expected
            assert all_minors_vanish(m, k, enumeration_limit=1) == expected

    def test_minor_order_out_of_range(self):
        """It should reject k outside 1..min(m, n)."""
        m = ExactMatrix.identity(2)
        with pytest.raises(MinorOrderOutOfRange):
            all_minors_vanish(m, 3)
        with pytest.raises(MinorOrderOutOfRange):
            all_minors_vanish(m, 0)

    def test_products_check_shapes_and_contexts(self, q5):
        """It should refuse mismatched shapes and mixed contexts."""
        a = ExactMatrix.identity(2)
        with pytest.raises(DimensionMismatch):
            a @ ExactMatrix.zeros(3, 1)
        with pytest.raises(ContextMismatch):
            a @ ExactMatrix.identity(2, q5)

    def test_ragged_grid_is_rejected(self):
        """It should require rectangular entry grids."""
        with pytest.raises(DimensionMismatch):
            ExactMatrix.from_rows([[1, 2], [3]])


@pytest.mark.unit
class TestBlockAssembly:
    """Test assembling block matrices."""

    def test_identity_and_zero_blocks_take_their_size_from_neighbours(self):
        """It should build [[I, C], [D, E]] with a 2×2 identity."""
        # Arrange
        C = ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        D = ExactMatrix.from_rows([[7, 8]])
        E = ExactMatrix.from_rows([[9, 10, 11]])

        # Act
        B = block_assemble([[Fill.IDENTITY, C], [D, E]])
        A = block_assemble([[Fill.ZERO, B], [B.T, Fill.ZERO]])

        # Assert
        assert B.entries[0] == (1, 0, 1, 2, 3)
        assert B.entries[2] == (7, 8, 9, 10, 11)
        assert A.shape == (8, 8)
        assert A.is_symmetric()
        assert rank(A) == 2 * rank(B)

    def test_undetermined_sizes_are_rejected(self):
        """It should need a concrete block in every block row and column."""
        with pytest.raises(DimensionMismatch):
            block_assemble([[Fill.ZERO, Fill.IDENTITY]])

    def test_non_square_identity_is_rejected(self):
        """It should refuse an identity block that is not square."""
        C = ExactMatrix.from_rows([[1], [2]])
        D = ExactMatrix.from_rows([[1, 2, 3]])
        with pytest.raises(DimensionMismatch):
            block_assemble([[Fill.IDENTITY, C], [D, Fill.ZERO]])


@pytest.mark.unit
class TestSignPatterns:
    """Test the sign map and pattern parsing."""

    def test_sgn_over_quadratic_field(self, q5):
        """It should take exact signs of a + b√5 entries."""
        # Arrange
        m = ExactMatrix.from_rows(
            [[QuadraticNumber(Fraction(2), Fraction(-1), 5), 0], [QuadraticNumber(Fraction(3), Fraction(-1), 5), -1]],
            q5,
        )

        # Act
        pattern = sgn(m)

        # Assert
        assert pattern.to_strings() == ["-0", "+-"]
        assert pattern.zero_positions() == [(0, 1)]

    def test_sgn_needs_a_field(self, x):
        """It should refuse to take signs of polynomial entries."""
        m = ExactMatrix.from_rows([[x]], FieldContext.polynomials(QQ))
        with pytest.raises(PolynomialSignUndefined):
            sgn(m)

    def test_pattern_parsing(self):
        """It should accept the '+-0' alphabet only."""
        pattern = SignPattern.from_strings(["+-", "0+"])
        assert pattern[1, 0] is Sign.ZERO
        assert pattern.T.to_strings() == ["+0", "-+"]
        with pytest.raises(SerializationError):
            SignPattern.from_strings(["+x"])
        with pytest.raises(DimensionMismatch):
            SignPattern.from_strings(["++", "+"])

    def test_sign_matrix_is_in_its_class(self):
        """It should give a ±1/0 member of the pattern's sign class."""
        pattern = SignPattern.from_strings(["+-0", "0-+"])
        assert sgn(pattern.sign_matrix()) == pattern


@pytest.mark.unit
class TestMinrankBounds:
    """Test the triangle lower bound and the randomized upper bound."""

    @pytest.mark.parametrize(
        "rows, expected",
        [
            (["+00", "0+0", "00+"], 3),
            (["++++"] * 4, 1),
            (["+00", "++0", "+++"], 3),
            (["+-", "-+"], 1),
            (["0+", "+0"], 2),
            (["+0+", "0+0", "+0+"], 2),
        ],
    )
    def test_triangle_lower_bound(self, rows, expected):
        """It should find the largest triangular submatrix with nonzero diagonal."""
        assert triangle_lower_bound(SignPattern.from_strings(rows)) == expected

    def test_identity_bounds_meet(self):
        """It should return the identity itself as a rank-3 witness."""
        # Arrange
        pattern = SignPattern.from_strings(["+00", "0+0", "00+"])

        # Act
        result = minrank_upper_search(pattern, SearchBudget(seed=1))

        # Assert
        assert isinstance(result, MinrankWitness)
        assert result.rank == 3 == triangle_lower_bound(pattern)

    def test_all_plus_has_rank_one(self):
        """It should report the all-ones matrix for an all-plus pattern."""
        result = minrank_upper_search(SignPattern.from_strings(["++++"] * 4), SearchBudget(seed=1))
        assert isinstance(result, MinrankWitness)
        assert result.rank == 1
        assert verify_witness(result)

    def test_rank_one_impossible_pattern_is_not_improved(self):
        """It should return NotImproved when no rank-1 member exists."""
        # Arrange
        pattern = SignPattern.from_strings(["++", "+-"])

        # Act
        result = minrank_upper_search(pattern, SearchBudget(seed=3, restarts=2, iterations=2))

        # Assert
        assert isinstance(result, NotImproved)
        assert result.baseline.rank == 2
        assert result.attempted_ranks == (1,)
        assert verify_witness(result.baseline)

    def test_search_finds_rank_two_below_the_sign_matrix(self):
        """It should find a rank-2 member although the ±1 matrix has rank 3."""
        # Arrange
        pattern = sgn(ExactMatrix.from_rows([[5, 3, 1], [3, 1, -1], [1, -1, -3]]))
        assert rank(pattern.sign_matrix()) == 3

        # Act
        result = minrank_upper_search(pattern, SearchBudget(seed=7, restarts=30, iterations=4))

        # Assert
        assert isinstance(result, MinrankWitness)
        assert result.rank == 2
        assert verify_witness(result)

    @pytest.mark.slow
    def test_default_budget_recovers_rank_two(self):
        """It should find a witness of rank at most 2 for the signs of 100 random rank-2 matrices."""
        rng = np.random.default_rng(2)
        for _ in range(100):
            # Arrange
            rows, cols = (int(n) for n in rng.integers(3, 7, size=2))
            B = ExactMatrix.zeros(rows, cols)
            while rank(B) != 2:
                left = rng.integers(-5, 6, size=(rows, 2))
                right = rng.integers(-5, 6, size=(2, cols))
                B = ExactMatrix.from_rows((left @ right).tolist())
            pattern = sgn(B)

            # Act
            result = minrank_upper_search(pattern, SearchBudget())

            # Assert
            assert isinstance(result, MinrankWitness), pattern.to_strings()
            assert triangle_lower_bound(pattern) <= result.rank <= 2
            assert verify_witness(result)

    def test_search_is_deterministic_given_the_seed(self):
        """It should return the same witness for the same seed."""
        pattern = sgn(ExactMatrix.from_rows([[5, 3, 1], [3, 1, -1], [1, -1, -3]]))
        budget = SearchBudget(seed=11, restarts=30, iterations=4)
        assert minrank_upper_search(pattern, budget) == minrank_upper_search(pattern, budget)

    def test_verify_witness_rejects_false_claims(self):
        """It should recompute sgn and rank rather than trust the claim."""
        pattern = SignPattern.from_strings(["++", "++"])
        ones = pattern.sign_matrix()
        assert not verify_witness(MinrankWitness(pattern, ones, 2))
        assert not verify_witness(MinrankWitness(SignPattern.from_strings(["+-", "++"]), ones, 1))
        assert verify_witness(MinrankWitness(pattern, ones, 1))
