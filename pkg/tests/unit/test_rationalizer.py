"""Unit tests for windows, denominator clearing and rational substitution."""

from dataclasses import replace
from fractions import Fraction

import pytest

from signrank.core.errors import ContextMismatch, DimensionMismatch, ZeroDenominator
from signrank.exactfield import QQ
from signrank.exactlinalg import ExactMatrix, sgn
from signrank.rationalizer import (
    NeedsRefinement,
    RatioMatrix,
    Rationalization,
    Window,
    clear_denominators,
    evaluate,
    poly_matrix,
    rank_at,
    rank_over_function_field,
    rationalize,
    recheck_rationalization,
    refine_window,
)


@pytest.fixture
def golden_row(x, golden_polynomial):
    """[[x, x² − x − 1]], which changes sign only at 1 − φ and φ."""
    return poly_matrix([[x, golden_polynomial]])


@pytest.mark.unit
class TestWindow:
    """Test rational windows."""

    def test_bounds_must_be_ordered(self):
        """It should reject empty and reversed windows."""
        with pytest.raises(ValueError):
            Window.of(2, 1)
        with pytest.raises(ValueError):
            Window.of("1/2", "1/2")

    def test_midpoint_and_membership(self):
        """It should treat the window as open."""
        w = Window.of("3/2", "8/5")
        assert w.midpoint == Fraction(31, 20)
        assert w.width == Fraction(1, 10)
        assert w.contains(Fraction(31, 20))
        assert not w.contains(Fraction(3, 2))
        assert str(w) == "(3/2, 8/5)"

    def test_shrink_around(self):
        """It should halve the left part and keep a third of the right part."""
        # Act
        shrunk = Window.of(1, 2).shrink_around(Fraction(3, 2))

        # Assert
        assert shrunk == Window.of("5/4", "5/3")
        with pytest.raises(ValueError):
            Window.of(1, 2).shrink_around(Fraction(2))


@pytest.mark.unit
class TestClearDenominators:
    """Test turning polynomial ratios into polynomials."""

    @pytest.fixture
    def ratios(self, x):
        return RatioMatrix(QQ, (((x, x - 3), (1, 1)),))

    def test_multiplier_is_positive_on_the_window(self, x, ratios):
        """It should flip the monic lcm x − 3 to 3 − x on (0, 1)."""
        # Act
        cleared = clear_denominators(ratios, Window.of(0, 1))

        # Assert
        assert cleared.multiplier == -x + 3
        assert cleared.matrix == poly_matrix([[-x, -x + 3]])

    def test_signs_survive_clearing(self, ratios):
        """It should keep the sign of every ratio at points of the window."""
        # Arrange
        cleared = clear_denominators(ratios, Window.of(0, 1))

        # Act
        star = evaluate(cleared.matrix, Fraction(1, 2))

        # Assert
        assert sgn(star).to_strings() == ["-+"]

    def test_without_a_window_the_multiplier_is_monic(self, x, ratios):
        """It should return the plain monic lcm."""
        assert clear_denominators(ratios).multiplier == x - 3

    @pytest.mark.parametrize("lo, hi", [(2, 4), (0, 3), (3, 5)])
    def test_denominator_root_in_window(self, ratios, lo, hi):
        """It should refuse windows that contain or touch a denominator root."""
        with pytest.raises(ZeroDenominator):
            clear_denominators(ratios, Window.of(lo, hi))

    def test_zero_denominator(self, x):
        """It should refuse the zero polynomial as a denominator."""
        with pytest.raises(ZeroDenominator):
            clear_denominators(RatioMatrix(QQ, (((x, 0),),)))

    def test_ragged_grid(self, x):
        """It should require a rectangular grid of ratios."""
        with pytest.raises(DimensionMismatch):
            RatioMatrix(QQ, (((x, 1), (x, 1)), ((x, 1),)))


@pytest.mark.unit
class TestRationalize:
    """Test substituting a rational β for α."""

    def test_root_free_window(self, golden_row):
        """It should substitute the midpoint of (3/2, 8/5) and keep the rank."""
        # Act
        result = rationalize(golden_row, Window.of("3/2", "8/5"))

        # Assert
        assert isinstance(result, Rationalization)
        certificate = result.certificate
        assert certificate.beta == Fraction(31, 20)
        assert certificate.rank_before == certificate.rank_after == 1
        assert [(e.row, e.col, e.root_count, e.sign_at_beta) for e in certificate.per_entry] == [
            (0, 0, 0, 1),
            (0, 1, 0, -1),
        ]
        assert result.matrix == ExactMatrix.from_rows([[Fraction(31, 20), Fraction(-59, 400)]])

    def test_window_containing_a_root(self, golden_row):
        """It should ask for refinement when φ lies in the window."""
        # Act
        result = rationalize(golden_row, Window.of("8/5", "13/8"))

        # Assert
        assert isinstance(result, NeedsRefinement)
        assert result.entries == ((0, 1),)
        assert result.reason == "roots in window"

    def test_root_on_the_boundary(self, x):
        """It should flag an entry that vanishes at an endpoint."""
        # Act
        result = rationalize(poly_matrix([[x - 1, x]]), Window.of(1, 2))

        # Assert
        assert isinstance(result, NeedsRefinement)
        assert result.entries == ((0, 0),)
        assert result.reason == "endpoint"

    def test_dependent_rows_stay_dependent(self, x):
        """It should not raise the rank of a rank-1 matrix over ℚ(α)."""
        # Arrange
        m = poly_matrix([[x, 1], [x * x, x]])

        # Act
        result = rationalize(m, Window.of(1, 2))

        # Assert
        assert rank_over_function_field(m) == 1
        assert result.certificate.rank_after == 1
        assert sgn(result.matrix).to_strings() == ["++", "++"]

    def test_zero_matrix(self):
        """It should pass a zero matrix through with rank 0."""
        result = rationalize(poly_matrix([[0, 0], [0, 0]]), Window.of(0, 1))
        assert result.certificate.rank_before == result.certificate.rank_after == 0
        assert result.certificate.per_entry == ()

    def test_needs_a_polynomial_matrix(self):
        """It should refuse matrices that are not over F[α]."""
        with pytest.raises(ContextMismatch):
            rationalize(ExactMatrix.identity(2), Window.of(0, 1))


@pytest.mark.unit
class TestRefinement:
    """Test window refinement and point evaluation."""

    def test_refinement_excludes_the_root(self, golden_row):
        """It should shrink (1, 2) around 3/2 until φ drops out."""
        # Act
        result = refine_window(golden_row, Window.of(1, 2))

        # Assert
        assert isinstance(result, Rationalization)
        assert result.certificate.window == Window.of("11/8", "14/9")
        assert result.certificate.beta == Fraction(211, 144)

    def test_gives_up_after_the_step_limit(self, golden_row):
        """It should return the last NeedsRefinement when steps run out."""
        result = refine_window(golden_row, Window.of(1, 2), max_steps=1)
        assert isinstance(result, NeedsRefinement)
        assert result.window == Window.of("5/4", "5/3")

    def test_evaluate_and_rank_at(self, x):
        """It should evaluate entrywise and take the rank at a point."""
        # Arrange
        m = poly_matrix([[x, 1], [1, x]])

        # Act & Assert
        assert evaluate(m, 2) == ExactMatrix.from_rows([[2, 1], [1, 2]])
        assert rank_at(m, 1) == 1
        assert rank_at(m, 2) == 2


@pytest.mark.unit
class TestRecheckRationalization:
    """Test the independent recheck of a rationalization certificate."""

    @pytest.fixture
    def rationalized(self, golden_row):
        return rationalize(golden_row, Window.of("3/2", "8/5"))

    def test_genuine_certificate_passes(self, golden_row, rationalized):
        """It should accept the substitution with and without the source matrix."""
        assert recheck_rationalization(rationalized.certificate, rationalized.matrix)
        assert recheck_rationalization(rationalized.certificate, rationalized.matrix, golden_row)

    def test_beta_outside_the_window(self, rationalized):
        """It should reject a β that does not lie in the open window."""
        forged = replace(rationalized.certificate, beta=Fraction(8, 5))
        assert not recheck_rationalization(forged, rationalized.matrix)

    def test_flipped_sign(self, rationalized):
        """It should reject an M* whose entry no longer has the recorded sign."""
        # Arrange
        flipped = rationalized.matrix.with_entry(0, 1, Fraction(59, 400))

        # Act & Assert
        assert not recheck_rationalization(rationalized.certificate, flipped)

    def test_overstated_rank_drop(self, rationalized):
        """It should recompute rank(M*) rather than trust rank_after."""
        forged = replace(rationalized.certificate, rank_after=0)
        assert not recheck_rationalization(forged, rationalized.matrix)

    def test_missing_entry_report(self, rationalized):
        """It should require a report for every nonzero entry."""
        forged = replace(rationalized.certificate, per_entry=rationalized.certificate.per_entry[:1])
        assert not recheck_rationalization(forged, rationalized.matrix)

    def test_window_with_a_root_is_caught_by_the_source(self, golden_row, rationalized):
        """It should find φ inside a widened window once the source matrix is given."""
        # Arrange
        widened = replace(rationalized.certificate, window=Window.of("3/2", "13/8"))

        # Act & Assert
        assert recheck_rationalization(widened, rationalized.matrix)
        assert not recheck_rationalization(widened, rationalized.matrix, golden_row)

    def test_different_source(self, x, rationalized):
        """It should reject an M* that is not the source evaluated at β."""
        other = poly_matrix([[x, x * x - 2]])
        assert not recheck_rationalization(rationalized.certificate, rationalized.matrix, other)
