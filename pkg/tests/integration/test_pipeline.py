"""Integration tests for the counterexample pipeline."""

import pytest

from signrank.core.models import VerificationReport
from signrank.counterexample import BUNDLE_FILES, FIGURE_FILE
from signrank.pipeline import PerlesPipeline
from signrank.serialization import read_json


@pytest.mark.integration
@pytest.mark.slow
class TestPerlesPipeline:
    """Test the build and verify flows."""

    def test_build_writes_bundle_and_figure(self, tmp_path):
        """It should write every artifact and report success."""
        # Arrange
        out = tmp_path / "bundle"

        # Act
        outcome = PerlesPipeline(d=5).build(out)

        # Assert
        assert outcome.exit_code == 0
        assert outcome.details["rank_A"] == 6
        assert sorted(p.name for p in out.iterdir()) == sorted(BUNDLE_FILES + (FIGURE_FILE,))
        assert len(outcome.artifacts_written) == 12

    def test_failed_checks_still_write_the_report(self, tmp_path, mocker):
        """It should write report.json, skip the figure and exit with 1."""
        # Arrange
        failing = VerificationReport()
        failing.add("rank(B) = 3", False, "rank(B) = 4")
        mocker.patch("signrank.pipeline.verify_bundle", return_value=failing)

        # Act
        outcome = PerlesPipeline(d=5).build(tmp_path)

        # Assert
        assert outcome.exit_code == 1
        assert outcome.summary == "failed: rank(B) = 3"
        assert not (tmp_path / FIGURE_FILE).exists()
        assert read_json(tmp_path / "report.json")["checks"][0]["passed"] is False

    def test_verify_rewrites_the_report(self, bundle_dir):
        """It should reload a bundle and pass every check again."""
        # Act
        outcome = PerlesPipeline().verify(bundle_dir)

        # Assert
        assert outcome.exit_code == 0
        assert outcome.artifacts_written == [str(bundle_dir / "report.json")]
        assert outcome.summary.startswith("all ")

    def test_verify_detects_a_damaged_file(self, tmp_path, built_bundle):
        """It should fail verification when E.json no longer matches DC."""
        # Arrange
        from signrank.counterexample import write_bundle
        from signrank.serialization import encode_matrix, write_json

        write_bundle(built_bundle, tmp_path)
        E = built_bundle.E
        write_json(tmp_path / "E.json", encode_matrix(E.with_entry(2, 3, E[2, 3] + 1)))

        # Act
        outcome = PerlesPipeline().verify(tmp_path)

        # Assert
        assert outcome.exit_code == 1
        assert "E = DC" in outcome.summary
