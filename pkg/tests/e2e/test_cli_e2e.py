"""End-to-end tests for CLI functionality."""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from signrank.counterexample import BUNDLE_FILES, FIGURE_FILE

REPO_ROOT = Path(__file__).resolve().parents[2]


def run_cli(*args, env=None):
    """Run ``python -m signrank.cli`` from the repository root."""
    return subprocess.run(
        [sys.executable, "-m", "signrank.cli", *map(str, args)],
        capture_output=True,
        text=True,
        cwd=REPO_ROOT,
        env={**os.environ, "SIGNRANK_LOG_LEVEL": "WARNING", **(env or {})},
    )


def write(path: Path, document) -> Path:
    path.write_text(json.dumps(document), encoding="utf-8")
    return path


@pytest.fixture
def perles_json(tmp_path):
    path = tmp_path / "perles.json"
    result = run_cli("catalog", "perles", "--out", path)
    assert result.returncode == 0, result.stderr
    return path


@pytest.fixture
def golden_matrix(tmp_path):
    """[[α, α² − α − 1]] over ℚ[α]."""
    return write(tmp_path / "matrix.json", {"context": "poly:q", "entries": [[["0", "1"], ["-1", "-1", "1"]]]})


@pytest.mark.e2e
class TestCLIBasics:
    """Test help, catalog and input errors."""

    def test_cli_help_command(self):
        """It should display help information."""
        # Act
        result = run_cli("--help")

        # Assert
        assert result.returncode == 0
        assert "Exact sign-pattern minimum-rank toolkit" in result.stdout
        for command in ("perles", "realize", "rationalize", "minrank", "check", "render", "catalog"):
            assert command in result.stdout

    def test_catalog_lists_structures(self):
        """It should list every catalog entry."""
        result = run_cli("catalog")
        assert result.returncode == 0
        assert {"perles", "fano", "pappus"} <= set(result.stdout.split())

    def test_catalog_prints_incidence_json(self):
        """It should print the structure as incidence JSON on stdout."""
        # Act
        result = run_cli("catalog", "fano")

        # Assert
        assert result.returncode == 0
        document = json.loads(result.stdout)
        assert len(document["points"]) == 7
        assert len(document["lines"]) == 7

    def test_unknown_catalog_name(self):
        """It should exit with 2 for an unknown structure."""
        assert run_cli("catalog", "desargues").returncode == 2

    def test_malformed_input(self, tmp_path):
        """It should exit with 2 on a file that is not JSON."""
        # Arrange
        bad = tmp_path / "bad.json"
        bad.write_text("{not json", encoding="utf-8")

        # Act
        result = run_cli("realize", bad, "--out", tmp_path / "cert.json")

        # Assert
        assert result.returncode == 2
        assert "Error" in result.stderr

    def test_unwritable_output(self, tmp_path, perles_json):
        """It should exit with 2 when the output path runs through a regular file."""
        # Arrange
        blocker = tmp_path / "blocker"
        blocker.write_text("", encoding="utf-8")

        # Act
        result = run_cli("realize", perles_json, "--field", "qsqrt:5", "--out", blocker / "cert.json")

        # Assert
        assert result.returncode == 2

    def test_polynomial_field_is_rejected(self, tmp_path, perles_json):
        """It should refuse to realize over a polynomial ring."""
        assert run_cli("realize", perles_json, "--field", "poly:q", "--out", tmp_path / "c.json").returncode == 2


@pytest.mark.e2e
@pytest.mark.slow
class TestRealizeCommand:
    """Test the realize command."""

    def test_nine_points_over_q(self, tmp_path, perles_json):
        """It should certify that no rational realization exists."""
        # Act
        result = run_cli("realize", perles_json, "--field", "q", "--out", tmp_path / "cert.json")

        # Assert
        assert result.returncode == 0, result.stderr
        certificate = json.loads((tmp_path / "cert.json").read_text(encoding="utf-8"))
        assert certificate["verdict"] == "NonRealizable"
        assert certificate["field"] == "q"

    def test_nine_points_over_q_sqrt5(self, tmp_path, perles_json):
        """It should realize the configuration over ℚ(√5) with a witness."""
        # Act
        result = run_cli("realize", perles_json, "--field", "qsqrt:5", "--out", tmp_path / "cert.json", "--json")

        # Assert
        assert result.returncode == 0, result.stderr
        outcome = json.loads(result.stdout)
        assert outcome["details"]["verdict"] == "Realizable"
        certificate = json.loads((tmp_path / "cert.json").read_text(encoding="utf-8"))
        assert set(certificate["witness"]["points"]) == set("ABCDEFGHI")

    def test_fano_over_q_sqrt5(self, tmp_path):
        """It should reject the Fano plane over ℚ(√5)."""
        # Arrange
        fano = tmp_path / "fano.json"
        run_cli("catalog", "fano", "--out", fano)

        # Act
        result = run_cli("realize", fano, "--field", "qsqrt:5", "--out", tmp_path / "cert.json", "--json")

        # Assert
        assert result.returncode == 0
        assert json.loads(result.stdout)["details"]["verdict"] == "NonRealizable"

    def test_inconclusive_exit_code(self, tmp_path):
        """It should exit with 3 when propagation cannot reach every point."""
        # Arrange
        structure = write(tmp_path / "loose.json", {"points": list("ABCDEF"), "lines": [list("ABC")]})

        # Act
        result = run_cli("realize", structure, "--out", tmp_path / "cert.json")

        # Assert
        assert result.returncode == 3


@pytest.mark.e2e
class TestRationalizeCommand:
    """Test the rationalize command."""

    def test_root_free_window(self, tmp_path, golden_matrix):
        """It should substitute β = 31/20 and exit with 0."""
        # Act
        result = run_cli("rationalize", golden_matrix, "--lo", "3/2", "--hi", "8/5", "--out", tmp_path / "r.json")

        # Assert
        assert result.returncode == 0, result.stderr
        document = json.loads((tmp_path / "r.json").read_text(encoding="utf-8"))
        assert document["status"] == "Rationalized"
        assert document["certificate"]["beta"] == "31/20"
        assert document["certificate"]["rank_before"] == document["certificate"]["rank_after"] == 1

    def test_window_around_the_golden_ratio(self, tmp_path, golden_matrix):
        """It should exit with 3 and name the entry with a root in the window."""
        # Act
        result = run_cli("rationalize", golden_matrix, "--lo", "8/5", "--hi", "13/8", "--out", tmp_path / "r.json")

        # Assert
        assert result.returncode == 3
        document = json.loads((tmp_path / "r.json").read_text(encoding="utf-8"))
        assert document["status"] == "NeedsRefinement"
        assert document["entries"] == [[0, 1]]

    def test_denominator_root_in_window(self, tmp_path):
        """It should exit with 2 when a denominator vanishes in the window."""
        # Arrange
        matrix = write(
            tmp_path / "ratios.json",
            {"context": "poly:q", "numerators": [[["0", "1"]]], "denominators": [[["-3", "1"]]]},
        )

        # Act
        result = run_cli("rationalize", matrix, "--lo", "2", "--hi", "4", "--out", tmp_path / "r.json")

        # Assert
        assert result.returncode == 2

    def test_float_bounds_are_rejected(self, tmp_path, golden_matrix):
        """It should refuse inexact window ends."""
        result = run_cli("rationalize", golden_matrix, "--lo", "1.5", "--hi", "1.6", "--out", tmp_path / "r.json")
        assert result.returncode == 2


@pytest.mark.e2e
class TestMinrankCommand:
    """Test the minrank command."""

    def test_identity_pattern(self, tmp_path):
        """It should report the exact minimum rank 3 for the identity pattern."""
        # Arrange
        pattern = write(tmp_path / "identity.json", ["+00", "0+0", "00+"])

        # Act
        result = run_cli("minrank", pattern, "--out", tmp_path / "w.json")

        # Assert
        assert result.returncode == 0, result.stderr
        assert "exact: 3" in result.stdout

    def test_all_plus_pattern(self, tmp_path):
        """It should report the exact minimum rank 1 for an all-plus pattern."""
        pattern = write(tmp_path / "plus.json", ["+++", "+++"])
        result = run_cli("minrank", pattern, "--out", tmp_path / "w.json")
        assert result.returncode == 0
        assert "exact: 1" in result.stdout

    def test_seed_from_environment(self, tmp_path):
        """It should record the seed taken from SIGNRANK_SEED."""
        # Arrange
        pattern = write(tmp_path / "p.json", ["+-", "-+"])

        # Act
        result = run_cli("minrank", pattern, "--out", tmp_path / "w.json", "--json", env={"SIGNRANK_SEED": "99"})

        # Assert
        assert result.returncode == 0, result.stderr
        assert json.loads(result.stdout)["details"]["seed"] == 99
        assert json.loads((tmp_path / "w.json").read_text(encoding="utf-8"))["seed"] == 99

    def test_bad_pattern_alphabet(self, tmp_path):
        """It should exit with 2 for characters outside '+-0'."""
        pattern = write(tmp_path / "p.json", ["+x"])
        assert run_cli("minrank", pattern, "--out", tmp_path / "w.json").returncode == 2


@pytest.mark.e2e
class TestCheckCommand:
    """Test rechecking written minrank and rationalize results."""

    def test_minrank_witness(self, tmp_path):
        """It should recheck the witness written by minrank."""
        # Arrange
        pattern = write(tmp_path / "identity.json", ["+00", "0+0", "00+"])
        assert run_cli("minrank", pattern, "--out", tmp_path / "w.json").returncode == 0

        # Act
        result = run_cli("check", tmp_path / "w.json", "--json")

        # Assert
        assert result.returncode == 0, result.stderr
        assert json.loads(result.stdout)["details"] == {"kind": "witness", "rank": 3}

    def test_understated_witness_rank(self, tmp_path):
        """It should exit with 1 when the recorded rank is not the witness rank."""
        # Arrange
        pattern = write(tmp_path / "identity.json", ["+00", "0+0", "00+"])
        run_cli("minrank", pattern, "--out", tmp_path / "w.json")
        document = json.loads((tmp_path / "w.json").read_text(encoding="utf-8"))
        document["witness"]["rank"] = 2
        write(tmp_path / "w.json", document)

        # Act
        result = run_cli("check", tmp_path / "w.json")

        # Assert
        assert result.returncode == 1

    def test_rationalization_with_its_matrix(self, tmp_path, golden_matrix):
        """It should recheck M* and recount roots in the window of the source matrix."""
        # Arrange
        run_cli("rationalize", golden_matrix, "--lo", "3/2", "--hi", "8/5", "--out", tmp_path / "r.json")

        # Act
        result = run_cli("check", tmp_path / "r.json", "--matrix", golden_matrix, "--json")

        # Assert
        assert result.returncode == 0, result.stderr
        assert json.loads(result.stdout)["details"] == {
            "kind": "rationalization",
            "beta": "31/20",
            "window_checked": True,
        }

    def test_widened_window_fails_against_the_matrix(self, tmp_path, golden_matrix):
        """It should exit with 1 when the recorded window contains a root of an entry."""
        # Arrange
        run_cli("rationalize", golden_matrix, "--lo", "3/2", "--hi", "8/5", "--out", tmp_path / "r.json")
        document = json.loads((tmp_path / "r.json").read_text(encoding="utf-8"))
        document["certificate"]["window"]["hi"] = "13/8"
        write(tmp_path / "r.json", document)

        # Act & Assert
        assert run_cli("check", tmp_path / "r.json").returncode == 0
        assert run_cli("check", tmp_path / "r.json", "--matrix", golden_matrix).returncode == 1

    def test_other_documents_are_rejected(self, perles_json):
        """It should exit with 2 for a document that is not a result."""
        assert run_cli("check", perles_json).returncode == 2


@pytest.mark.e2e
@pytest.mark.slow
class TestPerlesCommands:
    """Test building, verifying and drawing the counterexample bundle."""

    def test_build_and_verify(self, tmp_path):
        """It should write twelve artifacts, verify them and draw a figure."""
        # Arrange
        out = tmp_path / "bundle"

        # Act
        built = run_cli("perles", "build", "--out", out)
        verified = run_cli("perles", "verify", "--bundle", out, "--json")

        # Assert
        assert built.returncode == 0, built.stderr
        assert sorted(p.name for p in out.iterdir()) == sorted(BUNDLE_FILES + (FIGURE_FILE,))
        assert verified.returncode == 0, verified.stderr
        assert json.loads(verified.stdout)["details"]["rank_B"] == 3

    def test_build_is_deterministic(self, tmp_path):
        """It should write byte-identical bundles on repeated runs."""
        # Act
        for name in ("one", "two"):
            assert run_cli("perles", "build", "--out", tmp_path / name).returncode == 0

        # Assert
        for filename in BUNDLE_FILES + (FIGURE_FILE,):
            assert (tmp_path / "one" / filename).read_bytes() == (tmp_path / "two" / filename).read_bytes(), filename

    def test_render_command(self, tmp_path):
        """It should draw a bundle's realization as SVG."""
        # Arrange
        out = tmp_path / "bundle"
        run_cli("perles", "build", "--out", out)

        # Act
        result = run_cli("render", out / "incidence.json", out / "realization.json", "--out", tmp_path / "f.svg")

        # Assert
        assert result.returncode == 0, result.stderr
        assert (tmp_path / "f.svg").read_bytes() == (out / FIGURE_FILE).read_bytes()

    def test_verify_missing_bundle(self, tmp_path):
        """It should exit with 2 for a directory that holds no bundle."""
        assert run_cli("perles", "verify", "--bundle", tmp_path / "nothing").returncode == 2
