"""Counterexample pipeline: construct, verify, write and draw the bundle."""

import logging
import time
from pathlib import Path
from typing import Callable, List, Optional, TypeVar

from signrank.core.config import settings
from signrank.core.models import CommandOutcome, VerificationReport
from signrank.counterexample import (
    FIGURE_FILE,
    CounterexampleBundle,
    construct_bundle,
    load_bundle,
    verify_bundle,
    write_bundle,
    write_report,
)
from signrank.render import render_svg

logger = logging.getLogger(__name__)

T = TypeVar("T")


class PerlesPipeline:
    """Orchestrates the nine-point counterexample from construction to figure."""

    def __init__(self, d: Optional[int] = None, svg_size: Optional[int] = None):
        """
        Initialize the pipeline.

        Args:
            d: Squarefree radicand of the realization field (default from settings)
            svg_size: Side of the rendered figure in pixels
        """
        self.d = d or settings.default_field_d
        self.svg_size = svg_size or settings.svg_size

    @staticmethod
    def _phase(name: str, action: Callable[[], T]) -> T:
        logger.info("%s...", name)
        phase_start = time.time()
        result = action()
        logger.info("%s took %.2fs", name, time.time() - phase_start)
        return result

    @staticmethod
    def _outcome(report: VerificationReport, written: List[Path]) -> CommandOutcome:
        if report.passed:
            summary = f"all {len(report.checks)} checks passed"
        else:
            summary = "failed: " + ", ".join(check.name for check in report.failed())
        return CommandOutcome(
            exit_code=0 if report.passed else 1,
            artifacts_written=[str(path) for path in written],
            summary=summary,
            details=report.summary,
        )

    def build(self, out_dir: Path) -> CommandOutcome:
        """
        Build the bundle over ℚ(√d) and write it to ``out_dir``.

        report.json is written whether or not the checks pass; the figure is
        drawn only for a bundle whose checks all pass.
        """
        out = Path(out_dir)
        bundle: CounterexampleBundle = self._phase("Constructing bundle", lambda: construct_bundle(self.d))
        report = self._phase("Verifying bundle", lambda: verify_bundle(bundle))
        written = self._phase("Writing bundle", lambda: write_bundle(bundle, out, report))
        if report.passed:
            figure = self._phase(
                "Rendering figure",
                lambda: render_svg(bundle.structure, bundle.realization, out / FIGURE_FILE, self.svg_size),
            )
            written.append(figure)
        else:
            logger.warning("bundle checks failed: %s", ", ".join(c.name for c in report.failed()))
        return self._outcome(report, written)

    def verify(self, bundle_dir: Path) -> CommandOutcome:
        """Reload a written bundle, recompute every check and rewrite report.json."""
        bundle = self._phase("Loading bundle", lambda: load_bundle(bundle_dir))
        report = self._phase("Verifying bundle", lambda: verify_bundle(bundle))
        written = [write_report(report, Path(bundle_dir))]
        return self._outcome(report, written)


# Create default pipeline instance
default_pipeline = PerlesPipeline()
