"""Sequential projective coordinatization of rank-3 incidence structures."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, islice, product
from typing import Iterator, List, Optional, Sequence, Tuple

from signrank.core.config import settings
from signrank.core.errors import NoValidFrame, UnresolvedFactor
from signrank.exactfield import FieldContext
from signrank.exactfield.rational import format_rational
from signrank.incidence.structure import IncidenceStructure
from signrank.realizer.certificate import FrameOutcome, RealizabilityCertificate, Verdict
from signrank.realizer.construction import Construction, Degenerate, ParameterOverflow, candidate_values
from signrank.realizer.realization import Realization, validate_realization

logger = logging.getLogger(__name__)


@dataclass
class FrameRun:
    """Result of propagating one frame with some parameters pinned to samples."""
    frame: Tuple[str, ...]
    verdict: Verdict
    construction: Optional[Construction] = None
    witness: Optional[Realization] = None
    evidence: str = ""
    reason: str = ""
    overflow: bool = False
    pinned: Tuple[Fraction, ...] = field(default_factory=tuple)


def candidate_frames(s: IncidenceStructure) -> Iterator[Tuple[str, ...]]:
    """Four points, no three on a structure line, high line-degree first.

    Structures without such a quadruple fall back to non-collinear triples.
    """
    order = sorted(s.points, key=lambda label: (-s.degree(label), label))
    found = False
    for size in (4, 3):
        for combo in combinations(order, size):
            if not any(s.collinear(triple) for triple in combinations(combo, 3)):
                found = True
                yield combo
        if found:
            return
    raise NoValidFrame(f"every triple of points lies on a structure line in {list(s.points)}")


class Coordinatizer:
    """Decides realizability over ℚ or ℚ(√d) with a recheckable certificate."""

    def __init__(
        self,
        frame_retry_cap: Optional[int] = None,
        max_parameters: Optional[int] = None,
        samples: Optional[Sequence[Fraction]] = None,
    ):
        self.frame_retry_cap = frame_retry_cap or settings.frame_retry_cap
        self.max_parameters = max_parameters or settings.max_parameters
        self.samples = list(samples) if samples is not None else settings.sample_values()

    # -- one frame ---------------------------------------------------------
    def _propagate(self, s: IncidenceStructure, frame: Tuple[str, ...], pinned: Tuple[Fraction, ...]) -> Construction:
        c = Construction(s)
        c.place_frame(frame)
        while True:
            c.determine_lines()
            pending = c.unassigned()
            meet = next((p for p in pending if len(c.determined_lines_through(p)) >= 2), None)
            if meet is not None:
                i, j = c.determined_lines_through(meet)[:2]
                c.intersect(meet, i, j)
                continue
            single = next((p for p in pending if len(c.determined_lines_through(p)) == 1), None)
            if single is None:
                return c
            (i,) = c.determined_lines_through(single)
            k = c.parameters
            value = pinned[k] if k < len(pinned) else None
            logger.debug("frame %s: parameter %d for %s on line %d", "".join(frame), k + 1, single, i + 1)
            c.parameterize(single, i, value)

    def _run(self, s: IncidenceStructure, frame: Tuple[str, ...], target: FieldContext, pinned: Tuple[Fraction, ...]) -> FrameRun:
        run = FrameRun(frame, Verdict.INCONCLUSIVE, pinned=pinned)
        try:
            c = self._propagate(s, frame, pinned)
        except ParameterOverflow:
            run.overflow, run.reason = True, "parameter overflow"
            return run
        except Degenerate as exc:
            run.reason = f"degenerate: {exc}"
            return run
        run.construction = c
        if c.unassigned():
            run.reason = f"underdetermined: {''.join(c.unassigned())}"
            return run
        constraints = c.constraints()
        if any(p.is_zero for p in c.side_conditions()):
            return self._excluded(run, "a required non-incidence vanishes identically")
        try:
            candidates = candidate_values(constraints, target)
        except UnresolvedFactor as exc:
            run.reason = str(exc)
            return run
        free = candidates is None
        if free:
            candidates = list(self.samples) if c.live else [Fraction(0)]
        for value in candidates:
            witness = c.realize(target, value)
            if validate_realization(s, witness):
                run.verdict, run.witness = Verdict.REALIZABLE, witness
                shown = format_rational(value) if isinstance(value, Fraction) else str(value)
                run.evidence = f"t = {shown}" if c.live else "no free parameter"
                if pinned:
                    run.evidence += "; earlier parameters pinned to " + ", ".join(format_rational(v) for v in pinned)
                return run
        if free and c.live:
            run.reason = "free parameter: no sampled value gives a realization"
            return run
        if constraints:
            return self._excluded(run, f"no root in {target} of the constraints survives the side conditions")
        return self._excluded(run, "the forced coordinates violate the structure")

    def _excluded(self, run: FrameRun, evidence: str) -> FrameRun:
        # pinned runs explore one slice of the realization space; failure there proves nothing
        if run.pinned:
            run.reason = f"pinned run failed: {evidence}"
        else:
            run.verdict, run.evidence = Verdict.NON_REALIZABLE, evidence
        return run

    def _frame(self, s: IncidenceStructure, frame: Tuple[str, ...], target: FieldContext) -> FrameRun:
        first = self._run(s, frame, target, ())
        if not first.overflow:
            return first
        for depth in range(1, self.max_parameters):
            overflowed = False
            for pinned in product(self.samples, repeat=depth):
                run = self._run(s, frame, target, tuple(pinned))
                if run.verdict is Verdict.REALIZABLE:
                    return run
                overflowed = overflowed or run.overflow
            if not overflowed:
                break
        return first

    # -- all frames ----------------------------------------------------------
    def run(self, s: IncidenceStructure, target: FieldContext) -> RealizabilityCertificate:
        """Try frames in order; stop at the first realization.

        NonRealizable needs at least one decided frame and no realizable one
        among all frames tried (up to the retry cap).
        """
        if target.kind == "PolyOver":
            raise ValueError("realizability is decided over ℚ or ℚ(√d)")
        outcomes: List[FrameOutcome] = []
        excluded: Optional[FrameRun] = None
        first: Optional[FrameRun] = None
        for frame in islice(candidate_frames(s), self.frame_retry_cap):
            run = self._frame(s, frame, target)
            logger.debug("frame %s over %s: %s %s", "".join(frame), target, run.verdict.value, run.reason)
            outcomes.append(FrameOutcome(frame, run.verdict, run.reason or run.evidence))
            first = first or run
            if run.verdict is Verdict.REALIZABLE:
                logger.info("realizable over %s with frame %s", target, "".join(frame))
                return self._certificate(run, target, outcomes)
            if run.verdict is Verdict.NON_REALIZABLE and excluded is None:
                excluded = run
        if excluded is not None:
            logger.info("non-realizable over %s (%d frames tried)", target, len(outcomes))
            return self._certificate(excluded, target, outcomes)
        reason = "no frame decided: " + "; ".join(sorted({o.reason for o in outcomes}))
        return RealizabilityCertificate(
            verdict=Verdict.INCONCLUSIVE,
            field=target,
            frame=first.frame if first else (),
            reason=reason,
            frames_tried=tuple(outcomes),
        )

    @staticmethod
    def _certificate(run: FrameRun, target: FieldContext, outcomes: List[FrameOutcome]) -> RealizabilityCertificate:
        c = run.construction
        return RealizabilityCertificate(
            verdict=run.verdict,
            field=target,
            frame=run.frame,
            trace=tuple(c.trace),
            constraints=tuple(c.constraints()),
            side_conditions=tuple(c.side_conditions()),
            witness=run.witness,
            evidence=run.evidence,
            frames_tried=tuple(outcomes),
        )


# Default instance
coordinatizer = Coordinatizer()


def coordinatize(s: IncidenceStructure, target: FieldContext) -> RealizabilityCertificate:
    return coordinatizer.run(s, target)
