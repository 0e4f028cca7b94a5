"""Certificates emitted by the coordinatizer."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from signrank.exactfield import FieldContext, Polynomial
from signrank.realizer.realization import Realization


class Verdict(str, Enum):
    REALIZABLE = "Realizable"
    NON_REALIZABLE = "NonRealizable"
    INCONCLUSIVE = "Inconclusive"


class StepKind(str, Enum):
    FRAME = "frame"
    LINE = "line"
    INTERSECT = "intersect"
    PARAMETER = "parameter"


PARAMETER_SYMBOL = "t"


@dataclass(frozen=True)
class TraceStep:
    """One coordinatization step; ``result`` is a triple of polynomials in t.

    Sources per kind: frame → (), line → (P, Q), intersect → (Li, Lj),
    parameter → (Li, P, Q, value) where value is "t" or a rational.
    """
    step: int
    kind: StepKind
    target: str
    source: Tuple[str, ...]
    result: Tuple[Polynomial, Polynomial, Polynomial]


@dataclass(frozen=True)
class FrameOutcome:
    frame: Tuple[str, ...]
    verdict: Verdict
    reason: str = ""


@dataclass(frozen=True)
class RealizabilityCertificate:
    """Verdict plus everything needed to recheck it without the solver.

    NonRealizable is conditional on the recorded frame being in general
    position; ``frames_tried`` lists every frame the solver attempted.
    """
    verdict: Verdict
    field: FieldContext
    frame: Tuple[str, ...]
    trace: Tuple[TraceStep, ...] = ()
    constraints: Tuple[Polynomial, ...] = ()
    side_conditions: Tuple[Polynomial, ...] = ()
    witness: Optional[Realization] = None
    evidence: str = ""
    reason: str = ""
    frames_tried: Tuple[FrameOutcome, ...] = field(default_factory=tuple)

    @property
    def is_definitive(self) -> bool:
        return self.verdict is not Verdict.INCONCLUSIVE
