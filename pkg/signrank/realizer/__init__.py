"""Realizability of rank-3 incidence structures over ℚ and ℚ(√d)."""

from signrank.realizer.certificate import (
    FrameOutcome,
    RealizabilityCertificate,
    StepKind,
    TraceStep,
    Verdict,
)
from signrank.realizer.coordinatizer import Coordinatizer, candidate_frames, coordinatize, coordinatizer
from signrank.realizer.realization import Realization, cross, dot, validate_realization
from signrank.realizer.recheck import recheck_certificate, replay_trace

__all__ = [
    "FrameOutcome",
    "RealizabilityCertificate",
    "StepKind",
    "TraceStep",
    "Verdict",
    "Coordinatizer",
    "candidate_frames",
    "coordinatize",
    "coordinatizer",
    "Realization",
    "cross",
    "dot",
    "validate_realization",
    "recheck_certificate",
    "replay_trace",
]
