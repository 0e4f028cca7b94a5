"""Solver-independent rechecking of realizability certificates."""

import logging
from fractions import Fraction
from itertools import combinations

from signrank.core.errors import TraceMismatch, UnresolvedFactor
from signrank.incidence.structure import IncidenceStructure
from signrank.realizer.certificate import RealizabilityCertificate, StepKind, Verdict
from signrank.realizer.construction import Construction, candidate_values
from signrank.realizer.realization import validate_realization

logger = logging.getLogger(__name__)


def replay_trace(c: RealizabilityCertificate, s: IncidenceStructure) -> Construction:
    """Rebuild the construction step by step; every recorded result must reproduce."""
    frame = tuple(step.target for step in c.trace if step.kind is StepKind.FRAME)
    if frame != tuple(c.frame):
        raise TraceMismatch(f"trace frame {frame} differs from certificate frame {tuple(c.frame)}")
    if len(frame) < 3 or any(s.collinear(triple) for triple in combinations(frame, 3)):
        raise TraceMismatch(f"frame {''.join(frame)} is not in general position")
    construction = Construction(s)
    for step in c.trace:
        construction.apply(step)
    if construction.unassigned():
        raise TraceMismatch(f"trace leaves {''.join(construction.unassigned())} unplaced")
    if tuple(construction.constraints()) != tuple(c.constraints):
        raise TraceMismatch("trace does not reproduce the constraint polynomials")
    if tuple(construction.side_conditions()) != tuple(c.side_conditions):
        raise TraceMismatch("trace does not reproduce the side conditions")
    return construction


def _no_surviving_root(c: RealizabilityCertificate, s: IncidenceStructure, construction: Construction) -> bool:
    if any(p.is_zero for p in c.side_conditions):
        return True
    try:
        candidates = candidate_values(c.constraints, c.field)
    except UnresolvedFactor as exc:
        logger.warning("cannot recheck: %s", exc)
        return False
    if candidates is None:
        if construction.live:
            logger.warning("NonRealizable claimed while t is unconstrained")
            return False
        candidates = [Fraction(0)]
    for value in candidates:
        if validate_realization(s, construction.realize(c.field, value)):
            logger.warning("candidate t = %s survives every condition", value)
            return False
    return True


def recheck_certificate(c: RealizabilityCertificate, s: IncidenceStructure, strict: bool = False) -> bool:
    """Re-verify a certificate against ``s`` without trusting the solver.

    Realizable: the witness must validate. NonRealizable: the trace is
    replayed exactly, constraints must be nonzero and no root may survive.
    Inconclusive makes no claim. A trace that does not reproduce raises
    TraceMismatch when ``strict``, otherwise the recheck fails.
    """
    if c.verdict is Verdict.INCONCLUSIVE:
        return True
    if c.verdict is Verdict.REALIZABLE:
        return c.witness is not None and c.witness.field == c.field and validate_realization(s, c.witness)
    try:
        construction = replay_trace(c, s)
    except TraceMismatch as exc:
        if strict:
            raise
        logger.warning("certificate rejected: %s", exc)
        return False
    if any(p.is_zero for p in c.constraints):
        return False
    return _no_surviving_root(c, s, construction)
