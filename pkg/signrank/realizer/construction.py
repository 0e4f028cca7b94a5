"""Symbolic projective construction over ℚ[t].

Frame points are fixed, sampled parameters are rational, so every
coordinate produced here is a triple of polynomials in the single live
parameter t with rational coefficients; the target field only matters
when constraint roots are extracted.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Any, Dict, List, Optional, Sequence, Tuple

from signrank.core.errors import InvalidStructure, TraceMismatch
from signrank.exactfield import QQ, FieldContext, Polynomial, quadratic_field_roots, rational_roots
from signrank.exactfield.rational import format_rational, parse_rational
from signrank.incidence.structure import IncidenceStructure
from signrank.realizer.certificate import PARAMETER_SYMBOL, StepKind, TraceStep
from signrank.realizer.realization import Realization, cross, dot, is_zero_triple

PolyTriple = Tuple[Polynomial, Polynomial, Polynomial]

FRAME_POINTS = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))
T = Polynomial.x(QQ)


class Degenerate(Exception):
    """A cross product vanished identically in t."""


class ParameterOverflow(Degenerate):
    """A second parameter would be live at the same time as t."""


def as_poly_triple(values: Sequence[Any]) -> PolyTriple:
    return tuple(v if isinstance(v, Polynomial) else Polynomial.constant(v, QQ) for v in values)


def normalize(triple: Sequence[Polynomial]) -> PolyTriple:
    """Divide out the rational content; first nonzero entry gets a positive leading coefficient."""
    coeffs = [c for p in triple for c in p.coeffs]
    if not coeffs:
        return tuple(triple)
    num = reduce(gcd, (c.numerator for c in coeffs))
    den = reduce(lcm, (c.denominator for c in coeffs))
    content = Fraction(abs(num), den)
    first = next(p for p in triple if not p.is_zero)
    if first.leading < 0:
        content = -content
    return tuple(p.scale(1 / content) for p in triple)


def line_label(index: int) -> str:
    return f"L{index + 1}"


def line_index(label: str) -> int:
    if not label.startswith("L") or not label[1:].isdigit() or int(label[1:]) < 1:
        raise TraceMismatch(f"not a line label: {label!r}")
    return int(label[1:]) - 1


class Construction:
    """Mutable coordinatization state for one frame of one structure."""

    def __init__(self, structure: IncidenceStructure):
        self.structure = structure
        self.points: Dict[str, PolyTriple] = {}
        self.lines: Dict[int, PolyTriple] = {}
        self.defining: Dict[int, Tuple[str, str]] = {}
        self.trace: List[TraceStep] = []
        self.parameters = 0
        self.live = False

    # -- steps ---------------------------------------------------------------
    def _record(self, kind: StepKind, target: str, source: Tuple[str, ...], result: PolyTriple) -> None:
        self.trace.append(TraceStep(len(self.trace) + 1, kind, target, source, result))

    def place_frame(self, frame: Sequence[str]) -> None:
        for position, label in enumerate(frame):
            self.place_frame_point(label, position)

    def define_line(self, index: int, p: str, q: str) -> PolyTriple:
        triple = cross(self.points[p], self.points[q])
        if is_zero_triple(triple):
            raise Degenerate(f"points {p} and {q} coincide identically")
        triple = normalize(triple)
        self.lines[index] = triple
        self.defining[index] = (p, q)
        self._record(StepKind.LINE, line_label(index), (p, q), triple)
        return triple

    def intersect(self, label: str, i: int, j: int) -> PolyTriple:
        triple = cross(self.lines[i], self.lines[j])
        if is_zero_triple(triple):
            raise Degenerate(f"lines {line_label(i)} and {line_label(j)} coincide identically")
        triple = normalize(triple)
        self.points[label] = triple
        self._record(StepKind.INTERSECT, label, (line_label(i), line_label(j)), triple)
        return triple

    def parameterize(self, label: str, i: int, value: Optional[Fraction]) -> PolyTriple:
        """X = P + v·Q on line i through its defining points P, Q; v = t when ``value`` is None."""
        p, q = self.defining[i]
        if value is None:
            if self.live:
                raise ParameterOverflow(f"{label} needs a second live parameter")
            scalar: Any = T
            self.live = True
            shown = PARAMETER_SYMBOL
        else:
            scalar, shown = value, format_rational(value)
        triple = normalize(tuple(a + scalar * b for a, b in zip(self.points[p], self.points[q])))
        if is_zero_triple(triple):
            raise Degenerate(f"parametric point {label} vanished")
        self.points[label] = triple
        self.parameters += 1
        self._record(StepKind.PARAMETER, label, (line_label(i), p, q, shown), triple)
        return triple

    # -- propagation queries ---------------------------------------------------
    def determine_lines(self) -> None:
        """Give coefficients to every line with two assigned members (label order)."""
        for index, line in enumerate(self.structure.lines):
            if index in self.lines:
                continue
            members = sorted(label for label in line if label in self.points)
            if len(members) >= 2:
                self.define_line(index, members[0], members[1])

    def unassigned(self) -> List[str]:
        return sorted(label for label in self.structure.points if label not in self.points)

    def determined_lines_through(self, label: str) -> List[int]:
        return [i for i in self.structure.lines_through(label) if i in self.lines]

    # -- derived conditions ------------------------------------------------------
    def constraints(self) -> List[Polynomial]:
        """Required incidences not already built in: dot(line, point) for members
        other than the line's defining pair, when not identically zero."""
        found = []
        for index, line in enumerate(self.structure.lines):
            if index not in self.lines:
                continue
            for label in line:
                if label in self.defining[index] or label not in self.points:
                    continue
                value = dot(self.lines[index], self.points[label])
                if not value.is_zero:
                    found.append(value)
        return found

    def side_conditions(self) -> List[Polynomial]:
        """Required non-incidences that are not constant nonzero."""
        found = []
        for index, line in enumerate(self.structure.lines):
            if index not in self.lines:
                continue
            for label in self.structure.points:
                if label in line or label not in self.points:
                    continue
                value = dot(self.lines[index], self.points[label])
                if value.degree != 0:
                    found.append(value)
        return found

    def realize(self, field: FieldContext, value: Any = Fraction(0)) -> Realization:
        """Substitute t := value and embed every coordinate in ``field``."""
        return Realization(
            field,
            {label: tuple(p(value) for p in triple) for label, triple in self.points.items()},
            {index: tuple(p(value) for p in triple) for index, triple in self.lines.items()},
        )

    # -- replay ------------------------------------------------------------------
    def apply(self, step: TraceStep) -> None:
        """Recompute a recorded step and insist on the recorded result."""
        if step.step != len(self.trace) + 1:
            raise TraceMismatch(f"step {step.step} is out of order")
        try:
            if step.kind is StepKind.FRAME:
                position = sum(1 for s in self.trace if s.kind is StepKind.FRAME)
                if position >= len(FRAME_POINTS) or len(self.trace) != position:
                    raise TraceMismatch("frame steps must come first, at most four")
                self.place_frame_point(step.target, position)
            elif step.kind is StepKind.LINE:
                p, q = step.source
                index = line_index(step.target)
                if index in self.lines:
                    raise TraceMismatch(f"{step.target} is defined twice")
                self._require_members(index, (p, q))
                self.define_line(index, p, q)
            elif step.kind is StepKind.INTERSECT:
                a, b = step.source
                self._require_unassigned(step.target)
                self._require_members(line_index(a), (step.target,))
                self._require_members(line_index(b), (step.target,))
                self.intersect(step.target, line_index(a), line_index(b))
            else:
                line, p, q, shown = step.source
                self._require_unassigned(step.target)
                self._require_members(line_index(line), (step.target,))
                if self.defining.get(line_index(line)) != (p, q):
                    raise TraceMismatch(f"{line} is not defined by {p}{q}")
                value = None if shown == PARAMETER_SYMBOL else parse_rational(shown)
                self.parameterize(step.target, line_index(line), value)
        except (KeyError, IndexError, ValueError, Degenerate, InvalidStructure) as exc:
            raise TraceMismatch(f"step {step.step} cannot be replayed: {exc}") from exc
        if self.trace[-1].result != step.result:
            raise TraceMismatch(f"step {step.step} ({step.kind.value} {step.target}) does not reproduce")

    def _require_members(self, index: int, labels: Sequence[str]) -> None:
        line = self.structure.lines[index]
        if any(label not in line for label in labels):
            raise TraceMismatch(f"{line_label(index)} does not contain {''.join(labels)}")

    def _require_unassigned(self, label: str) -> None:
        if label not in self.structure.points or label in self.points:
            raise TraceMismatch(f"point {label} is unknown or already placed")

    def place_frame_point(self, label: str, position: int) -> None:
        if label not in self.structure.points or label in self.points:
            raise TraceMismatch(f"frame point {label} is unknown or repeated")
        triple = as_poly_triple(FRAME_POINTS[position])
        self.points[label] = triple
        self._record(StepKind.FRAME, label, (), triple)


def candidate_values(constraints: Sequence[Polynomial], field: FieldContext) -> Optional[List[Any]]:
    """Common roots of ``constraints`` in ``field``, sorted; None when nothing constrains t.

    Raises UnresolvedFactor for ℚ(√d) when an irreducible factor of degree >= 3 remains.
    """
    if any(p.degree == 0 for p in constraints):
        return []
    live = [p for p in constraints if p.degree >= 1]
    if not live:
        return None
    common = reduce(lambda a, b: a.gcd(b), live)
    if common.degree < 1:
        return []
    if field.kind == "Q":
        return sorted(rational_roots(common))
    return sorted(quadratic_field_roots(common, field.d))
