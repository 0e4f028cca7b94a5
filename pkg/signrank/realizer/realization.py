"""Homogeneous-coordinate models of incidence structures."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

from signrank.exactfield import FieldContext, Polynomial, QuadraticNumber
from signrank.incidence.structure import IncidenceStructure

logger = logging.getLogger(__name__)

Triple = Tuple[Any, Any, Any]


def cross(u: Sequence[Any], v: Sequence[Any]) -> Triple:
    """Line through two points, or meet of two lines."""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence[Any], v: Sequence[Any]) -> Any:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _is_zero(x: Any) -> bool:
    if isinstance(x, (Polynomial, QuadraticNumber)):
        return x.is_zero
    return x == 0


def is_zero_triple(u: Sequence[Any]) -> bool:
    return all(_is_zero(x) for x in u)


@dataclass(frozen=True)
class Realization:
    """Point triples by label and line triples by line index, all over ``field``."""
    field: FieldContext
    point_coords: Dict[str, Triple]
    line_coeffs: Dict[int, Triple]

    def __post_init__(self) -> None:
        coerce = self.field.coerce
        object.__setattr__(
            self, "point_coords", {k: tuple(coerce(x) for x in v) for k, v in self.point_coords.items()}
        )
        object.__setattr__(
            self, "line_coeffs", {int(k): tuple(coerce(x) for x in v) for k, v in self.line_coeffs.items()}
        )

    def point(self, label: str) -> Triple:
        return self.point_coords[label]

    def line(self, index: int) -> Triple:
        return self.line_coeffs[index]


def validate_realization(s: IncidenceStructure, r: Realization) -> bool:
    """Exhaustive exact check: incidences hold, non-incidences are strict,
    points and lines pairwise distinct as projective elements."""
    if set(r.point_coords) != set(s.points) or set(r.line_coeffs) != set(range(len(s.lines))):
        logger.debug("realization labels do not match the structure")
        return False
    for label in s.points:
        if is_zero_triple(r.point(label)):
            logger.debug("point %s is the zero triple", label)
            return False
    for i in range(len(s.lines)):
        if is_zero_triple(r.line(i)):
            logger.debug("line %s is the zero triple", s.line_name(i))
            return False
    for i in range(len(s.lines)):
        for label in s.points:
            on_line = r.field.is_zero(dot(r.line(i), r.point(label)))
            if on_line != s.is_incident(i, label):
                logger.debug("incidence of %s with %s is wrong", label, s.line_name(i))
                return False
    for n, a in enumerate(s.points):
        for b in s.points[n + 1:]:
            if is_zero_triple(cross(r.point(a), r.point(b))):
                logger.debug("points %s and %s coincide", a, b)
                return False
    for i in range(len(s.lines)):
        for j in range(i + 1, len(s.lines)):
            if is_zero_triple(cross(r.line(i), r.line(j))):
                logger.debug("lines %s and %s coincide", s.line_name(i), s.line_name(j))
                return False
    return True
