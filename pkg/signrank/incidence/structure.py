"""Point-line incidence structures and their incidence matrices."""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Dict, FrozenSet, List, Sequence, Tuple

from signrank.core.errors import InvalidStructure

MIN_LINE_SIZE = 2


@dataclass(frozen=True)
class IncidenceStructure:
    """Ordered point labels and ordered lines (each line keeps its listed member order).

    Validated on construction: lines have at least two points, every member
    is a declared point, two lines meet in at most one point and no line is
    listed twice.
    """
    points: Tuple[str, ...]
    lines: Tuple[Tuple[str, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "lines", tuple(tuple(line) for line in self.lines))
        self.validate()

    @classmethod
    def from_lines(cls, points: Sequence[str], lines: Sequence[Sequence[str]]) -> "IncidenceStructure":
        return cls(tuple(points), tuple(tuple(line) for line in lines))

    def validate(self) -> None:
        if not self.points:
            raise InvalidStructure("a structure needs at least one point")
        if len(set(self.points)) != len(self.points):
            raise InvalidStructure(f"duplicate point labels in {list(self.points)}")
        declared = set(self.points)
        seen: Dict[FrozenSet[str], int] = {}
        for index, line in enumerate(self.lines):
            members = frozenset(line)
            if len(members) != len(line):
                raise InvalidStructure(f"line {index} repeats a point: {''.join(line)}")
            if len(members) < MIN_LINE_SIZE:
                raise InvalidStructure(f"line {index} has fewer than {MIN_LINE_SIZE} points")
            unknown = members - declared
            if unknown:
                raise InvalidStructure(f"line {index} uses undeclared points {sorted(unknown)}")
            if members in seen:
                raise InvalidStructure(f"lines {seen[members]} and {index} are the same line")
            seen[members] = index
        for (i, a), (j, b) in combinations(enumerate(self.lines), 2):
            shared = set(a) & set(b)
            if len(shared) > 1:
                raise InvalidStructure(f"lines {i} and {j} share {sorted(shared)}")

    # -- queries -----------------------------------------------------------
    def line_sets(self) -> List[FrozenSet[str]]:
        return [frozenset(line) for line in self.lines]

    def lines_through(self, label: str) -> List[int]:
        return [i for i, line in enumerate(self.lines) if label in line]

    def degree(self, label: str) -> int:
        return len(self.lines_through(label))

    def is_incident(self, line_index: int, label: str) -> bool:
        return label in self.lines[line_index]

    def collinear(self, labels: Sequence[str]) -> bool:
        """True if all ``labels`` lie on one structure line."""
        wanted = set(labels)
        return any(wanted <= set(line) for line in self.lines)

    def line_name(self, index: int) -> str:
        return "".join(self.lines[index])


class Incidence(str, Enum):
    INCIDENT = "incident"
    NON_INCIDENT = "non-incident"


@dataclass(frozen=True)
class IncidenceMatrix:
    """Rows are lines, columns are points (both in structure order)."""
    points: Tuple[str, ...]
    entries: Tuple[Tuple[Incidence, ...], ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.entries), len(self.points)

    def incident_count(self) -> int:
        return sum(1 for row in self.entries for x in row if x is Incident)

    def non_incident_count(self) -> int:
        rows, cols = self.shape
        return rows * cols - self.incident_count()

    def row_sums(self) -> List[int]:
        return [sum(1 for x in row if x is Incident) for row in self.entries]

    def column_sums(self) -> List[int]:
        return [sum(1 for row in self.entries if row[j] is Incident) for j in range(len(self.points))]

    def incident_positions(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.entries) for j, x in enumerate(row) if x is Incident]


Incident = Incidence.INCIDENT
NonIncident = Incidence.NON_INCIDENT


def incidence_matrix(s: IncidenceStructure) -> IncidenceMatrix:
    return IncidenceMatrix(
        s.points,
        tuple(tuple(Incident if p in line else NonIncident for p in s.points) for line in s.lines),
    )
