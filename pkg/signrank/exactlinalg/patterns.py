"""Sign pattern matrices and the entrywise sign map sgn."""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Sequence, Tuple

from signrank.core.errors import DimensionMismatch, PolynomialSignUndefined, SerializationError
from signrank.exactfield import sign
from signrank.exactlinalg.matrix import ExactMatrix


class Sign(str, Enum):
    PLUS = "+"
    MINUS = "-"
    ZERO = "0"

    @classmethod
    def of(cls, value: int) -> "Sign":
        return cls.PLUS if value > 0 else cls.MINUS if value < 0 else cls.ZERO

    @property
    def value_int(self) -> int:
        return {"+": 1, "-": -1, "0": 0}[self.value]


@dataclass(frozen=True)
class SignPattern:
    """m×n grid over {+, −, 0}."""
    entries: Tuple[Tuple[Sign, ...], ...]

    def __post_init__(self) -> None:
        grid = tuple(tuple(Sign(x) for x in row) for row in self.entries)
        if not grid or not grid[0] or any(len(row) != len(grid[0]) for row in grid):
            raise DimensionMismatch("sign pattern grid must be rectangular and nonempty")
        object.__setattr__(self, "entries", grid)

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "SignPattern":
        try:
            return cls(tuple(tuple(Sign(ch) for ch in row) for row in rows))
        except ValueError as exc:
            raise SerializationError(f"sign patterns use the alphabet '+-0': {exc}") from exc

    @classmethod
    def from_signs(cls, rows: Iterable[Iterable[int]]) -> "SignPattern":
        return cls(tuple(tuple(Sign.of(x) for x in row) for row in rows))

    def to_strings(self) -> List[str]:
        return ["".join(x.value for x in row) for row in self.entries]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Sign:
        i, j = index
        return self.entries[i][j]

    @property
    def T(self) -> "SignPattern":
        return SignPattern(tuple(zip(*self.entries)))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.T

    def nonzero_count(self) -> int:
        return sum(1 for row in self.entries for x in row if x is not Sign.ZERO)

    def zero_positions(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.entries) for j, x in enumerate(row) if x is Sign.ZERO]

    def sign_matrix(self) -> ExactMatrix:
        """The ±1/0 matrix of this pattern (a rational member of its class)."""
        return ExactMatrix.from_rows([[x.value_int for x in row] for row in self.entries])

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def sgn(m: ExactMatrix) -> SignPattern:
    """Entrywise exact sign of a matrix over ℚ or ℚ(√d)."""
    if not m.context.admits_sign:
        raise PolynomialSignUndefined(f"sgn undefined over {m.context}")
    return SignPattern(tuple(tuple(Sign.of(sign(x)) for x in row) for row in m.entries))
