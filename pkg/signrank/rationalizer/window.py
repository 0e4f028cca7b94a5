"""Rational windows standing in for a transcendental α."""

from dataclasses import dataclass
from fractions import Fraction

from signrank.exactfield.rational import RationalLike, format_rational, to_rational


@dataclass(frozen=True)
class Window:
    """Open interval (lo, hi) the caller asserts contains α."""
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        lo, hi = to_rational(self.lo), to_rational(self.hi)
        if not lo < hi:
            raise ValueError(f"window needs lo < hi, got ({lo}, {hi})")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def of(cls, lo: RationalLike, hi: RationalLike) -> "Window":
        return cls(to_rational(lo), to_rational(hi))

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Fraction) -> bool:
        return self.lo < x < self.hi

    def shrink_around(self, anchor: Fraction) -> "Window":
        """Halve the left part and third the right part around an interior anchor."""
        if not self.contains(anchor):
            raise ValueError(f"anchor {anchor} is not inside {self}")
        return Window(anchor - (anchor - self.lo) / 2, anchor + (self.hi - anchor) / 3)

    def __str__(self) -> str:
        return f"({format_rational(self.lo)}, {format_rational(self.hi)})"
