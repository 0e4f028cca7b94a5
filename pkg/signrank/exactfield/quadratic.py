"""Elements a + b·√d of the real quadratic field ℚ(√d)."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Union

from sympy import factorint

from signrank.core.errors import ContextMismatch
from signrank.exactfield.rational import sign_of, to_rational


@lru_cache(maxsize=64)
def is_squarefree(d: int) -> bool:
    if d < 2:
        return False
    return all(exponent == 1 for exponent in factorint(d).values())


@total_ordering
@dataclass(frozen=True, eq=False)
class QuadraticNumber:
    """a + b·√d with rational a, b and squarefree d >= 2.

    The representation is unique, so equality is componentwise.
    """
    a: Fraction
    b: Fraction
    d: int = 5

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", to_rational(self.a))
        object.__setattr__(self, "b", to_rational(self.b))
        if not is_squarefree(self.d):
            raise ValueError(f"d must be a squarefree integer >= 2, got {self.d}")

    @classmethod
    def from_rational(cls, value: Union[int, Fraction], d: int = 5) -> "QuadraticNumber":
        return cls(to_rational(value), Fraction(0), d)

    @classmethod
    def sqrt(cls, d: int = 5) -> "QuadraticNumber":
        return cls(Fraction(0), Fraction(1), d)

    # -- coercion -------------------------------------------------------
    def _lift(self, other: object) -> "QuadraticNumber":
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise ContextMismatch(f"ℚ(√{self.d}) vs ℚ(√{other.d})")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadraticNumber(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: object) -> "QuadraticNumber":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadraticNumber(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self) -> "QuadraticNumber":
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other: object) -> "QuadraticNumber":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadraticNumber(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other: object) -> "QuadraticNumber":
        return (-self) + other

    def __mul__(self, other: object) -> "QuadraticNumber":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadraticNumber(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QuadraticNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in ℚ(√d)")
        return QuadraticNumber(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other: object) -> "QuadraticNumber":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "QuadraticNumber":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "QuadraticNumber":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadraticNumber(Fraction(1), Fraction(0), self.d)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- sign and order -------------------------------------------------
    def sign(self) -> int:
        """Exact sign by comparing a² with b²·d when the signs of a and b differ."""
        sa, sb = sign_of(self.a), sign_of(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        if self.a * self.a > self.b * self.b * self.d:
            return sa
        return sb

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadraticNumber):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __lt__(self, other: object) -> bool:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign() < 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self) -> str:
        return f"QuadraticNumber({self.a}, {self.b}, {self.d})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        head = "" if self.a == 0 else f"{self.a}"
        coef = self.b
        sep = "" if not head else (" + " if coef > 0 else " - ")
        if head:
            coef = abs(coef)
        body = "√" if coef == 1 else ("-√" if coef == -1 else f"{coef}·√")
        return f"{head}{sep}{body}{self.d}"
