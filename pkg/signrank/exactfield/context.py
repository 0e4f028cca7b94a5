"""Field contexts: ℚ, ℚ(√d) and polynomial rings F[α] over either."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Literal, Optional, Union

from signrank.core.errors import ContextMismatch, PolynomialSignUndefined, SerializationError
from signrank.exactfield.quadratic import QuadraticNumber, is_squarefree
from signrank.exactfield.rational import sign_of

ContextKind = Literal["Q", "QuadSqrt", "PolyOver"]
Scalar = Union[Fraction, QuadraticNumber]


@dataclass(frozen=True)
class FieldContext:
    """The field (or polynomial ring) a scalar or matrix belongs to."""
    kind: ContextKind
    d: Optional[int] = None
    base: Optional["FieldContext"] = None

    def __post_init__(self) -> None:
        if self.kind == "QuadSqrt" and (self.d is None or not is_squarefree(self.d)):
            raise ValueError(f"ℚ(√d) needs squarefree d >= 2, got {self.d}")
        if self.kind == "PolyOver" and (self.base is None or self.base.kind == "PolyOver"):
            raise ValueError("polynomial rings are built over ℚ or ℚ(√d) only")

    @classmethod
    def rationals(cls) -> "FieldContext":
        return cls("Q")

    @classmethod
    def quadratic(cls, d: int = 5) -> "FieldContext":
        return cls("QuadSqrt", d=d)

    @classmethod
    def polynomials(cls, base: "FieldContext") -> "FieldContext":
        return cls("PolyOver", base=base)

    @property
    def name(self) -> str:
        if self.kind == "Q":
            return "q"
        if self.kind == "QuadSqrt":
            return f"qsqrt:{self.d}"
        return f"poly:{self.base.name}"

    @classmethod
    def parse(cls, name: str) -> "FieldContext":
        text = name.strip().lower()
        if text.startswith("poly:"):
            return cls.polynomials(cls.parse(text[5:]))
        if text == "q":
            return cls.rationals()
        if text.startswith("qsqrt:"):
            try:
                return cls.quadratic(int(text[6:]))
            except ValueError as exc:
                raise SerializationError(f"bad field name {name!r}: {exc}") from exc
        raise SerializationError(f"unknown field {name!r}")

    @property
    def admits_sign(self) -> bool:
        return self.kind != "PolyOver"

    def __str__(self) -> str:
        if self.kind == "Q":
            return "ℚ"
        if self.kind == "QuadSqrt":
            return f"ℚ(√{self.d})"
        return f"{self.base}[α]"

    # -- elements ----------------------------------------------------------
    def zero(self) -> Any:
        return self.coerce(0)

    def one(self) -> Any:
        return self.coerce(1)

    def coerce(self, value: Any) -> Any:
        """Embed ``value`` along ℚ ⊂ ℚ(√d) ⊂ F[α]; anything else is a mismatch."""
        from signrank.exactfield.polynomial import Polynomial

        if isinstance(value, bool):
            raise ContextMismatch("booleans are not field elements")
        if self.kind == "Q":
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            if isinstance(value, QuadraticNumber) and value.is_rational:
                return value.a
        elif self.kind == "QuadSqrt":
            if isinstance(value, (int, Fraction)):
                return QuadraticNumber(Fraction(value), Fraction(0), self.d)
            if isinstance(value, QuadraticNumber) and value.d == self.d:
                return value
        else:
            if isinstance(value, Polynomial):
                if value.base == self.base:
                    return value
                if value.base.kind == "Q":
                    return value.lift(self.base)
            else:
                return Polynomial.constant(self.base.coerce(value), self.base)
        raise ContextMismatch(f"{value!r} does not belong to {self}")

    def contains(self, value: Any) -> bool:
        from signrank.exactfield.polynomial import Polynomial

        if self.kind == "Q":
            return isinstance(value, Fraction)
        if self.kind == "QuadSqrt":
            return isinstance(value, QuadraticNumber) and value.d == self.d
        return isinstance(value, Polynomial) and value.base == self.base

    def is_zero(self, value: Any) -> bool:
        from signrank.exactfield.polynomial import Polynomial

        if isinstance(value, Polynomial):
            return value.is_zero
        return value == 0

    def exact_div(self, numerator: Any, denominator: Any) -> Any:
        """Division known to be exact (Bareiss steps, field division)."""
        from signrank.exactfield.polynomial import Polynomial

        if isinstance(numerator, Polynomial):
            return numerator.exact_div(denominator)
        return numerator / denominator


QQ = FieldContext.rationals()


def sign(x: Any) -> int:
    """Exact sign of an element of ℚ or ℚ(√d)."""
    from signrank.exactfield.polynomial import Polynomial

    if isinstance(x, Polynomial):
        raise PolynomialSignUndefined("a polynomial has no sign without an evaluation point")
    if isinstance(x, QuadraticNumber):
        return x.sign()
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return sign_of(Fraction(x))
    raise TypeError(f"sign undefined for {x!r}")


def context_of(x: Any) -> FieldContext:
    from signrank.exactfield.polynomial import Polynomial

    if isinstance(x, Polynomial):
        return FieldContext.polynomials(x.base)
    if isinstance(x, QuadraticNumber):
        return FieldContext.quadratic(x.d)
    if isinstance(x, (int, Fraction)):
        return QQ
    raise TypeError(f"not an exact scalar: {x!r}")
