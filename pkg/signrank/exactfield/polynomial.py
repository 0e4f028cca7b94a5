"""Univariate polynomials over ℚ or ℚ(√d), index = degree."""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Any, Iterable, Tuple

from signrank.core.errors import ContextMismatch, ZeroPolynomial
from signrank.exactfield.context import QQ, FieldContext, Scalar
from signrank.exactfield.quadratic import QuadraticNumber


@dataclass(frozen=True)
class Polynomial:
    """Canonical polynomial: no trailing zero coefficient; zero has ``coeffs == ()``."""
    coeffs: Tuple[Any, ...]
    base: FieldContext = QQ

    def __post_init__(self) -> None:
        if self.base.kind == "PolyOver":
            raise ContextMismatch("nested polynomial rings are not supported")
        items = [self.base.coerce(c) for c in self.coeffs]
        while items and items[-1] == 0:
            items.pop()
        object.__setattr__(self, "coeffs", tuple(items))

    # -- constructors ---------------------------------------------------
    @classmethod
    def of(cls, coeffs: Iterable[Any], base: FieldContext = QQ) -> "Polynomial":
        return cls(tuple(coeffs), base)

    @classmethod
    def constant(cls, value: Any, base: FieldContext = QQ) -> "Polynomial":
        return cls((value,), base)

    @classmethod
    def x(cls, base: FieldContext = QQ) -> "Polynomial":
        return cls((0, 1), base)

    @classmethod
    def zero(cls, base: FieldContext = QQ) -> "Polynomial":
        return cls((), base)

    # -- basic properties -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Any:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def has_rational_coeffs(self) -> bool:
        return self.base.kind == "Q" or all(c.is_rational for c in self.coeffs)

    def lift(self, base: FieldContext) -> "Polynomial":
        """Embed a polynomial over ℚ into ℚ(√d)."""
        if base == self.base:
            return self
        if not self.has_rational_coeffs:
            raise ContextMismatch(f"cannot move {self} from {self.base} to {base}")
        return Polynomial(tuple(self._rational(c) for c in self.coeffs), base)

    def to_rational(self) -> "Polynomial":
        return self.lift(QQ)

    @staticmethod
    def _rational(c: Any) -> Fraction:
        return c.a if isinstance(c, QuadraticNumber) else Fraction(c)

    # -- arithmetic -------------------------------------------------------
    def _other(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.base == self.base:
                return other
            if other.base.kind == "Q":
                return other.lift(self.base)
            if self.base.kind == "Q" and self.has_rational_coeffs:
                return other
            raise ContextMismatch(f"{self.base} vs {other.base}")
        return Polynomial.constant(other, self.base)

    def _promote(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        if self.base == other.base:
            return self, other
        return self.lift(other.base), other

    def __add__(self, other: Any) -> "Polynomial":
        a, b = self._promote(self._other(other))
        n = max(len(a.coeffs), len(b.coeffs))
        zero = a.base.zero()
        out = [
            (a.coeffs[i] if i < len(a.coeffs) else zero) + (b.coeffs[i] if i < len(b.coeffs) else zero)
            for i in range(n)
        ]
        return Polynomial(tuple(out), a.base)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs), self.base)

    def __sub__(self, other: Any) -> "Polynomial":
        return self + (-self._other(other))

    def __rsub__(self, other: Any) -> "Polynomial":
        return self._other(other) - self

    def __mul__(self, other: Any) -> "Polynomial":
        a, b = self._promote(self._other(other))
        if a.is_zero or b.is_zero:
            return Polynomial.zero(a.base)
        out = [a.base.zero()] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ca in enumerate(a.coeffs):
            if ca == 0:
                continue
            for j, cb in enumerate(b.coeffs):
                out[i + j] = out[i + j] + ca * cb
        return Polynomial(tuple(out), a.base)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative powers of polynomials are not polynomials")
        result = Polynomial.constant(1, self.base)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Any) -> "Polynomial":
        factor = self.base.coerce(factor)
        return Polynomial(tuple(c * factor for c in self.coeffs), self.base)

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return Polynomial((0,) * k + self.coeffs, self.base)

    def __divmod__(self, other: Any) -> Tuple["Polynomial", "Polynomial"]:
        divisor = self._other(other)
        a, b = self._promote(divisor)
        if b.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(a.coeffs)
        quotient = [a.base.zero()] * max(len(remainder) - len(b.coeffs) + 1, 0)
        lead = b.leading
        for k in range(len(quotient) - 1, -1, -1):
            factor = remainder[k + b.degree] / lead
            quotient[k] = factor
            if factor == 0:
                continue
            for j, cb in enumerate(b.coeffs):
                remainder[k + j] = remainder[k + j] - factor * cb
        return Polynomial(tuple(quotient), a.base), Polynomial(tuple(remainder[: b.degree] if b.degree > 0 else ()), a.base)

    def __floordiv__(self, other: Any) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: Any) -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: Any) -> "Polynomial":
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return quotient

    def pseudo_remainder(self, other: "Polynomial") -> "Polynomial":
        """lc(other)^(δ+1)·self mod other, computed without field division."""
        a, b = self._promote(self._other(other))
        if b.is_zero:
            raise ZeroDivisionError("pseudo-remainder by zero")
        delta = a.degree - b.degree
        if delta < 0:
            return a
        lead = b.leading
        r = a
        steps = delta + 1
        while not r.is_zero and r.degree >= b.degree:
            r = r.scale(lead) - b.shift(r.degree - b.degree).scale(r.leading)
            steps -= 1
        return r.scale(lead ** steps) if steps > 0 else r

    # -- calculus and normal forms -----------------------------------------
    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(c * i for i, c in enumerate(self.coeffs) if i > 0), self.base)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading if isinstance(self.leading, Fraction) else self.leading.inverse())

    def content(self) -> Fraction:
        """Positive rational content (gcd of numerators over lcm of denominators)."""
        coeffs = [self._rational(c) for c in self.to_rational().coeffs]
        if not coeffs:
            return Fraction(0)
        num = abs(reduce(gcd, (c.numerator for c in coeffs)))
        den = reduce(lcm, (c.denominator for c in coeffs))
        return Fraction(num, den)

    def primitive(self) -> "Polynomial":
        """Integer coefficients with gcd 1, same sign as self (ℚ coefficients only)."""
        if self.is_zero:
            return self
        return Polynomial(tuple(c / self.content() for c in self.to_rational().coeffs), QQ).lift(self.base)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic gcd (zero when both are zero)."""
        a, b = self._promote(self._other(other))
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def lcm(self, other: "Polynomial") -> "Polynomial":
        a, b = self._promote(self._other(other))
        if a.is_zero or b.is_zero:
            return Polynomial.zero(a.base)
        return (a * b).exact_div(a.gcd(b)).monic()

    def squarefree_part(self) -> "Polynomial":
        if self.is_zero:
            raise ZeroPolynomial("squarefree part of zero")
        if self.degree <= 0:
            return Polynomial.constant(1, self.base)
        return self.exact_div(self.gcd(self.derivative())).monic()

    # -- evaluation ---------------------------------------------------------
    def __call__(self, value: Scalar) -> Any:
        """Horner evaluation; ℚ-coefficient polynomials may be evaluated in ℚ(√d)."""
        if isinstance(value, Polynomial):
            raise ContextMismatch("evaluate at a scalar, not a polynomial")
        if isinstance(value, QuadraticNumber) and self.base.kind == "QuadSqrt" and value.d != self.base.d:
            raise ContextMismatch(f"{value} is not in {self.base}")
        if self.base.kind == "QuadSqrt" and isinstance(value, int):
            value = Fraction(value)
        result: Any = self.base.zero() if not isinstance(value, QuadraticNumber) else value * 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            text = str(c)
            if isinstance(c, QuadraticNumber) and not c.is_rational:
                text = f"({text})"
            if i == 0:
                terms.append(text)
            else:
                power = "x" if i == 1 else f"x^{i}"
                if c == 1:
                    terms.append(power)
                elif c == -1:
                    terms.append(f"-{power}")
                else:
                    terms.append(f"{text}*{power}")
        return " + ".join(terms).replace("+ -", "- ")
