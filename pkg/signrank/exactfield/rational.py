"""Rational helpers on top of fractions.Fraction (the Rational type)."""

from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from signrank.core.errors import SerializationError

Rational = Fraction
RationalLike = Union[int, Fraction, str]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a canonical Fraction."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"not a rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p". Floats are rejected; exactness end-to-end."""
    cleaned = text.strip()
    if not cleaned or any(ch in cleaned for ch in ".eE"):
        raise SerializationError(f"not an exact rational string: {text!r}")
    try:
        value = Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as exc:
        raise SerializationError(f"not an exact rational string: {text!r}") from exc
    return value


def format_rational(value: Fraction) -> str:
    """"p/q", or "p" when q = 1."""
    value = to_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """Exact square root when ``value`` is the square of a rational, else None."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def sign_of(value: Fraction) -> int:
    return (value > 0) - (value < 0)
