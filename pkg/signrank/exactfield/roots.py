"""Evaluation, Sturm root counting, and exact root extraction in ℚ and ℚ(√d)."""

import logging
from fractions import Fraction
from math import lcm
from typing import Any, List, Set

import sympy
from sympy import divisors

from signrank.core.errors import ContextMismatch, EndpointIsRoot, UnresolvedFactor, ZeroPolynomial
from signrank.exactfield.context import QQ, sign
from signrank.exactfield.polynomial import Polynomial
from signrank.exactfield.quadratic import QuadraticNumber, is_squarefree
from signrank.exactfield.rational import rational_sqrt, to_rational

logger = logging.getLogger(__name__)


def poly_eval(p: Polynomial, v: Any) -> Any:
    """Exact Horner evaluation of ``p`` at ``v``."""
    if isinstance(v, QuadraticNumber) and p.base.kind == "QuadSqrt" and v.d != p.base.d:
        raise ContextMismatch(f"{v} is not in {p.base}")
    return p(v)


def sturm_sequence(p: Polynomial) -> List[Polynomial]:
    """Sturm chain built from sign-corrected pseudo-remainders.

    Each term equals the classical negated remainder times a positive factor,
    so sign variations are unchanged.
    """
    if p.is_zero:
        raise ZeroPolynomial("Sturm sequence of the zero polynomial")
    rational = p.has_rational_coeffs

    def tidy(q: Polynomial) -> Polynomial:
        return q.primitive() if rational and not q.is_zero else q

    chain = [tidy(p)]
    derivative = tidy(p.derivative())
    if derivative.is_zero:
        return chain
    chain.append(derivative)
    while True:
        a, b = chain[-2], chain[-1]
        if b.degree <= 0:
            break
        delta = a.degree - b.degree
        lead_sign = sign(b.leading)
        nxt = -a.pseudo_remainder(b).scale(lead_sign ** (delta + 1))
        if nxt.is_zero:
            break
        chain.append(tidy(nxt))
    return chain


def sign_variations(chain: List[Polynomial], x: Fraction) -> int:
    signs = [s for s in (sign(q(x)) for q in chain) if s != 0]
    return sum(1 for left, right in zip(signs, signs[1:]) if left != right)


def sturm_root_count(p: Polynomial, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of ``p`` in the open interval (lo, hi)."""
    lo, hi = to_rational(lo), to_rational(hi)
    if p.is_zero:
        raise ZeroPolynomial("cannot count roots of the zero polynomial")
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    for endpoint in (lo, hi):
        if p(endpoint) == 0:
            raise EndpointIsRoot(endpoint)
    chain = sturm_sequence(p)
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def _integer_coefficients(p: Polynomial) -> List[int]:
    coeffs = [Polynomial._rational(c) for c in p.coeffs]
    scale = lcm(*(c.denominator for c in coeffs))
    return [int(c * scale) for c in coeffs]


def rational_roots(p: Polynomial) -> Set[Fraction]:
    """All rational roots, via the rational-root theorem on the integer form."""
    if p.is_zero:
        raise ZeroPolynomial("every rational is a root of the zero polynomial")
    if not p.has_rational_coeffs:
        raise ContextMismatch(f"{p} has irrational coefficients")
    q = p.to_rational()
    roots: Set[Fraction] = set()
    coeffs = _integer_coefficients(q)
    while coeffs and coeffs[0] == 0:
        roots.add(Fraction(0))
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return roots
    constant, leading = abs(coeffs[0]), abs(coeffs[-1])
    for num in divisors(constant):
        for den in divisors(leading):
            for candidate in (Fraction(num, den), Fraction(-num, den)):
                if candidate not in roots and q(candidate) == 0:
                    roots.add(candidate)
    return roots


def _sympy_factors(p: Polynomial) -> List[Polynomial]:
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(p.to_rational().coeffs))
    _, factors = sympy.factor_list(expr, x, domain=sympy.QQ)
    result = []
    for factor, _multiplicity in factors:
        coeffs = sympy.Poly(factor, x).all_coeffs()[::-1]
        result.append(Polynomial.of((Fraction(int(c.p), int(c.q)) for c in coeffs), QQ))
    return result


def _quadratic_roots(q: Polynomial, d: int) -> List[QuadraticNumber]:
    c0, c1, c2 = q.coeffs
    discriminant = c1 * c1 - 4 * c2 * c0
    root = rational_sqrt(discriminant / d)
    if root is None or root == 0:
        return []
    return [
        QuadraticNumber(-c1 / (2 * c2), sgn * root / (2 * c2), d)
        for sgn in (1, -1)
    ]


def quadratic_field_roots(p: Polynomial, d: int) -> Set[QuadraticNumber]:
    """All roots of ``p`` lying in ℚ(√d).

    Squarefree part first, then rational roots are split off; a quadratic
    remainder is solved directly, larger remainders are factored over ℚ and
    any factor of degree >= 3 raises UnresolvedFactor.
    """
    if not is_squarefree(d):
        raise ValueError(f"d must be squarefree >= 2, got {d}")
    if p.is_zero:
        raise ZeroPolynomial("every element is a root of the zero polynomial")
    if not p.has_rational_coeffs:
        raise ContextMismatch(f"{p} has irrational coefficients")
    reduced = p.to_rational().squarefree_part()
    found: Set[QuadraticNumber] = set()
    for r in sorted(rational_roots(reduced)):
        found.add(QuadraticNumber.from_rational(r, d))
        reduced = reduced.exact_div(Polynomial.of((-r, 1), QQ))
    if reduced.degree <= 0:
        return found
    pieces = [reduced] if reduced.degree == 2 else _sympy_factors(reduced)
    for piece in pieces:
        if piece.degree <= 0:
            continue
        if piece.degree >= 3:
            logger.debug("unresolved factor %s", piece)
            raise UnresolvedFactor(piece.degree)
        if piece.degree == 2:
            found.update(_quadratic_roots(piece, d))
    return found
