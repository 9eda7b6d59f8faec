"""Exact comparisons between rationals and square-root expressions.

All extremality and bound checks compare integers/rationals against
quantities of the form c + sqrt(a) or c + sqrt(a) + sqrt(b) with a, b
rational.  Comparing on squared forms keeps every verdict exact; floats
only ever appear in *display* values, never in decisions.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

Rat = Fraction | int


def _sign(q: Rational) -> int:
    return (q > 0) - (q < 0)


def cmp_sqrt(q: Rat, a: Rat) -> int:
    """Sign of q - sqrt(a) for rational q and rational a >= 0."""
    if a < 0:
        raise ValueError(f"sqrt of negative rational {a}")
    if q < 0:
        return -1
    return _sign(Fraction(q) * q - a)


def leq_sqrt(q: Rat, a: Rat) -> bool:
    """q <= sqrt(a)."""
    return cmp_sqrt(q, a) <= 0


def geq_sqrt(q: Rat, a: Rat) -> bool:
    """q >= sqrt(a)."""
    return cmp_sqrt(q, a) >= 0


def lt_sqrt(q: Rat, a: Rat) -> bool:
    """q < sqrt(a)."""
    return cmp_sqrt(q, a) < 0


def cmp_sqrt_sum(q: Rat, a: Rat, b: Rat) -> int:
    """Sign of q - (sqrt(a) + sqrt(b)) for rationals a, b >= 0."""
    if a < 0 or b < 0:
        raise ValueError("sqrt of negative rational")
    if q < 0:
        return -1
    # q >= 0: compare q^2 with a + b + 2*sqrt(ab)
    t = Fraction(q) * q - a - b
    if t < 0:
        return -1
    # t >= 0: compare t with 2*sqrt(ab)
    return _sign(t * t - 4 * Fraction(a) * b)


def cmp_scaled_sqrt(c: Rat, x: Rat, d: Rat) -> int:
    """Sign of c*sqrt(x) - d for rational c, d and rational x >= 0."""
    if x < 0:
        raise ValueError(f"sqrt of negative rational {x}")
    lhs_sign = _sign(c) if x > 0 else 0
    if lhs_sign == 0:
        return _sign(-d)
    if lhs_sign > 0:
        if d < 0:
            return 1
        return _sign(Fraction(c) * c * x - Fraction(d) * d)
    # c*sqrt(x) < 0
    if d >= 0:
        return -1
    return _sign(Fraction(d) * d - Fraction(c) * c * x)


def sqrt_approx(a: Rat, digits: int = 9) -> Fraction:
    """Rational approximation of sqrt(a) accurate to 10**-digits."""
    if a < 0:
        raise ValueError(f"sqrt of negative rational {a}")
    a = Fraction(a)
    scale = 10 ** digits
    # isqrt(a * scale^2) / scale underestimates by < 1/scale
    from math import isqrt

    val = isqrt((a.numerator * scale * scale) // a.denominator)
    return Fraction(val, scale)
