"""Exact number helpers.

All finite quantities in this package are `fractions.Fraction`; the only
non-rational value in play is positive infinity (for capacities and
shortest-path distances), represented by `math.inf`.  Fractions compare
exactly against `math.inf`, and sums involving it stay infinite, so the
two mix safely as long as no arithmetic ever multiplies by infinity.
"""

import math
from fractions import Fraction

INF = math.inf

#: A finite exact value or +infinity (capacities, residual capacities, distances).
Extended = Fraction | float


def is_finite(x) -> bool:
    return x != INF


def rational(value) -> Fraction:
    """Coerce ints, Fractions and strings to an exact Fraction.

    Floats are rejected: silently converting them would smuggle binary
    rounding noise into a codebase whose whole point is exactness.
    """
    if isinstance(value, float):
        raise ValueError(f"refusing inexact float {value!r}; pass a Fraction, int or string")
    return Fraction(value)


def parse_extended(text: str):
    """Parse 'inf' or a rational literal ('5', '-5', '3/4', '0.25')."""
    text = text.strip()
    if text.lower() in ("inf", "+inf", "infinity"):
        return INF
    return Fraction(text)


def format_extended(x) -> str:
    if x == INF:
        return "inf"
    return str(Fraction(x))


def ceil_log2(x) -> int:
    """Smallest integer i with 2**i >= x, computed exactly for rational x > 0."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("ceil_log2 requires a positive argument")
    i = x.numerator.bit_length() - x.denominator.bit_length() - 1

    def pow2(k):
        return Fraction(2) ** k

    while pow2(i) < x:
        i += 1
    while pow2(i - 1) >= x:
        i -= 1
    return i
