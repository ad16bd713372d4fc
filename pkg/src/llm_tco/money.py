"""Exact decimal money arithmetic.

All engine amounts are USD Decimals. Arithmetic stays exact whenever the
result has a finite decimal expansion; only genuinely non-terminating
results (e.g. costs at an irrational-looking break-even time) are settled
onto the micro-dollar grid, half away from zero.
"""

from __future__ import annotations

from decimal import Decimal, ROUND_HALF_UP, localcontext
from fractions import Fraction

MICRO = Decimal("0.000001")
CENT = Decimal("0.01")


def to_money(value: Fraction | Decimal | int) -> Decimal:
    """Convert an exact rational amount to a money Decimal.

    Exact when the denominator is of the form 2^a * 5^b; otherwise rounded
    half-up at micro-dollar resolution.
    """
    if isinstance(value, Decimal):
        return value
    if isinstance(value, int):
        return Decimal(value)
    num, den = value.numerator, value.denominator
    d = den
    for p in (2, 5):
        while d % p == 0:
            d //= p
    with localcontext() as ctx:
        ctx.prec = 50
        exact = Decimal(num) / Decimal(den)
    if d == 1:
        return exact
    return exact.quantize(MICRO, rounding=ROUND_HALF_UP)


def as_fraction(value: Decimal | Fraction | int) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def round_cents(value: Decimal) -> Decimal:
    return value.quantize(CENT, rounding=ROUND_HALF_UP)


def money_str(value: Decimal) -> str:
    """Decimal-string form with at least two decimals and no digit loss."""
    exponent = value.as_tuple().exponent
    if isinstance(exponent, int) and exponent > -2:
        return str(value.quantize(CENT))
    return str(value)


def format_usd(value: Decimal) -> str:
    """Display form: two decimals, half away from zero, leading dollar sign."""
    return f"${round_cents(value)}"
