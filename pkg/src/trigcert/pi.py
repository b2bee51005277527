"""Two-sided enclosures of pi from inscribed and circumscribed regular polygons.

For a regular n-gon inscribed in the unit circle the area is
``(n/2) sin(1/n turn)``; the circumscribed one has area ``n tan(1/(2n) turn)``.
The inscribed areas increase and the circumscribed areas decrease towards the
same limit, which is taken as the definition of pi.  Only n = 2**k is used so
that every angle involved is reachable by exact halving.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .bignum import DOWN, UP, Dyadic, Interval, check_bits, dy_round, iv_scale2
from .errors import CapacityError, DomainError
from .trig_core import TURNS, AngleUnit, evaluate, tan_of

__all__ = [
    "PiEnclosure", "inscribed_area", "circumscribed_area", "pi_enclosure",
    "pi_to_digits", "digits_enclosure", "max_bits_from_env",
    "MAX_BITS_ENV", "DEFAULT_MAX_BITS", "MAX_DEPTH",
]

MAX_BITS_ENV = "TRIGCERT_MAX_BITS"
DEFAULT_MAX_BITS = 1 << 20
MAX_DEPTH = 1 << 16

_LOG2_10 = math.log2(10)


def max_bits_from_env() -> int:
    raw = os.environ.get(MAX_BITS_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_BITS
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_BITS_ENV} must be an integer, got {raw!r}") from None
    return check_bits(value)


@dataclass(frozen=True)
class PiEnclosure:
    lower: Dyadic
    upper: Dyadic
    k: int
    precision_used: int

    @property
    def sides(self) -> int:
        return 1 << self.k

    def width(self) -> Dyadic:
        return self.upper - self.lower

    def interval(self) -> Interval:
        return Interval(self.lower, self.upper)

    def contains(self, value: Fraction) -> bool:
        return self.lower.to_fraction() <= value <= self.upper.to_fraction()


def _check_depth(k: int) -> None:
    if k < 2:
        raise DomainError(f"polygon depth must be >= 2 (a square), got {k}")
    if k > MAX_DEPTH:
        raise CapacityError(f"polygon depth {k} exceeds the maximum {MAX_DEPTH}")


def inscribed_area(k: int, bits: int, unit: AngleUnit = TURNS) -> Interval:
    """Enclosure of ``2**(k-1) * sin_c(c / 2**k)``, width at most ``2**(3 - bits)``.

    The value does not depend on the angle unit ``c``; passing a unit other
    than turns routes the angle through that unit's conversion.
    """
    _check_depth(k)
    check_bits(bits)
    pair = evaluate(unit, unit.c / (1 << k), bits + k)
    return iv_scale2(pair.s, k - 1)


def circumscribed_area(k: int, bits: int, unit: AngleUnit = TURNS) -> Interval:
    """Enclosure of ``2**k * tan_c(c / 2**(k+1))``."""
    _check_depth(k)
    check_bits(bits)
    pair = evaluate(unit, unit.c / (1 << (k + 1)), bits + k + 4)
    return iv_scale2(tan_of(pair, bits + k + 4), k)


def pi_enclosure(k: int, bits: int, unit: AngleUnit = TURNS) -> PiEnclosure:
    lower = dy_round(inscribed_area(k, bits, unit).lo, bits, DOWN)
    upper = dy_round(circumscribed_area(k, bits, unit).hi, bits, UP)
    return PiEnclosure(lower, upper, k, bits)


def _truncate(x: Dyadic, places: int) -> int:
    return math.floor(x.to_fraction() * 10**places)


def digits_enclosure(d: int, max_bits: int | None = None) -> tuple[str, PiEnclosure]:
    """Certified truncation of pi to ``d`` decimals, and the bracket that proves it.

    The polygon depth starts at the value where the bracket width (which
    shrinks by about 4 per step) drops below ``10**-d / 2``, and is increased
    until both bounds truncate to the same decimal string.
    """
    if d < 1:
        raise DomainError("digit count must be >= 1")
    if max_bits is None:
        max_bits = max_bits_from_env()
    k = max(2, math.ceil((d * _LOG2_10 + 6) / 2))
    half_ulp = Fraction(1, 2 * 10**d)
    while True:
        bits = math.ceil(d * _LOG2_10) + 32
        if k > MAX_DEPTH or bits + k > max_bits:
            raise CapacityError(
                f"{d} digits need depth {k} at {bits + k} bits, beyond the cap of {max_bits} bits"
            )
        enc = pi_enclosure(k, bits)
        lo, hi = _truncate(enc.lower, d), _truncate(enc.upper, d)
        if enc.width().to_fraction() < half_ulp and lo == hi:
            text = str(lo)
            return f"{text[0]}.{text[1:]}", enc
        k += 1


def pi_to_digits(d: int) -> str:
    """``"3."`` followed by the first d decimals of pi (truncated, so the error is below ``10**-d``)."""
    return digits_enclosure(d)[0]
