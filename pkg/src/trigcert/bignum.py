"""Exact dyadic numbers and outward-rounded interval arithmetic.

A :class:`Dyadic` is ``mantissa * 2**exponent`` with an unbounded integer
mantissa.  Addition, subtraction and multiplication are exact.  Division and
square root take a precision (number of significant bits) and a rounding
direction, and return the correctly rounded result in that direction.

:class:`Interval` pairs two dyadics.  Every ``iv_*`` operation returns an
interval that contains the exact result for all point inputs drawn from its
arguments, with endpoints rounded outward to the requested precision.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapacityError, DomainError

__all__ = [
    "Dyadic", "Interval", "Rounding", "DOWN", "UP", "ZERO", "ONE",
    "dy_add", "dy_sub", "dy_mul", "dy_round", "dy_div", "dy_sqrt",
    "dy_from_fraction", "dy_to_decimal", "dy_decimal_exponent",
    "iv_add", "iv_sub", "iv_mul", "iv_div", "iv_sqrt", "iv_square", "iv_neg",
    "iv_scale2", "iv_round", "iv_width", "iv_contains", "iv_midpoint",
    "iv_intersect", "iv_hull", "iv_from_fraction", "check_bits",
]

# Exponents are kept within a signed 63-bit range.
EXP_LIMIT = (1 << 62) - 1
# Largest alignment shift an exact addition or comparison may perform.
MAX_SHIFT = 1 << 28
MIN_BITS = 4


class Rounding(enum.Enum):
    DOWN = "down"
    UP = "up"


DOWN = Rounding.DOWN
UP = Rounding.UP


def check_bits(bits: int) -> int:
    if not isinstance(bits, int) or isinstance(bits, bool) or bits < MIN_BITS:
        raise ValueError(f"precision must be an integer >= {MIN_BITS}, got {bits!r}")
    return bits


@dataclass(frozen=True, slots=True)
class Dyadic:
    """The number ``mantissa * 2**exponent``, always stored in canonical form.

    Canonical form has an odd mantissa, or mantissa 0 with exponent 0, so the
    generated ``__eq__``/``__hash__`` coincide with numeric equality.
    """

    mantissa: int
    exponent: int = 0

    def __post_init__(self):
        m, e = self.mantissa, self.exponent
        if m == 0:
            e = 0
        else:
            tz = (m & -m).bit_length() - 1
            if tz:
                m >>= tz
                e += tz
        if not -EXP_LIMIT <= e <= EXP_LIMIT:
            raise CapacityError(f"dyadic exponent {e} outside the supported range")
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exponent", e)

    # construction / conversion

    @classmethod
    def from_int(cls, n: int) -> Dyadic:
        return cls(n, 0)

    @classmethod
    def parse(cls, text: str) -> Dyadic:
        """Parse ``"m*2^e"``, a plain integer, or ``"p/q"`` with q a power of two."""
        s = text.strip()
        match = _DYADIC_RE.match(s)
        if match:
            return cls(int(match.group(1)), int(match.group(2)))
        try:
            q = Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a dyadic literal: {text!r}") from None
        return dy_from_fraction(q)

    def to_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.mantissa << self.exponent)
        return Fraction(self.mantissa, 1 << -self.exponent)

    def __float__(self) -> float:
        return float(self.to_fraction())

    def __str__(self) -> str:
        return f"{self.mantissa}*2^{self.exponent}"

    def __repr__(self) -> str:
        return f"Dyadic({self.mantissa}, {self.exponent})"

    # queries

    def is_zero(self) -> bool:
        return self.mantissa == 0

    def sign(self) -> int:
        return (self.mantissa > 0) - (self.mantissa < 0)

    def bits(self) -> int:
        """Number of significant bits in the mantissa."""
        return abs(self.mantissa).bit_length()

    # exact arithmetic

    def __neg__(self) -> Dyadic:
        return Dyadic(-self.mantissa, self.exponent)

    def __abs__(self) -> Dyadic:
        return self if self.mantissa >= 0 else -self

    def __add__(self, other: Dyadic) -> Dyadic:
        if not isinstance(other, Dyadic):
            return NotImplemented
        return dy_add(self, other)

    def __sub__(self, other: Dyadic) -> Dyadic:
        if not isinstance(other, Dyadic):
            return NotImplemented
        return dy_add(self, -other)

    def __mul__(self, other: Dyadic) -> Dyadic:
        if not isinstance(other, Dyadic):
            return NotImplemented
        return dy_mul(self, other)

    def shift(self, k: int) -> Dyadic:
        """Exact multiplication by ``2**k``."""
        if self.mantissa == 0:
            return self
        return Dyadic(self.mantissa, self.exponent + k)

    # ordering

    def __lt__(self, other: Dyadic) -> bool:
        return _cmp(self, other) < 0

    def __le__(self, other: Dyadic) -> bool:
        return _cmp(self, other) <= 0

    def __gt__(self, other: Dyadic) -> bool:
        return _cmp(self, other) > 0

    def __ge__(self, other: Dyadic) -> bool:
        return _cmp(self, other) >= 0


_DYADIC_RE = re.compile(r"^\s*([+-]?\d+)\s*\*\s*2\s*\^\s*([+-]?\d+)\s*$")

ZERO = Dyadic(0)
ONE = Dyadic(1)


def _cmp(a: Dyadic, b: Dyadic) -> int:
    if not isinstance(b, Dyadic):
        raise TypeError(f"cannot compare Dyadic with {type(b).__name__}")
    sa, sb = a.sign(), b.sign()
    if sa != sb or sa == 0:
        return (sa > sb) - (sa < sb)
    top_a = a.exponent + a.bits()
    top_b = b.exponent + b.bits()
    if top_a != top_b:
        bigger = 1 if top_a > top_b else -1
        return bigger if sa > 0 else -bigger
    # equal leading-bit position bounds the shift by the mantissa lengths
    d = a.exponent - b.exponent
    am, bm = (a.mantissa << d, b.mantissa) if d >= 0 else (a.mantissa, b.mantissa << -d)
    return (am > bm) - (am < bm)


def dy_add(a: Dyadic, b: Dyadic) -> Dyadic:
    if a.mantissa == 0:
        return b
    if b.mantissa == 0:
        return a
    e = min(a.exponent, b.exponent)
    da, db = a.exponent - e, b.exponent - e
    if da > MAX_SHIFT or db > MAX_SHIFT:
        raise CapacityError("exponent gap too large for exact addition")
    return Dyadic((a.mantissa << da) + (b.mantissa << db), e)


def dy_sub(a: Dyadic, b: Dyadic) -> Dyadic:
    return dy_add(a, -b)


def dy_mul(a: Dyadic, b: Dyadic) -> Dyadic:
    return Dyadic(a.mantissa * b.mantissa, a.exponent + b.exponent)


def dy_round(x: Dyadic, bits: int, direction: Rounding) -> Dyadic:
    """Nearest dyadic with at most ``bits`` mantissa bits on the requested side of x.

    Unlike the precision-taking operations, any ``bits >= 1`` is accepted here.
    """
    if bits < 1:
        raise ValueError(f"bits must be positive, got {bits}")
    n = x.bits()
    if n <= bits:
        return x
    s = n - bits
    m = x.mantissa >> s if direction is DOWN else -((-x.mantissa) >> s)
    return Dyadic(m, x.exponent + s)


def _round_scaled(q: int, inexact: bool, e: int, bits: int, direction: Rounding) -> Dyadic:
    # q * 2**e is the floor of the true value in units of 2**e, and |q| has more
    # than `bits` bits, so every `bits`-bit candidate at this scale is an integer.
    if direction is UP and inexact:
        q += 1
    return dy_round(Dyadic(q, e), bits, direction)


def dy_div(a: Dyadic, b: Dyadic, bits: int, direction: Rounding) -> Dyadic:
    check_bits(bits)
    if b.mantissa == 0:
        raise DomainError("division by zero")
    if a.mantissa == 0:
        return ZERO
    s = max(0, bits + 2 + b.bits() - a.bits())
    q, r = divmod(a.mantissa << s, b.mantissa)
    return _round_scaled(q, r != 0, a.exponent - b.exponent - s, bits, direction)


def dy_sqrt(x: Dyadic, bits: int, direction: Rounding) -> Dyadic:
    check_bits(bits)
    if x.mantissa < 0:
        raise DomainError("square root of a negative number")
    if x.mantissa == 0:
        return ZERO
    s = max(0, 2 * (bits + 2) - x.bits())
    if (x.exponent - s) & 1:
        s += 1
    n = x.mantissa << s
    r = math.isqrt(n)
    return _round_scaled(r, r * r != n, (x.exponent - s) // 2, bits, direction)


def dy_from_fraction(q: Fraction | int) -> Dyadic:
    """Exact conversion; raises DomainError when the denominator is not a power of two."""
    q = Fraction(q)
    den = q.denominator
    if den & (den - 1):
        raise DomainError(f"{q} is not a dyadic rational")
    return Dyadic(q.numerator, -(den.bit_length() - 1))


def dy_from_fraction_rounded(q: Fraction | int, bits: int, direction: Rounding) -> Dyadic:
    q = Fraction(q)
    return dy_div(Dyadic(q.numerator), Dyadic(q.denominator), bits, direction)


def _floor_log10(v: Fraction) -> int:
    # v > 0
    e = math.floor((v.numerator.bit_length() - v.denominator.bit_length()) * 0.30102999566398120)
    while Fraction(10) ** e > v:
        e -= 1
    while Fraction(10) ** (e + 1) <= v:
        e += 1
    return e


def dy_decimal_exponent(x: Dyadic) -> int:
    """floor(log10 |x|) for nonzero x."""
    if x.is_zero():
        raise DomainError("zero has no decimal exponent")
    return _floor_log10(abs(x.to_fraction()))


def dy_to_decimal(x: Dyadic, digits: int, direction: Rounding) -> str:
    """Render x with ``digits`` significant decimal digits, rounded in ``direction``."""
    if digits < 1:
        raise ValueError("digits must be positive")
    v = x.to_fraction()
    if v == 0:
        return "0"
    e10 = _floor_log10(abs(v))
    scale = e10 - digits + 1
    scaled = v / Fraction(10) ** scale
    n = math.floor(scaled) if direction is DOWN else math.ceil(scaled)
    sign = "-" if n < 0 else ""
    body = str(abs(n))
    # body may have gained a digit from a carry; position is still given by scale
    point = len(body) + scale
    if -30 < point <= 40:
        if point <= 0:
            text = "0." + "0" * -point + body
        elif point >= len(body):
            text = body + "0" * (point - len(body))
        else:
            text = body[:point] + "." + body[point:]
        if "." in text:
            text = text.rstrip("0").rstrip(".")
    else:
        mant = body[0] + ("." + body[1:].rstrip("0") if body[1:].rstrip("0") else "")
        text = f"{mant}e{point - 1:+d}"
    return sign + text


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval ``[lo, hi]`` of dyadics."""

    lo: Dyadic
    hi: Dyadic

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x: Dyadic | int) -> Interval:
        if isinstance(x, int):
            x = Dyadic(x)
        return cls(x, x)

    def width(self) -> Dyadic:
        return self.hi - self.lo

    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x: Dyadic) -> bool:
        return self.lo <= x <= self.hi

    def contains_fraction(self, q: Fraction | int) -> bool:
        return self.lo.to_fraction() <= q <= self.hi.to_fraction()

    def excludes_zero(self) -> bool:
        return self.lo.mantissa > 0 or self.hi.mantissa < 0

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def iv_round(a: Interval, bits: int) -> Interval:
    return Interval(dy_round(a.lo, bits, DOWN), dy_round(a.hi, bits, UP))


def iv_add(a: Interval, b: Interval, bits: int) -> Interval:
    return iv_round(Interval(a.lo + b.lo, a.hi + b.hi), bits)


def iv_sub(a: Interval, b: Interval, bits: int) -> Interval:
    return iv_round(Interval(a.lo - b.hi, a.hi - b.lo), bits)


def iv_neg(a: Interval) -> Interval:
    return Interval(-a.hi, -a.lo)


def iv_scale2(a: Interval, k: int) -> Interval:
    """Exact multiplication by ``2**k``."""
    return Interval(a.lo.shift(k), a.hi.shift(k))


def iv_mul(a: Interval, b: Interval, bits: int) -> Interval:
    products = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    return iv_round(Interval(min(products), max(products)), bits)


def iv_square(a: Interval, bits: int) -> Interval:
    """Tighter than ``iv_mul(a, a)`` when a straddles zero."""
    lo2, hi2 = a.lo * a.lo, a.hi * a.hi
    if a.lo.mantissa >= 0:
        sq = Interval(lo2, hi2)
    elif a.hi.mantissa <= 0:
        sq = Interval(hi2, lo2)
    else:
        sq = Interval(ZERO, max(lo2, hi2))
    return iv_round(sq, bits)


def iv_div(a: Interval, b: Interval, bits: int) -> Interval:
    if not b.excludes_zero():
        raise DomainError(f"interval division by {b}, which contains zero")
    if b.hi.mantissa < 0:
        return iv_neg(iv_div(a, iv_neg(b), bits))
    # b > 0: a/b is increasing in a and monotone in b with the sign of a
    lo = dy_div(a.lo, b.hi if a.lo.mantissa >= 0 else b.lo, bits, DOWN)
    hi = dy_div(a.hi, b.lo if a.hi.mantissa >= 0 else b.hi, bits, UP)
    return Interval(lo, hi)


def iv_sqrt(a: Interval, bits: int) -> Interval:
    if a.lo.mantissa < 0:
        raise DomainError(f"square root of {a}, which has negative points")
    return Interval(dy_sqrt(a.lo, bits, DOWN), dy_sqrt(a.hi, bits, UP))


def iv_width(a: Interval) -> Dyadic:
    return a.width()


def iv_contains(a: Interval, x: Dyadic) -> bool:
    return x in a


def iv_midpoint(a: Interval, bits: int) -> Dyadic:
    """A short dyadic inside ``a``, close to its exact midpoint."""
    mid = (a.lo + a.hi).shift(-1)
    r = dy_round(mid, bits, DOWN)
    return r if r >= a.lo else mid


def iv_intersect(a: Interval, b: Interval) -> Interval | None:
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    return Interval(lo, hi) if lo <= hi else None


def iv_hull(a: Interval, b: Interval) -> Interval:
    return Interval(min(a.lo, b.lo), max(a.hi, b.hi))


def iv_from_fraction(q: Fraction | int, bits: int) -> Interval:
    """Outward enclosure of a rational number."""
    q = Fraction(q)
    den = q.denominator
    if not den & (den - 1):
        return Interval.point(dy_from_fraction(q))
    return Interval(dy_from_fraction_rounded(q, bits, DOWN), dy_from_fraction_rounded(q, bits, UP))
