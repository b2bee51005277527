"""Certified sine/cosine/tangent built from the addition formulas alone.

Angles are carried internally as exact fractions of a full turn.  The only
exactly known values are ``sin = 1, cos = 0`` at a quarter turn; everything
else is reached from there:

* halving an angle takes square roots of ``(1 +/- cos) / 2`` (the addition
  formula for ``cos`` with equal arguments, solved for the half angle),
* dyadic multiples are assembled with the addition formulas,
* non-dyadic angles are approximated by a dyadic one and widened by a
  uniform modulus of continuity ``|sin a - sin b| <= 8 |a - b|`` (turns),
  whose constant comes from ``tan(1/8 turn) = 1``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .bignum import (
    UP, ONE, ZERO, Dyadic, Interval, check_bits, dy_div, dy_from_fraction,
    iv_add, iv_div, iv_intersect, iv_midpoint, iv_mul, iv_neg, iv_scale2, iv_sqrt, iv_sub,
)
from .errors import DomainError

__all__ = [
    "AngleUnit", "TURNS", "DEGREES", "GRADIANS", "TrigPair",
    "pair_at_quarter", "pair_at_zero", "add_pairs", "negate_pair", "half_pair",
    "pair_at_dyadic", "tan_of", "continuity_bound", "evaluate", "eval_turn_interval",
    "as_turn", "is_dyadic", "dyadic_depth", "width_bound",
]

UNIT_INTERVAL = Interval(ZERO, ONE)
SIGNED_UNIT_INTERVAL = Interval(-ONE, ONE)
LIPSCHITZ = 8


@dataclass(frozen=True)
class AngleUnit:
    """Measure ``c`` of the full circle; an angle ``x`` in this unit is ``x / c`` turns."""

    c: Fraction
    name: str = ""

    def __post_init__(self):
        c = Fraction(self.c)
        if c <= 0:
            raise ValueError(f"full-circle measure must be positive, got {c}")
        object.__setattr__(self, "c", c)

    def to_turns(self, x: Fraction | int | str) -> Fraction:
        return Fraction(x) / self.c

    def __str__(self) -> str:
        return self.name or str(self.c)


TURNS = AngleUnit(Fraction(1), "turns")
DEGREES = AngleUnit(Fraction(360), "degrees")
GRADIANS = AngleUnit(Fraction(400), "gradians")


@dataclass(frozen=True)
class TrigPair:
    """Joint enclosure of sin and cos at one angle.

    ``t`` is the exact angle in turns, or None when the angle itself is only
    known as an enclosure (see :func:`eval_turn_interval`).
    """

    s: Interval
    co: Interval
    t: Fraction | None

    def tan(self, bits: int) -> Interval:
        return tan_of(self, bits)


def as_turn(t: Fraction | int | str) -> Fraction:
    return Fraction(t)


def is_dyadic(t: Fraction) -> bool:
    den = t.denominator
    return not den & (den - 1)


def dyadic_depth(t: Fraction) -> int:
    """k such that the reduced denominator of t is 2**k."""
    if not is_dyadic(t):
        raise DomainError(f"{t} turns is not a dyadic fraction of the circle")
    return t.denominator.bit_length() - 1


def width_bound(bits: int) -> Dyadic:
    """Width promised for outputs requested at ``bits`` of precision."""
    return Dyadic(1, 4 - bits)


def pair_at_quarter() -> TrigPair:
    return TrigPair(Interval.point(ONE), Interval.point(ZERO), Fraction(1, 4))


def pair_at_zero() -> TrigPair:
    return TrigPair(Interval.point(ZERO), Interval.point(ONE), Fraction(0))


def add_pairs(a: TrigPair, b: TrigPair, bits: int) -> TrigPair:
    t = a.t + b.t if a.t is not None and b.t is not None else None
    s = iv_add(iv_mul(a.s, b.co, bits), iv_mul(a.co, b.s, bits), bits)
    co = iv_sub(iv_mul(a.co, b.co, bits), iv_mul(a.s, b.s, bits), bits)
    return TrigPair(_clip(s), _clip(co), t)


def negate_pair(a: TrigPair) -> TrigPair:
    return TrigPair(iv_neg(a.s), a.co, -a.t if a.t is not None else None)


def half_pair(a: TrigPair, bits: int) -> TrigPair:
    """Pair at half the angle of ``a``, which must lie in [0, 1/2] turn.

    Both half-angle components are nonnegative there, which fixes the sign of
    the square roots.  The sine is additionally enclosed by
    ``sin(x) / (2 cos(x/2))``; both enclosures are sound, and the quotient
    form avoids the cancellation in ``1 - cos`` for small angles.
    """
    check_bits(bits)
    if a.t is None or not 0 <= a.t <= Fraction(1, 2):
        raise DomainError(f"half_pair needs an angle in [0, 1/2] turn, got {a.t}")
    one = Interval.point(ONE)
    co = _meet(iv_sqrt(_nonneg(iv_scale2(iv_add(one, a.co, bits), -1)), bits), UNIT_INTERVAL)
    s = _meet(iv_sqrt(_nonneg(iv_scale2(iv_sub(one, a.co, bits), -1)), bits), UNIT_INTERVAL)
    if co.lo.mantissa > 0 and a.s.lo.mantissa >= 0:
        s = _meet(s, iv_div(a.s, iv_scale2(co, 1), bits))
    return TrigPair(s, co, a.t / 2)


@functools.lru_cache(maxsize=64)
def _halving_chain(depth: int, bits: int) -> tuple[TrigPair, ...]:
    """Pairs at 1/2**j turn for j = 0..depth, computed at ``bits`` working bits."""
    quarter = pair_at_quarter()
    half = add_pairs(quarter, quarter, bits)
    full = add_pairs(half, half, bits)
    chain = [full, half, quarter]
    while len(chain) <= depth:
        chain.append(half_pair(chain[-1], bits))
    return tuple(chain[: depth + 1])


def _reduce_turn(t: Fraction) -> Fraction:
    """Representative of t modulo 1 in (-1/2, 1/2]."""
    r = t - (t.numerator // t.denominator)
    return r - 1 if r > Fraction(1, 2) else r


def _pair_at_reduced(t: Fraction, depth: int, work: int) -> TrigPair:
    # t in [0, 1/2] with denominator 2**depth; sum the chain pairs over the set bits
    chain = _halving_chain(depth, work)
    numerator = t.numerator
    acc = None
    for j in range(1, depth + 1):
        if numerator >> (depth - j) & 1:
            acc = chain[j] if acc is None else add_pairs(acc, chain[j], work)
    return acc if acc is not None else pair_at_zero()


@functools.lru_cache(maxsize=8192)
def _pair_cached(t: Fraction, bits: int) -> TrigPair:
    r = _reduce_turn(t)
    depth = dyadic_depth(r)
    bound = width_bound(bits)
    work = bits + 12 + 2 * max(depth, 1).bit_length()
    while True:
        pair = _pair_at_reduced(abs(r), depth, work)
        if pair.s.width() <= bound and pair.co.width() <= bound:
            break
        if work > 4 * bits + 64 * depth + 256:
            raise ArithmeticError(f"enclosure at {t} turns does not tighten with precision")
        work += 32
    if r < 0:
        pair = negate_pair(pair)
    return TrigPair(pair.s, pair.co, t)


def pair_at_dyadic(t: Fraction | int | str, bits: int) -> TrigPair:
    """Enclosure of (sin, cos) at t turns, t with a power-of-two denominator.

    Both components are at most ``2**(4 - bits)`` wide.  The angle is reduced
    to (-1/2, 1/2] first, and negative angles are evaluated as mirrored
    positive ones, so ``pair_at_dyadic(-t)`` is exactly ``negate_pair`` of
    ``pair_at_dyadic(t)``.
    """
    check_bits(bits)
    t = Fraction(t)
    dyadic_depth(t)
    return _pair_cached(t, bits)


def tan_of(a: TrigPair, bits: int) -> Interval:
    if not a.co.excludes_zero():
        raise DomainError(f"tan undefined: cos enclosure {a.co} contains 0")
    return iv_div(a.s, a.co, bits)


def continuity_bound(dt: Fraction | int | Dyadic) -> Dyadic:
    """Upper bound on ``8 * dt``, a modulus of continuity for sin and cos in turns."""
    if isinstance(dt, Dyadic):
        if dt.mantissa < 0:
            raise DomainError("continuity_bound needs dt >= 0")
        return dt * Dyadic(LIPSCHITZ)
    dt = Fraction(dt)
    if dt < 0:
        raise DomainError("continuity_bound needs dt >= 0")
    scaled = LIPSCHITZ * dt
    if is_dyadic(scaled):
        return dy_from_fraction(scaled)
    return dy_div(Dyadic(scaled.numerator), Dyadic(scaled.denominator), 64, UP)


def _widen(pair: TrigPair, radius: Dyadic, bits: int, t: Fraction | None) -> TrigPair:
    delta = Interval(-radius, radius)
    s = _meet(iv_add(pair.s, delta, bits), SIGNED_UNIT_INTERVAL)
    co = _meet(iv_add(pair.co, delta, bits), SIGNED_UNIT_INTERVAL)
    return TrigPair(s, co, t)


def evaluate(unit: AngleUnit, x: Fraction | int | str, bits: int) -> TrigPair:
    """Certified (sin, cos) of the angle ``x`` measured in ``unit``."""
    check_bits(bits)
    t = unit.to_turns(x)
    if is_dyadic(t):
        return pair_at_dyadic(t, bits)
    r = _reduce_turn(t)
    if r < 0:
        return negate_pair(_eval_nondyadic(-r, bits, -t))
    return _eval_nondyadic(r, bits, t)


def _eval_nondyadic(r: Fraction, bits: int, t: Fraction) -> TrigPair:
    # |r - approx| < 2**-k, and the widening adds at most 2**(4-k) of width
    k = bits + 3
    approx = Fraction((r.numerator << k) // r.denominator, 1 << k)
    base = pair_at_dyadic(approx, bits + 2)
    return _widen(base, Dyadic(LIPSCHITZ, -k), bits + 4, t)


def eval_turn_interval(turns: Interval, bits: int) -> TrigPair:
    """Enclosure of (sin, cos) valid for every angle in ``turns``.

    The widening follows the modulus of continuity, so the result width is
    ``2**(4 - bits)`` plus sixteen times the radius of ``turns``.
    """
    check_bits(bits)
    mid = iv_midpoint(turns, bits + 8)
    radius = max(turns.hi - mid, mid - turns.lo)
    base = pair_at_dyadic(mid.to_fraction(), bits + 1)
    if radius.is_zero():
        return TrigPair(base.s, base.co, None)
    return _widen(base, continuity_bound(radius), bits + 4, None)


def _meet(a: Interval, b: Interval) -> Interval:
    m = iv_intersect(a, b)
    if m is None:
        raise ArithmeticError(f"inconsistent enclosures {a} and {b}")
    return m


def _clip(a: Interval) -> Interval:
    # values of sin/cos lie in [-1, 1]; clipping keeps rounding slack from compounding
    return _meet(a, SIGNED_UNIT_INTERVAL)


def _nonneg(a: Interval) -> Interval:
    if a.hi.mantissa < 0:
        raise ArithmeticError(f"enclosure {a} of a nonnegative quantity is negative")
    return a if a.lo.mantissa >= 0 else Interval(ZERO, a.hi)
