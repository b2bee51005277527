"""Interval certificates for the identities and inequalities satisfied by sin, cos, tan.

Every check evaluates both sides of a claim as enclosures and compares them:

* order claims ``lhs <= rhs`` are *certified-true* when ``hi(lhs) <= lo(rhs)``,
  *certified-false* when ``lo(lhs) > hi(rhs)`` and *inconclusive* otherwise;
* identity claims (two expressions for the same number) are certified-true
  when the enclosures intersect and are narrower than a tolerance, and
  certified-false when they are disjoint.

An inconclusive comparison is retried at doubled precision up to ``max_bits``.
When both sides of an order claim are literally the same expression (``n = 1``,
``t1 = t2``, ...) the comparison is decided by identity with margin 0.

All angles are in turns and must be dyadic.
"""

from __future__ import annotations

import enum
import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .bignum import (
    DOWN, ONE, ZERO, Dyadic, Interval, dy_from_fraction, dy_to_decimal,
    iv_add, iv_div, iv_intersect, iv_mul, iv_neg, iv_scale2, iv_square, iv_sub,
)
from .errors import DomainError
from .trig_core import (
    DEGREES, GRADIANS, TURNS, AngleUnit, add_pairs, dyadic_depth, evaluate,
    negate_pair, pair_at_dyadic, pair_at_zero, tan_of,
)

__all__ = [
    "Verdict", "CheckResult", "SuiteReport", "DEFAULT_BITS", "DEFAULT_MAX_BITS",
    "check_pythagorean", "check_zero_values", "check_parity", "check_addition_law",
    "check_sin_multiple", "check_tan_multiple", "check_sin_ratio_step", "check_tan_ratio_step",
    "check_ratio_monotone", "check_monotone_chain", "check_midpoint_concave_sin",
    "check_midpoint_convex_tan", "check_jensen", "check_chord_slope", "check_tan_addition",
    "check_unit_conversion", "pythagorean_enclosure", "run_suite",
]

DEFAULT_BITS = 64
DEFAULT_MAX_BITS = 4096
# identity claims must agree to within 2**(IDENTITY_SLACK - bits), relative to magnitude
IDENTITY_SLACK = 16

EIGHTH = Fraction(1, 8)
SIXTEENTH = Fraction(1, 16)
QUARTER = Fraction(1, 4)


class Verdict(str, enum.Enum):
    TRUE = "certified-true"
    INCONCLUSIVE = "inconclusive"
    FALSE = "certified-false"


_SEVERITY = {Verdict.TRUE: 0, Verdict.INCONCLUSIVE: 1, Verdict.FALSE: 2}


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one certified comparison.

    ``margins`` holds one entry per elementary comparison.  For order claims
    it is ``lo(rhs) - hi(lhs)`` (negative unless certified); for identity
    claims it is the enclosure width that the certificate needed, or minus the
    gap between the enclosures when they are disjoint.  ``margin`` is the
    smallest entry.
    """

    name: str
    verdict: Verdict
    precision_used: int
    margins: tuple[Dyadic, ...]
    inputs: dict = field(default_factory=dict, compare=False)

    @property
    def margin(self) -> Dyadic:
        return min(self.margins)

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.TRUE

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "inputs": {k: str(v) for k, v in self.inputs.items()},
            "verdict": self.verdict.value,
            "margin": _decimal(self.margin),
            "margins": [_decimal(m) for m in self.margins],
            "precision_used": self.precision_used,
        }


Comparison = tuple[Verdict, Dyadic]


def _decimal(x: Dyadic) -> str:
    return dy_to_decimal(x, 8, DOWN)


# elementary comparisons


def _le(lhs: Interval, rhs: Interval) -> Comparison:
    if lhs.hi <= rhs.lo:
        return Verdict.TRUE, rhs.lo - lhs.hi
    if lhs.lo > rhs.hi:
        return Verdict.FALSE, rhs.lo - lhs.hi
    return Verdict.INCONCLUSIVE, rhs.lo - lhs.hi


def _same() -> Comparison:
    return Verdict.TRUE, ZERO


def _magnitude(a: Interval) -> Dyadic:
    return max(abs(a.lo), abs(a.hi), ONE)


def _agree(a: Interval, b: Interval, bits: int) -> Comparison:
    meet = iv_intersect(a, b)
    if meet is None:
        gap = max(a.lo - b.hi, b.lo - a.hi)
        return Verdict.FALSE, -gap
    slack = max(a.width(), b.width())
    tolerance = max(_magnitude(a), _magnitude(b)).shift(IDENTITY_SLACK - bits)
    return (Verdict.TRUE if slack <= tolerance else Verdict.INCONCLUSIVE), slack


def _encloses(a: Interval, value: Dyadic, bits: int) -> Comparison:
    return _agree(a, Interval.point(value), bits)


def _certify(name: str, inputs: dict, evaluate_at: Callable[[int], Iterable[Comparison]],
             bits: int, max_bits: int) -> CheckResult:
    p = min(bits, max_bits)
    while True:
        parts = list(evaluate_at(p))
        verdict = max((v for v, _ in parts), key=_SEVERITY.__getitem__)
        if verdict is not Verdict.INCONCLUSIVE or p >= max_bits:
            return CheckResult(name, verdict, p, tuple(m for _, m in parts), inputs)
        p = min(2 * p, max_bits)


# helpers


def _turn(t) -> Fraction:
    t = Fraction(t)
    dyadic_depth(t)
    return t


def _sin(t: Fraction, p: int) -> Interval:
    return pair_at_dyadic(t, p).s


def _cos(t: Fraction, p: int) -> Interval:
    return pair_at_dyadic(t, p).co


def _tan(t: Fraction, p: int) -> Interval:
    return tan_of(pair_at_dyadic(t, p), p)


def _times(x: Interval, q: Fraction | int, p: int) -> Interval:
    return iv_mul(Interval.point(dy_from_fraction(q)), x, p)


def _over(x: Interval, q: Fraction | int, p: int) -> Interval:
    return iv_div(x, Interval.point(dy_from_fraction(q)), p)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


def _positive_int(n: int, label: str) -> int:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"{label} must be a positive integer, got {n!r}")
    return n


# identities


def pythagorean_enclosure(t, bits: int) -> Interval:
    pair = pair_at_dyadic(_turn(t), bits)
    return iv_add(iv_square(pair.s, bits + 8), iv_square(pair.co, bits + 8), bits + 8)


def check_pythagorean(t, bits: int = DEFAULT_BITS, max_bits: int = DEFAULT_MAX_BITS) -> CheckResult:
    """sin^2 + cos^2 = 1."""
    t = _turn(t)
    return _certify("pythagorean", {"t": t},
                    lambda p: [_encloses(pythagorean_enclosure(t, p), ONE, p)], bits, max_bits)


def check_zero_values(t, bits: int = DEFAULT_BITS, max_bits: int = DEFAULT_MAX_BITS) -> CheckResult:
    """sin(t - t) = 0 and cos(t - t) = 1, evaluated through the addition formulas."""
    t = _turn(t)

    def run(p):
        pair = pair_at_dyadic(t, p)
        diff = add_pairs(pair, negate_pair(pair), p)
        return [_encloses(diff.s, ZERO, p), _encloses(diff.co, ONE, p)]

    return _certify("zero_values", {"t": t}, run, bits, max_bits)


def check_parity(t, bits: int = DEFAULT_BITS, max_bits: int = DEFAULT_MAX_BITS) -> CheckResult:
    """sin(-t) = sin(0)cos(t) - cos(0)sin(t) = -sin(t), and cos(-t) = cos(t)."""
    t = _turn(t)

    def run(p):
        zero, pair, mirrored = pair_at_zero(), pair_at_dyadic(t, p), pair_at_dyadic(-t, p)
        s = iv_sub(iv_mul(zero.s, pair.co, p), iv_mul(zero.co, pair.s, p), p)
        co = iv_add(iv_mul(zero.co, pair.co, p), iv_mul(zero.s, pair.s, p), p)
        return [_agree(mirrored.s, s, p), _agree(mirrored.co, co, p),
                _agree(mirrored.s, iv_neg(pair.s), p)]

    return _certify("parity", {"t": t}, run, bits, max_bits)


def check_addition_law(t1, t2, bits: int = DEFAULT_BITS, max_bits: int = DEFAULT_MAX_BITS) -> CheckResult:
    """The pair assembled by the addition formulas agrees with a direct evaluation at t1 + t2."""
    t1, t2 = _turn(t1), _turn(t2)

    def run(p):
        summed = add_pairs(pair_at_dyadic(t1, p), pair_at_dyadic(t2, p), p)
        direct = pair_at_dyadic(t1 + t2, p)
        return [_agree(summed.s, direct.s, p), _agree(summed.co, direct.co, p)]

    return _certify("addition_law", {"t1": t1, "t2": t2}, run, bits, max_bits)


def check_tan_addition(t1, t2, bits: int = DEFAULT_BITS, max_bits: int = DEFAULT_MAX_BITS) -> CheckResult:
    """tan(t1 + t2) = (tan t1 + tan t2) / (1 - tan t1 tan t2)."""
    t1, t2 = _turn(t1), _turn(t2)
    for v in (t1, t2, t1 + t2):
        _require(-QUARTER < v < QUARTER, f"tan addition needs angles in (-1/4, 1/4) turn, got {v}")

    def run(p):
        a, b = _tan(t1, p), _tan(t2, p)
        denominator = iv_sub(Interval.point(ONE), iv_mul(a, b, p), p)
        if not denominator.excludes_zero():
            return [(Verdict.INCONCLUSIVE, -denominator.width())]
        formula = iv_div(iv_add(a, b, p), denominator, p)
        return [_agree(_tan(t1 + t2, p), formula, p)]

    return _certify("tan_addition", {"t1": t1, "t2": t2}, run, bits, max_bits)


def check_unit_conversion(c1: AngleUnit, c2: AngleUnit, x, bits: int = DEFAULT_BITS,
                          max_bits: int = DEFAULT_MAX_BITS) -> CheckResult:
    """sin_c1(x) = sin_c2(x * c2 / c1), and likewise for cos."""
    x = Fraction(x)
    y = x * c2.c / c1.c

    def run(p):
        a, b = evaluate(c1, x, p), evaluate(c2, y, p)
        return [_agree(a.s, b.s, p), _agree(a.co, b.co, p)]

    return _certify("unit_conversion", {"c1": c1.c, "c2": c2.c, "x": x}, run, bits, max_bits)


# inequalities from the induction argument


def check_sin_multiple(n: int, t, bits: int = DEFAULT_BITS, max_bits: int = DEFAULT_MAX_BITS) -> CheckResult:
    """sin(n t) <= n sin(t) for 0 < t < 1/(8n)."""
    n, t = _positive_int(n, "n"), _turn(t)
    _require(0 < t < Fraction(1, 8 * n), f"need 0 < t < 1/(8n), got t={t}, n={n}")

    def run(p):
        if n == 1:
            return [_same()]
        return [_le(_sin(n * t, p), _times(_sin(t, p), n, p))]

    return _certify("sin_multiple", {"n": n, "t": t}, run, bits, max_bits)


def check_tan_multiple(n: int, t, bits: int = DEFAULT_BITS, max_bits: int = DEFAULT_MAX_BITS) -> CheckResult:
    """tan(n t) >= n tan(t) for 0 < t < 1/(8n)."""
    n, t = _positive_int(n, "n"), _turn(t)
    _require(0 < t < Fraction(1, 8 * n), f"need 0 < t < 1/(8n), got t={t}, n={n}")

    def run(p):
        if n == 1:
            return [_same()]
        return [_le(_times(_tan(t, p), n, p), _tan(n * t, p))]

    return _certify("tan_multiple", {"n": n, "t": t}, run, bits, max_bits)


def check_sin_ratio_step(n: int, t, bits: int = DEFAULT_BITS, max_bits: int = DEFAULT_MAX_BITS) -> CheckResult:
    """n sin((n+1) t) <= (n+1) sin(n t) for 0 < t < 1/(8(n+1))."""
    n, t = _positive_int(n, "n"), _turn(t)
    _require(0 < t < Fraction(1, 8 * (n + 1)), f"need 0 < t < 1/(8(n+1)), got t={t}, n={n}")

    def run(p):
        return [_le(_times(_sin((n + 1) * t, p), n, p), _times(_sin(n * t, p), n + 1, p))]

    return _certify("sin_ratio_step", {"n": n, "t": t}, run, bits, max_bits)


def check_tan_ratio_step(n: int, t, bits: int = DEFAULT_BITS, max_bits: int = DEFAULT_MAX_BITS) -> CheckResult:
    """n tan((n+1) t) >= (n+1) tan(n t) for 0 < t < 1/(8(n+1))."""
    n, t = _positive_int(n, "n"), _turn(t)
    _require(0 < t < Fraction(1, 8 * (n + 1)), f"need 0 < t < 1/(8(n+1)), got t={t}, n={n}")

    def run(p):
        return [_le(_times(_tan(n * t, p), n + 1, p), _times(_tan((n + 1) * t, p), n, p))]

    return _certify("tan_ratio_step", {"n": n, "t": t}, run, bits, max_bits)


def check_ratio_monotone(m: int, n: int, t, bits: int = DEFAULT_BITS,
                         max_bits: int = DEFAULT_MAX_BITS) -> CheckResult:
    """sin(m t)/m <= sin(n t)/n <= tan(n t)/n <= tan(m t)/m for m >= n and 0 < m t <= 1/8.

    With t = 1/(qs), n = ps and m = qr this is the chain for two rationals
    p/q <= r/s <= 1/8.
    """
    m, n, t = _positive_int(m, "m"), _positive_int(n, "n"), _turn(t)
    _require(m >= n, f"need m >= n, got m={m}, n={n}")
    _require(0 < m * t <= EIGHTH, f"need 0 < m t <= 1/8, got m={m}, t={t}")

    def run(p):
        sin_n, tan_n = _over(_sin(n * t, p), n, p), _over(_tan(n * t, p), n, p)
        if m == n:
            return [_same(), _le(sin_n, tan_n), _same()]
        sin_m, tan_m = _over(_sin(m * t, p), m, p), _over(_tan(m * t, p), m, p)
        return [_le(sin_m, sin_n), _le(sin_n, tan_n), _le(tan_n, tan_m)]

    return _certify("ratio_monotone", {"m": m, "n": n, "t": t}, run, bits, max_bits)


def check_monotone_chain(t1, t2, bits: int = DEFAULT_BITS, max_bits: int = DEFAULT_MAX_BITS) -> CheckResult:
    """sin(t2)/t2 <= sin(t1)/t1 <= tan(t1)/t1 <= tan(t2)/t2 for 0 < t1 <= t2 <= 1/8."""
    t1, t2 = _turn(t1), _turn(t2)
    _require(0 < t1 <= t2 <= EIGHTH, f"need 0 < t1 <= t2 <= 1/8, got {t1}, {t2}")

    def run(p):
        sin1, tan1 = _over(_sin(t1, p), t1, p), _over(_tan(t1, p), t1, p)
        if t1 == t2:
            return [_same(), _le(sin1, tan1), _same()]
        sin2, tan2 = _over(_sin(t2, p), t2, p), _over(_tan(t2, p), t2, p)
        return [_le(sin2, sin1), _le(sin1, tan1), _le(tan1, tan2)]

    return _certify("monotone_chain", {"t1": t1, "t2": t2}, run, bits, max_bits)


# convexity


def check_midpoint_concave_sin(t1, t2, bits: int = DEFAULT_BITS,
                               max_bits: int = DEFAULT_MAX_BITS) -> CheckResult:
    """sin(t1) + sin(t2) <= 2 sin((t1 + t2)/2) for t1, t2 in [0, 1/8]."""
    t1, t2 = _turn(t1), _turn(t2)
    _require(0 <= t1 <= EIGHTH and 0 <= t2 <= EIGHTH, f"need t1, t2 in [0, 1/8], got {t1}, {t2}")

    def run(p):
        if t1 == t2:
            return [_same()]
        lhs = iv_add(_sin(t1, p), _sin(t2, p), p)
        return [_le(lhs, iv_scale2(_sin((t1 + t2) / 2, p), 1))]

    return _certify("midpoint_concave_sin", {"t1": t1, "t2": t2}, run, bits, max_bits)


def check_midpoint_convex_tan(t1, t2, bits: int = DEFAULT_BITS,
                              max_bits: int = DEFAULT_MAX_BITS) -> CheckResult:
    """tan(t1 + t2) <= (tan(2 t1) + tan(2 t2))/2 for t1, t2 in [0, 1/16]."""
    t1, t2 = _turn(t1), _turn(t2)
    _require(0 <= t1 <= SIXTEENTH and 0 <= t2 <= SIXTEENTH, f"need t1, t2 in [0, 1/16], got {t1}, {t2}")

    def run(p):
        if t1 == t2:
            return [_same()]
        rhs = iv_scale2(iv_add(_tan(2 * t1, p), _tan(2 * t2, p), p), -1)
        return [_le(_tan(t1 + t2, p), rhs)]

    return _certify("midpoint_convex_tan", {"t1": t1, "t2": t2}, run, bits, max_bits)


def _check_function(f: str) -> str:
    if f not in ("sin", "tan"):
        raise DomainError(f"function must be 'sin' or 'tan', got {f!r}")
    return f


def check_jensen(f: str, t1, t2, lam, bits: int = DEFAULT_BITS,
                 max_bits: int = DEFAULT_MAX_BITS) -> CheckResult:
    """Convex-combination form of the midpoint inequalities for dyadic weights.

    For lam = k/2**j (the weights reachable by repeated midpoints) and
    t1, t2 in [0, 1/8]: sin is above its chords and tan is below them.
    """
    f = _check_function(f)
    t1, t2, lam = _turn(t1), _turn(t2), _turn(lam)
    _require(0 <= t1 <= EIGHTH and 0 <= t2 <= EIGHTH, f"need t1, t2 in [0, 1/8], got {t1}, {t2}")
    _require(0 <= lam <= 1, f"need 0 <= lam <= 1, got {lam}")
    u = lam * t1 + (1 - lam) * t2
    g = _sin if f == "sin" else _tan

    def run(p):
        if t1 == t2 or lam in (0, 1):
            return [_same()]
        chord = iv_add(_times(g(t1, p), lam, p), _times(g(t2, p), 1 - lam, p), p)
        at_u = g(u, p)
        return [_le(chord, at_u) if f == "sin" else _le(at_u, chord)]

    return _certify(f"jensen_{f}", {"t1": t1, "t2": t2, "lam": lam}, run, bits, max_bits)


def check_chord_slope(f: str, t1, t2, bits: int = DEFAULT_BITS,
                      max_bits: int = DEFAULT_MAX_BITS) -> CheckResult:
    """tan(t)/t is nondecreasing and sin(t)/t nonincreasing on (0, 1/8]."""
    f = _check_function(f)
    t1, t2 = _turn(t1), _turn(t2)
    _require(0 < t1 <= t2 <= EIGHTH, f"need 0 < t1 <= t2 <= 1/8, got {t1}, {t2}")
    g = _sin if f == "sin" else _tan

    def run(p):
        if t1 == t2:
            return [_same()]
        slope1, slope2 = _over(g(t1, p), t1, p), _over(g(t2, p), t2, p)
        return [_le(slope2, slope1) if f == "sin" else _le(slope1, slope2)]

    return _certify(f"chord_slope_{f}", {"t1": t1, "t2": t2}, run, bits, max_bits)


# randomized suite


def _draw(rng: random.Random, lo: Fraction, hi: Fraction, *, open_lo: bool = False,
          open_hi: bool = False, max_depth: int = 12) -> Fraction:
    """Random dyadic a/2**k in the given range, with k <= max_depth."""
    for k in [rng.randint(1, max_depth) for _ in range(4)] + [max_depth]:
        scale = 1 << k
        a, b = lo * scale, hi * scale
        a_int, b_int = math.ceil(a), math.floor(b)
        if open_lo and a_int == a:
            a_int += 1
        if open_hi and b_int == b:
            b_int -= 1
        if a_int <= b_int:
            return Fraction(rng.randint(a_int, b_int), scale)
    raise ValueError(f"no dyadic of depth <= {max_depth} in the range ({lo}, {hi})")


_UNITS = (TURNS, DEGREES, GRADIANS, AngleUnit(Fraction(7, 3)))


def _draw_tan_addition(rng):
    t1 = _draw(rng, -QUARTER, QUARTER, open_lo=True, open_hi=True)
    t2 = _draw(rng, max(-QUARTER, -QUARTER - t1), min(QUARTER, QUARTER - t1), open_lo=True, open_hi=True)
    return {"t1": t1, "t2": t2}


def _draw_ordered(rng, lo=Fraction(0), hi=EIGHTH):
    t1 = _draw(rng, lo, hi, open_lo=True)
    return {"t1": t1, "t2": _draw(rng, t1, hi)}


def _draw_multiple(rng, step: int):
    n = rng.randint(1, 32)
    return {"n": n, "t": _draw(rng, Fraction(0), Fraction(1, 8 * (n + step)), open_lo=True, open_hi=True)}


def _draw_ratio(rng):
    n = rng.randint(1, 16)
    m = rng.randint(n, 64)
    return {"m": m, "n": n, "t": _draw(rng, Fraction(0), Fraction(1, 8 * m), open_lo=True)}


def _draw_unit(rng):
    c1, c2 = rng.choice(_UNITS), rng.choice(_UNITS)
    turn = Fraction(rng.randint(-200, 200), rng.randint(1, 64))
    return {"c1": c1, "c2": c2, "x": turn * c1.c}


def _draw_jensen(rng):
    j = rng.randint(1, 4)
    return {"t1": _draw(rng, Fraction(0), EIGHTH), "t2": _draw(rng, Fraction(0), EIGHTH),
            "lam": Fraction(rng.randint(0, 1 << j), 1 << j)}


_ANY = (Fraction(-2), Fraction(2))

SUITE: list[tuple[str, Callable, Callable]] = [
    ("pythagorean", check_pythagorean, lambda r: {"t": _draw(r, *_ANY)}),
    ("zero_values", check_zero_values, lambda r: {"t": _draw(r, *_ANY)}),
    ("parity", check_parity, lambda r: {"t": _draw(r, *_ANY)}),
    ("addition_law", check_addition_law, lambda r: {"t1": _draw(r, *_ANY), "t2": _draw(r, *_ANY)}),
    ("tan_addition", check_tan_addition, _draw_tan_addition),
    ("unit_conversion", check_unit_conversion, _draw_unit),
    ("sin_multiple", check_sin_multiple, lambda r: _draw_multiple(r, 0)),
    ("tan_multiple", check_tan_multiple, lambda r: _draw_multiple(r, 0)),
    ("sin_ratio_step", check_sin_ratio_step, lambda r: _draw_multiple(r, 1)),
    ("tan_ratio_step", check_tan_ratio_step, lambda r: _draw_multiple(r, 1)),
    ("ratio_monotone", check_ratio_monotone, _draw_ratio),
    ("monotone_chain", check_monotone_chain, _draw_ordered),
    ("midpoint_concave_sin", check_midpoint_concave_sin,
     lambda r: {"t1": _draw(r, Fraction(0), EIGHTH), "t2": _draw(r, Fraction(0), EIGHTH)}),
    ("midpoint_convex_tan", check_midpoint_convex_tan,
     lambda r: {"t1": _draw(r, Fraction(0), SIXTEENTH), "t2": _draw(r, Fraction(0), SIXTEENTH)}),
    ("jensen_sin", lambda **kw: check_jensen("sin", **kw), _draw_jensen),
    ("jensen_tan", lambda **kw: check_jensen("tan", **kw), _draw_jensen),
    ("chord_slope_sin", lambda **kw: check_chord_slope("sin", **kw), _draw_ordered),
    ("chord_slope_tan", lambda **kw: check_chord_slope("tan", **kw), _draw_ordered),
]


@dataclass
class SuiteReport:
    seed: int
    samples: int
    max_bits: int
    results: list[CheckResult] = field(default_factory=list)
    counterexample: CheckResult | None = None

    def count(self, verdict: Verdict) -> int:
        return sum(r.verdict is verdict for r in self.results)

    @property
    def ok(self) -> bool:
        return all(r.verdict is Verdict.TRUE for r in self.results)

    def tallies(self) -> dict[str, dict]:
        out: dict[str, dict] = {}
        for r in self.results:
            row = out.setdefault(r.name, {v: 0 for v in Verdict} | {"min_margin": None, "max_bits": 0})
            row[r.verdict] += 1
            if row["min_margin"] is None or r.margin < row["min_margin"]:
                row["min_margin"] = r.margin
            row["max_bits"] = max(row["max_bits"], r.precision_used)
        return out

    def to_text(self) -> str:
        lines = [f"laws seed={self.seed} samples={self.samples} max_bits={self.max_bits}"]
        for name, row in self.tallies().items():
            lines.append(
                f"check {name} true={row[Verdict.TRUE]} inconclusive={row[Verdict.INCONCLUSIVE]} "
                f"false={row[Verdict.FALSE]} min_margin={_decimal(row['min_margin'])} "
                f"max_bits_used={row['max_bits']}"
            )
        lines.append(
            f"total true={self.count(Verdict.TRUE)} inconclusive={self.count(Verdict.INCONCLUSIVE)} "
            f"false={self.count(Verdict.FALSE)}"
        )
        for r in self.results:
            if r.verdict is Verdict.INCONCLUSIVE:
                lines.append(f"inconclusive {r.name} {_inputs_text(r)} bits={r.precision_used}")
        if self.counterexample is not None:
            r = self.counterexample
            lines.append(f"COUNTEREXAMPLE {r.name} {_inputs_text(r)} margin={_decimal(r.margin)}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        tallies = {
            name: {
                "certified_true": row[Verdict.TRUE],
                "inconclusive": row[Verdict.INCONCLUSIVE],
                "certified_false": row[Verdict.FALSE],
                "min_margin": _decimal(row["min_margin"]),
                "max_bits_used": row["max_bits"],
            }
            for name, row in self.tallies().items()
        }
        return {
            "seed": self.seed,
            "samples": self.samples,
            "max_bits": self.max_bits,
            "summary": tallies,
            "checks": [r.to_dict() for r in self.results],
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _inputs_text(r: CheckResult) -> str:
    return " ".join(f"{k}={v}" for k, v in r.inputs.items())


def run_suite(seed: int, samples: int, max_bits: int = DEFAULT_MAX_BITS,
              bits: int = DEFAULT_BITS) -> SuiteReport:
    """Run every check on ``samples`` random inputs drawn from its domain.

    Stops at the first certified-false result and records it as the
    counterexample.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    rng = random.Random(seed)
    report = SuiteReport(seed, samples, max_bits)
    for _ in range(samples):
        for _name, check, draw in SUITE:
            result = check(**draw(rng), bits=bits, max_bits=max_bits)
            report.results.append(result)
            if result.verdict is Verdict.FALSE:
                report.counterexample = result
                return report
    return report
