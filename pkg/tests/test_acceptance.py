"""One test per acceptance criterion; the terminal summary prints a PASS/FAIL line for each."""

import random
import subprocess
import sys
import time
from fractions import Fraction

from oracles import encloses_sqrt, machin_pi_bracket, machin_pi_digits
from trigcert.bignum import Interval, iv_mul, iv_square, iv_sub
from trigcert.laws import Verdict, check_ratio_monotone, pythagorean_enclosure
from trigcert.pi import circumscribed_area, inscribed_area, pi_enclosure
from trigcert.trig_core import DEGREES, TURNS, evaluate, negate_pair, pair_at_dyadic, width_bound

PI_LO, PI_HI = machin_pi_bracket(80)
SAMPLES = 1000


def cli(*argv):
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "trigcert", *argv], capture_output=True, text=True)
    return proc, time.perf_counter() - start


def F(x):
    return x.to_fraction()


def holds(a: Interval, value) -> bool:
    return F(a.lo) <= Fraction(value) <= F(a.hi)


def meets(a: Interval, b: Interval) -> bool:
    return a.lo <= b.hi and b.lo <= a.hi


def random_dyadic(rng, max_depth=12, span=4):
    den = 1 << rng.randint(0, max_depth)
    return Fraction(rng.randint(-span * den, span * den), den)


def test_pi_fifty_digits(criterion):
    with criterion("1", "pi --digits 50 matches the Machin oracle in under 10 s"):
        proc, elapsed = cli("pi", "--digits", "50")
        assert proc.returncode == 0, proc.stderr
        assert proc.stdout.strip() == machin_pi_digits(50)
        assert elapsed < 10


def test_polygon_closed_forms(criterion):
    with criterion("2", "square bracket [2, 4]; octagon areas 2 sqrt 2 and 8 (sqrt 2 - 1)"):
        slack = Fraction(1, 2**40)
        enc = pi_enclosure(2, 64)
        assert abs(F(enc.lower) - 2) <= slack and abs(F(enc.upper) - 4) <= slack
        a, A = inscribed_area(3, 60), circumscribed_area(3, 60)
        assert encloses_sqrt(F(a.lo), F(a.hi), 8)
        assert encloses_sqrt(F(A.lo), F(A.hi), 2, scale=8, shift=-8)


def test_bracket_behavior(criterion):
    with criterion("3", "brackets k=2..16 nested, contain pi, shrink by < 0.3 from k=4"):
        brackets = [pi_enclosure(k, 128) for k in range(2, 17)]
        for enc in brackets:
            assert F(enc.lower) <= PI_LO and PI_HI <= F(enc.upper)
        for prev, cur in zip(brackets, brackets[1:]):
            assert prev.lower <= cur.lower and cur.upper <= prev.upper
            if prev.k >= 4:
                assert F(cur.width()) < Fraction(3, 10) * F(prev.width())


def test_laws_suite(criterion):
    with criterion("4", "laws --samples 200 --seed 1 --max-bits 4096 exits 0 in under 60 s"):
        proc, elapsed = cli("laws", "--samples", "200", "--seed", "1", "--max-bits", "4096")
        assert proc.returncode == 0, proc.stdout + proc.stderr
        assert "inconclusive=0" in proc.stdout and "false=0" in proc.stdout
        assert elapsed < 60


def test_rational_pair_instantiation(criterion):
    with criterion("5", "ratio monotonicity at m=qr, n=ps, t=1/(qs) for three rational pairs"):
        for pq, rs in [
            (Fraction(1, 16), Fraction(1, 8)),
            (Fraction(3, 32), Fraction(1, 8)),
            (Fraction(1, 64), Fraction(3, 64)),
        ]:
            p, q, r, s = pq.numerator, pq.denominator, rs.numerator, rs.denominator
            result = check_ratio_monotone(q * r, p * s, Fraction(1, q * s))
            assert result.verdict is Verdict.TRUE, result


def test_known_values(criterion):
    with criterion("6", "sin 30, 45, 90 degrees enclose 1/2, sqrt 2 / 2, 1; widths <= 2^(4-p)"):
        for p in (8, 16, 64, 128, 256, 512):
            s30 = evaluate(DEGREES, 30, p).s
            assert holds(s30, Fraction(1, 2))
            w = p + 8
            triple = iv_sub(iv_mul(Interval.point(3), s30, w),
                            iv_mul(Interval.point(4), iv_mul(iv_square(s30, w), s30, w), w), w)
            assert holds(triple, 1)
            s45 = evaluate(DEGREES, 45, p).s
            assert encloses_sqrt(F(s45.lo), F(s45.hi), Fraction(1, 2))
            s90 = evaluate(DEGREES, 90, p).s
            assert s90.is_point() and holds(s90, 1)
            for x in (30, 45, 90, 1, 7919):
                pair = evaluate(DEGREES, x, p)
                assert pair.s.width() <= width_bound(p) and pair.co.width() <= width_bound(p)


def test_pythagorean_normalization(criterion):
    with criterion("7", "sin^2 + cos^2 encloses 1 with width < 2^-100 on 1000 dyadic angles"):
        rng = random.Random(7)
        for _ in range(SAMPLES):
            t = random_dyadic(rng, span=1)
            total = pythagorean_enclosure(t, 128)
            assert holds(total, 1), t
            assert F(total.width()) < Fraction(1, 2**100), t


def test_parity_and_periodicity(criterion):
    with criterion("8", "parity and periodicity on 1000 random angles"):
        rng = random.Random(8)
        for i in range(SAMPLES):
            if i % 2:
                t = random_dyadic(rng)
                a, b = pair_at_dyadic(t, 96), pair_at_dyadic(-t, 96)
                assert (b.s, b.co) == (negate_pair(a).s, negate_pair(a).co), t
            else:
                t = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
                a, b = evaluate(TURNS, t, 96), evaluate(TURNS, -t, 96)
                assert meets(b.s, negate_pair(a).s) and meets(b.co, a.co), t
            c = evaluate(TURNS, t + 1, 96)
            assert meets(a.s, c.s) and meets(a.co, c.co), t


def test_unit_invariance_of_pi(criterion):
    with criterion("9", "degree-routed and turn-routed brackets intersect at k=8"):
        turns, degrees = pi_enclosure(8, 128, TURNS), pi_enclosure(8, 128, DEGREES)
        assert meets(turns.interval(), degrees.interval())
        assert degrees.contains(PI_LO)
