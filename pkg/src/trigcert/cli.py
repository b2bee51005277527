"""Command-line front end: ``trigcert pi | eval | laws``.

Exit codes: 0 success, 1 inconclusive verdicts, 2 capacity exceeded (or a
certified-false law, which indicates a bug), 3 value undefined, 64 usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bignum import DOWN, UP, Dyadic, Interval, dy_decimal_exponent, dy_div, dy_to_decimal
from .errors import CapacityError, DomainError
from .laws import DEFAULT_MAX_BITS as LAWS_MAX_BITS
from .laws import Verdict, run_suite
from .pi import digits_enclosure, max_bits_from_env, pi_enclosure
from .trig_core import DEGREES, GRADIANS, TURNS, AngleUnit, TrigPair, eval_turn_interval, evaluate, tan_of

EXIT_OK = 0
EXIT_INCONCLUSIVE = 1
EXIT_CAPACITY = 2
EXIT_UNDEFINED = 3
EXIT_USAGE = 64

NAMED_UNITS = {"turns": TURNS, "degrees": DEGREES, "gradians": GRADIANS}
RADIANS = "radians"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def parse_angle(text: str) -> Fraction:
    """Optional sign, then an integer or ``p/q`` with q nonzero."""
    s = text.strip()
    body = s[1:] if s[:1] in "+-" else s
    num, slash, den = body.partition("/")
    if not num.isdigit() or (slash and not den.isdigit()):
        raise UsageError(f"invalid angle literal {text!r}; expected an integer or p/q")
    if den and int(den) == 0:
        raise UsageError(f"invalid angle literal {text!r}; zero denominator")
    return Fraction(s)


def parse_unit(text: str) -> AngleUnit | str:
    key = text.strip().lower()
    if key in NAMED_UNITS:
        return NAMED_UNITS[key]
    if key == RADIANS:
        return RADIANS
    try:
        c = parse_angle(key)
    except UsageError:
        raise UsageError(f"unknown unit {text!r}; use turns, degrees, gradians, radians or p/q") from None
    if c <= 0:
        raise UsageError(f"custom unit must be positive, got {c}")
    return AngleUnit(c)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trigcert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_pi = sub.add_parser("pi", help="certified decimal digits of pi")
    p_pi.add_argument("--digits", type=_positive, required=True)
    p_pi.add_argument("--output", choices=("plain", "json"), default="plain")

    p_eval = sub.add_parser("eval", help="certified enclosure of sin, cos or tan")
    p_eval.add_argument("function", choices=("sin", "cos", "tan"))
    p_eval.add_argument("--angle", required=True)
    p_eval.add_argument("--unit", default="turns")
    p_eval.add_argument("--precision-bits", type=_positive, default=64)
    p_eval.add_argument("--output", choices=("plain", "json"), default="plain")

    p_laws = sub.add_parser("laws", help="randomized certification of the trigonometric laws")
    p_laws.add_argument("--samples", type=_positive, default=100)
    p_laws.add_argument("--seed", type=int, default=0)
    p_laws.add_argument("--max-bits", type=_positive, default=LAWS_MAX_BITS)
    p_laws.add_argument("--output", choices=("plain", "json"), default="plain")
    return parser


def render_interval(a: Interval) -> tuple[str, str]:
    """Decimal endpoints, rounded outward, with just enough digits to tell them apart."""
    if a.is_point():
        digits = max(1, len(str(abs(a.lo.mantissa))) + max(0, -a.lo.exponent))
        return dy_to_decimal(a.lo, digits, DOWN), dy_to_decimal(a.hi, digits, UP)
    mag = max(abs(a.lo), abs(a.hi))
    digits = max(1, dy_decimal_exponent(mag) - dy_decimal_exponent(a.width()) + 2)
    while True:
        lo, hi = dy_to_decimal(a.lo, digits, DOWN), dy_to_decimal(a.hi, digits, UP)
        if lo != hi:
            return lo, hi
        digits += 1


def _radian_turns(x: Fraction, bits: int, max_bits: int) -> Interval:
    """Enclosure of x / (2 pi) in turns, with radius below ``2**-(bits + 2)``."""
    if x == 0:
        return Interval.point(Dyadic(0))
    size = max(1, abs(x).numerator.bit_length() - abs(x).denominator.bit_length() + 1)
    k = max(2, (bits + size + 10) // 2)
    while True:
        work = bits + size + 16
        if work + k > max_bits:
            raise CapacityError(f"radian evaluation needs more than {max_bits} bits")
        enc = pi_enclosure(k, work)
        num = Dyadic(x.numerator)
        den_lo, den_hi = enc.lower.shift(1) * Dyadic(x.denominator), enc.upper.shift(1) * Dyadic(x.denominator)
        if x > 0:
            turns = Interval(dy_div(num, den_hi, work, DOWN), dy_div(num, den_lo, work, UP))
        else:
            turns = Interval(dy_div(num, den_lo, work, DOWN), dy_div(num, den_hi, work, UP))
        if turns.width() <= Dyadic(1, -(bits + 2)):
            return turns
        k += 2


def _eval_pair(args, max_bits: int) -> TrigPair:
    angle = parse_angle(args.angle)
    unit = parse_unit(args.unit)
    bits = args.precision_bits
    if bits < 4 or bits > max_bits:
        raise UsageError(f"--precision-bits must be between 4 and {max_bits}")
    if unit == RADIANS:
        return eval_turn_interval(_radian_turns(angle, bits, max_bits), bits)
    return evaluate(unit, angle, bits)


def _unit_label(text: str) -> str:
    key = text.strip().lower()
    return key if key in NAMED_UNITS or key == RADIANS else f"(full circle = {key})"


def cmd_pi(args, out) -> int:
    max_bits = max_bits_from_env()
    text, enc = digits_enclosure(args.digits, max_bits)
    if args.output == "json":
        lo, hi = render_interval(enc.interval())
        doc = {
            "command": "pi",
            "inputs": {"digits": args.digits},
            "result": {"lo": str(enc.lower), "hi": str(enc.upper), "decimal_lo": lo, "decimal_hi": hi},
            "precision_bits": enc.precision_used,
            "k": enc.k,
            "digits": text,
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(text + "\n")
    return EXIT_OK


def cmd_eval(args, out) -> int:
    max_bits = max_bits_from_env()
    pair = _eval_pair(args, max_bits)
    if args.function == "sin":
        value = pair.s
    elif args.function == "cos":
        value = pair.co
    else:
        value = tan_of(pair, args.precision_bits)
    lo, hi = render_interval(value)
    if args.output == "json":
        doc = {
            "command": "eval",
            "inputs": {"function": args.function, "angle": args.angle, "unit": args.unit},
            "result": {"lo": str(value.lo), "hi": str(value.hi), "decimal_lo": lo, "decimal_hi": hi},
            "precision_bits": args.precision_bits,
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(f"{args.function}({args.angle} {_unit_label(args.unit)}) in [{lo}, {hi}]\n")
    return EXIT_OK


def cmd_laws(args, out) -> int:
    report = run_suite(args.seed, args.samples, args.max_bits)
    if args.output == "json":
        doc = {
            "command": "laws",
            "inputs": {"samples": args.samples, "seed": args.seed, "max_bits": args.max_bits},
            "result": report.to_dict(),
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(report.to_text())
    if report.count(Verdict.FALSE):
        return EXIT_CAPACITY
    if report.count(Verdict.INCONCLUSIVE):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


COMMANDS = {"pi": cmd_pi, "eval": cmd_eval, "laws": cmd_laws}


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    except DomainError as exc:
        err.write(f"undefined: {exc}\n")
        return EXIT_UNDEFINED
    except CapacityError as exc:
        err.write(f"capacity: {exc}\n")
        return EXIT_CAPACITY
    except ValueError as exc:
        err.write(f"usage: {exc}\n")
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
