import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from oracles import encloses_sqrt, machin_pi_digits, sin_series_bracket
from trigcert.bignum import Dyadic
from trigcert.cli import main, parse_angle
from trigcert.pi import MAX_BITS_ENV


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run(*argv, "--output", "json")
    assert code == 0
    return json.loads(out)


def bounds(doc):
    return Dyadic.parse(doc["result"]["lo"]).to_fraction(), Dyadic.parse(doc["result"]["hi"]).to_fraction()


def test_pi_digits():
    assert run("pi", "--digits", "10")[:2] == (0, "3.1415926535\n")
    assert run("pi", "--digits", "1")[:2] == (0, "3.1\n")


@pytest.mark.parametrize("argv", [
    ("pi", "--digits", "0"),
    ("pi",),
    ("laws", "--samples", "0"),
    ("eval", "sin", "--angle", "1/0"),
    ("eval", "sin", "--angle", "x"),
    ("eval", "sec", "--angle", "1"),
    ("eval", "sin", "--angle", "1", "--unit", "0"),
    ("eval", "sin", "--angle", "1", "--unit", "furlongs"),
    ("frobnicate",),
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 64


def test_pi_json():
    doc = run_json("pi", "--digits", "20")
    assert doc["command"] == "pi" and doc["digits"] == machin_pi_digits(20)
    assert {"k", "precision_bits", "inputs", "result"} <= set(doc)
    lo, hi = bounds(doc)
    assert lo < Fraction(doc["digits"]) + Fraction(1, 10**20) and hi > Fraction(doc["digits"])
    assert Fraction(doc["result"]["decimal_lo"]) <= lo and Fraction(doc["result"]["decimal_hi"]) >= hi


def test_pi_capacity(monkeypatch):
    monkeypatch.setenv(MAX_BITS_ENV, "64")
    code, _, err = run("pi", "--digits", "100")
    assert code == 2 and "capacity" in err


def test_eval_examples():
    lo, hi = bounds(run_json("eval", "sin", "--angle", "90", "--unit", "degrees"))
    assert lo <= 1 <= hi
    lo, hi = bounds(run_json("eval", "tan", "--angle", "1/8", "--unit", "turns"))
    assert lo <= 1 <= hi
    lo, hi = bounds(run_json("eval", "cos", "--angle", "1/2", "--unit", "turns"))
    assert lo <= -1 <= hi


def test_eval_tan_undefined():
    code, _, err = run("eval", "tan", "--angle", "90", "--unit", "degrees")
    assert code == 3 and "undefined" in err


def test_eval_plain_output_outward():
    code, out, _ = run("eval", "sin", "--angle", "45", "--unit", "degrees", "--precision-bits", "100")
    assert code == 0
    lo_text, hi_text = out.split("[")[1].rstrip("]\n").split(", ")
    assert encloses_sqrt(Fraction(lo_text), Fraction(hi_text), Fraction(1, 2))


def test_unit_equivalence_cli():
    a = bounds(run_json("eval", "sin", "--angle", "45", "--unit", "degrees"))
    b = bounds(run_json("eval", "sin", "--angle", "1/8", "--unit", "turns"))
    assert a[0] <= b[1] and b[0] <= a[1]


def test_custom_unit():
    lo, hi = bounds(run_json("eval", "sin", "--angle", "100", "--unit", "400"))
    assert lo <= 1 <= hi
    lo, hi = bounds(run_json("eval", "cos", "--angle", "7/9", "--unit", "7/3"))
    assert lo <= Fraction(-1, 2) <= hi


@pytest.mark.parametrize("x", ["1", "-3/2", "1/7", "0"])
def test_radians(x):
    doc = run_json("eval", "sin", f"--angle={x}", "--unit", "radians", "--precision-bits", "96")
    lo, hi = bounds(doc)
    s_lo, s_hi = sin_series_bracket(Fraction(x))
    assert lo <= s_lo and s_hi <= hi
    assert hi - lo < Fraction(1, 2**90)


def test_json_roundtrip_bit_exact():
    doc = run_json("eval", "cos", "--angle", "1/3", "--unit", "turns", "--precision-bits", "80")
    lo = Dyadic.parse(doc["result"]["lo"])
    assert str(lo) == doc["result"]["lo"]
    from trigcert.trig_core import TURNS, evaluate

    pair = evaluate(TURNS, Fraction(1, 3), 80)
    assert (lo, Dyadic.parse(doc["result"]["hi"])) == (pair.co.lo, pair.co.hi)


def test_laws_command():
    code, out, _ = run("laws", "--samples", "3", "--seed", "7")
    assert code == 0
    assert "false=0" in out.splitlines()[-1]
    assert run("laws", "--samples", "3", "--seed", "7")[1] == out
    doc = run_json("laws", "--samples", "2", "--seed", "7")
    assert doc["command"] == "laws" and doc["result"]["counterexample"] is None


def test_laws_inconclusive_exit():
    assert run("laws", "--samples", "2", "--seed", "7", "--max-bits", "4")[0] == 1


def test_parse_angle():
    assert parse_angle("-3/6") == Fraction(-1, 2)
    assert parse_angle("+12") == 12


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "trigcert", "pi", "--digits", "5"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "3.14159\n"
