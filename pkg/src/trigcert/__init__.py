"""Certified trigonometry from the addition formulas, and pi from polygon areas."""

from .bignum import DOWN, UP, Dyadic, Interval, Rounding
from .errors import CapacityError, DomainError
from .pi import PiEnclosure, pi_enclosure, pi_to_digits
from .trig_core import DEGREES, GRADIANS, TURNS, AngleUnit, TrigPair, evaluate, pair_at_dyadic

__version__ = "0.1.0"

__all__ = [
    "DOWN", "UP", "Dyadic", "Interval", "Rounding", "CapacityError", "DomainError",
    "DEGREES", "GRADIANS", "TURNS", "AngleUnit", "TrigPair", "evaluate", "pair_at_dyadic",
    "PiEnclosure", "pi_enclosure", "pi_to_digits",
]
