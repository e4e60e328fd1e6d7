"""Executable countability arguments: pairings, rational enumeration,
diagonalization and Hilbert's hotel."""

from fractions import Fraction

from ._cantor import (
    CompositionError,
    DomainError,
    Error,
    EvalError,
    Hotel,
    ParseError,
    Rule,
    UnknownGuestError,
    bijection_sets,
    check_pairing,
    compare_finite,
    diagonal_witness,
    enumerate,
    map,
    rational_digits,
    sqrt_digits,
    verify_witness,
)
from . import _cantor

__all__ = [
    "CompositionError",
    "DomainError",
    "Error",
    "EvalError",
    "Hotel",
    "ParseError",
    "Rule",
    "UnknownGuestError",
    "bijection_sets",
    "check_pairing",
    "compare_finite",
    "diagonal_witness",
    "enumerate",
    "list_rationals",
    "map",
    "rational_at",
    "rational_digits",
    "rational_index",
    "sqrt_digits",
    "verify_witness",
]


def rational_at(n, signed=False):
    """The n-th rational (n >= 1) in the zigzag order."""
    p, q = _cantor.rational_at(n, signed)
    return Fraction(p, q)


def rational_index(r, signed=False):
    """Position of a rational in the zigzag order."""
    r = Fraction(r)
    return _cantor.rational_index(r.numerator, r.denominator, signed)


def list_rationals(count):
    """The first `count` positive rationals in the zigzag order."""
    return [Fraction(p, q) for p, q in _cantor.list_rationals(count)]
