"""Exact rationals.

``Rat`` is :class:`fractions.Fraction`; it already keeps values in lowest
terms with a positive denominator.  This module only adds the strict string
format used in every JSON document: ``"n"``, ``"-n"`` or ``"n/d"``.
"""

import re
from fractions import Fraction

from ..errors import MalformedInput

Rat = Fraction

_RAT_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_rat(value):
    if type(value) is Fraction:
        return value
    if isinstance(value, bool):
        raise MalformedInput(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rat(value)
    raise MalformedInput(f"not a rational: {value!r}")


def parse_rat(text):
    """Parse ``"n"`` or ``"n/d"``; floats and exponents are rejected."""
    m = _RAT_RE.match(text) if isinstance(text, str) else None
    if m is None:
        raise MalformedInput(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise MalformedInput(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rat(q):
    q = as_rat(q)
    return str(q)
