"""Exact rational literals: parsing, coercion and printing."""

import re
from fractions import Fraction

_LITERAL = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$|^[+-]?\d+/\d+$")


def parse_rat(text):
    """Parse an integer, a decimal (converted exactly) or a ``p/q`` literal."""
    s = text.strip()
    if not _LITERAL.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def as_rat(v):
    """Coerce a number to Fraction.

    Floats are accepted only when their shortest decimal repr denotes the
    same binary value (0.5 passes, 0.1 does not).
    """
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        exact = Fraction(v)
        if exact != Fraction(repr(v)):
            raise ValueError(f"float {v!r} is not exactly representable; pass a Fraction or string")
        return exact
    if isinstance(v, str):
        return parse_rat(v)
    raise TypeError(f"cannot convert {type(v).__name__} to a rational")


def fmt_rat(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
