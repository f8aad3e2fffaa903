"""Exact rational numbers used throughout the decision paths.

All probabilities, thresholds, and LP data are arbitrary-precision
rationals; no floating point ever enters a decision.  The backend is
``gmpy2.mpq`` (fast, C-implemented, interoperable with
``fractions.Fraction`` for equality, hashing, and arithmetic).  Floats are
rejected at the boundary rather than silently converted.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC

from gmpy2 import mpq

from .errors import DomainError, ParseError

Rational = type(mpq())

ZERO = mpq(0)
ONE = mpq(1)
HALF = mpq(1, 2)


def rat(value, denominator=None):
    """Coerce to an exact rational.

    Accepts ints, ``Fraction``, ``mpq``, numerator/denominator pairs, and
    strings like ``"7/10"`` or ``"3"``.  Floats are rejected: callers who
    really mean a float must convert it to an exact rational themselves.
    """
    if denominator is not None:
        return mpq(value, denominator)
    if isinstance(value, float):
        raise DomainError(f"refusing to coerce float {value!r} to an exact rational")
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, (int, _RationalABC)):
        return mpq(value)
    raise DomainError(f"cannot interpret {value!r} as a rational")


def parse_rational(text, position=None):
    """Parse ``"n/m"`` or ``"n"`` into an exact rational."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        if sep:
            d = int(den.strip())
            if d <= 0:
                raise ValueError
            return mpq(int(num.strip()), d)
        return mpq(int(num.strip()))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"malformed rational {text!r}", position) from None


def format_rational(value):
    """Canonical ``n/m`` (or integer) string form."""
    return str(mpq(value))


def to_fraction(value):
    """Convert to ``fractions.Fraction`` (for callers that prefer stdlib)."""
    return Fraction(value.numerator, value.denominator)


def check_unit_interval(value, what="value"):
    """Validate 0 <= value <= 1, returning it as mpq."""
    v = rat(value)
    if v < 0 or v > 1:
        raise DomainError(f"{what} must lie in [0, 1], got {format_rational(v)}")
    return v
