"""Threshold sets of good probabilities.

An upset is an upward-closed subset of [0, 1] that contains 1 and
excludes 0, determined by an exact rational threshold plus an open/closed
flag.  For 0 < x < 1 both ``[x,1]`` and ``(x,1]`` exist; threshold 0
forces the open upset and threshold 1 the closed one (the singleton
``{1}``).  Irrational thresholds are rejected by construction: every
value entering the engine is an exact rational.
"""

import re
from dataclasses import dataclass

from .errors import ParseError, UpsetError
from .rational import (
    ONE,
    ZERO,
    check_unit_interval,
    format_rational,
    parse_rational,
    rat,
)


@dataclass(frozen=True)
class Upset:
    threshold: object
    closed: bool

    def __init__(self, threshold, closed):
        t = rat(threshold)
        if t < 0 or t > 1:
            raise UpsetError(f"threshold must lie in [0, 1], got {format_rational(t)}")
        if t == ZERO and closed:
            raise UpsetError("threshold 0 admits only the open upset (0,1]")
        if t == ONE and not closed:
            raise UpsetError("threshold 1 admits only the closed upset {1}")
        object.__setattr__(self, "threshold", t)
        object.__setattr__(self, "closed", bool(closed))

    def contains(self, value):
        """Membership test; value must lie in [0, 1]."""
        v = check_unit_interval(value, "probability")
        return v >= self.threshold if self.closed else v > self.threshold

    __contains__ = contains

    def mirror(self):
        """The mirror image {x : 1 - x in self}, a downset from 0."""
        return Downset(ONE - self.threshold, self.closed)

    def dual(self):
        """[0,1] minus the mirror image: reflect and swap closure."""
        return Upset(ONE - self.threshold, not self.closed)

    def issubset(self, other):
        if other.threshold != self.threshold:
            return other.threshold < self.threshold
        return other.closed or not self.closed

    def __str__(self):
        return format_upset(self)

    def __repr__(self):
        return f"<Upset {format_upset(self)}>"


@dataclass(frozen=True)
class Downset:
    """Downward-closed interval from 0: the mirror image of an upset.

    Contains 0, excludes 1; ``closed`` refers to the upper end.
    """

    bound: object
    closed: bool

    def __init__(self, bound, closed):
        object.__setattr__(self, "bound", rat(bound))
        object.__setattr__(self, "closed", bool(closed))

    def contains(self, value):
        v = check_unit_interval(value, "probability")
        return v <= self.bound if self.closed else v < self.bound

    __contains__ = contains

    def __str__(self):
        b = format_rational(self.bound)
        return f"[0,{b}]" if self.closed else f"[0,{b})"


ONE_ONLY = Upset(1, closed=True)
POSITIVE = Upset(0, closed=False)

_UPSET_RE = re.compile(r"^\s*([\[(])\s*([^,\s]+)\s*,\s*1\s*\]\s*$")


def parse_upset(text):
    """Parse ``[x,1]``, ``(x,1]``, ``{1}``, or ``(0,1]`` (x rational)."""
    s = text.strip()
    if s == "{1}":
        return ONE_ONLY
    m = _UPSET_RE.match(s)
    if not m:
        raise ParseError(f"malformed upset {text!r}")
    threshold = parse_rational(m.group(2))
    closed = m.group(1) == "["
    try:
        return Upset(threshold, closed)
    except UpsetError as exc:
        raise ParseError(str(exc)) from None


def format_upset(upset):
    if upset.threshold == ONE:
        return "{1}"
    bracket = "[" if upset.closed else "("
    return f"{bracket}{format_rational(upset.threshold)},1]"
