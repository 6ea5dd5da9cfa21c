"""Exact arithmetic in the quadratic field Q(sqrt 2).

Every number handled by the package is either a rational (``fractions.Fraction``)
or a ``QuadExt``: a pair (rat, irr) of rationals denoting ``rat + irr*sqrt(2)``.
All arithmetic, comparison, and rendering is exact; no floats enter any decision.

The sign of ``a + b*sqrt(2)`` is decided without approximation:

* ``b == 0``: sign of ``a``.
* ``a == 0``: sign of ``b``.
* same signs: that common sign.
* opposite signs: compare ``a**2`` with ``2*b**2``; equality is impossible for
  nonzero rationals because sqrt(2) is irrational.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (optional sign, surrounding whitespace allowed)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True, slots=True)
class QuadExt:
    """The number ``rat + irr*sqrt(2)`` with both coordinates rational."""

    rat: Fraction = Fraction(0)
    irr: Fraction = Fraction(0)

    @staticmethod
    def of(rat: Fraction | int | str, irr: Fraction | int | str = 0) -> "QuadExt":
        return QuadExt(Fraction(rat), Fraction(irr))

    def sign(self) -> int:
        a, b = self.rat, self.irr
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        sa = 1 if a > 0 else -1
        sb = 1 if b > 0 else -1
        if sa == sb:
            return sa
        aa = a * a
        bb = 2 * b * b
        # aa == bb would make sqrt(2) rational
        assert aa != bb
        return sa if aa > bb else sb

    def is_rational(self) -> bool:
        return self.irr == 0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: object) -> "QuadExt":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.rat + o.rat, self.irr + o.irr)

    __radd__ = __add__

    def __sub__(self, other: object) -> "QuadExt":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.rat - o.rat, self.irr - o.irr)

    def __rsub__(self, other: object) -> "QuadExt":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(o.rat - self.rat, o.irr - self.irr)

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.rat, -self.irr)

    def __mul__(self, other: object) -> "QuadExt":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(
            self.rat * o.rat + 2 * self.irr * o.irr,
            self.rat * o.irr + self.irr * o.rat,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "QuadExt":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        norm = o.rat * o.rat - 2 * o.irr * o.irr
        if o.rat == 0 and o.irr == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 2)")
        # norm == 0 with o nonzero would make sqrt(2) rational
        assert norm != 0
        num = self * QuadExt(o.rat, -o.irr)
        return QuadExt(num.rat / norm, num.irr / norm)

    def __rtruediv__(self, other: object) -> "QuadExt":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __abs__(self) -> "QuadExt":
        return -self if self.sign() < 0 else self

    # -- comparison ---------------------------------------------------------

    def __lt__(self, other: object) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other: object) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other: object) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other: object) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __eq__(self, other: object) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.rat == o.rat and self.irr == o.irr

    def __hash__(self) -> int:
        if self.irr == 0:
            return hash(self.rat)
        return hash((self.rat, self.irr))

    def __float__(self) -> float:
        return float(self.rat) + float(self.irr) * math.sqrt(2.0)

    def __str__(self) -> str:
        return format_quadext(self)

    def __repr__(self) -> str:
        return f"QuadExt({self.rat!r}, {self.irr!r})"


ZERO = QuadExt()
ONE = QuadExt(Fraction(1))
SQRT2 = QuadExt(Fraction(0), Fraction(1))


def _coerce(value: object) -> QuadExt | None:
    if isinstance(value, QuadExt):
        return value
    if isinstance(value, (int, Fraction)):
        return QuadExt(Fraction(value))
    return None


def as_quadext(value: object) -> QuadExt:
    out = _coerce(value)
    if out is None:
        raise TypeError(f"cannot interpret {value!r} as an exact number")
    return out


def compare(x: QuadExt, y: QuadExt) -> int:
    """-1, 0, or 1 according to the exact order of x and y."""
    return (x - y).sign()


def midpoint(x: QuadExt, y: QuadExt) -> QuadExt:
    return (x + y) / 2


def format_quadext(x: QuadExt) -> str:
    """Render exactly: ``p/q`` when rational, else ``a + b*sqrt2`` / ``a - b*sqrt2``."""
    if x.irr == 0:
        return str(x.rat)
    op = "+" if x.irr > 0 else "-"
    return f"{x.rat} {op} {abs(x.irr)}*sqrt2"


_RAT = r"[+-]?\d+(?:/\d+)?"
_PATTERNS = (
    # a + b*sqrt2  (b unsigned; the operator carries the sign)
    re.compile(rf"^(?P<a>{_RAT})\s*(?P<op>[+-])\s*(?P<b>\d+(?:/\d+)?)\s*\*\s*sqrt2$"),
    # b*sqrt2 with no rational part
    re.compile(rf"^(?P<b>{_RAT})\s*\*\s*sqrt2$"),
    # bare sqrt2, optionally signed
    re.compile(r"^(?P<op>[+-]?)\s*sqrt2$"),
    # plain rational
    re.compile(rf"^(?P<a>{_RAT})$"),
)


def parse_quadext(text: str) -> QuadExt:
    """Inverse of :func:`format_quadext`, tolerant of extra whitespace."""
    s = text.strip()
    for pat in _PATTERNS:
        m = pat.match(s)
        if m is None:
            continue
        groups = m.groupdict()
        try:
            a = Fraction(groups["a"]) if groups.get("a") else Fraction(0)
            if groups.get("b") is not None:
                b = Fraction(groups["b"])
            elif "sqrt2" in pat.pattern:
                b = Fraction(1)
            else:
                b = Fraction(0)
        except ZeroDivisionError as exc:
            raise ParseError(f"zero denominator in {text!r}") from exc
        if groups.get("op") == "-":
            b = -b
        return QuadExt(a, b)
    raise ParseError(f"not an exact number: {text!r}")
