"""Exact Gaussian-rational scalars.

Every coefficient in this package is a + b*i with a, b rational
(fractions.Fraction), so all comparisons are exact and no tolerance
appears anywhere.  Fraction keeps denominators positive and fractions
reduced, which gives the canonical-form invariants for free.
"""

from __future__ import annotations

import re
from fractions import Fraction

_COERCIBLE = (int, Fraction)


class GaussianRational:
    """Immutable exact complex scalar with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if type(re) is not Fraction:
            re = Fraction(re)
        if type(im) is not Fraction:
            im = Fraction(im)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- basic predicates ---------------------------------------------------

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_real(self):
        return self.im == 0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if type(other) is GaussianRational:
            return _fast(self.re + other.re, self.im + other.im)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _fast(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is GaussianRational:
            return _fast(self.re - other.re, self.im - other.im)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _fast(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _fast(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        if type(other) is GaussianRational:
            sre, sim, ore, oim = self.re, self.im, other.re, other.im
            if not sim and not oim:
                return _fast(sre * ore, _F0)
            return _fast(sre * ore - sim * oim, sre * oim + sim * ore)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return _fast(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return _fast(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self):
        if not self.im:
            return self
        return _fast(self.re, -self.im)

    def inverse(self):
        return ONE / self

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- text ----------------------------------------------------------------

    def __str__(self):
        return format_gaussian(self)

    def __repr__(self):
        return "GaussianRational(%r, %r)" % (str(self.re), str(self.im))


_F0 = Fraction(0)


def _fast(re: Fraction, im: Fraction) -> GaussianRational:
    out = object.__new__(GaussianRational)
    object.__setattr__(out, "re", re)
    object.__setattr__(out, "im", im)
    return out


def _coerce(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, _COERCIBLE):
        return GaussianRational(value)
    return None


def scalar(value) -> GaussianRational:
    """Coerce int/Fraction/str/GaussianRational into a GaussianRational."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, str):
        return parse_gaussian(value)
    coerced = _coerce(value)
    if coerced is None:
        raise TypeError("cannot interpret %r as a GaussianRational" % (value,))
    return coerced


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
HALF = GaussianRational(Fraction(1, 2))


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def format_gaussian(value: GaussianRational) -> str:
    """Render as "p/q", "r/s i", or "p/q+r/s i" (denominators omitted when 1)."""
    re_part, im_part = value.re, value.im
    if im_part == 0:
        return format_rational(re_part)
    if im_part == 1:
        im_text = "i"
    elif im_part == -1:
        im_text = "-i"
    else:
        im_text = format_rational(im_part) + "i"
    if re_part == 0:
        return im_text
    sign = "+" if im_part > 0 else ""
    return format_rational(re_part) + sign + im_text


_GAUSSIAN_RE = re.compile(
    r"""^\s*
        (?P<first>[+-]?\s*(?:\d+(?:/\d+)?)?\s*i|[+-]?\s*\d+(?:/\d+)?)
        \s*
        (?P<second>[+-]\s*(?:\d+(?:/\d+)?)?\s*i)?
        \s*$""",
    re.VERBOSE,
)


def _parse_part(text: str):
    """One signed part: rational, "i", "3/4i" -> (re, im) contribution."""
    text = text.replace(" ", "")
    if text.endswith("i"):
        body = text[:-1]
        if body in ("", "+"):
            return Fraction(0), Fraction(1)
        if body == "-":
            return Fraction(0), Fraction(-1)
        return Fraction(0), Fraction(body)
    return Fraction(text), Fraction(0)


def parse_gaussian(text: str) -> GaussianRational:
    """Parse "p/q", "r/s i", "p/q+r/s i" (and the same with integers)."""
    match = _GAUSSIAN_RE.match(text)
    if match is None:
        raise ValueError("not a Gaussian rational literal: %r" % text)
    first, second = match.group("first"), match.group("second")
    if second is not None and not first.replace(" ", "").endswith("i"):
        pass  # real part then imaginary part: the only two-part form
    elif second is not None:
        raise ValueError("malformed Gaussian rational literal: %r" % text)
    re_total, im_total = _parse_part(first)
    if second is not None:
        re2, im2 = _parse_part(second)
        re_total += re2
        im_total += im2
    return GaussianRational(re_total, im_total)
