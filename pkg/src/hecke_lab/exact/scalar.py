"""Exact scalars in Q(i).

Every number in the library is a Gaussian rational ``a + b*i`` with ``a, b``
rational.  Real values are simply those with ``b == 0``; they compare and hash
like the corresponding :class:`fractions.Fraction`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational


class Scalar:
    """An immutable element of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            re, im = re.re, re.im + Fraction(im)
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @staticmethod
    def _make(re: Fraction, im: Fraction) -> "Scalar":
        s = object.__new__(Scalar)
        object.__setattr__(s, "re", re)
        object.__setattr__(s, "im", im)
        return s

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        o = as_scalar(other)
        return Scalar._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = as_scalar(other)
        return Scalar._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        o = as_scalar(other)
        if not self.im and not o.im:
            return Scalar._make(self.re * o.re, _ZERO)
        return Scalar._make(self.re * o.re - self.im * o.im,
                            self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = as_scalar(other)
        if not o:
            raise ZeroDivisionError("division by zero in Q(i)")
        if not o.im:
            return Scalar._make(self.re / o.re, self.im / o.re)
        n = o.re * o.re + o.im * o.im
        return Scalar._make((self.re * o.re + self.im * o.im) / n,
                            (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        return as_scalar(other) / self

    def __neg__(self):
        return Scalar._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("only integer powers")
        if n < 0:
            return (ONE / self) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison -------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return not self.im and self.re == other
        if isinstance(other, complex):
            return self.re == other.real and self.im == other.imag
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def _real_or_raise(self, other):
        o = as_scalar(other)
        if self.im or o.im:
            raise TypeError("order comparison of non-real Gaussian rationals")
        return o.re

    def __lt__(self, other):
        return self.re < self._real_or_raise(other)

    def __le__(self, other):
        return self.re <= self._real_or_raise(other)

    def __gt__(self, other):
        return self.re > self._real_or_raise(other)

    def __ge__(self, other):
        return self.re >= self._real_or_raise(other)

    # helpers ----------------------------------------------------------------
    @property
    def real(self) -> "Scalar":
        return Scalar._make(self.re, _ZERO)

    @property
    def imag(self) -> "Scalar":
        return Scalar._make(self.im, _ZERO)

    def conjugate(self) -> "Scalar":
        return Scalar._make(self.re, -self.im)

    def is_real(self) -> bool:
        return not self.im

    def is_imaginary(self) -> bool:
        return not self.re

    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        return format_scalar(self)


_ZERO = Fraction(0)
ZERO = Scalar._make(Fraction(0), Fraction(0))
ONE = Scalar._make(Fraction(1), Fraction(0))
I = Scalar._make(Fraction(0), Fraction(1))


def as_scalar(x) -> Scalar:
    if type(x) is Scalar:
        return x
    if isinstance(x, (int, Rational)):
        return Scalar._make(Fraction(x), _ZERO)
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, complex):
        raise TypeError("floating complex numbers are not exact; pass strings")
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass strings or Fractions")
    if isinstance(x, Scalar):
        return x
    raise TypeError(f"cannot convert {x!r} to Scalar")


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(s: Scalar) -> str:
    """Canonical string: ``"a/b"`` or ``"a/b+c/d*i"`` in lowest terms."""
    if not s.im:
        return _frac_str(s.re)
    sign = "-" if s.im < 0 else "+"
    im = _frac_str(abs(s.im))
    if not s.re:
        return f"{'-' if s.im < 0 else ''}{im}*i"
    return f"{_frac_str(s.re)}{sign}{im}*i"


_RAT = r"[+-]?\d+(?:/\d+)?"
_FULL = re.compile(rf"^\s*(?:(?P<re>{_RAT})(?=$|[+-]|\s))?\s*"
                   rf"(?:(?P<im>[+-]?(?:\d+(?:/\d+)?)?)\s*\*?\s*i)?\s*$")


def parse_scalar(text: str) -> Scalar:
    """Parse ``"3"``, ``"-1/2"``, ``"1/2-3/4*i"``, ``"i"``, ``"-2*i"``."""
    t = text.strip().replace(" ", "")
    if not t:
        raise ValueError("empty scalar string")
    m = _FULL.match(t)
    if not m or (m.group("re") is None and m.group("im") is None):
        raise ValueError(f"malformed scalar {text!r}")
    re_part = Fraction(m.group("re")) if m.group("re") is not None else _ZERO
    im_text = m.group("im")
    if im_text is None:
        im_part = _ZERO
    elif im_text in ("", "+"):
        im_part = Fraction(1)
    elif im_text == "-":
        im_part = Fraction(-1)
    else:
        im_part = Fraction(im_text)
    return Scalar._make(re_part, im_part)
