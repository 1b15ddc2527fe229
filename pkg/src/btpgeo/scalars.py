"""Exact and floating complex scalars.

Every quantity in the library is generic over a *scalar kind*: either
``ExactComplex`` (a complex number with rational real/imaginary parts, used
for all golden-value computations) or the builtin ``complex`` (used for
numerical frame searches, Takagi factorization and sampling-based checks).
The two kinds are never mixed inside one object.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


class ExactComplex:
    """A complex number with exact rational real and imaginary parts.

    ``Fraction`` keeps denominators positive and in lowest terms, which makes
    equality and hashing exact.  Arithmetic with ``int`` and ``Fraction`` is
    supported; mixing with ``float``/``complex`` raises ``TypeError`` so that
    exact pipelines cannot silently degrade.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Rat = 0, im: Rat = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, *_):
        raise AttributeError("ExactComplex is immutable")

    # ---- constructors -------------------------------------------------
    @staticmethod
    def zero() -> "ExactComplex":
        return ExactComplex(0, 0)

    @staticmethod
    def one() -> "ExactComplex":
        return ExactComplex(1, 0)

    @staticmethod
    def i() -> "ExactComplex":
        return ExactComplex(0, 1)

    @staticmethod
    def from_rational(re: Rat, im: Rat = 0) -> "ExactComplex":
        return ExactComplex(re, im)

    # ---- ring operations ----------------------------------------------
    def _coerce(self, other):
        if isinstance(other, ExactComplex):
            return other
        if isinstance(other, (int, Fraction)):
            return ExactComplex(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactComplex(self.re * o.re - self.im * o.im,
                            self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by exact zero")
        return ExactComplex((self.re * o.re + self.im * o.im) / d,
                            (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return ExactComplex(-self.re, -self.im)

    def __pos__(self):
        return self

    # ---- structure -----------------------------------------------------
    def conjugate(self) -> "ExactComplex":
        return ExactComplex(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|z|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"EC({self.re})"
        return f"EC({self.re}, {self.im})"


EC = ExactComplex

Scalar = Union[ExactComplex, complex]


def is_exact(c: Scalar) -> bool:
    return isinstance(c, ExactComplex)


def conj(c: Scalar) -> Scalar:
    if isinstance(c, ExactComplex):
        return c.conjugate()
    return complex(c).conjugate()


def is_zero(c: Scalar) -> bool:
    """Exact zero test (floats compare against literal 0.0)."""
    if isinstance(c, ExactComplex):
        return c.is_zero()
    return c == 0


def scalar_abs(c: Scalar) -> float:
    if isinstance(c, ExactComplex):
        return float(c.abs2()) ** 0.5
    return abs(c)


def zero_like(c: Scalar) -> Scalar:
    return ExactComplex.zero() if isinstance(c, ExactComplex) else 0j


def imag_unit(exact: bool) -> Scalar:
    return ExactComplex.i() if exact else 1j


def as_scalar(value, exact: bool) -> Scalar:
    """Coerce a Python number (or ExactComplex) to the requested kind."""
    if exact:
        if isinstance(value, ExactComplex):
            return value
        if isinstance(value, (int, Fraction)):
            return ExactComplex(value, 0)
        raise TypeError(f"cannot build an exact scalar from {value!r}")
    if isinstance(value, ExactComplex):
        return complex(value)
    return complex(value)


# ---- JSON wire format ----------------------------------------------------
# Exact scalars travel as {"re": "p/q", "im": "p/q"}; float scalars as JSON
# numbers (real) or {"re": number, "im": number}.

def scalar_to_json(c: Scalar):
    if isinstance(c, ExactComplex):
        return {"re": str(c.re), "im": str(c.im)}
    c = complex(c)
    if c.imag == 0:
        return c.real
    return {"re": c.real, "im": c.imag}


def scalar_from_json(obj) -> Scalar:
    if isinstance(obj, dict):
        re, im = obj.get("re", 0), obj.get("im", 0)
        if isinstance(re, str) or isinstance(im, str):
            return ExactComplex(Fraction(str(re)), Fraction(str(im)))
        return complex(float(re), float(im))
    if isinstance(obj, str):
        return ExactComplex(Fraction(obj), 0)
    if isinstance(obj, bool):
        raise TypeError("boolean is not a scalar")
    if isinstance(obj, (int, float)):
        return complex(obj)
    raise TypeError(f"cannot parse scalar from {obj!r}")
