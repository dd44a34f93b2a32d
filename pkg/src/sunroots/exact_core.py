"""Exact rational scalars and dense univariate polynomials over Q.

Scalars are :class:`fractions.Fraction`, which is always gcd-reduced with a
positive denominator and represents zero as ``0/1``.  :class:`Polynomial`
stores its coefficients in ascending degree order and is immutable.
Products and powers are computed on integer images (denominators cleared)
by :mod:`sunroots._intpoly`.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Tuple, Union

from sunroots import _intpoly

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(value: Union[int, str, Fraction]) -> Fraction:
    """Parse ``value`` as an exact rational (``"3/2"``, ``"-0.25"``, ``7``)."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a string or Fraction")
    return Fraction(value)


class Polynomial:
    """Dense polynomial with exact rational coefficients.

    >>> x = Polynomial.x()
    >>> (x * (x + 3)) / 2
    Polynomial('0', '3/2', '1/2')
    """

    __slots__ = ("_c", "_int")

    def __init__(self, coefficients: Iterable[Union[Scalar, str]] = ()):
        c = [Fraction(v) for v in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c: Tuple[Fraction, ...] = tuple(c)
        self._int = None

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls((value,))

    @classmethod
    def from_integer(cls, coeffs: Sequence[int], den: int = 1) -> "Polynomial":
        """Build ``coeffs / den`` from an integer coefficient list."""
        if den <= 0:
            raise ValueError("denominator must be positive")
        p = cls.__new__(cls)
        c = [Fraction(v, den) for v in _intpoly.strip(coeffs)]
        p._c = tuple(c)
        p._int = None
        return p

    # -- basic accessors -------------------------------------------------
    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self._c) - 1

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def integer_form(self) -> Tuple[int, Tuple[int, ...]]:
        """Return ``(den, ints)`` with ``self == ints / den`` and ``den > 0`` minimal."""
        if self._int is None:
            den = lcm(*(c.denominator for c in self._c)) if self._c else 1
            ints = tuple(c.numerator * (den // c.denominator) for c in self._c)
            self._int = (den, ints)
        return self._int

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = Polynomial.__new__(Polynomial)
        p._c = tuple(-v for v in self._c)
        p._int = None
        return p

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(v * other for v in self._c)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        da, ia = self.integer_form()
        db, ib = other.integer_form()
        return Polynomial.from_integer(_intpoly.mul(ia, ib), da * db)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero scalar")
            inv = 1 / Fraction(other)
            return Polynomial(v * inv for v in self._c)
        return NotImplemented

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        if e == 0:
            return Polynomial((1,))
        den, ints = self.integer_form()
        return Polynomial.from_integer(_intpoly.power(ints, e), den**e)

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        for k in range(len(rem) - dq - 1, -1, -1):
            f = rem[k + dq] / lead
            quot[k] = f
            if f:
                for j, bj in enumerate(other._c):
                    rem[k + j] -= f * bj
        return Polynomial(quot), Polynomial(rem[:dq])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    # -- evaluation and transforms ----------------------------------------
    def __call__(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        den, ints = self.integer_form()
        if not ints:
            return Fraction(0)
        num = _intpoly.evaluate(ints, x.numerator, x.denominator)
        return Fraction(num, den * x.denominator ** (len(ints) - 1))

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self._c) if k)

    def shift(self, c: Scalar) -> "Polynomial":
        """Return the polynomial ``x -> self(x + c)``."""
        c = Fraction(c)
        if c == 0 or self.degree <= 0:
            return self
        den, ints = self.integer_form()
        shifted = _intpoly.shift_rational(ints, c)
        return Polynomial.from_integer(shifted, den * c.denominator**self.degree)

    def compose_scale(self, s: Scalar) -> "Polynomial":
        """Return ``x -> self(s * x)``."""
        s = Fraction(s)
        out = []
        sp = Fraction(1)
        for c in self._c:
            out.append(c * sp)
            sp *= s
        return Polynomial(out)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic form")
        return self / self.leading

    # -- comparisons / display -------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return "Polynomial(" + ", ".join(repr(str(c)) for c in self._c) + ")"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k, c in enumerate(self._c):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(reversed(terms)).replace("+ -", "- ")


X = Polynomial.x()
ONE = Polynomial.constant(1)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_pow(a: Polynomial, e: int) -> Polynomial:
    return a**e


def poly_eval(a: Polynomial, x: Scalar) -> Fraction:
    return a(x)


def poly_shift(a: Polynomial, c: Scalar) -> Polynomial:
    return a.shift(c)


def poly_derivative(a: Polynomial) -> Polynomial:
    return a.derivative()


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor over Q.

    Runs the primitive remainder sequence on integer images so that
    coefficient growth stays under control.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    f = _intpoly.primitive(a.integer_form()[1])
    g = _intpoly.primitive(b.integer_form()[1])
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _pseudo_remainder(f, g)
        f, g = g, _intpoly.primitive(r)
    return Polynomial.from_integer(f).monic()


def _pseudo_remainder(f: Sequence[int], g: Sequence[int]):
    r = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while len(r) - 1 >= dg and r:
        lr = r[-1]
        shift = len(r) - 1 - dg
        r = [lg * v for v in r]
        for j, gj in enumerate(g):
            r[shift + j] -= lr * gj
        r = _intpoly.strip(r)
    return r


def squarefree_part(a: Polynomial) -> Polynomial:
    """Monic polynomial with the same roots as ``a``, all simple."""
    if a.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    if a.degree == 0:
        return ONE
    g = poly_gcd(a, a.derivative())
    q, r = divmod(a, g)
    assert r.is_zero()
    return q.monic()
