"""Exact coefficient arithmetic: rationals and the quadratic extension Q(sqrt 5).

Scalars throughout the package are either `fractions.Fraction` or `Sqrt5`
elements; both support +, -, *, /, ==, hash and comparison with 0, so the
linear-algebra layer never needs to know which field it is working over.
"""

from __future__ import annotations

from fractions import Fraction


class Sqrt5:
    """Element a + b*sqrt(5) of the real quadratic field Q(sqrt 5)."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def _coerce(x):
        if isinstance(x, Sqrt5):
            return x
        if isinstance(x, (int, Fraction)):
            return Sqrt5(x)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Sqrt5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Sqrt5(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Sqrt5(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Sqrt5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self):
        n = self.a * self.a - 5 * self.b * self.b
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 5)")
        return Sqrt5(self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        if self.b == 0:
            return str(self.a)
        return f"({self.a}+{self.b}r5)"


def is_rational(x) -> bool:
    return isinstance(x, (int, Fraction)) or (isinstance(x, Sqrt5) and x.b == 0)


def as_fraction(x) -> Fraction:
    """Coerce a scalar known to be rational into a Fraction."""
    if isinstance(x, Sqrt5):
        if x.b != 0:
            raise ValueError(f"{x!r} is irrational")
        return x.a
    return Fraction(x)


def scalar_parts(x):
    """Return (rational part, sqrt5 part) as Fractions."""
    if isinstance(x, Sqrt5):
        return x.a, x.b
    return Fraction(x), Fraction(0)
