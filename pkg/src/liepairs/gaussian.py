"""Gaussian rationals: the field Q(i), kept exact via a pair of Fractions.

Only the matrix realization of so(p+2) needs the imaginary unit (the real
form embedding and the Cayley transform); everything root-theoretic stays
over plain Fractions.
"""

from __future__ import annotations

from fractions import Fraction


class QI:
    """An element a + b*i with a, b rational."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def coerce(x) -> "QI":
        if isinstance(x, QI):
            return x
        return QI(x)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = QI.coerce(other)
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = QI.coerce(other)
        return QI(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return QI(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-QI.coerce(other))

    def __rsub__(self, other):
        return QI.coerce(other) + (-self)

    def __mul__(self, other):
        other = QI.coerce(other)
        return QI(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QI":
        return QI(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "QI":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return QI(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * QI.coerce(other).inverse()

    def __rtruediv__(self, other):
        return QI.coerce(other) * self.inverse()

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"


I = QI(0, 1)
ZERO = QI(0)
ONE = QI(1)
