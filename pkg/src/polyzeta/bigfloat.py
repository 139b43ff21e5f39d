"""
Midpoint-radius numbers: an mpmath value together with an absolute error bound.

Arithmetic propagates bounds the way interval code does: for a product,
|xy - XY| <= |x| dy + |y| dx + dx dy, and each operation also adds one
rounding unit of the working precision.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath
from mpmath import mpf


def _ulp(x, prec: int):
    if not x:
        return mpf(0)
    return abs(x) * mpf(2) ** (1 - prec)


class BigFloat:
    __slots__ = ("value", "bound", "prec")

    def __init__(self, value, bound=0, prec: int = 128):
        self.prec = prec
        with mpmath.workprec(prec):
            self.value = mpf(value)
            self.bound = abs(mpf(bound))

    @classmethod
    def exact(cls, q, prec: int = 128) -> "BigFloat":
        if isinstance(q, Fraction):
            with mpmath.workprec(prec):
                v = mpf(q.numerator) / q.denominator
            return cls(v, _ulp(v, prec), prec)
        return cls(q, 0, prec)

    def _wrap(self, value, bound) -> "BigFloat":
        return BigFloat(value, bound + _ulp(value, self.prec), self.prec)

    def __add__(self, other):
        if not isinstance(other, BigFloat):
            other = BigFloat.exact(_as_exact(other), self.prec)
        with mpmath.workprec(self.prec):
            return self._wrap(self.value + other.value, self.bound + other.bound)

    __radd__ = __add__

    def __neg__(self):
        # mpf negation rounds to the ambient precision
        with mpmath.workprec(self.prec):
            return BigFloat(-self.value, self.bound, self.prec)

    def __sub__(self, other):
        return self + (-other if isinstance(other, BigFloat) else -_as_exact(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, BigFloat):
            q = _as_exact(other)
            if isinstance(q, int) or q.denominator == 1:
                with mpmath.workprec(self.prec):
                    v = self.value * int(q)
                    return self._wrap(v, self.bound * abs(int(q)))
            other = BigFloat.exact(q, self.prec)
        with mpmath.workprec(self.prec):
            v = self.value * other.value
            b = (abs(self.value) * other.bound + abs(other.value) * self.bound
                 + self.bound * other.bound)
            return self._wrap(v, b)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers not supported")
        out = BigFloat(1, 0, self.prec)
        for _ in range(n):
            out = out * self
        return out

    def __abs__(self):
        with mpmath.workprec(self.prec):
            return BigFloat(abs(self.value), self.bound, self.prec)

    def contains(self, x) -> bool:
        with mpmath.workprec(self.prec + 32):
            return abs(mpf(x) - self.value) <= self.bound

    def __float__(self):
        return float(self.value)

    def __repr__(self):
        return f"BigFloat({mpmath.nstr(self.value, 25)} +- {mpmath.nstr(self.bound, 3)})"

    def digits(self, n: int | None = None) -> str:
        if n is None:
            n = max(5, int(self.prec * 0.30103) - 2)
        return mpmath.nstr(self.value, n, strip_zeros=False)


def _as_exact(x):
    if isinstance(x, (int, Fraction)):
        return x
    raise TypeError(f"cannot combine BigFloat with {type(x).__name__}")


def residual(a: BigFloat, b: BigFloat) -> tuple:
    """(|a - b|, a.bound + b.bound) as mpf values."""
    prec = max(a.prec, b.prec)
    with mpmath.workprec(prec):
        return abs(a.value - b.value), a.bound + b.bound
