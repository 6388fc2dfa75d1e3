"""Exact rationals, dense univariate polynomials and the f/h transform."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

Rational = Fraction
Point = tuple  # tuple of Fraction

ZERO_DEGREE = -1

Number = Union[int, Fraction]


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or a string like ``"7/2"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s:
            raise ValueError("empty rational")
        return Fraction(s)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def fmt_rational(q: Number) -> str:
    return str(Fraction(q))


def point(coords: Iterable) -> tuple:
    return tuple(as_rational(c) for c in coords)


def dot(a: Sequence, b: Sequence):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


class Polynomial:
    """Polynomial in ``t`` with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    @staticmethod
    def _lift(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._lift(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, c) -> "Polynomial":
        c = as_rational(c)
        return Polynomial(x / c for x in self.coeffs)

    def __call__(self, x):
        """Evaluate at a number, or compose when ``x`` is a Polynomial (Horner)."""
        if isinstance(x, Polynomial):
            out = Polynomial()
            for c in reversed(self.coeffs):
                out = out * x + c
            return out
        x = as_rational(x)
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def reversed(self, degree: int | None = None) -> "Polynomial":
        """``t^degree * p(1/t)``; defaults to the actual degree."""
        d = self.degree if degree is None else degree
        if self.degree > d:
            raise ValueError("degree too small for reversal")
        return Polynomial([self[d - k] for k in range(d + 1)])

    def is_palindromic(self, degree: int | None = None) -> bool:
        return self == self.reversed(degree)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def to_strings(self) -> list:
        return [fmt_rational(c) for c in self.coeffs] or ["0"]

    def __repr__(self) -> str:
        return f"Polynomial({[fmt_rational(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k and c == 1:
                terms.append(mono)
            elif k and c == -1:
                terms.append("-" + mono)
            else:
                cs = fmt_rational(c)
                if "/" in cs and k:
                    cs = f"({cs})"
                terms.append(cs + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")


T = Polynomial([0, 1])


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_eval(p: Polynomial, x):
    return p(x)


def f_from_h(h: Polynomial) -> Polynomial:
    """f(t) = h(t + 1), i.e. f_j = sum_i C(i, j) h_i."""
    d = h.degree
    return Polynomial(
        [sum((comb(i, j) * h[i] for i in range(j, d + 1)), Fraction(0)) for j in range(d + 1)]
    )


def h_from_f(f: Polynomial) -> Polynomial:
    """h(t) = f(t - 1)."""
    d = f.degree
    return Polynomial(
        [
            sum((comb(i, j) * (-1) ** (i - j) * f[i] for i in range(j, d + 1)), Fraction(0))
            for j in range(d + 1)
        ]
    )


def binomial_poly(y: Number, a: int) -> Polynomial:
    """C(t*y + a - 1, a) as a polynomial in t, via the falling product.

    Works for any rational ``y`` including negative ones.
    """
    if a < 0:
        raise ValueError("a must be nonnegative")
    y = as_rational(y)
    out = Polynomial([1])
    for k in range(a):
        out = out * Polynomial([k, y])
    fact = 1
    for k in range(2, a + 1):
        fact *= k
    return out / fact


def sum_powers(lo: int, hi: int) -> Polynomial:
    """t^lo + ... + t^hi (zero when hi < lo)."""
    if hi < lo:
        return Polynomial()
    return Polynomial([0] * lo + [1] * (hi - lo + 1))
