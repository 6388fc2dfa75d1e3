"""Minkowski decompositions of PF(u), draconian sequences, Ehrhart polynomials, volume."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterator, Sequence

from .core import Polynomial, binomial_poly
from .polytope import validate_u


class NonIntegralError(ValueError):
    pass


def y_coefficients(u) -> dict:
    """y_k = sum_j C(k-1, j) (-1)^j u_{k-j}, for k = 1..n."""
    vals = validate_u(u)
    n = len(vals)
    return {
        k: sum((comb(k - 1, j) * (-1) ** j * vals[k - j - 1] for j in range(k)), Fraction(0))
        for k in range(1, n + 1)
    }


def minkowski_hypersimplex(u) -> list:
    """Pairs (k, c): PF(u) is the sum of c * PF(1_k), where 1_k ends in k ones."""
    vals = validate_u(u)
    n = len(vals)
    diffs = [vals[0]] + [b - a for a, b in zip(vals, vals[1:])]
    return [(n - i, c) for i, c in enumerate(diffs)]


@dataclass(frozen=True)
class MinkowskiDecomposition:
    """PF(u) as a signed sum of y_I times conv(0, e_i : i in I)."""

    n: int
    summands: tuple  # ((I as sorted tuple of 1-based indices, y), ...)

    def by_size(self) -> list:
        seen: dict = {}
        for I, y in self.summands:
            seen.setdefault(len(I), y)
        return sorted(seen.items())

    def to_json(self) -> list:
        return [{"size": k, "y": str(y)} for k, y in self.by_size()]


def decomposition(u) -> MinkowskiDecomposition:
    ys = y_coefficients(u)
    n = len(ys)
    summands = tuple(
        (I, ys[size])
        for size in range(1, n + 1)
        if ys[size] != 0
        for I in combinations(range(1, n + 1), size)
    )
    return MinkowskiDecomposition(n, summands)


def _mask(I: Sequence[int]) -> int:
    out = 0
    for i in I:
        out |= 1 << (i - 1)
    return out


@lru_cache(maxsize=None)
def _supersets(mask: int, n: int) -> tuple:
    full = (1 << n) - 1
    free = full & ~mask
    out, sub = [], free
    while True:
        out.append(mask | sub)
        if sub == 0:
            break
        sub = (sub - 1) & free
    return tuple(out)


def _walk(index_sets: Sequence[Sequence[int]], n: int, total: int | None = None) -> Iterator[tuple]:
    """Draconian sequences for the given index sets.

    Uses the equivalent Hall-type form: for every S ⊆ [n] the a_j with
    I_j ⊆ S sum to at most |S|.  ``load[S]`` tracks that sum while the
    sequence is built; ``total`` optionally fixes sum(a).
    """
    masks = [_mask(I) for I in index_sets]
    sizes = [bin(s).count("1") for s in range(1 << n)]
    load = [0] * (1 << n)
    a = [0] * len(masks)
    ups = [_supersets(mk, n) for mk in masks]

    def rec(j: int, used: int):
        if j == len(masks):
            if total is None or used == total:
                yield tuple(a)
            return
        cap = min(sizes[S] - load[S] for S in ups[j])
        if total is not None:
            cap = min(cap, total - used)
        for v in range(cap + 1):
            a[j] = v
            if v:
                for S in ups[j]:
                    load[S] += v
            yield from rec(j + 1, used + v)
            if v:
                for S in ups[j]:
                    load[S] -= v
        a[j] = 0

    yield from rec(0, 0)


def draconian_enumerate(dec: MinkowskiDecomposition) -> list:
    if not dec.summands:
        raise ValueError("empty decomposition")
    if any(Fraction(y).denominator != 1 for _, y in dec.summands):
        raise NonIntegralError("draconian enumeration needs integral coefficients y")
    return list(_walk([I for I, _ in dec.summands], dec.n))


def _require_integral(u) -> tuple:
    vals = validate_u(u)
    if any(x.denominator != 1 for x in vals):
        raise NonIntegralError("Ehrhart polynomials need an integral u")
    return vals


def ehrhart_polynomial(u) -> Polynomial:
    """i(PF(u), t) as a sum over draconian sequences of products of binomials."""
    vals = _require_integral(u)
    dec = decomposition(vals)
    ys = [y for _, y in dec.summands]
    cache: dict = {}

    def factor(y, a):
        key = (y, a)
        if key not in cache:
            cache[key] = binomial_poly(y, a)
        return cache[key]

    total = Polynomial()
    for a in draconian_enumerate(dec):
        term = Polynomial([1])
        for y, aj in zip(ys, a):
            if aj:
                term = term * factor(y, aj)
        total = total + term
    return total


def volume(u) -> Fraction:
    """Normalised so that the unit cube has volume 1."""
    vals = validate_u(u)
    dec = decomposition(vals)
    ys = [Fraction(y) for _, y in dec.summands]
    out = Fraction(0)
    for a in _walk([I for I, _ in dec.summands], dec.n, total=dec.n):
        term = Fraction(1)
        for y, aj in zip(ys, a):
            if aj:
                term *= y ** aj / factorial(aj)
        out += term
    return out


class PolymatroidRank:
    """w_u(I) = sum of the |I| largest entries of u."""

    def __init__(self, u):
        self.u = validate_u(u)
        self.n = len(self.u)
        self._prefix = [Fraction(0)]
        for x in reversed(self.u):
            self._prefix.append(self._prefix[-1] + x)

    def __call__(self, I) -> Fraction:
        return self._prefix[len(set(I))]

    def is_submodular(self) -> bool:
        subsets = [frozenset(c) for k in range(self.n + 1) for c in combinations(range(1, self.n + 1), k)]
        return all(self(A) + self(B) >= self(A | B) + self(A & B) for A in subsets for B in subsets)


def polymatroid_rank(u) -> PolymatroidRank:
    return PolymatroidRank(u)
