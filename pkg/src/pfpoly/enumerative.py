"""Ascents, descents, Eulerian polynomials and h-polynomials of simple PF(u)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Iterable

from .core import Polynomial, T, sum_powers
from .partitions import preposet_of
from .polytope import is_simple, md_pair, omega, vertex_partitions
from .partitions import partitions_of_type


class NotSimpleError(ValueError):
    pass


@dataclass(frozen=True)
class LabeledForestPoset:
    """A poset given by its ground set and cover edges (i, j) meaning i ⋖ j."""

    ground: tuple
    covers: tuple

    def __post_init__(self):
        object.__setattr__(self, "ground", tuple(sorted(self.ground)))
        object.__setattr__(self, "covers", tuple(sorted(self.covers)))

    def is_tree(self) -> bool:
        if len(self.covers) != len(self.ground) - 1:
            return False
        adj = {x: set() for x in self.ground}
        for i, j in self.covers:
            adj[i].add(j)
            adj[j].add(i)
        start = self.ground[0]
        seen, todo = {start}, [start]
        while todo:
            for y in adj[todo.pop()]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return len(seen) == len(self.ground)

    def dual(self) -> "LabeledForestPoset":
        return LabeledForestPoset(self.ground, tuple((j, i) for i, j in self.covers))

    def relabel(self, sigma: dict) -> "LabeledForestPoset":
        return LabeledForestPoset(self.ground, tuple((sigma[i], sigma[j]) for i, j in self.covers))


@dataclass(frozen=True)
class AscentDescentStats:
    asc: int
    des: int


def stats(Q) -> AscentDescentStats:
    """Count ascents (i ⋖ j, j > i) and descents (i ⋖ j, j < i)."""
    edges = Q.covers if isinstance(Q, LabeledForestPoset) else Q.covers()
    asc = sum(1 for i, j in edges if j > i)
    return AscentDescentStats(asc, len(edges) - asc)


def T_poset(p: int, q: int) -> LabeledForestPoset:
    """T(p, q) on [p+q]: a chain 1 ⋖ ... ⋖ p with p ⋖ k for every k > p."""
    if p < 1 or q < 0:
        raise ValueError("need p >= 1 and q >= 0")
    n = p + q
    covers = [(j, j + 1) for j in range(1, p)] + [(p, k) for k in range(p + 1, n + 1)]
    return LabeledForestPoset(tuple(range(1, n + 1)), tuple(covers))


@lru_cache(maxsize=None)
def eulerian(k: int) -> Polynomial:
    """A_k(t) = sum over permutations of [k] of t^des."""
    if k < 1:
        raise ValueError("k must be positive")
    row = [1]
    for size in range(2, k + 1):
        nxt = [0] * size
        for d, a in enumerate(row):
            nxt[d] += (d + 1) * a
            nxt[d + 1] += (size - 1 - d) * a
        row = nxt
    return Polynomial(row)


def gen_eulerian_brute(Q: LabeledForestPoset) -> Polynomial:
    """Sum of t^asc over the distinct relabellings of a tree poset Q."""
    if not Q.is_tree():
        raise ValueError("the Hasse diagram of Q must be a tree")
    seen = set()
    counts: dict = {}
    ground = Q.ground
    for perm in permutations(ground):
        sigma = dict(zip(ground, perm))
        edges = frozenset((sigma[i], sigma[j]) for i, j in Q.covers)
        if edges in seen:
            continue
        seen.add(edges)
        a = sum(1 for i, j in edges if j > i)
        counts[a] = counts.get(a, 0) + 1
    return Polynomial([counts.get(k, 0) for k in range(max(counts) + 1)])


@lru_cache(maxsize=None)
def gen_eulerian_T(p: int, q: int) -> Polynomial:
    """Closed form for A(T(p, q), t) in terms of classical Eulerian polynomials."""
    if p < 1 or q < 1:
        raise ValueError("need p, q >= 1")
    n = p + q
    y = min(1, p - 1)
    out = Polynomial()
    for i in range(y + 1):
        out = out + comb(n, i) * sum_powers(i, n - i - 1)
    for i in range(1, p - 1):
        out = out + comb(n, i + 1) * sum_powers(1, n - i - 2) * eulerian(i + 1)
    return out


def _require_simple(u):
    if not is_simple(u):
        raise NotSimpleError(f"PF(u) is not simple for m = {md_pair(u).m}")


def h_polynomial(u) -> Polynomial:
    _require_simple(u)
    m = md_pair(u).m
    n, m0, ell, ml = sum(m), m[0], len(m) - 1, m[-1]
    if m == (0, n):
        return (1 + T) ** n
    if m == (n - 1, 1):
        return sum_powers(0, n)
    low = Polynomial([comb(n, j) for j in range(ml + 1)])
    if m0 == 0:
        tail = sum((comb(n, i + ml) * gen_eulerian_T(i, ml) for i in range(1, ell)), Polynomial())
        return low + T * tail
    tail = sum((comb(n, i + ml) * gen_eulerian_T(i, ml) for i in range(1, ell - 1)), Polynomial())
    return g0_polynomial(m) + low + T * tail


def g0_polynomial(m) -> Polynomial:
    """The vertex-type-a_0 contribution g(t) for m_0 != 0."""
    n, ell, ml = sum(m), len(m) - 1, m[-1]
    z = min(ml, n - ml - 1)
    out = Polynomial()
    for i in range(z + 1):
        out = out + comb(n, i) * sum_powers(i + 1, n - i)
    for i in range(1, ell - 1):
        out = out + comb(n, i + ml) * sum_powers(2, n - i - ml) * gen_eulerian_T(i, ml)
    return out


def a0_induced_poset(m) -> LabeledForestPoset:
    """Induced poset on [n] of the standard a_0 partition when m_0 != 0."""
    m0, ml, chain = m[0], m[-1], len(m) - 2
    bottoms = list(range(1, m0 + 1))
    mids = list(range(m0 + 1, m0 + chain + 1))
    tops = list(range(m0 + chain + 1, m0 + chain + ml + 1))
    covers = [(b, mids[0]) for b in bottoms]
    covers += list(zip(mids, mids[1:]))
    covers += [(mids[-1], x) for x in tops]
    return LabeledForestPoset(tuple(bottoms + mids + tops), tuple(covers))


def descent_groups(u, statistic: str = "des") -> list:
    """Per vertex type a_i, the sum of t^des (or t^asc) over partitions of that type."""
    _require_simple(u)
    if statistic not in ("asc", "des"):
        raise ValueError("statistic must be 'asc' or 'des'")
    out = []
    for b in omega(md_pair(u).m):
        counts: dict = {}
        for B in partitions_of_type(b):
            d = getattr(stats(preposet_of(B)), statistic)
            counts[d] = counts.get(d, 0) + 1
        out.append(Polynomial([counts.get(k, 0) for k in range(max(counts) + 1)]))
    return out


def h_via_descents(u) -> Polynomial:
    return sum(descent_groups(u), Polynomial())


def h_via_ascents(u) -> Polynomial:
    _require_simple(u)
    out = Polynomial()
    for B in vertex_partitions(md_pair(u).m):
        out = out + Polynomial.monomial(stats(preposet_of(B)).asc)
    return out
