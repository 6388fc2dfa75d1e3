"""Sliced preorder cones: {c in R^n : c_0 = 0, c_i <= c_j whenever i ⪯ j}."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence, Union

from .partitions import (
    BinaryPartition,
    Preposet,
    SkewedBinaryPartition,
    is_contraction,
    preposet_of,
    representing_partition,
    type_of,
)


class SlicedPreorderCone:
    """Cone of a preposet on [0, n], coordinate ``c_0`` pinned to zero.

    ``inequalities`` is the full description (every strict relation), while
    ``covers`` and ``equalities`` give the minimal one.
    """

    __slots__ = ("source", "inequalities", "covers", "equalities", "_label")

    def __init__(self, source: Preposet, label=None):
        self.source = source
        classes = source.classes()
        self.equalities = tuple((c[0], x) for c in classes for x in c[1:])
        self.covers = tuple(source.covers())
        self.inequalities = tuple(
            (i, j) for i, j in source.relations() if not source.leq(j, i)
        )
        self._label = label

    @property
    def n(self) -> int:
        return self.source.n

    def dim(self) -> int:
        return len(self.source.classes()) - 1

    def _vector(self, c: Sequence) -> list:
        if len(c) != self.n:
            raise ValueError(f"expected a point of length {self.n}, got {len(c)}")
        return [Fraction(0)] + [Fraction(x) for x in c]

    def contains(self, c: Sequence, mode: str = "closed", description: str = "minimal") -> bool:
        x = self._vector(c)
        if any(x[i] != x[j] for i, j in self.equalities):
            return False
        if mode == "closed":
            pairs = self.covers if description == "minimal" else self.inequalities
            return all(x[i] <= x[j] for i, j in pairs)
        if mode == "interior":
            return all(x[i] < x[j] for i, j in self.covers)
        raise ValueError("mode must be 'closed' or 'interior'")

    def partition(self) -> BinaryPartition | None:
        if self._label is None:
            self._label = representing_partition(self.source) or False
        return self._label or None

    def __eq__(self, other) -> bool:
        return isinstance(other, SlicedPreorderCone) and self.source == other.source

    def __hash__(self) -> int:
        return hash(self.source)

    def __str__(self) -> str:
        A = self.partition()
        name = lambda x: "0" if x == 0 else f"c{x}"
        if A is None:
            parts = [f"{name(i)} = {name(j)}" for i, j in self.equalities]
            parts += [f"{name(i)} <= {name(j)}" for i, j in self.covers]
            return "; ".join(parts)
        layers = []
        for b in A.blocks:
            sep = "=" if b.homogeneous else ","
            layers.append(sep.join(name(x) for x in b))
        return " <= ".join(layers)

    __repr__ = __str__


def cone_of(P: Union[Preposet, BinaryPartition, SkewedBinaryPartition]) -> SlicedPreorderCone:
    if isinstance(P, Preposet):
        return SlicedPreorderCone(P)
    A = P.hat() if isinstance(P, SkewedBinaryPartition) else P
    return SlicedPreorderCone(preposet_of(A), label=A)


def contains(sigma: SlicedPreorderCone, c: Sequence, mode: str = "closed") -> bool:
    return sigma.contains(c, mode)


def dim_of_type(b) -> int:
    """Cone dimension read off a type: plain sizes plus the number of starred entries."""
    total = 0
    for idx, e in enumerate(b):
        if idx == 1:
            continue
        total += 1 if e.tag == "*" else e.size
    return total


def dim(B: SkewedBinaryPartition) -> int:
    return dim_of_type(type_of(B))


def codim(B: SkewedBinaryPartition) -> int:
    entries = type_of(B).entries
    return entries[1].size + sum(e.size - 1 for e in entries[2:] if e.tag == "*")


def is_face_of(face: SlicedPreorderCone, sigma: SlicedPreorderCone) -> bool:
    a, b = face.partition(), sigma.partition()
    if a is None or b is None:
        raise ValueError("face test needs cones of binary partitions")
    return is_contraction(a, b)


def is_simplicial(sigma: SlicedPreorderCone) -> bool:
    P = sigma.source
    return P.is_poset() and P.hasse_is_tree()


def linear_extensions(P: Preposet) -> Iterator[tuple]:
    """Orderings (p_0, ..., p_n) of [0, n] compatible with the poset P."""
    if not P.is_poset():
        raise ValueError("linear extensions need a poset")
    N = P.n + 1
    below = [0] * N
    for i, j in P.relations():
        below[j] |= 1 << i

    def rec(placed: int, order: list):
        if len(order) == N:
            yield tuple(order)
            return
        for x in range(N):
            if not placed >> x & 1 and below[x] & ~placed == 0:
                order.append(x)
                yield from rec(placed | 1 << x, order)
                order.pop()

    yield from rec(0, [])


def chain_cone(order: Sequence[int]) -> SlicedPreorderCone:
    n = len(order) - 1
    return SlicedPreorderCone(Preposet(n, zip(order, order[1:])))


def linear_extension_decomposition(sigma: SlicedPreorderCone) -> list:
    """The chain cones of all linear extensions; their union is ``sigma``."""
    return [chain_cone(order) for order in linear_extensions(sigma.source)]


def interiors_meet(a: SlicedPreorderCone, b: SlicedPreorderCone) -> bool:
    """Whether the relative interiors of two cones share a point.

    Both interiors are open polyhedra given by strict cover inequalities and
    class equalities; they meet iff the combined constraints admit a
    solution, i.e. iff merging equal classes and adding all strict edges
    leaves a digraph without a directed cycle.
    """
    n = a.n
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in a.equalities + b.equalities:
        parent[find(i)] = find(j)
    adj: dict = {}
    for i, j in a.covers + b.covers:
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        adj.setdefault(ri, set()).add(rj)
    state: dict = {}

    def cyclic(v) -> bool:
        state[v] = 1
        for w in adj.get(v, ()):
            s = state.get(w, 0)
            if s == 1 or (s == 0 and cyclic(w)):
                return True
        state[v] = 2
        return False

    return not any(state.get(v, 0) == 0 and cyclic(v) for v in list(adj))
