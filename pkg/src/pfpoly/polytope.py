"""Parking function polytopes PF(u): vertices, normal fan, faces, facets and rays."""

from __future__ import annotations

from bisect import bisect_left
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterable, Sequence, Union

from .core import as_rational
from .cones import SlicedPreorderCone, cone_of, dim_of_type
from .partitions import (
    Block,
    Entry,
    SkewedBinaryComposition,
    SkewedBinaryPartition,
    count_of_type,
    covers_below,
    partitions_of_type,
    skewed_compositions,
    type_of,
)


def validate_u(u: Iterable) -> tuple:
    """Return u as a tuple of Fractions after checking it is a valid input."""
    vals = tuple(as_rational(x) for x in u)
    if not vals:
        raise ValueError("u must have at least one entry")
    if any(x < 0 for x in vals):
        raise ValueError("u must be nonnegative")
    if any(a > b for a, b in zip(vals, vals[1:])):
        raise ValueError("u must be nondecreasing")
    if vals[-1] == 0:
        raise ValueError("u must not be the zero vector")
    return vals


@dataclass(frozen=True)
class MDPair:
    m: tuple
    d: tuple

    def __post_init__(self):
        m = tuple(int(x) for x in self.m)
        d = tuple(as_rational(x) for x in self.d)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "d", d)
        validate_m(m)
        if len(d) != len(m) - 1:
            raise ValueError("d needs one value per positive multiplicity")
        if any(x <= 0 for x in d) or any(a >= b for a, b in zip(d, d[1:])):
            raise ValueError("d must be positive and strictly increasing")

    @property
    def n(self) -> int:
        return sum(self.m)

    @property
    def ell(self) -> int:
        return len(self.m) - 1

    def u(self) -> tuple:
        out = [Fraction(0)] * self.m[0]
        for mi, di in zip(self.m[1:], self.d):
            out += [di] * mi
        return tuple(out)


def validate_m(m: Sequence[int]) -> tuple:
    m = tuple(m)
    if len(m) < 2:
        raise ValueError("m must be (m_0, m_1, ..., m_l) with l >= 1")
    if m[0] < 0 or any(x < 1 for x in m[1:]):
        raise ValueError("m_0 >= 0 and m_i >= 1 for i >= 1")
    return m


def md_pair(u) -> MDPair:
    if isinstance(u, MDPair):
        return u
    vals = validate_u(u)
    m0 = sum(1 for x in vals if x == 0)
    d, m = [], [m0]
    for x in vals[m0:]:
        if d and d[-1] == x:
            m[-1] += 1
        else:
            d.append(x)
            m.append(1)
    return MDPair(tuple(m), tuple(d))


def _m_of(x) -> tuple:
    if isinstance(x, MDPair):
        return x.m
    return validate_m(x)


def multiplicity_vectors(n: int) -> list:
    """All 2^n - 1 multiplicity vectors of magnitude n."""
    out = []

    def comps(rest: int):
        if rest == 0:
            yield ()
            return
        for first in range(1, rest + 1):
            for tail in comps(rest - first):
                yield (first,) + tail

    for m0 in range(n):
        for tail in comps(n - m0):
            out.append((m0,) + tail)
    return out


def default_pair(m: Sequence[int]) -> MDPair:
    """MD pair with data vector (1, ..., l)."""
    m = validate_m(m)
    return MDPair(m, tuple(range(1, len(m))))


# ---------------------------------------------------------------- vertices

def omega(m: Sequence[int]) -> list:
    """The r + 1 vertex types a_0, ..., a_r of the multiplicity vector m."""
    m = _m_of(m)
    n, m0, rest = sum(m), m[0], list(m[1:])
    r = n - m0
    C = SkewedBinaryComposition
    out = [C([Entry(m0), Entry(0)] + rest) if m0 > 0 else C([Entry(0), Entry(0, "o")] + rest)]
    partial = [0]
    for x in rest:
        partial.append(partial[-1] + x)
    for i in range(1, r):
        g = bisect_left(partial, i + 1)  # least g with i < m_1 + ... + m_g
        out.append(C([Entry(m0 + i), Entry(0, "o"), partial[g] - i] + rest[g:]))
    out.append(C([Entry(n), Entry(0, "o")]))
    return out


def _check_vertex_type(B: SkewedBinaryPartition, m: tuple) -> None:
    if type_of(B) not in omega(m):
        raise ValueError(f"type {type_of(B)} of {B} is not a vertex type of m={m}")


def vertex_of(B: SkewedBinaryPartition, pair: MDPair) -> tuple:
    pair = md_pair(pair)
    _check_vertex_type(B, pair.m)
    v = [Fraction(0)] * (B.n + 1)
    k, ell = B.k, pair.ell
    for j, block in enumerate(B.blocks[2:], start=1):
        for x in block:
            v[x] = pair.d[ell - k + j - 1]
    return tuple(v[1:])


def vertex_partitions(m) -> list:
    """All skewed binary partitions whose type is a vertex type."""
    return [B for b in omega(_m_of(m)) for B in partitions_of_type(b)]


def _vertices_of_type(args) -> list:
    b, pair = args
    return [vertex_of(B, pair) for B in partitions_of_type(b)]


def vertices(u, jobs: int = 1) -> list:
    """Vertices of PF(u), deduplicated and in lexicographic order."""
    pair = md_pair(u)
    tasks = [(b, pair) for b in omega(pair.m)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_vertices_of_type, tasks))
    else:
        chunks = [_vertices_of_type(t) for t in tasks]
    return sorted({v for chunk in chunks for v in chunk})


def normal_cone_at(B: SkewedBinaryPartition, pair) -> SlicedPreorderCone:
    _check_vertex_type(B, _m_of(pair) if not isinstance(pair, MDPair) else pair.m)
    return cone_of(B)


def locate_vertex(u, c: Sequence) -> SkewedBinaryPartition:
    """A vertex partition whose closed normal cone contains c (sort and threshold)."""
    pair = md_pair(u)
    m, n = pair.m, pair.n
    w = [as_rational(x) for x in c]
    if len(w) != n:
        raise ValueError(f"expected a point of length {n}")
    order = sorted(range(n), key=lambda i: w[i])
    label = [order[p] + 1 for p in range(n)]  # sorted position p (0-based) -> coordinate
    ws = [w[i] for i in order]
    t, acc = [], 0
    for x in m:
        acc += x
        t.append(acc)
    pick = lambda lo, hi: tuple(label[p - 1] for p in range(lo, hi + 1))
    if ws[-1] <= 0:
        return SkewedBinaryPartition([Block(pick(1, n)), Block((0,))])
    i = next(p for p in range(1, n + 1) if ws[p - 1] > 0)
    m0 = m[0]
    if m0 == 0 or i > m0 + 1:
        j = next(s for s in range(len(t)) if i <= t[s])
        blocks = [Block(pick(1, i - 1)), Block((0,)), Block(pick(i, t[j]))]
        blocks += [Block(pick(t[s - 1] + 1, t[s])) for s in range(j + 1, len(t))]
    else:
        blocks = [Block((0,) + pick(1, t[0])), Block(())]
        blocks += [Block(pick(t[s - 1] + 1, t[s])) for s in range(1, len(t))]
    return SkewedBinaryPartition(blocks)


# ---------------------------------------------------------------- face structure

def in_sbp_types(b: SkewedBinaryComposition, m: Sequence[int]) -> bool:
    """Whether partitions of type b are contractions of some vertex partition."""
    m = tuple(m)
    sizes = [e.size for e in b]
    m0, k = m[0], len(sizes) - 2
    M = []
    acc = 0
    for x in m:
        acc += x
        M.append(acc)
    S = []  # S[j] = |b_-1| + ... + |b_j|, j = 0..k
    acc = sizes[0]
    for s in sizes[1:]:
        acc += s
        S.append(acc)
    lead = S[0]
    if (0 < lead <= m0) != (b[1] == Entry(0)):
        return False
    if not m0 < (S[1] if k else S[0]):
        return False
    fits = [False] * (k + 1)
    for i in range(1, len(m)):
        hits = [j for j in range(1, k + 1) if M[i - 1] <= S[j - 1] < S[j] <= M[i]]
        if len(hits) > 1:
            return False
        for j in hits:
            fits[j] = True
    for j in range(1, k + 1):
        if fits[j] != (b[j + 1].tag == ""):
            return False
    return True


def sbp_types(m) -> list:
    m = _m_of(m)
    return sorted(b for b in skewed_compositions(sum(m)) if in_sbp_types(b, m))


def sbp_enumerate(m) -> set:
    return {B for b in sbp_types(m) for B in partitions_of_type(b)}


@dataclass
class FacePosetStructure:
    """Faces of PF(u) labelled by skewed binary partitions.

    ``covers`` holds index pairs (i, j) where face i is a facet of face j
    (so node j is a one-edge contraction of node i).
    """

    n: int
    nodes: list
    dims: list
    covers: list
    _vertex_sets: list | None = field(default=None, repr=False)

    def f_vector(self) -> list:
        f = [0] * (self.n + 1)
        for d in self.dims:
            f[d] += 1
        return f

    def vertex_sets(self) -> list:
        """For every node, the frozenset of vertex-node indices on that face."""
        if self._vertex_sets is None:
            sets = [set() for _ in self.nodes]
            for i, d in enumerate(self.dims):
                if d == 0:
                    sets[i].add(i)
            for i, j in sorted(self.covers, key=lambda c: self.dims[c[0]]):
                sets[j] |= sets[i]
            self._vertex_sets = [frozenset(s) for s in sets]
        return self._vertex_sets

    def to_json(self) -> dict:
        return {
            "nodes": [{"partition": str(B), "dim": d} for B, d in zip(self.nodes, self.dims)],
            "covers": [list(c) for c in self.covers],
        }


def face_poset(u) -> FacePosetStructure:
    return face_poset_of_m(md_pair(u).m)


def face_poset_of_m(m: Sequence[int]) -> FacePosetStructure:
    m = validate_m(m)
    n = sum(m)
    nodes = sorted(sbp_enumerate(m))
    index = {B: i for i, B in enumerate(nodes)}
    dims = [n - dim_of_type(type_of(B)) for B in nodes]
    covers = sorted((i, index[C]) for i, B in enumerate(nodes) for C in covers_below(B))
    return FacePosetStructure(n, nodes, dims, covers)


def f_vector(u) -> list:
    """f_k counts faces of dimension k, summed type by type."""
    m = md_pair(u).m
    n = sum(m)
    f = [0] * (n + 1)
    for b in sbp_types(m):
        f[n - dim_of_type(b)] += count_of_type(b)
    return f


# ---------------------------------------------------------------- inequalities

@dataclass(frozen=True)
class LinearInequality:
    """``coeffs . x <= rhs``."""

    coeffs: tuple
    rhs: Fraction
    facet: bool = False

    def holds(self, x: Sequence) -> bool:
        return sum(a * b for a, b in zip(self.coeffs, x)) <= self.rhs

    def is_tight(self, x: Sequence) -> bool:
        return sum(a * b for a, b in zip(self.coeffs, x)) == self.rhs

    def to_json(self) -> dict:
        return {
            "coeffs": [str(Fraction(a)) for a in self.coeffs],
            "rhs": str(Fraction(self.rhs)),
            "facet": self.facet,
        }


def facet_sizes(m: Sequence[int]) -> set:
    """Sizes |I| for which sum_{i in I} x_i <= w(I) defines a facet."""
    m = tuple(m)
    n, m0, ell = sum(m), m[0], len(m) - 1
    if m == (0, n):
        return {1}
    if m == (n - 1, 1):
        return {n}
    if ell == 1:
        return {1, n}
    return {1, n} | set(range(m[-1] + 1, n - m0))


def facet_description(u) -> list:
    vals = validate_u(u)
    n = len(vals)
    sizes = facet_sizes(md_pair(vals).m)
    out = []
    for i in range(n):
        out.append(LinearInequality(tuple(-1 if k == i else 0 for k in range(n)), Fraction(0), True))
    for size in range(1, n + 1):
        rhs = sum(vals[n - size:], Fraction(0))
        for I in combinations(range(n), size):
            coeffs = tuple(1 if k in I else 0 for k in range(n))
            out.append(LinearInequality(coeffs, rhs, size in sizes))
    return out


def rays(u) -> list:
    """Generators of the one-dimensional normal cones: -e_i and e_I."""
    vals = validate_u(u)
    n = len(vals)
    sizes = facet_sizes(md_pair(vals).m)
    out = [tuple(-1 if k == i else 0 for k in range(n)) for i in range(n)]
    for size in sorted(sizes):
        for I in combinations(range(n), size):
            out.append(tuple(1 if k in I else 0 for k in range(n)))
    return out


def is_simple(u) -> bool:
    m = md_pair(u).m
    n = sum(m)
    if m in ((0, n), (n - 1, 1)):
        return True
    return len(m) >= 3 and all(x == 1 for x in m[1:-1])


def is_simplicial_polytope(u) -> bool:
    m = md_pair(u).m
    n = sum(m)
    return n <= 2 or m == (n - 1, 1)


# ---------------------------------------------------------------- stellahedron

def stellahedral_refinement(B: SkewedBinaryPartition) -> set:
    """Cones of the stellahedral fan whose union is the cone of B."""
    b = type_of(B)
    if any(e.tag == "*" for e in b.entries[2:]) or b[1] not in (Entry(0, "o"), Entry(0)):
        raise ValueError(f"type {b} is not a vertex type")
    if b[1] == Entry(0):
        rest = tuple(x for x in B.blocks[0] if x != 0)
        out = set()
        for size in range(len(rest) + 1):
            for S in combinations(rest, size):
                R = tuple(x for x in rest if x not in S)
                blocks = [Block(S), Block((0,))] + ([Block(R)] if R else []) + list(B.blocks[2:])
                out |= stellahedral_refinement(SkewedBinaryPartition(blocks))
        return out
    head = list(B.blocks[:2])
    out = set()
    for orders in product(*(permutations(blk.elements) for blk in B.blocks[2:])):
        singles = [Block((x,)) for order in orders for x in order]
        out.add(SkewedBinaryPartition(head + singles))
    return out
