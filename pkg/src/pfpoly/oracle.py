"""Brute-force verifiers.

Nothing here calls into the partition, fan, enumerative or Ehrhart code;
only exact arithmetic from ``core`` is shared.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import ceil, floor, gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from .core import as_rational


# ---------------------------------------------------------------- linear algebra

def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of a nonempty point set."""
    pts = [[Fraction(x) for x in p] for p in points]
    if not pts:
        return -1
    base = pts[0]
    rows = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    rank, col = 0, 0
    ncols = len(base)
    while rank < len(rows) and col < ncols:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / pr[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], pr)]
        rank += 1
        col += 1
    return rank


def _integral(points: Sequence[Sequence]) -> list:
    """Scale rational points by one common denominator; convexity is unchanged."""
    pts = [tuple(x if type(x) is int else as_rational(x) for x in q) for q in points]
    den = lcm(1, *(x.denominator for q in pts for x in q if type(x) is not int))
    if den == 1:
        return [tuple(int(x) for x in q) for q in pts]
    return [tuple(int(x * den) for x in q) for q in pts]


def _nonneg_combination_exists(cols: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    """Is target = A @ lam for some lam >= 0?

    Phase-one simplex with Bland's rule on an integer tableau.  Every entry
    is kept over the common denominator D (the previous pivot), so each
    update divides exactly.
    """
    m, N = len(target), len(cols)
    rows = []
    for r in range(m):
        sign = -1 if target[r] < 0 else 1
        rows.append([sign * cols[j][r] for j in range(N)] + [sign * target[r]])
    basis = [N + r for r in range(m)]  # artificial variables sit at N..N+m-1
    obj = [-sum(rows[r][j] for r in range(m)) for j in range(N + 1)]
    D = 1
    while True:
        enter = next((j for j in range(N) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        for r in range(m):
            a = rows[r][enter]
            if a <= 0:
                continue
            if leave is None:
                leave = r
                continue
            b = rows[leave][enter]
            lhs, rhs = rows[r][N] * b, rows[leave][N] * a
            if lhs < rhs or (lhs == rhs and basis[r] < basis[leave]):
                leave = r
        if leave is None:  # unbounded ray; impossible in phase one
            break
        pr = rows[leave]
        piv = pr[enter]
        for r in range(m):
            if r != leave:
                f = rows[r][enter]
                rows[r] = [(piv * a - f * b) // D for a, b in zip(rows[r], pr)]
        f = obj[enter]
        obj = [(piv * a - f * b) // D for a, b in zip(obj, pr)]
        D = piv
        basis[leave] = enter
    return obj[N] == 0


def in_convex_hull(p: Sequence, S: Iterable[Sequence]) -> bool:
    pts = list(S)
    if not pts:
        return False
    scaled = _integral([p] + pts)
    q, rest = scaled[0], scaled[1:]
    return _nonneg_combination_exists([s + (1,) for s in rest], q + (1,))


def _primitive(v: tuple) -> tuple:
    g = gcd(*v)
    return tuple(x // g for x in v)


def is_extreme(p: Sequence, S: Iterable[Sequence]) -> bool:
    """True iff p is not in the convex hull of S without p."""
    scaled = _integral([p] + list(S))
    q = scaled[0]
    rest = list(set(scaled[1:]) - {q})
    if not rest:
        return True
    n = len(q)
    # cheap exact certificates first: a strictly separating functional ...
    centroid = tuple(len(rest) * a - sum(col) for a, col in zip(q, zip(*rest)))
    probes = [centroid]
    probes += [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    probes += [tuple(-x for x in c) for c in probes[1:]]
    probes += [tuple(1 if (b >> k) & 1 else -1 for k in range(n)) for b in range(1 << n)]
    for c in probes:
        cq = sum(a * b for a, b in zip(c, q))
        if all(sum(a * b for a, b in zip(c, s)) < cq for s in rest):
            return True
    # ... or two other points on opposite sides of p along one line
    directions = {_primitive(tuple(a - b for a, b in zip(s, q))) for s in rest}
    if any(tuple(-x for x in d) in directions for d in directions):
        return False
    return not _nonneg_combination_exists([s + (1,) for s in rest], q + (1,))


def extreme_subset(S: Iterable[Sequence]) -> list:
    pts = sorted({tuple(as_rational(x) for x in s) for s in S})
    return [p for p in pts if is_extreme(p, pts)]


def minkowski_vertex_sum(A: Iterable[Sequence], B: Iterable[Sequence]) -> list:
    """Extreme points of the Minkowski sum, from pairwise sums."""
    A = {tuple(as_rational(x) for x in a) for a in A}
    B = {tuple(as_rational(x) for x in b) for b in B}
    sums = {tuple(x + y for x, y in zip(a, b)) for a in A for b in B}
    return extreme_subset(sums)


def scale(points: Iterable[Sequence], c) -> list:
    c = as_rational(c)
    return [tuple(c * x for x in p) for p in points]


# ---------------------------------------------------------------- parking points

def extreme_points_by_definition(u: Sequence) -> list:
    """All distinct permutations of (0, ..., 0, u_{k+1}, ..., u_n), k = 0..n."""
    u = [as_rational(x) for x in u]
    n = len(u)
    out = set()
    for k in range(n + 1):
        base = [Fraction(0)] * k + u[k:]
        out.update(set(permutations(base)))
    return sorted(out)


def is_u_parking(a: Sequence, u: Sequence) -> bool:
    return all(x <= y for x, y in zip(sorted(a), u)) and all(x >= 0 for x in a)


def parking_lattice_points(u: Sequence) -> list:
    """Integer u-parking functions (entries >= 0 with sorted(a) <= u termwise)."""
    u = [as_rational(x) for x in u]
    top = floor(max(u))
    return [
        tuple(Fraction(x) for x in a)
        for a in product(range(top + 1), repeat=len(u))
        if is_u_parking(a, u)
    ]


def simplex_vertices(n: int, I: Iterable[int]) -> list:
    """Vertices of conv(0, e_i : i in I), indices 1-based."""
    out = [tuple(Fraction(0) for _ in range(n))]
    for i in I:
        out.append(tuple(Fraction(1 if k == i - 1 else 0) for k in range(n)))
    return out


# ---------------------------------------------------------------- lattice points

def _ineq_parts(ineq) -> tuple:
    if hasattr(ineq, "coeffs"):
        return tuple(as_rational(c) for c in ineq.coeffs), as_rational(ineq.rhs)
    coeffs, rhs = ineq
    return tuple(as_rational(c) for c in coeffs), as_rational(rhs)


def lattice_count(ineqs: Sequence, t: int) -> int:
    """Number of integer points x with coeffs . x <= t * rhs for every inequality."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    parts = [_ineq_parts(q) for q in ineqs]
    n = len(parts[0][0])
    lo = [None] * n
    hi = [None] * n
    for coeffs, rhs in parts:
        nz = [i for i, c in enumerate(coeffs) if c != 0]
        if len(nz) != 1:
            continue
        i = nz[0]
        bound = t * rhs / coeffs[i]
        if coeffs[i] > 0:
            hi[i] = bound if hi[i] is None else min(hi[i], bound)
        else:
            lo[i] = bound if lo[i] is None else max(lo[i], bound)
    if any(b is None for b in lo + hi):
        raise ValueError("region is unbounded (no coordinate box derivable)")
    ranges = [np.arange(ceil(a), floor(b) + 1, dtype=np.int64) for a, b in zip(lo, hi)]
    if any(r.size == 0 for r in ranges):
        return 0
    rows, rhs_int = [], []
    for coeffs, rhs in parts:
        den = lcm(*(c.denominator for c in coeffs), rhs.denominator)
        rows.append([int(c * den) for c in coeffs])
        rhs_int.append(int(t * rhs * den))
    A = np.array(rows, dtype=np.int64)
    b = np.array(rhs_int, dtype=np.int64)
    total = 0
    rest = np.stack(np.meshgrid(*ranges[1:], indexing="ij"), axis=-1).reshape(-1, n - 1) if n > 1 else None
    for x0 in ranges[0]:
        if rest is None:
            pts = np.array([[x0]], dtype=np.int64)
        else:
            pts = np.concatenate([np.full((rest.shape[0], 1), x0, dtype=np.int64), rest], axis=1)
        ok = (pts @ A.T <= b).all(axis=1)
        total += int(ok.sum())
    return total


# ---------------------------------------------------------------- face lattices

@dataclass
class OracleFaceLattice:
    """Faces as frozensets of vertex indices, with affine dimensions."""

    vertices: list
    faces: list
    dims: list
    covers: list

    def f_vector(self) -> list:
        top = max(self.dims)
        f = [0] * (top + 1)
        for d in self.dims:
            f[d] += 1
        return f


def tight_set(ineq, V: Sequence[Sequence]) -> frozenset:
    coeffs, rhs = _ineq_parts(ineq)
    vals = [sum(a * b for a, b in zip(coeffs, v)) for v in V]
    if any(x > rhs for x in vals):
        raise ValueError("inequality is violated by a vertex")
    return frozenset(i for i, x in enumerate(vals) if x == rhs)


def facet_flags(V: Sequence[Sequence], ineqs: Sequence) -> list:
    """An inequality is a facet iff its tight vertices span dimension n - 1."""
    n = len(V[0])
    out = []
    for q in ineqs:
        T = tight_set(q, V)
        out.append(bool(T) and affine_rank([V[i] for i in T]) == n - 1)
    return out


def face_lattice_from_incidence(V: Sequence[Sequence], F: Sequence) -> OracleFaceLattice:
    V = [tuple(as_rational(x) for x in v) for v in V]
    n = len(V[0])
    if affine_rank(V) != n:
        raise ValueError("polytope is not full-dimensional")
    everything = frozenset(range(len(V)))
    faces = {everything}
    frontier = {T for T in (tight_set(q, V) for q in F) if T}
    while frontier:
        faces |= frontier
        new = set()
        flist = list(faces)
        for A in frontier:
            for B in flist:
                C = A & B
                if C and C not in faces:
                    new.add(C)
        frontier = new
    faces = sorted(faces, key=lambda s: (len(s), sorted(s)))
    dims = [affine_rank([V[i] for i in f]) for f in faces]
    by_dim: dict = {}
    for idx, d in enumerate(dims):
        by_dim.setdefault(d, []).append(idx)
    covers = []
    for idx, d in enumerate(dims):
        for jdx in by_dim.get(d + 1, []):
            if faces[idx] < faces[jdx]:
                covers.append((idx, jdx))
    return OracleFaceLattice(V, faces, dims, covers)


# ---------------------------------------------------------------- preorders

def _closure(rows: list) -> tuple:
    rows = list(rows)
    N = len(rows)
    for k in range(N):
        bit, rk = 1 << k, rows[k]
        for i in range(N):
            if rows[i] & bit:
                rows[i] |= rk
    return tuple(rows)


def _hasse_edges(rows: tuple) -> list:
    N = len(rows)
    leq = lambda i, j: rows[i] >> j & 1
    reps = [i for i in range(N) if not any(leq(i, j) and leq(j, i) for j in range(i))]
    strict = lambda i, j: leq(i, j) and not leq(j, i)
    edges = []
    for g in reps:
        for h in reps:
            if g != h and strict(g, h) and not any(strict(g, k) and strict(k, h) for k in reps):
                edges.append((g, h))
    return edges


def _rows(P) -> tuple:
    return tuple(P.up) if hasattr(P, "up") else tuple(P)


def contraction_successors(rows: tuple) -> set:
    out = set()
    for g, h in _hasse_edges(rows):
        new = list(rows)
        new[h] |= 1 << g
        out.add(_closure(new))
    return out


def contraction_search(C, B) -> bool:
    """Breadth-first search over single Hasse-edge contractions from B towards C."""
    start, goal = _rows(B), _rows(C)
    if len(start) != len(goal):
        raise ValueError("preorders on different ground sets")
    inside = lambda rows: all(r & ~g == 0 for r, g in zip(rows, goal))
    if not inside(start):
        return False
    seen = {start}
    todo = deque([start])
    while todo:
        cur = todo.popleft()
        if cur == goal:
            return True
        for nxt in contraction_successors(cur):
            if nxt not in seen and inside(nxt):
                seen.add(nxt)
                todo.append(nxt)
    return False


def contraction_downset(B) -> set:
    """Every preorder reachable from B by Hasse-edge contractions (as bitmask rows)."""
    start = _rows(B)
    seen = {start}
    todo = deque([start])
    while todo:
        for nxt in contraction_successors(todo.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen
