"""Acceptance criteria 1-12, one test each.

Every test records a PASS/FAIL line (with wall time) which conftest prints in
the terminal summary.  ``python tests/test_acceptance.py`` prints the same
lines without pytest.
"""

from __future__ import annotations

import io
import json
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations
from math import comb, factorial, prod

from pfpoly import oracle
from pfpoly.cli import run
from pfpoly.cones import cone_of, interiors_meet, linear_extensions
from pfpoly.core import Polynomial, T, h_from_f, sum_powers
from pfpoly.ehrhart import (
    decomposition,
    ehrhart_polynomial,
    minkowski_hypersimplex,
    volume,
    y_coefficients,
)
from pfpoly.enumerative import (
    T_poset,
    eulerian,
    gen_eulerian_T,
    gen_eulerian_brute,
    h_polynomial,
    h_via_descents,
)
from pfpoly.partitions import (
    is_contraction,
    is_cover,
    parse_binary_partition,
    parse_partition,
    partitions_of_type,
    preposet_of,
    standard_of_type,
    type_of,
)
from pfpoly.polytope import (
    default_pair,
    f_vector,
    face_poset_of_m,
    facet_description,
    is_simple,
    is_simplicial_polytope,
    md_pair,
    multiplicity_vectors,
    omega,
    sbp_enumerate,
    stellahedral_refinement,
    vertex_of,
    vertex_partitions,
    vertices,
)

RESULTS: list = []

U8 = (0, 0, 4, 4, 4, 6, 8, 8)


@contextmanager
def criterion(number: int, title: str, limit: float | None = None):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        line = f"criterion {number:2d}: FAIL  {title} ({elapsed:.1f}s) {type(exc).__name__}: {exc}"
        RESULTS.append(line)
        print(line)
        raise
    line = f"criterion {number:2d}: PASS  {title} ({elapsed:.1f}s)"
    RESULTS.append(line)
    print(line)


def integral_us(max_n: int, max_entry: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        for u in combinations_with_replacement(range(max_entry + 1), n):
            if u[-1] > 0:
                yield u


def dot(c, v):
    return sum(a * b for a, b in zip(c, v))


def interior_witness(B):
    """Strictly increasing values along the blocks of a vertex partition, c_0 = 0."""
    level = {x: i for i, block in enumerate(B.hat().blocks) for x in block}
    return tuple(Fraction(level[i] - level[0]) for i in range(1, B.n + 1))


def oracle_vertices(u) -> list:
    return oracle.extreme_subset(oracle.extreme_points_by_definition(u))


# ---------------------------------------------------------------- 1

def test_criterion_01_vertex_bijection():
    with criterion(1, "vertex bijection", limit=30):
        seeds = [
            (0, 0, 4, 4, 4, 6, 8, 8), (0, 0, 0, 4, 4, 6, 8, 8), (0, 0, 0, 0, 4, 6, 8, 8),
            (0, 0, 0, 0, 0, 6, 8, 8), (0, 0, 0, 0, 0, 0, 8, 8), (0, 0, 0, 0, 0, 0, 0, 8),
            (0,) * 8,
        ]
        listed = {tuple(Fraction(x) for x in p) for s in seeds for p in permutations(s)}
        V = vertices(U8)
        assert set(V) == listed
        assert len(V) == len(listed) == 4405
        checked = 0
        for u in integral_us(4, 3):
            P = oracle.parking_lattice_points(u)
            got = set(vertices(u))
            assert got <= set(P)
            for p in P:
                assert oracle.is_extreme(p, P) == (p in got), (u, p)
            checked += 1
        assert checked == 3 + 9 + 19 + 34


# ---------------------------------------------------------------- 2

def test_criterion_02_normal_fan():
    with criterion(2, "normal fan: witnesses and covering", limit=60):
        rng = random.Random(20261016)
        for n in range(1, 5):
            ms = multiplicity_vectors(n)
            for m in ms:
                pair = default_pair(m)
                V = oracle_vertices(pair.u())
                for B in vertex_partitions(m):
                    c = interior_witness(B)
                    assert cone_of(B).contains(c, mode="interior")
                    best = max(dot(c, v) for v in V)
                    assert [v for v in V if dot(c, v) == best] == [vertex_of(B, pair)]
            cones = {m: [cone_of(B) for B in vertex_partitions(m)] for m in ms}
            for k in range(10_000):
                m = ms[k % len(ms)]
                c = [Fraction(rng.randint(-60, 60), rng.randint(1, 12)) for _ in range(n)]
                assert any(sigma.contains(c) for sigma in cones[m]), (m, c)


# ---------------------------------------------------------------- 3

def test_criterion_03_contraction_characterization():
    with criterion(3, "contraction characterization", limit=60):
        for n in range(1, 5):
            for m in multiplicity_vectors(n):
                nodes = sorted(sbp_enumerate(m))
                rows = [preposet_of(B).up for B in nodes]
                for B, P in zip(nodes, rows):
                    reachable = oracle.contraction_downset(P)
                    for C, Q in zip(nodes, rows):
                        assert is_contraction(C, B) == (Q in reachable), (m, B, C)
        B = parse_binary_partition("({0,2,3},{1,6,7},{8},{4,5})")
        C = parse_binary_partition("({1,2,5},{3,6}*,{7},{0,4}*,{8})")
        D = parse_binary_partition("({2,3},{0,7}*,{6},{1,8}*,{4,5})")
        top = parse_partition("({0,2,3},{},{1,6,7},{8},{4,5})")
        mid = parse_partition("({0,2,3},{},{6,7},{1,8}*,{4,5})")
        named = [(D, B), (C, B), (B, D), (B, B), (mid, top), (D, mid), (D, top), (top, D)]
        for X, Y in named:
            assert is_contraction(X, Y) == oracle.contraction_search(preposet_of(X), preposet_of(Y))
        assert is_contraction(D, B) and not is_contraction(C, B)


# ---------------------------------------------------------------- 4

def _sbp_dual_by_vertex_sets(m):
    """SBP(m) with covers from is_cover, each node mapped to the coordinates of its face's vertices."""
    pair = default_pair(m)
    n = pair.n
    nodes = sorted(sbp_enumerate(m))
    tops = vertex_partitions(m)
    label = {}
    for B in nodes:
        label[B] = frozenset(vertex_of(A, pair) for A in tops if is_contraction(B, A))
    dims = {label[B]: n - (len(preposet_of(B).classes()) - 1) for B in nodes}
    index = {B: i for i, B in enumerate(nodes)}
    covers = set()
    for B in nodes:
        for C in nodes:
            if B is not C and len(preposet_of(C).classes()) + 1 == len(preposet_of(B).classes()):
                if is_cover(C, B):
                    covers.add((label[B], label[C]))
    assert len(label) == len(set(label.values())) == len(index)
    return dims, covers


def test_criterion_04_face_poset():
    with criterion(4, "face poset isomorphism", limit=120):
        for n in range(1, 5):
            for m in multiplicity_vectors(n):
                u = default_pair(m).u()
                V = oracle_vertices(u)
                lattice = oracle.face_lattice_from_incidence(V, facet_description(u))
                oracle_faces = {frozenset(V[i] for i in F): d for F, d in zip(lattice.faces, lattice.dims)}
                oracle_covers = {
                    (frozenset(V[i] for i in lattice.faces[a]), frozenset(V[i] for i in lattice.faces[b]))
                    for a, b in lattice.covers
                }
                dims, covers = _sbp_dual_by_vertex_sets(m)
                assert dims == oracle_faces, m
                assert covers == oracle_covers, m
                assert f_vector(u) == lattice.f_vector() == face_poset_of_m(m).f_vector()
        assert f_vector((1, 1)) == [4, 4, 1]
        assert f_vector((0, 1)) == [3, 3, 1]
        assert f_vector((1, 2)) == [5, 5, 1]


# ---------------------------------------------------------------- 5

def test_criterion_05_facet_minimality():
    with criterion(5, "facet minimality", limit=60):
        for u in integral_us(4, 3):
            ineqs = facet_description(u)
            flags = oracle.facet_flags(oracle_vertices(u), ineqs)
            assert [q.facet for q in ineqs] == flags, u
        for n in range(1, 5):
            for d in (1, 3):
                axes = {(tuple(-1 if k == i else 0 for k in range(n)), 0) for i in range(n)}
                cube = {(q.coeffs, q.rhs) for q in facet_description((d,) * n) if q.facet}
                assert cube == axes | {(tuple(1 if k == i else 0 for k in range(n)), d) for i in range(n)}
                simplex = {(q.coeffs, q.rhs) for q in facet_description((0,) * (n - 1) + (d,)) if q.facet}
                assert simplex == axes | {((1,) * n, d)}


# ---------------------------------------------------------------- 6

def test_criterion_06_h_polynomials():
    with criterion(6, "h-polynomials", limit=120):
        seen = 0
        for n in range(1, 7):
            for m in multiplicity_vectors(n):
                u = default_pair(m).u()
                if not is_simple(u):
                    continue
                h = h_polynomial(u)
                assert h == h_via_descents(u), m
                assert h == h_from_f(Polynomial(f_vector(u))), m
                assert h.is_palindromic(n) and h.is_nonnegative()
                assert h(1) == len(vertices(u))
                seen += 1
        assert seen > 0
        for n in range(1, 7):
            staircase = 1 + sum((comb(n, k) * T * eulerian(k) for k in range(1, n + 1)), Polynomial())
            assert h_polynomial(tuple(range(1, n + 1))) == staircase
            if n >= 2:
                shifted = 1 + T * eulerian(n)
                shifted += sum((comb(n, k) * T * eulerian(k) for k in range(1, n - 1)), Polynomial())
                assert h_polynomial(tuple(range(n))) == shifted
            assert h_polynomial((5,) * n) == (1 + T) ** n
            assert h_polynomial((0,) * (n - 1) + (5,)) == sum_powers(0, n)


# ---------------------------------------------------------------- 7

def test_criterion_07_generalized_eulerian():
    with criterion(7, "generalized Eulerian polynomials", limit=60):
        for total in range(2, 9):
            for p in range(1, total):
                q = total - p
                assert gen_eulerian_T(p, q) == gen_eulerian_brute(T_poset(p, q)), (p, q)
        for p in range(1, 8):
            assert gen_eulerian_T(p, 1) == eulerian(p + 1)
        for q in range(1, 8):
            assert gen_eulerian_T(1, q) == sum_powers(0, q)


# ---------------------------------------------------------------- 8 and 9

def test_criterion_08_ehrhart():
    with criterion(8, "Ehrhart polynomials", limit=120):
        negative_seen = 0
        for u in integral_us(4, 4):
            E = ehrhart_polynomial(u)
            ineqs = facet_description(u)
            for t in range(4):
                assert E(t) == oracle.lattice_count(ineqs, t), (u, t)
            negative_seen += any(y < 0 for y in y_coefficients(u).values())
        assert negative_seen > 0
        assert 2 * ehrhart_polynomial((1, 2)) == Polynomial([2, 7, 7])
        t = Polynomial([0, 1])
        for n in range(1, 5):
            for d in (1, 2, 3):
                assert ehrhart_polynomial((d,) * n) == (d * t + 1) ** n
                simplex = ehrhart_polynomial((0,) * (n - 1) + (d,))
                assert all(simplex(k) == comb(d * k + n, n) for k in range(8))
        out, err = io.StringIO(), io.StringIO()
        code = run(["check", "--level", "quick"], out=out, err=err)
        report = json.loads(out.getvalue())
        assert code == (4 if report["discrepancies"] else 0)
        assert ("discrepancy" in err.getvalue()) == bool(report["discrepancies"])
        assert code == 0


def test_criterion_09_volume():
    with criterion(9, "volume", limit=60):
        for u in integral_us(4, 4):
            assert ehrhart_polynomial(u).leading() == volume(u), u
        assert volume((1, 2)) == Fraction(7, 2)
        for n in range(1, 6):
            for d in (1, 2, Fraction(5, 3)):
                assert volume((d,) * n) == Fraction(d) ** n
                assert volume((0,) * (n - 1) + (d,)) == Fraction(d) ** n / factorial(n)


# ---------------------------------------------------------------- 10

def _simplex(n, I, y):
    return oracle.scale(oracle.simplex_vertices(n, I), y)


def _sum_all(n, parts):
    acc = [tuple(Fraction(0) for _ in range(n))]
    for part in parts:
        acc = oracle.minkowski_vertex_sum(acc, part)
    return acc


def test_criterion_10_decompositions():
    with criterion(10, "Minkowski decompositions", limit=60):
        for u in integral_us(3, 4):
            n = len(u)
            V = sorted(vertices(u))
            hyper = [
                oracle.scale(oracle.extreme_points_by_definition((0,) * (n - k) + (1,) * k), c)
                for k, c in minkowski_hypersimplex(u)
                if c
            ]
            assert _sum_all(n, hyper) == V, u
            dec = decomposition(u)
            plus = [_simplex(n, I, y) for I, y in dec.summands if y > 0]
            minus = [_simplex(n, I, -y) for I, y in dec.summands if y < 0]
            # P + sum |y_I| D_I over negative y equals the sum over positive y
            assert _sum_all(n, [V] + minus) == _sum_all(n, plus), u
        for p, q in [(1, 1), (2, 3), (5, 1)]:
            for n in range(2, 7):
                ys = y_coefficients(tuple(p + q * i for i in range(n)))
                assert ys == {k: (p if k == 1 else q if k == 2 else 0) for k in range(1, n + 1)}


# ---------------------------------------------------------------- 11

def test_criterion_11_stellahedral_coarsening():
    with criterion(11, "stellahedral coarsening", limit=120):
        rng = random.Random(11)
        for n in range(1, 5):
            for m in multiplicity_vectors(n):
                for b in omega(m):
                    std = standard_of_type(b)
                    relabelled = rng.choice(sorted(partitions_of_type(b)))
                    for B in {std, relabelled}:
                        pieces = sorted(stellahedral_refinement(B))
                        parent = set(linear_extensions(preposet_of(B)))
                        ext = [set(linear_extensions(preposet_of(A))) for A in pieces]
                        assert set().union(*ext) == parent, B
                        assert sum(map(len, ext)) == len(parent), B
                        cones = [cone_of(A) for A in pieces]
                        for i, j in combinations(range(len(cones)), 2):
                            assert not interiors_meet(cones[i], cones[j]), (B, pieces[i], pieces[j])
                        sigma = cone_of(B)
                        for _ in range(1000):
                            c = _sample_in_cone(B, rng)
                            assert sigma.contains(c)
                            assert any(cc.contains(c) for cc in cones), (B, c)
                        if type_of(B)[1].tag == "o":
                            assert len(pieces) == prod(factorial(len(blk)) for blk in B.blocks[2:])


def _sample_in_cone(B, rng):
    """Random rational point of the closed cone: sorted random values laid along the blocks."""
    blocks = B.hat().blocks
    values = sorted(Fraction(rng.randint(-40, 40), rng.randint(1, 6)) for _ in blocks)
    if rng.random() < 0.3:  # exercise boundary points too
        k = rng.randrange(len(values))
        values[k] = values[k - 1] if k else values[k]
    level = {x: i for i, block in enumerate(blocks) for x in block}
    base = values[level[0]]
    return tuple(values[level[i]] - base for i in range(1, B.n + 1))


# ---------------------------------------------------------------- 12

def test_criterion_12_classification():
    with criterion(12, "simple / simplicial classification", limit=120):
        for n in range(1, 6):
            for m in multiplicity_vectors(n):
                u = default_pair(m).u()
                fp = face_poset_of_m(m)
                sets = fp.vertex_sets()
                vertex_nodes = [i for i, d in enumerate(fp.dims) if d == 0]
                edges = [sets[i] for i, d in enumerate(fp.dims) if d == 1]
                simple = all(sum(1 for e in edges if v in e) == n for v in vertex_nodes)
                facets = [sets[i] for i, d in enumerate(fp.dims) if d == n - 1]
                simplicial = all(len(f) == n for f in facets)
                assert is_simple(u) == simple, m
                assert is_simplicial_polytope(u) == simplicial, m
        assert md_pair(U8).m == (2, 3, 1, 2)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for test in tests:
        try:
            test()
        except BaseException:
            failed += 1
    raise SystemExit(1 if failed else 0)
