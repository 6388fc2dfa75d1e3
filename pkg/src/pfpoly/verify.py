"""Agreement suites pitting the formula code against the brute-force oracle.

Each suite returns a list of discrepancy dicts; an empty list means agreement.
"""

from __future__ import annotations

from fractions import Fraction

from . import oracle
from .core import h_from_f, Polynomial
from .ehrhart import ehrhart_polynomial, minkowski_hypersimplex, volume, y_coefficients
from .enumerative import h_polynomial
from .partitions import is_contraction, preposet_of
from .polytope import (
    default_pair,
    f_vector,
    facet_description,
    is_simple,
    md_pair,
    multiplicity_vectors,
    sbp_enumerate,
    vertices,
)


def _u_text(u) -> str:
    return ",".join(str(Fraction(x)) for x in u)


def check_vertices(u) -> list:
    got = sorted(vertices(u))
    want = oracle.extreme_subset(oracle.extreme_points_by_definition(u))
    if got != want:
        return [{"suite": "vertices", "u": _u_text(u), "formula": len(got), "oracle": len(want)}]
    return []


def check_faces(u) -> list:
    V = vertices(u)
    facets = [q for q in facet_description(u) if q.facet]
    lattice = oracle.face_lattice_from_incidence(V, facets)
    f = f_vector(u)
    if lattice.f_vector() != f:
        return [{"suite": "fvector", "u": _u_text(u), "formula": f, "oracle": lattice.f_vector()}]
    return []


def check_facets(u) -> list:
    ineqs = facet_description(u)
    flags = oracle.facet_flags(vertices(u), ineqs)
    bad = [i for i, (q, ok) in enumerate(zip(ineqs, flags)) if q.facet != ok]
    if bad:
        return [{"suite": "facets", "u": _u_text(u), "mismatched": bad}]
    return []


def check_h(u) -> list:
    if not is_simple(u):
        return []
    h = h_polynomial(u)
    via_f = h_from_f(Polynomial(f_vector(u)))
    if h != via_f:
        return [{"suite": "hpoly", "u": _u_text(u), "formula": h.to_strings(), "oracle": via_f.to_strings()}]
    return []


def check_ehrhart(u, ts=(0, 1, 2)) -> list:
    if any(Fraction(x).denominator != 1 for x in u):
        return []
    E = ehrhart_polynomial(u)
    ineqs = facet_description(u)
    out = []
    negative = any(y < 0 for y in y_coefficients(u).values())
    for t in ts:
        want = oracle.lattice_count(ineqs, t)
        if E(t) != want:
            out.append({"suite": "ehrhart", "u": _u_text(u), "t": t, "formula": str(E(t)),
                        "oracle": want, "negative_y": negative})
    if E.leading() != volume(u):
        out.append({"suite": "volume", "u": _u_text(u), "formula": str(volume(u)),
                    "oracle": str(E.leading())})
    return out


def check_minkowski(u) -> list:
    n = len(u)
    acc = [tuple(Fraction(0) for _ in range(n))]
    for k, c in minkowski_hypersimplex(u):
        if c == 0:
            continue
        piece = oracle.scale(oracle.extreme_points_by_definition((0,) * (n - k) + (1,) * k), c)
        acc = oracle.minkowski_vertex_sum(acc, piece)
    if sorted(acc) != sorted(vertices(u)):
        return [{"suite": "minkowski", "u": _u_text(u), "formula": len(vertices(u)), "oracle": len(acc)}]
    return []


def check_contractions(m) -> list:
    nodes = sorted(sbp_enumerate(m))
    rows = [preposet_of(B).up for B in nodes]
    out = []
    for B, P in zip(nodes, rows):
        reachable = oracle.contraction_downset(P)
        for C, Q in zip(nodes, rows):
            if is_contraction(C, B) != (Q in reachable):
                out.append({"suite": "contraction", "m": list(m), "B": str(B), "C": str(C)})
    return out


def suite_for_u(u, level: str = "quick", contractions: bool | None = None) -> list:
    out = []
    out += check_vertices(u)
    out += check_faces(u)
    out += check_facets(u)
    out += check_h(u)
    out += check_ehrhart(u, ts=(0, 1, 2) if level == "quick" else (0, 1, 2, 3))
    out += check_minkowski(u)
    if contractions is None:
        contractions = level == "full"
    if contractions:
        out += check_contractions(md_pair(u).m)
    return out


def suite_all(max_n: int, level: str = "quick") -> tuple:
    """Run every suite over all multiplicity vectors with n <= max_n (d = 1..l)."""
    cases, found = 0, []
    for n in range(1, max_n + 1):
        for m in multiplicity_vectors(n):
            u = default_pair(m).u()
            found += suite_for_u(u, level, contractions=True)
            cases += 1
    return cases, found
