"""Exact combinatorics of parking function polytopes PF(u)."""

from .core import Polynomial, as_rational, f_from_h, h_from_f
from .ehrhart import decomposition, ehrhart_polynomial, volume
from .enumerative import gen_eulerian_T, h_polynomial
from .polytope import (
    MDPair,
    f_vector,
    face_poset,
    facet_description,
    is_simple,
    is_simplicial_polytope,
    locate_vertex,
    md_pair,
    omega,
    rays,
    vertices,
)

__all__ = [
    "MDPair",
    "Polynomial",
    "as_rational",
    "decomposition",
    "ehrhart_polynomial",
    "f_from_h",
    "f_vector",
    "face_poset",
    "facet_description",
    "gen_eulerian_T",
    "h_from_f",
    "h_polynomial",
    "is_simple",
    "is_simplicial_polytope",
    "locate_vertex",
    "md_pair",
    "omega",
    "rays",
    "vertices",
    "volume",
]
