from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from pfpoly.cones import (
    chain_cone,
    codim,
    cone_of,
    contains,
    dim,
    dim_of_type,
    interiors_meet,
    is_face_of,
    is_simplicial,
    linear_extension_decomposition,
    linear_extensions,
)
from pfpoly.partitions import Preposet, composition, parse_partition, preposet_of, skewed, standard_of_type
from strategies import compositions_of, skewed_partitions

B_TOP = parse_partition("({0,2,3},{},{1,6,7},{8},{4,5})")
B_LOW = parse_partition("({2,3},{0,7}*,{6},{1,8}*,{4,5})")

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def test_cone_printing():
    assert str(cone_of(B_TOP)) == "0,c2,c3 <= c1,c6,c7 <= c8 <= c4,c5"
    assert str(cone_of(B_LOW)) == "c2,c3 <= 0=c7 <= c6 <= c1=c8 <= c4,c5"


def test_antichain_cone_is_everything():
    sigma = cone_of(Preposet(3))
    assert sigma.dim() == 3
    assert sigma.contains((-7, 5, Fraction(1, 3)))


def test_membership_examples():
    sigma = cone_of(B_TOP)
    # c_1 = -1 sits below c_0 = 0 although 0 precedes 1, so this point is outside
    assert not contains(sigma, (-1, -2, -2, 9, 9, 1, 1, 5))
    assert contains(sigma, (1, -2, -2, 9, 9, 1, 1, 5))
    assert contains(sigma, (0,) * 8)
    assert not contains(sigma, (0,) * 8, mode="interior")
    assert not contains(sigma, (-1, -2, -2, 9, 9, 1, 1, -5))


def test_dimension_examples():
    assert dim_of_type(composition("2,1o,1,2*,2")) == 6
    assert dim_of_type(composition("2,0,3,1,2")) == 8
    assert dim_of_type(composition(0, "8o")) == 0
    assert dim(B_TOP) == 8 and codim(B_TOP) == 0


def test_face_examples():
    low, top = cone_of(B_LOW), cone_of(B_TOP)
    assert is_face_of(low, top)
    assert not is_face_of(top, low)
    assert is_face_of(top, top)


def test_simplicial_examples():
    assert not is_simplicial(cone_of(B_TOP))
    chain = Preposet(4, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert is_simplicial(cone_of(chain))
    assert not is_simplicial(cone_of(skewed((1,), (0, 2))))


def test_linear_extension_examples():
    chain = Preposet(3, [(0, 1), (1, 2), (2, 3)])
    assert len(list(linear_extensions(chain))) == 1
    fork = Preposet(2, [(0, 1), (0, 2)])
    assert len(list(linear_extensions(fork))) == 2
    assert len(list(linear_extensions(preposet_of(parse_partition("({1,2},{0},{3})"))))) == 2


@pytest.mark.parametrize("n", range(1, 7))
def test_dimension_formula_matches_classes(n):
    for b in compositions_of(n):
        B = standard_of_type(b)
        assert dim(B) == len(preposet_of(B).classes()) - 1
        assert codim(B) == n - dim(B)


@given(skewed_partitions(max_n=5), st.lists(small_rationals, min_size=5, max_size=5))
def test_minimal_and_full_descriptions_agree(B, c):
    sigma = cone_of(B)
    c = c[: B.n]
    assert sigma.contains(c, description="minimal") == sigma.contains(c, description="full")


def test_minimal_and_full_descriptions_on_grid():
    sigma = cone_of(parse_partition("({0,2},{},{1},{3})"))
    for c in product(range(-2, 3), repeat=3):
        assert sigma.contains(c) == sigma.contains(c, description="full")


@given(skewed_partitions(max_n=5), st.lists(small_rationals, min_size=5, max_size=5))
def test_poset_cone_is_union_of_chain_cones(B, c):
    P = preposet_of(B)
    if not P.is_poset():
        return
    sigma = cone_of(P)
    c = c[: B.n]
    pieces = linear_extension_decomposition(sigma)
    assert sigma.contains(c) == any(piece.contains(c) for piece in pieces)


def test_chain_cone_interiors_are_disjoint():
    a = chain_cone((0, 1, 2))
    b = chain_cone((0, 2, 1))
    assert not interiors_meet(a, b)
    assert interiors_meet(a, a)
