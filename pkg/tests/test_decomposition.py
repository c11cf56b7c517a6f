from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vnum.core import AmbientRing, MonomialPrime, colon_monomial, frobenius_power, intersect_all, unit_ideal, zero_ideal
from vnum.corpus import Graph, complete_graph, cycle_graph, edge_ideal, path_graph, random_graph
from vnum.decomposition import (
    associated_primes,
    height_profile,
    irreducible_decomposition,
    reconstruct,
)
from vnum.errors import DomainError
from vnum.core import Monomial

from .conftest import ideals


def ass_by_enumeration(I):
    """Primes of the form (I : f), with f ranging over the box below the largest exponents.

    (I : f) only depends on min(f_i, a_i) where a_i is the largest exponent of x_i,
    so this finds every associated prime.
    """
    top = I.max_exponents()
    found = set()
    for e in product(*(range(a + 1) for a in top)):
        K = colon_monomial(I, Monomial(e))
        if K.is_prime():
            found.add(MonomialPrime(I.ring, K.support()))
    return found


def minimal_vertex_covers(G):
    covers = []
    for k in range(G.num_vertices + 1):
        for c in combinations(range(G.num_vertices), k):
            s = set(c)
            if all(u in s or v in s for u, v in G.edges) and not any(set(d) <= s for d in covers):
                covers.append(c)
    return {tuple(sorted(c)) for c in covers}


def test_split_example(xy):
    d = irreducible_decomposition(xy.ideal("x^2", "x*y"))
    assert [str(c) for c in d.components] == ["(x)", "(x^2, y)"]
    assert reconstruct(d) == xy.ideal("x^2", "x*y")


def test_triangle_is_vertex_cover_decomposition(xyz):
    d = irreducible_decomposition(xyz.ideal("x*y", "x*z", "y*z"))
    assert sorted(c.pure_powers for c in d.components) == [((0, 1), (1, 1)), ((0, 1), (2, 1)), ((1, 1), (2, 1))]


def test_pure_powers_are_one_component(xy):
    d = irreducible_decomposition(xy.ideal("x^2", "y^3"))
    assert len(d.components) == 1 and d.components[0].as_dict() == {0: 2, 1: 3}


def test_c4_associated_primes():
    I = edge_ideal(cycle_graph(4))
    assert {p.support for p in associated_primes(I)} == {(0, 2), (1, 3)}


def test_prime_associated_prime():
    R = AmbientRing(3)
    assert associated_primes(R.ideal("x1", "x2")) == (MonomialPrime(R, (0, 1)),)


def test_mixed_associated_primes(xy):
    assert {p.support for p in associated_primes(xy.ideal("x^2", "x*y"))} == {(0,), (0, 1)}


def test_height_profiles(xy):
    assert height_profile(edge_ideal(cycle_graph(4))) == (2, 2, True, 2)
    assert height_profile(xy.ideal("x^2", "x*y")) == (1, 2, False, 1)
    R = AmbientRing(6)
    assert height_profile(R.ideal("x1", "x2", "x3")) == (3, 3, True, 3)


@pytest.mark.parametrize("bad", ["zero", "unit"])
def test_rejects_zero_and_unit(xy, bad):
    I = zero_ideal(xy) if bad == "zero" else unit_ideal(xy)
    with pytest.raises(DomainError):
        irreducible_decomposition(I)


@settings(max_examples=120, deadline=None)
@given(ideals(max_vars=4))
def test_reconstruction_and_irredundancy(I):
    d = irreducible_decomposition(I)
    assert reconstruct(d) == I
    comps = [c.ideal() for c in d.components]
    if len(comps) > 1:
        for k in range(len(comps)):
            assert intersect_all(comps[:k] + comps[k + 1:]) != I
    assert d.height == min(p.height for p in d.ass)
    assert d.bight == max(p.height for p in d.ass)
    assert d.unmixed == (d.height == d.bight)


@settings(max_examples=120, deadline=None)
@given(ideals(max_vars=4))
def test_ass_matches_enumeration(I):
    assert set(associated_primes(I)) == ass_by_enumeration(I)


@settings(max_examples=60, deadline=None)
@given(ideals(max_vars=4, max_exp=2), st.integers(2, 5))
def test_ass_stable_under_frobenius(I, q):
    assert associated_primes(frobenius_power(I, q)) == associated_primes(I)


@settings(max_examples=60, deadline=None)
@given(ideals(max_vars=5, square_free=True))
def test_square_free_components_are_primes(I):
    d = irreducible_decomposition(I)
    assert all(all(a == 1 for _, a in c.pure_powers) for c in d.components)
    assert [c.prime() for c in d.components] == list(d.ass)


@pytest.mark.parametrize(
    "G",
    [path_graph(5), cycle_graph(5), cycle_graph(6), complete_graph(4)]
    + [random_graph(s, 7) for s in range(6)],
)
def test_edge_ideal_primes_are_minimal_vertex_covers(G):
    assert {p.support for p in associated_primes(edge_ideal(G))} == minimal_vertex_covers(G)


def test_disjoint_blocks_decompose_as_products():
    G = Graph(6, ((0, 1), (1, 2), (3, 4), (4, 5)))
    I = edge_ideal(G)
    d = irreducible_decomposition(I)
    assert reconstruct(d) == I
    assert len(d.components) == 4
