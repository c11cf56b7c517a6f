import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vnum.core import (
    AmbientRing,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    colon_monomial,
    contains,
    frobenius_power,
    unit_ideal,
    zero_ideal,
)
from vnum.corpus import complete_intersection, cycle_graph, edge_ideal, path_graph, random_unmixed_ideal
from vnum.decomposition import associated_primes, height_profile
from vnum.errors import DomainError
from vnum.vnumber import (
    alpha_q,
    brute_force_alpha,
    brute_force_v,
    local_v_number,
    next_prime,
    v_number,
    v_of_frobenius,
    v_via_polarization,
)

from .conftest import ideals


def test_two_pure_powers(xy):
    I = xy.ideal("x^2", "y^3")
    d, w = local_v_number(I, MonomialPrime(xy, (0, 1)))
    assert (d, w.to_string(xy)) == (3, "x*y^2")
    assert v_number(I).v == 3


def test_c4_local_witnesses():
    I = edge_ideal(cycle_graph(4))
    rep = v_number(I)
    assert rep.v == 1 and not rep.is_prime
    R = I.ring
    witnesses = {p.support: w.to_string(R) for p, (_, w) in rep.local.items()}
    assert witnesses == {(0, 2): "x4", (1, 3): "x3"}
    # every degree-one witness is valid, not only the canonical one
    for w in ("x2", "x4"):
        assert colon_monomial(I, R.monomial(w)) == R.ideal("x1", "x3")


def test_prime_ideal_has_v_zero():
    R = AmbientRing(4)
    rep = v_number(R.ideal("x2", "x4"))
    assert rep.v == 0 and rep.is_prime and rep.witness().is_unit()


def test_mixed_ideal(xy):
    rep = v_number(xy.ideal("x^2", "x*y"))
    assert {p.support: d for p, (d, _) in rep.local.items()} == {(0,): 1, (0, 1): 1}


def test_path_p4_has_v_one():
    assert v_number(edge_ideal(path_graph(4))).v == 1


def test_witness_satisfies_definition():
    R = AmbientRing(4)
    I = R.ideal("x1^2*x2", "x2^2*x3", "x3*x4^2", "x1*x4")
    for p, (d, w) in v_number(I).local.items():
        assert w.degree == d and not contains(I, w)
        assert colon_monomial(I, w) == p.ideal()


def test_non_associated_prime_rejected(xy):
    with pytest.raises(DomainError):
        local_v_number(xy.ideal("x^2", "y^3"), MonomialPrime(xy, (0,)))


@pytest.mark.parametrize("make", [zero_ideal, unit_ideal])
def test_zero_and_unit_rejected(xy, make):
    with pytest.raises(DomainError):
        v_number(make(xy))


def test_alpha_rejects_small_q(xy):
    with pytest.raises(DomainError):
        alpha_q(xy.ideal("x"), 1)
    with pytest.raises(DomainError):
        v_of_frobenius(xy.ideal("x"), 1)


def test_alpha_c4():
    I = edge_ideal(cycle_graph(4))
    a = alpha_q(I, 2)
    assert a.alpha == 4 and brute_force_alpha(I, 2) == 4
    assert contains(frobenius_power(I, 2), a.witness) is False


def test_frobenius_examples():
    assert v_of_frobenius(edge_ideal(cycle_graph(4)), 3) == 7
    R = AmbientRing(3)
    # prime of height 2: v(I^[q]) = (q - 1) * 2
    assert v_of_frobenius(R.ideal("x1", "x2"), 2) == 2


def test_complete_intersection_v():
    for powers in ([2, 3], [3, 2, 2], [1, 4], [5]):
        assert v_number(complete_intersection(powers)).v == sum(a - 1 for a in powers)


def test_next_prime():
    assert [next_prime(n) for n in (0, 1, 2, 3, 4, 7, 13, 22)] == [2, 2, 3, 5, 5, 11, 17, 23]


def test_polarization_route_examples(xy):
    assert v_via_polarization(edge_ideal(cycle_graph(4))) == 1
    assert v_via_polarization(xy.ideal("x^2", "y^3")) == 3


def test_polarization_route_rejects_mixed(xy):
    with pytest.raises(DomainError):
        v_via_polarization(xy.ideal("x^2", "x*y"))


@settings(max_examples=100, deadline=None)
@given(ideals(max_vars=3, max_exp=3, max_gens=4))
def test_local_v_matches_brute_force(I):
    for p in associated_primes(I):
        assert local_v_number(I, p)[0] == brute_force_v(I, p)


@settings(max_examples=60, deadline=None)
@given(ideals(max_vars=3, max_exp=2, max_gens=4), st.integers(2, 3))
def test_alpha_matches_brute_force(I, q):
    assert alpha_q(I, q).alpha == brute_force_alpha(I, q)


@settings(max_examples=60, deadline=None)
@given(ideals(max_vars=4, max_exp=2, max_gens=4), st.integers(2, 4))
def test_frobenius_bounds(I, q):
    h, bight, unmixed, _ = height_profile(I)
    v = v_number(I).v
    vq = v_of_frobenius(I, q)
    assert q * v + (q - 1) * h <= vq <= q * v + (q - 1) * bight
    if unmixed:
        assert vq == q * v + (q - 1) * h
    assert alpha_q(I, q).alpha <= vq


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(3, 5))
def test_polarization_route_on_unmixed(seed, n):
    I = random_unmixed_ideal(seed, n, 4, 3)
    assert v_via_polarization(I) == v_number(I).v


def test_v_number_of_variable_times_ideal(xyz):
    # (x) * J with J prime in other variables: the witness must account for x
    I = xyz.ideal("x*y", "x*z")
    rep = v_number(I)
    assert rep.v == 1
    assert {p.support for p in rep.local} == {(0,), (1, 2)}


@settings(max_examples=40, deadline=None)
@given(ideals(max_vars=2, max_exp=3, max_gens=3), ideals(max_vars=2, max_exp=3, max_gens=3))
def test_block_split_matches_brute_force(A, B):
    # place A and B in disjoint variables of one ring

    n, m = A.ring.num_vars, B.ring.num_vars
    R = AmbientRing(n + m)
    gens = [Monomial(g.exponents + (0,) * m) for g in A.generators]
    gens += [Monomial((0,) * n + g.exponents) for g in B.generators]
    I = MonomialIdeal(R, gens)
    rep = v_number(I)
    assert rep.v == v_number(A).v + v_number(B).v
    for p, (d, w) in rep.local.items():
        assert brute_force_v(I, p) == d
        assert colon_monomial(I, w) == p.ideal()
