"""v-numbers, local v-numbers and the Frobenius invariant alpha_q.

Every search is over monomials only. If f is a monomial with (I : f) = p for a
monomial prime p, then f lies in (I : p), so some minimal generator g of (I : p)
divides f, and p ⊆ (I : g) ⊆ (I : f) = p. The least degree of a witness is
therefore attained among the minimal generators of (I : p), which is what
:func:`local_v_number` scans. :func:`brute_force_v` checks this by plain
enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

from .core import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    colon,
    colon_monomial,
    contains,
    frobenius_power,
    polarize,
    split_blocks,
)
from .decomposition import associated_primes, irreducible_decomposition
from .errors import DomainError


@dataclass(frozen=True)
class VNumberReport:
    v: int
    local: dict[MonomialPrime, tuple[int, Monomial]] = field(hash=False)
    is_prime: bool

    def witness(self) -> Monomial:
        """A witness of least degree over all associated primes."""
        return min((w for d, w in self.local.values() if d == self.v), key=Monomial.sort_key)


@dataclass(frozen=True)
class AlphaReport:
    q: int
    alpha: int
    witness: Monomial


def _check_proper(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise DomainError("v-number of the zero ideal is undefined")
    if I.is_unit():
        raise DomainError("v-number of the unit ideal is undefined")


def _local(I: MonomialIdeal, p: MonomialPrime) -> tuple[int, Monomial] | None:
    blocks = split_blocks(I)
    if len(blocks) == 1:
        return _local_connected(I, p)
    # in disjoint variables (I1 + I2 : f1 f2) = (I1 : f1) + (I2 : f2), so the
    # search splits and the witnesses multiply
    degree, witness = 0, I.ring.one()
    for B in blocks:
        own = set(B.support())
        sub = tuple(i for i in p.support if i in own)
        found = _local_connected(B, MonomialPrime(I.ring, sub)) if sub else None
        if found is None:
            return None
        degree += found[0]
        witness = witness * found[1]
    return degree, witness


@lru_cache(maxsize=65536)
def _local_connected(I: MonomialIdeal, p: MonomialPrime) -> tuple[int, Monomial] | None:
    target = p.ideal()
    best = None
    for g in colon(I, target).generators:
        if best is not None and g.degree > best.degree:
            break  # generators come in degree order
        if contains(I, g):
            continue
        if colon_monomial(I, g) == target:
            best = g
            break
    return None if best is None else (best.degree, best)


def local_v_number(
    I: MonomialIdeal, p: MonomialPrime, ass: tuple[MonomialPrime, ...] | None = None
) -> tuple[int, Monomial]:
    """v_p(I) together with a monomial g of that degree satisfying (I : g) = p."""
    _check_proper(I)
    if ass is None:
        ass = associated_primes(I)
    if p not in ass:
        raise DomainError(f"{p} is not an associated prime of the ideal")
    found = _local(I, p)
    if found is None:  # cannot happen for an associated prime
        raise AssertionError(f"no witness found for associated prime {p}")
    return found


def v_number(I: MonomialIdeal) -> VNumberReport:
    _check_proper(I)
    if I.is_prime():
        p = MonomialPrime(I.ring, I.support())
        return VNumberReport(0, {p: (0, I.ring.one())}, True)
    ass = associated_primes(I)
    local = {p: local_v_number(I, p, ass) for p in ass}
    return VNumberReport(min(d for d, _ in local.values()), local, False)


def alpha_q(I: MonomialIdeal, q: int) -> AlphaReport:
    """alpha_q(I): least degree of a monomial in (I^[q] : I) but not in I^[q]."""
    _check_proper(I)
    if q < 2:
        raise DomainError(f"alpha_q is defined for q >= 2, got {q}")
    Iq = frobenius_power(I, q)
    # a least-degree monomial of the colon outside I^[q] is a multiple of a
    # minimal generator of the colon outside I^[q]
    for g in colon(Iq, I).generators:
        if not contains(Iq, g):
            return AlphaReport(q, g.degree, g)
    raise AssertionError("(I^[q] : I) is contained in I^[q]")


def v_of_frobenius(I: MonomialIdeal, q: int) -> int:
    _check_proper(I)
    if q < 2:
        raise DomainError(f"Frobenius v-number needs q >= 2, got {q}")
    return v_number(frobenius_power(I, q)).v


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    c = max(n + 1, 2)
    while any(c % d == 0 for d in range(2, math.isqrt(c) + 1)):
        c += 1
    return c


def v_via_polarization(I: MonomialIdeal, height: int | None = None) -> int:
    """v(I) for unmixed I as ceil(alpha_q(I^P) / q) - height(I), q prime > dim S^P.

    No decomposition of ``I`` is performed. When ``height`` is omitted it is
    read, along with the unmixedness check, from the decomposition of the
    polarization (polarization preserves both).
    """
    _check_proper(I)
    P, _ = polarize(I)
    if height is None:
        d = irreducible_decomposition(P)
        if not d.unmixed:
            raise DomainError("the polarization identity needs an unmixed ideal")
        height = d.height
    q = next_prime(P.ring.num_vars)
    a = alpha_q(P, q).alpha
    return -(-a // q) - height


def _monomials_of_degree(n: int, d: int):
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield Monomial(e)


def brute_force_v(I: MonomialIdeal, p: MonomialPrime, max_degree: int | None = None) -> int | None:
    """Least d such that some monomial f of degree d has (I : f) = p, searching d <= max_degree.

    Independent of :func:`local_v_number`: it tests every monomial in turn.
    """
    _check_proper(I)
    if max_degree is None:
        max_degree = sum(g.degree for g in I.generators) + p.height
    target = p.ideal()
    n = I.ring.num_vars
    for d in range(max_degree + 1):
        for f in _monomials_of_degree(n, d):
            if colon_monomial(I, f) == target:
                return d
    return None


def brute_force_alpha(I: MonomialIdeal, q: int, max_degree: int | None = None) -> int | None:
    """Degreewise search for a monomial in (I^[q] : I) outside I^[q]."""
    Iq = frobenius_power(I, q)
    if max_degree is None:
        max_degree = (q - 1) * sum(g.degree for g in I.generators)
    n = I.ring.num_vars
    for d in range(max_degree + 1):
        for f in _monomials_of_degree(n, d):
            if contains(Iq, f):
                continue
            if all(contains(Iq, f * g) for g in I.generators):
                return d
    return None
