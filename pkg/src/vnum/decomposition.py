"""Irreducible decomposition of monomial ideals and the data read off it."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .core import Exps, MonomialIdeal, MonomialPrime, _minimal, intersect_all
from .errors import DomainError

Component = tuple[tuple[int, int], ...]  # sorted (variable, exponent) pairs


@dataclass(frozen=True)
class IrreducibleComponent:
    """The ideal (x_i^{a_i} : i in keys), stored as sorted (i, a_i) pairs."""

    ring: object
    pure_powers: Component

    def ideal(self) -> MonomialIdeal:
        n = self.ring.num_vars
        exps = []
        for i, a in self.pure_powers:
            e = [0] * n
            e[i] = a
            exps.append(tuple(e))
        return MonomialIdeal._from_exps(self.ring, exps)

    def prime(self) -> MonomialPrime:
        return MonomialPrime(self.ring, tuple(i for i, _ in self.pure_powers))

    def as_dict(self) -> dict[int, int]:
        return dict(self.pure_powers)

    def __str__(self):
        names = self.ring.var_names
        return "(" + ", ".join(names[i] if a == 1 else f"{names[i]}^{a}" for i, a in self.pure_powers) + ")"


@dataclass(frozen=True)
class Decomposition:
    components: tuple[IrreducibleComponent, ...]
    ass: tuple[MonomialPrime, ...]
    height: int
    bight: int
    unmixed: bool


def _contains_component(big: Component, small: Component) -> bool:
    """True iff the ideal ``small`` is contained in the ideal ``big``."""
    b = dict(big)
    return all(i in b and b[i] <= a for i, a in small)


def _irredundant(comps: set[Component]) -> frozenset[Component]:
    # For irreducible ideals, Q is redundant iff it contains another component.
    ordered = sorted(comps, key=lambda c: (len(c), c))
    keep = [
        c for c in ordered
        if not any(d != c and _contains_component(c, d) for d in ordered)
    ]
    return frozenset(keep)


def _blocks(exps: tuple[Exps, ...], n: int) -> list[list[Exps]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    supports = [[i for i, a in enumerate(e) if a] for e in exps]
    for s in supports:
        for v in s[1:]:
            parent[find(v)] = find(s[0])
    groups: dict[int, list[Exps]] = {}
    for e, s in zip(exps, supports):
        groups.setdefault(find(s[0]), []).append(e)
    return list(groups.values())


@lru_cache(maxsize=None)
def _decompose(n: int, exps: tuple[Exps, ...]) -> frozenset[Component]:
    split_at = None
    for e in exps:
        supp = [i for i, a in enumerate(e) if a]
        if len(supp) > 1:
            split_at = (e, supp[0])
            break
    if split_at is None:
        return frozenset({tuple(sorted((next(i for i, a in enumerate(e) if a), sum(e)) for e in exps))})

    blocks = _blocks(exps, n)
    if len(blocks) > 1:
        parts = [_decompose(n, _minimal(b)) for b in blocks]
        return frozenset(
            tuple(sorted(pair for c in combo for pair in c)) for combo in product(*parts)
        )

    m, i = split_at
    u = tuple(a if k == i else 0 for k, a in enumerate(m))
    v = tuple(0 if k == i else a for k, a in enumerate(m))
    left = _decompose(n, _minimal(exps + (u,)))
    right = _decompose(n, _minimal(exps + (v,)))
    return _irredundant(set(left) | set(right))


def clear_cache() -> None:
    _decompose.cache_clear()


def _check_proper(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise DomainError("the zero ideal has no decomposition here")
    if I.is_unit():
        raise DomainError("the unit ideal has no decomposition")


def irreducible_decomposition(I: MonomialIdeal) -> Decomposition:
    """Irredundant decomposition of I into irreducible (pure-power) ideals.

    Splits on the first generator that is not a pure power, using
    I = (I + (x_i^a)) ∩ (I + (m / x_i^a)) where x_i is the first variable of m.
    """
    _check_proper(I)
    raw = sorted(_decompose(I.ring.num_vars, I._exps), key=lambda c: (len(c), c))
    comps = tuple(IrreducibleComponent(I.ring, c) for c in raw)
    primes = sorted({c.prime() for c in comps})
    heights = [p.height for p in primes]
    return Decomposition(
        components=comps,
        ass=tuple(primes),
        height=min(heights),
        bight=max(heights),
        unmixed=min(heights) == max(heights),
    )


def reconstruct(dec: Decomposition) -> MonomialIdeal:
    return intersect_all([c.ideal() for c in dec.components])


def associated_primes(I: MonomialIdeal) -> tuple[MonomialPrime, ...]:
    if I.is_prime():
        return (MonomialPrime(I.ring, I.support()),)
    return irreducible_decomposition(I).ass


def height_profile(I: MonomialIdeal) -> tuple[int, int, bool, int]:
    """(height, bight, unmixed, krull_dim) of S/I."""
    d = irreducible_decomposition(I)
    return d.height, d.bight, d.unmixed, I.ring.num_vars - d.height
