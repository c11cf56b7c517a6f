"""Monomials and monomial ideals over a fixed polynomial ring.

Monomials are dense exponent vectors. Ideals always hold their minimal
generating set in canonical order: ascending by total degree, ties broken by
ascending lexicographic comparison of exponent vectors. Two ideals are equal
exactly when their rings and canonical generator tuples are equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from .errors import DomainError, ParseError, StructuralError

Exps = tuple[int, ...]


@dataclass(frozen=True)
class AmbientRing:
    """The polynomial ring K[x_1, ..., x_n] with standard grading.

    ``characteristic_label`` is informational only; the combinatorics of
    monomial ideals does not depend on the field.
    """

    num_vars: int
    var_names: tuple[str, ...] = ()
    characteristic_label: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.num_vars < 1:
            raise DomainError("a ring needs at least one variable")
        names = tuple(self.var_names) or tuple(f"x{i + 1}" for i in range(self.num_vars))
        if len(names) != self.num_vars:
            raise StructuralError(f"expected {self.num_vars} variable names, got {len(names)}")
        if len(set(names)) != len(names):
            raise StructuralError("variable names must be distinct")
        object.__setattr__(self, "var_names", names)

    def var(self, i: int) -> Monomial:
        """The i-th variable (0-based) as a monomial."""
        e = [0] * self.num_vars
        e[i] = 1
        return Monomial(e)

    def one(self) -> Monomial:
        return Monomial((0,) * self.num_vars)

    def monomial(self, text: str) -> Monomial:
        return parse_monomial(text, self)

    def ideal(self, *gens: Monomial | str) -> MonomialIdeal:
        """Build an ideal from monomials or monomial strings like ``"x1^2*x2"``."""
        mons = [parse_monomial(g, self) if isinstance(g, str) else g for g in gens]
        return minimalize(mons, self)


class Monomial:
    """x^a for a nonnegative exponent vector a; ``degree`` is cached."""

    __slots__ = ("exponents", "degree", "_hash")

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise DomainError(f"negative exponent in {exps}")
        self.exponents = exps
        self.degree = sum(exps)
        self._hash = hash(exps)

    @property
    def num_vars(self) -> int:
        return len(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def is_unit(self) -> bool:
        return self.degree == 0

    def is_square_free(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def is_pure_power(self) -> bool:
        return len(self.support) == 1

    def sort_key(self) -> tuple[int, Exps]:
        return (self.degree, self.exponents)

    def _check(self, other: Monomial) -> None:
        if len(other.exponents) != len(self.exponents):
            raise StructuralError(
                f"monomials in {len(self.exponents)} and {len(other.exponents)} variables"
            )

    def divides(self, other: Monomial) -> bool:
        self._check(other)
        return _divides(self.exponents, other.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(a + b for a, b in zip(self.exponents, other.exponents))

    def __pow__(self, q: int) -> Monomial:
        return Monomial(a * q for a in self.exponents)

    def __truediv__(self, other: Monomial) -> Monomial:
        """Exact quotient; ``other`` must divide ``self``."""
        self._check(other)
        if not _divides(other.exponents, self.exponents):
            raise DomainError("monomial quotient is not a monomial")
        return Monomial(a - b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(map(max, self.exponents, other.exponents))

    def gcd(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(map(min, self.exponents, other.exponents))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return self._hash

    def __lt__(self, other: Monomial) -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"Monomial({self.exponents})"

    def to_string(self, ring: AmbientRing | None = None) -> str:
        names = ring.var_names if ring is not None else [f"x{i + 1}" for i in range(self.num_vars)]
        parts = []
        for name, e in zip(names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    __str__ = to_string


def _divides(a: Exps, b: Exps) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _minimal(exps: Iterable[Exps]) -> tuple[Exps, ...]:
    cands = sorted(set(exps), key=lambda e: (sum(e), e))
    kept: list[Exps] = []
    for e in cands:
        if not any(_divides(k, e) for k in kept):
            kept.append(e)
    return tuple(kept)


class MonomialIdeal:
    """A monomial ideal held by its canonical minimal generating set.

    The zero ideal has no generators; the unit ideal has exactly the unit
    monomial. Instances are immutable and hashable.
    """

    __slots__ = ("ring", "generators", "_exps", "_hash")

    def __init__(self, ring: AmbientRing, generators: Iterable[Monomial] = ()):
        gens = list(generators)
        for g in gens:
            if g.num_vars != ring.num_vars:
                raise StructuralError(
                    f"monomial in {g.num_vars} variables used in a ring with {ring.num_vars}"
                )
        self._set(ring, _minimal(g.exponents for g in gens))

    @classmethod
    def _from_exps(cls, ring: AmbientRing, exps: Iterable[Exps], canonical: bool = False):
        obj = cls.__new__(cls)
        obj._set(ring, tuple(exps) if canonical else _minimal(exps))
        return obj

    def _set(self, ring: AmbientRing, exps: tuple[Exps, ...]) -> None:
        self.ring = ring
        self._exps = exps
        self.generators = tuple(Monomial(e) for e in exps)
        self._hash = hash((ring.num_vars, exps))

    # -- basic predicates ------------------------------------------------
    def is_zero(self) -> bool:
        return not self._exps

    def is_unit(self) -> bool:
        return len(self._exps) == 1 and sum(self._exps[0]) == 0

    def is_proper_nonzero(self) -> bool:
        return not self.is_zero() and not self.is_unit()

    def is_square_free(self) -> bool:
        return all(max(e) <= 1 for e in self._exps)

    def is_prime(self) -> bool:
        """True iff generated by variables (the only monomial primes)."""
        return bool(self._exps) and all(sum(e) == 1 for e in self._exps)

    def is_artinian(self) -> bool:
        """True iff some power of every variable lies in the ideal."""
        pure = {g.support[0] for g in self.generators if g.is_pure_power()}
        return len(pure) == self.ring.num_vars

    def support(self) -> tuple[int, ...]:
        """Variables occurring in some generator."""
        s = set()
        for e in self._exps:
            s.update(i for i, a in enumerate(e) if a)
        return tuple(sorted(s))

    def max_exponents(self) -> Exps:
        n = self.ring.num_vars
        if not self._exps:
            return (0,) * n
        return tuple(max(e[i] for e in self._exps) for i in range(n))

    def __len__(self) -> int:
        return len(self._exps)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.ring.num_vars == other.ring.num_vars
            and self._exps == other._exps
        )

    def __hash__(self):
        return self._hash

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        _same_ring(self, other)
        return MonomialIdeal._from_exps(self.ring, self._exps + other._exps)

    def __repr__(self):
        return f"MonomialIdeal({format_generators(self)})"

    def to_text(self) -> str:
        """Serialize in the ideal file format."""
        lines = ["vars: " + " ".join(self.ring.var_names)]
        lines.extend(g.to_string(self.ring) for g in self.generators)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class MonomialPrime:
    """A prime generated by the variables indexed by ``support``."""

    ring: AmbientRing
    support: tuple[int, ...]

    def __post_init__(self):
        s = tuple(sorted(set(self.support)))
        if not s:
            raise DomainError("a monomial prime needs at least one variable")
        if s[-1] >= self.ring.num_vars or s[0] < 0:
            raise StructuralError(f"variable index out of range in {s}")
        object.__setattr__(self, "support", s)

    @property
    def height(self) -> int:
        return len(self.support)

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ring, (self.ring.var(i) for i in self.support))

    def __str__(self):
        return "(" + ", ".join(self.ring.var_names[i] for i in self.support) + ")"

    def __lt__(self, other: MonomialPrime) -> bool:
        return (len(self.support), self.support) < (len(other.support), other.support)


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ring.num_vars != J.ring.num_vars:
        raise StructuralError(
            f"ideals live in rings with {I.ring.num_vars} and {J.ring.num_vars} variables"
        )


def zero_ideal(ring: AmbientRing) -> MonomialIdeal:
    return MonomialIdeal._from_exps(ring, (), canonical=True)


def unit_ideal(ring: AmbientRing) -> MonomialIdeal:
    return MonomialIdeal._from_exps(ring, ((0,) * ring.num_vars,), canonical=True)


def minimalize(gens: Sequence[Monomial], ring: AmbientRing) -> MonomialIdeal:
    """Minimal generating set, in canonical order, of the ideal spanned by ``gens``."""
    return MonomialIdeal(ring, gens)


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    if m.num_vars != I.ring.num_vars:
        raise StructuralError("monomial and ideal live in different rings")
    e = m.exponents
    d = m.degree
    for g in I._exps:
        if sum(g) > d:
            # generators are sorted by degree
            break
        if _divides(g, e):
            return True
    return False


def _colon_exps(gens: tuple[Exps, ...], g: Exps) -> list[Exps]:
    return [tuple(a - b if a > b else 0 for a, b in zip(m, g)) for m in gens]


def colon_monomial(I: MonomialIdeal, g: Monomial) -> MonomialIdeal:
    """(I : g) for a single monomial g."""
    if g.num_vars != I.ring.num_vars:
        raise StructuralError("monomial and ideal live in different rings")
    return MonomialIdeal._from_exps(I.ring, _colon_exps(I._exps, g.exponents))


def _intersect_exps(a: tuple[Exps, ...], b: tuple[Exps, ...]) -> tuple[Exps, ...]:
    return _minimal(tuple(map(max, x, y)) for x in a for y in b)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal._from_exps(I.ring, _intersect_exps(I._exps, J._exps), canonical=True)


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise DomainError("empty intersection")
    return reduce(intersect, ideals)


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """(I : J), the intersection of (I : g) over the generators g of J."""
    _same_ring(I, J)
    if J.is_zero():
        raise DomainError("colon by the zero ideal")
    # small colons first keeps intermediate intersections small
    parts = sorted((_minimal(_colon_exps(I._exps, g)) for g in J._exps), key=len)
    acc = parts[0]
    for p in parts[1:]:
        acc = _intersect_exps(acc, p)
    return MonomialIdeal._from_exps(I.ring, acc, canonical=True)


def frobenius_power(I: MonomialIdeal, q: int) -> MonomialIdeal:
    """I^[q], generated by the q-th powers of the generators of I."""
    if q < 1:
        raise DomainError(f"Frobenius exponent must be >= 1, got {q}")
    exps = tuple(tuple(a * q for a in e) for e in I._exps)
    # raising to a power keeps minimality and the degree ordering
    return MonomialIdeal._from_exps(I.ring, exps, canonical=True)


def polarize(I: MonomialIdeal) -> tuple[MonomialIdeal, list[int]]:
    """Standard polarization of ``I``.

    Variable x_i with largest exponent a_i is replaced by x_{i,1}, ..., x_{i,a_i}
    (at least one copy is kept even when x_i does not occur, so square-free
    ideals come back unchanged up to renaming). Returns the square-free ideal
    and, for every new variable, the index of the original variable.
    """
    if not I.is_proper_nonzero():
        raise DomainError("polarization needs a proper nonzero ideal")
    ring = I.ring
    top = I.max_exponents()
    offsets, varmap, names = [], [], []
    for i, a in enumerate(top):
        offsets.append(len(varmap))
        copies = max(a, 1)
        for k in range(copies):
            varmap.append(i)
            names.append(ring.var_names[i] if copies == 1 and a <= 1 else f"{ring.var_names[i]}_{k + 1}")
    new_ring = AmbientRing(len(varmap), tuple(names), ring.characteristic_label)
    exps = []
    for e in I._exps:
        v = [0] * len(varmap)
        for i, a in enumerate(e):
            for k in range(a):
                v[offsets[i] + k] = 1
        exps.append(tuple(v))
    return MonomialIdeal._from_exps(new_ring, exps), varmap


def depolarize(J: MonomialIdeal, varmap: Sequence[int], ring: AmbientRing) -> MonomialIdeal:
    """Collapse each new variable back onto its original one."""
    exps = []
    for e in J._exps:
        v = [0] * ring.num_vars
        for j, a in enumerate(e):
            v[varmap[j]] += a
        exps.append(tuple(v))
    return MonomialIdeal._from_exps(ring, exps)


def restrict_to_support(I: MonomialIdeal) -> tuple[MonomialIdeal, tuple[int, ...]]:
    """Drop variables that occur in no generator; returns the ideal and kept indices."""
    if not I.is_proper_nonzero():
        raise DomainError("support restriction needs a proper nonzero ideal")
    keep = I.support()
    if len(keep) == I.ring.num_vars:
        return I, keep
    ring = AmbientRing(len(keep), tuple(I.ring.var_names[i] for i in keep))
    return MonomialIdeal._from_exps(ring, (tuple(e[i] for i in keep) for e in I._exps), canonical=True), keep


def connected_blocks(I: MonomialIdeal) -> list[list[int]]:
    """Partition of the generator indices into variable-connected blocks."""
    parent = list(range(I.ring.num_vars))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in I.generators:
        s = g.support
        for v in s[1:]:
            parent[find(v)] = find(s[0])
    blocks: dict[int, list[int]] = {}
    for k, g in enumerate(I.generators):
        blocks.setdefault(find(g.support[0]), []).append(k)
    return list(blocks.values())


def split_blocks(I: MonomialIdeal) -> list[MonomialIdeal]:
    """Variable-disjoint pieces whose sum is I (one piece when I is connected)."""
    blocks = connected_blocks(I)
    if len(blocks) == 1:
        return [I]
    return [MonomialIdeal._from_exps(I.ring, [I.generators[k].exponents for k in b]) for b in blocks]


def format_generators(I: MonomialIdeal) -> str:
    if I.is_zero():
        return "0"
    return ", ".join(g.to_string(I.ring) for g in I.generators)


# -- text format -----------------------------------------------------------

def parse_monomial(text: str, ring: AmbientRing, line: int | None = None) -> Monomial:
    """Parse ``x1^2*x2``; ``*`` and whitespace between factors are optional."""
    s = text.strip()
    if not s:
        raise ParseError("empty monomial", line)
    e = [0] * ring.num_vars
    if s == "1":
        return Monomial(e)
    index = {name: i for i, name in enumerate(ring.var_names)}
    names = sorted(index, key=len, reverse=True)
    pos = 0
    while pos < len(s):
        c = s[pos]
        if c in "* \t":
            pos += 1
            continue
        for name in names:
            if s.startswith(name, pos):
                break
        else:
            m = re.match(r"[A-Za-z_][A-Za-z0-9_]*", s[pos:])
            token = m.group(0) if m else s[pos]
            raise ParseError(f"unknown variable {token!r}", line)
        pos += len(name)
        power = 1
        m = re.match(r"\s*\^\s*(-?\d+)", s[pos:])
        if m:
            power = int(m.group(1))
            if power <= 0:
                raise ParseError(f"non-positive exponent {power} on {name}", line)
            pos += m.end()
        elif s.startswith("^", pos):
            raise ParseError("malformed exponent", line)
        e[index[name]] += power
    return Monomial(e)


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse the ideal file format: a ``vars:`` header, then one generator per line."""
    ring = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        if ring is None:
            if not s.startswith("vars:"):
                raise ParseError("expected 'vars:' header", lineno)
            names = s[len("vars:"):].split()
            if not names:
                raise ParseError("no variables declared", lineno)
            for name in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                    raise ParseError(f"invalid variable name {name!r}", lineno)
            try:
                ring = AmbientRing(len(names), tuple(names))
            except (StructuralError, DomainError) as exc:
                raise ParseError(str(exc), lineno) from None
            continue
        gens.append(parse_monomial(s, ring, lineno))
    if ring is None:
        raise ParseError("missing 'vars:' header")
    return minimalize(gens, ring)
