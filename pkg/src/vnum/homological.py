"""Graded Betti numbers and the invariants derived from them.

The main route is Hochster's formula on the Stanley-Reisner complex of the
polarized ideal: for a square-free ideal I with complex D,

    beta_{i,sigma}(S/I) = dim reduced_H_{|sigma|-i-1}(D restricted to sigma).

Only vertex sets sigma that are unions of generator supports can contribute
(any other sigma has a vertex that is a cone point of the restriction), so
the enumeration runs over that union-closed family. Ideals whose generators
split into variable-disjoint blocks are handled block by block and the tables
multiplied, since the tensor product of minimal resolutions is minimal.

:func:`koszul_betti_oracle` computes the same numbers independently from the
Koszul complex of S/I, one multidegree at a time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product

from .core import MonomialIdeal, _minimal, polarize, restrict_to_support, split_blocks
from .decomposition import irreducible_decomposition
from .errors import DomainError, ResourceError
from .linalg import rank

MAX_POLARIZED_VARS = 22
MAX_COMPLEX_VERTICES = 24
MAX_ORACLE_VARS = 8


@dataclass(frozen=True)
class FieldChoice:
    """Coefficient field: the rationals (``characteristic == 0``) or F_p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or p == 1 or (p > 1 and any(p % d == 0 for d in range(2, int(p**0.5) + 1))):
            raise DomainError(f"field characteristic must be 0 or a prime, got {p}")

    @classmethod
    def parse(cls, text: str | int | None) -> FieldChoice:
        if text is None:
            return cls(0)
        if isinstance(text, int):
            return cls(text)
        t = text.strip()
        if t.upper() in ("Q", "QQ", "0"):
            return cls(0)
        m = re.fullmatch(r"(?:G?F_?\(?)?(\d+)\)?", t, re.IGNORECASE)
        if m is None:
            raise DomainError(f"unknown field {text!r}")
        return cls(int(m.group(1)))

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldChoice(0)


# -- simplicial complexes ----------------------------------------------------


class SimplicialComplex:
    """A simplicial complex on vertices 0..n-1 given by its facets.

    ``facets == ()`` is the void complex (no faces at all); ``facets == ((),)``
    is the complex whose only face is the empty set.
    """

    __slots__ = ("num_vertices", "facets", "_faces")

    def __init__(self, num_vertices: int, facets):
        fs = {frozenset(f) for f in facets}
        for f in fs:
            if any(v < 0 or v >= num_vertices for v in f):
                raise DomainError(f"facet {sorted(f)} uses a vertex outside 0..{num_vertices - 1}")
        maximal = [f for f in fs if not any(f < g for g in fs)]
        self.num_vertices = num_vertices
        self.facets = tuple(sorted((tuple(sorted(f)) for f in maximal), key=lambda f: (len(f), f)))
        self._faces = None

    @classmethod
    def from_faces(cls, num_vertices: int, faces) -> SimplicialComplex:
        return cls(num_vertices, faces)

    def is_void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def faces(self) -> list[int]:
        """All faces as vertex bitmasks."""
        if self._faces is None:
            out = set()
            for f in self.facets:
                verts = [1 << v for v in f]
                masks = {0}
                for b in verts:
                    masks |= {m | b for m in masks}
                out |= masks
            self._faces = sorted(out)
        return self._faces

    def f_vector(self) -> list[int]:
        """Face counts by dimension, starting at dimension -1."""
        counts = [0] * (self.dimension + 2)
        for m in self.faces():
            counts[bin(m).count("1")] += 1
        return counts

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.num_vertices == other.num_vertices
            and self.facets == other.facets
        )

    def __hash__(self):
        return hash((self.num_vertices, self.facets))

    def __repr__(self):
        return f"SimplicialComplex({self.num_vertices}, {list(self.facets)})"


def _faces_avoiding(n: int, nonfaces: list[int]) -> list[int]:
    """All vertex sets containing no mask from ``nonfaces``, by depth-first extension."""
    out = [0]
    stack = [(0, 0)]
    while stack:
        face, start = stack.pop()
        for v in range(start, n):
            f = face | (1 << v)
            if any(g & f == g for g in nonfaces):
                continue
            out.append(f)
            stack.append((f, v + 1))
    return out


def stanley_reisner_complex(I: MonomialIdeal) -> SimplicialComplex:
    """The complex whose faces are supports of square-free monomials outside I."""
    if not I.is_square_free():
        raise DomainError("Stanley-Reisner complex needs a square-free ideal")
    if I.is_unit():
        raise DomainError("the unit ideal has the void complex; refusing")
    n = I.ring.num_vars
    if n > MAX_COMPLEX_VERTICES:
        raise ResourceError(f"{n} vertices exceeds the cap of {MAX_COMPLEX_VERTICES}")
    nonfaces = [_mask(g.support) for g in I.generators]
    faces = _faces_avoiding(n, nonfaces)
    maximal = [f for f in faces if not any(f != g and f & g == f for g in faces)]
    return SimplicialComplex(n, [_verts(m) for m in maximal])


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _verts(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _homology_from_faces(faces: list[int], p: int) -> list[int]:
    """Reduced homology dimensions, degree -1 first, of the complex with these faces."""
    if not faces:
        return []
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    top = max(by_dim)
    index = {d: {f: k for k, f in enumerate(fs)} for d, fs in by_dim.items()}
    ranks = {}
    for d in range(0, top + 1):
        lower = index[d - 1]
        rows = []
        for f in by_dim[d]:
            row = {}
            sign = 1
            for v in _verts(f):
                row[lower[f & ~(1 << v)]] = sign
                sign = -sign
            rows.append(row)
        ranks[d] = rank(rows, p)
    dims = []
    for d in range(-1, top + 1):
        dims.append(len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return dims


def reduced_homology_dims(C: SimplicialComplex, field: FieldChoice = QQ, cap: int = MAX_COMPLEX_VERTICES) -> list[int]:
    """Dimensions of reduced homology in degrees -1, 0, ..., dim C.

    The void complex has no homology and gives an empty list.
    """
    if C.num_vertices > cap:
        raise ResourceError(f"{C.num_vertices} vertices exceeds the cap of {cap}")
    return _homology_from_faces(C.faces(), field.characteristic)


# -- Betti tables -------------------------------------------------------------


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,j}; zero entries are not stored."""

    entries: dict[tuple[int, int], int] = field(hash=False)
    field: FieldChoice = QQ

    def __post_init__(self):
        clean = {k: v for k, v in sorted(self.entries.items()) if v}
        if any(v < 0 for v in clean.values()):
            raise DomainError("Betti numbers are nonnegative")
        object.__setattr__(self, "entries", clean)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    @property
    def regularity(self) -> int:
        return max(j - i for i, j in self.entries)

    @property
    def proj_dim(self) -> int:
        return max(i for i, _ in self.entries)

    def column(self, i: int) -> dict[int, int]:
        return {j: b for (k, j), b in self.entries.items() if k == i}

    def totals(self) -> list[int]:
        out = [0] * (self.proj_dim + 1)
        for (i, _), b in self.entries.items():
            out[i] += b
        return out

    def tensor(self, other: BettiTable) -> BettiTable:
        """Betti table of the tensor product of the two resolutions."""
        acc: dict[tuple[int, int], int] = {}
        for (i, j), a in self.entries.items():
            for (k, l), b in other.entries.items():
                acc[i + k, j + l] = acc.get((i + k, j + l), 0) + a * b
        return BettiTable(acc, self.field)

    def to_json(self) -> dict[str, int]:
        return {f"{i},{j}": b for (i, j), b in self.entries.items()}

    @classmethod
    def from_json(cls, data: dict[str, int], field: FieldChoice = QQ) -> BettiTable:
        entries = {}
        for key, b in data.items():
            i, j = (int(t) for t in key.split(","))
            entries[i, j] = int(b)
        return cls(entries, field)

    def format(self) -> str:
        """Macaulay2-style layout: column i, row j - i."""
        pd, reg = self.proj_dim, self.regularity
        cells = [[str(i) for i in range(pd + 1)], [str(t) for t in self.totals()]]
        labels = ["", "total:"]
        for r in range(reg + 1):
            labels.append(f"{r}:")
            cells.append([str(self[i, i + r]) if self[i, i + r] else "." for i in range(pd + 1)])
        width = max(len(c) for row in cells for c in row)
        lw = max(len(s) for s in labels)
        lines = [
            labels[k].rjust(lw) + " " + " ".join(c.rjust(width) for c in row)
            for k, row in enumerate(cells)
        ]
        return "\n".join(line.rstrip() for line in lines)

    __str__ = format


def _check_proper(I: MonomialIdeal) -> None:
    if not I.is_proper_nonzero():
        raise DomainError("Betti tables are computed for proper nonzero ideals")


def _hochster_square_free(gen_masks: tuple[int, ...], n: int, p: int) -> dict[tuple[int, int], int]:
    faces = _faces_avoiding(n, list(gen_masks))
    lattice = {0}
    for g in gen_masks:
        lattice |= {m | g for m in lattice}
    acc: dict[tuple[int, int], int] = {}
    for sigma in lattice:
        size = bin(sigma).count("1")
        sub = [f for f in faces if f & ~sigma == 0]
        for k, h in enumerate(_homology_from_faces(sub, p)):
            if h:
                i = size - (k - 1) - 1
                acc[i, size] = acc.get((i, size), 0) + h
    return acc


@lru_cache(maxsize=4096)
def _block_betti(I: MonomialIdeal, p: int, cap: int) -> BettiTable:
    J, _ = restrict_to_support(I)
    P, _ = polarize(J) if not J.is_square_free() else (J, None)
    P, _ = restrict_to_support(P)
    n = P.ring.num_vars
    if n > cap:
        raise ResourceError(f"polarized ideal has {n} variables, cap is {cap}")
    masks = tuple(_mask(g.support) for g in P.generators)
    return BettiTable(_hochster_square_free(masks, n, p), FieldChoice(p))


def betti_table(I: MonomialIdeal, field: FieldChoice = QQ, cap: int = MAX_POLARIZED_VARS) -> BettiTable:
    """Graded Betti numbers of S/I over ``field``."""
    _check_proper(I)
    table = BettiTable({(0, 0): 1}, field)
    for block in split_blocks(I):
        table = table.tensor(_block_betti(block, field.characteristic, cap))
    return table


def koszul_betti_oracle(I: MonomialIdeal, field: FieldChoice = QQ, cap: int = MAX_ORACLE_VARS) -> BettiTable:
    """Betti numbers of S/I as Koszul homology H_i(x_1..x_n; S/I), multidegree by multidegree.

    In multidegree b the Koszul complex has basis e_F for square-free F ⊆ supp(b)
    with x^(b - F) outside I. Only b dividing the lcm of all generators can carry
    homology.
    """
    _check_proper(I)
    n = I.ring.num_vars
    if n > cap:
        raise ResourceError(f"Koszul oracle limited to {cap} variables, got {n}")
    p = field.characteristic
    gens = [g.exponents for g in I.generators]
    top = I.max_exponents()

    def outside(e):
        return not any(all(a <= b for a, b in zip(g, e)) for g in gens)

    acc: dict[tuple[int, int], int] = {}
    for b in product(*(range(t + 1) for t in top)):
        supp = [i for i, a in enumerate(b) if a]
        deg = sum(b)
        basis: dict[int, list[tuple[int, ...]]] = {}
        for size in range(len(supp) + 1):
            for F in combinations(supp, size):
                e = list(b)
                for v in F:
                    e[v] -= 1
                if outside(e):
                    basis.setdefault(size, []).append(F)
        if not basis:
            continue
        ranks = {}
        for size, fs in basis.items():
            if size == 0:
                continue
            lower = {F: k for k, F in enumerate(basis.get(size - 1, []))}
            rows = []
            for F in fs:
                row = {}
                for pos, v in enumerate(F):
                    G = F[:pos] + F[pos + 1:]
                    if G in lower:
                        row[lower[G]] = -1 if pos % 2 else 1
                rows.append(row)
            ranks[size] = rank(rows, p)
        for size, fs in basis.items():
            h = len(fs) - ranks.get(size, 0) - ranks.get(size + 1, 0)
            if h:
                acc[size, deg] = acc.get((size, deg), 0) + h
    return BettiTable(acc, field)


# -- Hilbert series -----------------------------------------------------------


@dataclass(frozen=True)
class HilbertSeries:
    """h(t) / (1 - t)^pole_order with h(1) != 0; ``numerator[k]`` is the t^k coefficient."""

    numerator: tuple[int, ...]
    pole_order: int

    @property
    def multiplicity(self) -> int:
        return sum(self.numerator)

    @property
    def degree(self) -> int:
        return len(self.numerator) - 1

    def coefficients(self, count: int) -> list[int]:
        """The first ``count`` values of the Hilbert function."""
        series = list(self.numerator) + [0] * count
        series = series[:count]
        for _ in range(self.pole_order):
            for k in range(1, count):
                series[k] += series[k - 1]
        return series

    def __str__(self):
        terms = []
        for k, c in enumerate(self.numerator):
            if not c:
                continue
            power = "" if k == 0 else "t" if k == 1 else f"t^{k}"
            coeff = str(abs(c)) if abs(c) != 1 or not power else ""
            sign = "-" if c < 0 else "+"
            terms.append((sign, coeff + ("*" if coeff and power else "") + power))
        if not terms:
            return f"0 / (1 - t)^{self.pole_order}"
        num = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        num += "".join(f" {sg} {body}" for sg, body in terms[1:])
        return f"({num}) / (1 - t)^{self.pole_order}"


def _poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for k, c in enumerate(a):
        out[k] += c
    for k, c in enumerate(b):
        out[k] += c
    return out


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _trim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return tuple(a)


@lru_cache(maxsize=None)
def _hilbert_numerator(n: int, exps: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """K-polynomial of S/I: the Hilbert series times (1 - t)^n."""
    if not exps:
        return (1,)
    supports = [frozenset(i for i, a in enumerate(e) if a) for e in exps]
    pivot_gen = None
    for k, s in enumerate(supports):
        if any(s & t for m, t in enumerate(supports) if m != k):
            pivot_gen = k
            break
    if pivot_gen is None:
        out = [1]
        for e in exps:
            d = sum(e)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return _trim(out)
    count = [0] * n
    for e in exps:
        for i, a in enumerate(e):
            if a:
                count[i] += 1
    v = max(supports[pivot_gen], key=lambda i: (count[i], -i))
    x = tuple(1 if k == v else 0 for k in range(n))
    with_x = _minimal(exps + (x,))
    quot = _minimal(tuple(a - 1 if k == v and a else a for k, a in enumerate(e)) for e in exps)
    # H(S/I) = H(S/(I + x)) + t * H(S/(I : x))
    return _trim(_poly_add(_hilbert_numerator(n, with_x), [0] + list(_hilbert_numerator(n, quot))))


def hilbert_series(I: MonomialIdeal) -> HilbertSeries:
    if I.is_zero():
        return HilbertSeries((1,), I.ring.num_vars)
    if I.is_unit():
        raise DomainError("S/S is the zero module")
    num = list(_hilbert_numerator(I.ring.num_vars, I._exps))
    pole = I.ring.num_vars
    while pole and sum(num) == 0:
        # divide by (1 - t)
        q, carry = [], 0
        for c in num[:-1]:
            carry += c
            q.append(carry)
        num = q
        pole -= 1
    return HilbertSeries(_trim(num), pole)


# -- summary -------------------------------------------------------------------


@dataclass(frozen=True)
class HomologicalSummary:
    regularity: int
    proj_dim: int
    depth: int
    krull_dim: int
    height: int
    cohen_macaulay: bool
    type: int | None
    gorenstein: bool
    level: bool
    a_invariant: int | None


def summarize(I: MonomialIdeal, table: BettiTable, height: int, hs: HilbertSeries | None = None) -> HomologicalSummary:
    n = I.ring.num_vars
    pd = table.proj_dim
    cm = pd == height
    last = table.column(pd)
    a_inv = None
    if cm:
        hs = hs or hilbert_series(I)
        a_inv = hs.degree - hs.pole_order
    return HomologicalSummary(
        regularity=table.regularity,
        proj_dim=pd,
        depth=n - pd,
        krull_dim=n - height,
        height=height,
        cohen_macaulay=cm,
        type=sum(last.values()) if cm else None,
        # both flags are only meaningful for Cohen-Macaulay quotients
        gorenstein=cm and sum(last.values()) == 1,
        level=cm and len(last) == 1,
        a_invariant=a_inv,
    )


def summary(I: MonomialIdeal, field: FieldChoice = QQ, cap: int = MAX_POLARIZED_VARS) -> HomologicalSummary:
    _check_proper(I)
    table = betti_table(I, field, cap)
    return summarize(I, table, irreducible_decomposition(I).height)
