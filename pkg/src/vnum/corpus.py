"""Deterministic families of test ideals: graph edge ideals and seeded random ideals.

Randomness comes from :class:`SplitMix64`, a small 64-bit mixing generator, so
that a seed fixes a corpus exactly within this package.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import AmbientRing, Monomial, MonomialIdeal, intersect_all, minimalize
from .decomposition import irreducible_decomposition
from .errors import DomainError, ParseError

MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: state += golden gamma, then two xor-shift-multiply rounds."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        return (self.next_u64() >> 11) / float(1 << 53)

    def sample(self, population: list, k: int) -> list:
        pool = list(population)
        out = []
        for _ in range(k):
            out.append(pool.pop(self.below(len(pool))))
        return out


def derive_seed(seed: int, *labels: int) -> int:
    """Independent sub-seed for case ``labels`` of a run seeded with ``seed``."""
    rng = SplitMix64(seed)
    for lab in labels:
        rng = SplitMix64(rng.next_u64() ^ (lab & MASK64))
    return rng.next_u64()


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..n-1; ``edges`` holds sorted pairs."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        clean = set()
        for u, v in self.edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise DomainError(f"edge ({u}, {v}) leaves the vertex set")
            e = (min(u, v), max(u, v))
            if e in clean:
                raise DomainError(f"duplicate edge {e}")
            clean.add(e)
        object.__setattr__(self, "edges", tuple(sorted(clean)))

    def to_text(self) -> str:
        lines = [f"graph: {self.num_vertices}"]
        lines.extend(f"{u + 1} {v + 1}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> Graph:
    """Vertex 0 joined to vertices 1..n-1."""
    return Graph(n, tuple((0, i) for i in range(1, n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def whisker(G: Graph) -> Graph:
    """Attach a pendant vertex n + i to every vertex i."""
    n = G.num_vertices
    return Graph(2 * n, G.edges + tuple((i, n + i) for i in range(n)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for G in graphs:
        edges.extend((u + offset, v + offset) for u, v in G.edges)
        offset += G.num_vertices
    return Graph(offset, tuple(edges))


_PAPER_EDGES_11 = """
1 3, 1 4, 1 7, 1 10, 1 11, 2 4, 2 5, 2 8, 2 10, 2 11, 3 5, 3 6, 3 8,
3 11, 4 6, 4 9, 4 11, 5 7, 5 9, 5 11, 6 8, 6 9, 7 9, 7 10, 8 10
"""


def paper_graph_11() -> Graph:
    """An 11-vertex, 25-edge graph whose edge ideal is level over Q with v = 3, reg = 2."""
    pairs = [tuple(int(t) - 1 for t in item.split()) for item in _PAPER_EDGES_11.replace("\n", " ").split(",")]
    return Graph(11, tuple(pairs))


def edge_ideal(G: Graph, ring: AmbientRing | None = None) -> MonomialIdeal:
    if not G.edges:
        raise DomainError("the edge ideal of an edgeless graph is zero")
    ring = ring or AmbientRing(G.num_vertices)
    gens = []
    for u, v in G.edges:
        e = [0] * G.num_vertices
        e[u] = e[v] = 1
        gens.append(Monomial(e))
    return minimalize(gens, ring)


def parse_graph(text: str) -> Graph:
    """Parse ``graph: n`` followed by one 1-indexed ``i j`` edge per line."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        if n is None:
            if not s.startswith("graph:"):
                raise ParseError("expected 'graph:' header", lineno)
            try:
                n = int(s[len("graph:"):])
            except ValueError:
                raise ParseError("vertex count must be an integer", lineno) from None
            if n < 1:
                raise ParseError("vertex count must be positive", lineno)
            continue
        parts = s.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'i j', got {s!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {s!r}", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex out of range 1..{n}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        edges.append((u - 1, v - 1))
    if n is None:
        raise ParseError("missing 'graph:' header")
    try:
        return Graph(n, tuple(edges))
    except DomainError as exc:
        raise ParseError(str(exc)) from None


# -- random ideals ---------------------------------------------------------------


def random_monomial(rng: SplitMix64, n: int, degree: int, square_free: bool) -> Monomial:
    e = [0] * n
    if square_free:
        for i in rng.sample(range(n), min(degree, n)):
            e[i] = 1
    else:
        for _ in range(degree):
            e[rng.below(n)] += 1
    return Monomial(e)


def random_monomial_ideal(
    seed: int, n: int, max_gens: int, max_deg: int, square_free: bool = False, min_gens: int = 1
) -> MonomialIdeal:
    """Seeded random ideal: min_gens..max_gens generators of degree 1..max_deg, minimalized."""
    if n < 1 or max_gens < 1 or max_deg < 1 or not 1 <= min_gens <= max_gens:
        raise DomainError("need n, max_deg >= 1 and 1 <= min_gens <= max_gens")
    rng = SplitMix64(seed)
    count = rng.randint(min_gens, max_gens)
    gens = [random_monomial(rng, n, rng.randint(1, max_deg), square_free) for _ in range(count)]
    return minimalize(gens, AmbientRing(n))


def random_graph(seed: int, n: int, edge_prob: float = 0.5) -> Graph:
    """Erdos-Renyi graph, resampled until it has an edge."""
    if n < 2:
        raise DomainError("a graph with an edge needs two vertices")
    rng = SplitMix64(seed)
    while True:
        edges = tuple((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < edge_prob)
        if edges:
            return Graph(n, edges)


def random_artinian_ideal(seed: int, n: int, max_power: int = 3, extra_gens: int = 3) -> MonomialIdeal:
    """Pure powers x_i^{a_i} plus a few mixed generators lying strictly below them.

    Each extra generator has exponent < a_i in every variable and at least two
    variables, so no pure power divides it.
    """
    if n < 1 or max_power < 1:
        raise DomainError("need n >= 1 and max_power >= 1")
    rng = SplitMix64(seed)
    powers = [rng.randint(1, max_power) for _ in range(n)]
    gens = []
    for i, a in enumerate(powers):
        e = [0] * n
        e[i] = a
        gens.append(Monomial(e))
    room = [i for i, a in enumerate(powers) if a > 1]
    if len(room) >= 2:
        for _ in range(rng.randint(0, extra_gens)):
            e = [0] * n
            for i in rng.sample(room, rng.randint(2, len(room))):
                e[i] = rng.randint(1, powers[i] - 1)
            gens.append(Monomial(e))
    return minimalize(gens, AmbientRing(n))


def complete_intersection(powers: list[int]) -> MonomialIdeal:
    """(x_1^{a_1}, ..., x_k^{a_k}) in k variables."""
    if not powers or any(a < 1 for a in powers):
        raise DomainError("powers must be a nonempty list of positive integers")
    k = len(powers)
    gens = []
    for i, a in enumerate(powers):
        e = [0] * k
        e[i] = a
        gens.append(Monomial(e))
    return minimalize(gens, AmbientRing(k))


def random_unmixed_ideal(
    seed: int, n: int, max_gens: int, max_deg: int, square_free: bool = False, tries: int = 500
) -> MonomialIdeal:
    """Seeded unmixed, non-prime ideal whose generators have degree <= max_deg.

    Each attempt either draws a random ideal or intersects random irreducible
    components of one common height; the first unmixed result is returned.
    """
    if n < 2:
        raise DomainError("a non-prime unmixed ideal needs at least two variables")
    rng = SplitMix64(seed)
    ring = AmbientRing(n)
    for _ in range(tries):
        if rng.below(2):
            I = random_monomial_ideal(rng.next_u64(), n, max_gens, max_deg, square_free, min(2, max_gens))
        else:
            h = rng.randint(1, n - 1)
            comps = []
            for _ in range(rng.randint(2, 3)):
                gens = []
                for v in rng.sample(range(n), h):
                    e = [0] * n
                    e[v] = 1 if square_free else rng.randint(1, max(1, max_deg - 1))
                    gens.append(Monomial(e))
                comps.append(MonomialIdeal(ring, gens))
            I = intersect_all(comps)
        if I.is_prime() or max(g.degree for g in I.generators) > max_deg:
            continue
        if len(I) == 1 and rng.below(4):
            continue  # principal ideals are unmixed but uninformative
        if irreducible_decomposition(I).unmixed:
            return I
    raise DomainError("no unmixed ideal found with these parameters")
