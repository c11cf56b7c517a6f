"""Theorem-verification suites over curated and seeded random corpora."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from .core import AmbientRing, MonomialIdeal, parse_ideal, polarize
from .corpus import (
    SplitMix64,
    complete_intersection,
    cycle_graph,
    derive_seed,
    edge_ideal,
    paper_graph_11,
    random_artinian_ideal,
    random_graph,
    random_monomial_ideal,
    random_unmixed_ideal,
    star_graph,
    whisker,
)
from .decomposition import irreducible_decomposition
from .homological import (
    MAX_ORACLE_VARS,
    MAX_POLARIZED_VARS,
    FieldChoice,
    betti_table,
    koszul_betti_oracle,
    summarize,
)
from .vnumber import (
    alpha_q,
    brute_force_v,
    local_v_number,
    next_prime,
    v_number,
    v_of_frobenius,
    v_via_polarization,
)


@dataclass(frozen=True)
class Caps:
    max_vars: int = 6
    max_gens: int = 5
    max_deg: int = 3
    max_polarized_vars: int = MAX_POLARIZED_VARS
    oracle_vars: int = MAX_ORACLE_VARS


@dataclass
class Case:
    label: str
    ideal: str  # ideal file text, enough to replay
    params: dict = field(default_factory=dict)

    def load(self) -> MonomialIdeal:
        return parse_ideal(self.ideal)


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases_run: int = 0
    cases_passed: int = 0
    curated_run: int = 0
    first_failure: dict | None = None
    wall_time: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.cases_passed == self.cases_run

    def to_json(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d


def _case(label: str, I: MonomialIdeal, **params) -> Case:
    return Case(label, I.to_text(), params)


# -- curated examples ------------------------------------------------------------------


def curated_ideals() -> list[tuple[str, MonomialIdeal]]:
    xy = AmbientRing(2, ("x", "y"))
    out = [
        ("c4_edge_ideal", edge_ideal(cycle_graph(4))),
        ("paper_graph_11", edge_ideal(paper_graph_11())),
        ("prime_x1_x2", AmbientRing(3).ideal("x1", "x2")),
        ("mixed_x2_xy", xy.ideal("x^2", "x*y")),
        ("ci_x2_y3", xy.ideal("x^2", "y^3")),
    ]
    for n in (3, 4, 5):
        out.append((f"whisker_star_{n}", edge_ideal(whisker(star_graph(n)))))
    return out


def _curated(names: set[str] | None = None) -> list[tuple[str, MonomialIdeal]]:
    return [(k, I) for k, I in curated_ideals() if names is None or k in names]


# -- checks ------------------------------------------------------------------------------


def _fail(expected, got) -> tuple[bool, dict, dict]:
    return False, expected, got


def _ok() -> tuple[bool, dict, dict]:
    return True, {}, {}


def check_frobenius_formula(case: Case, caps: Caps):
    I = case.load()
    d = irreducible_decomposition(I)
    v = v_number(I).v
    for q in case.params["qs"]:
        vq = v_of_frobenius(I, q)
        bound = q * v + (q - 1) * d.height
        if vq < bound or (d.unmixed and vq != bound):
            return _fail(
                {"q": q, "lower_bound": bound, "equality": d.unmixed},
                {"v_frobenius": vq},
            )
    return _ok()


def check_upper_bound(case: Case, caps: Caps):
    I = case.load()
    d = irreducible_decomposition(I)
    v = v_number(I).v
    for q in case.params["qs"]:
        vq = v_of_frobenius(I, q)
        bound = q * v + (q - 1) * d.bight
        if vq > bound:
            return _fail({"q": q, "upper_bound": bound}, {"v_frobenius": vq})
    return _ok()


def check_alpha_ceiling(case: Case, caps: Caps):
    I = case.load()
    d = irreducible_decomposition(I)
    if not (d.unmixed and I.is_square_free()):
        return _fail({"precondition": "unmixed square-free"}, {"unmixed": d.unmixed})
    q = case.params.get("q") or next_prime(I.ring.num_vars)
    a = alpha_q(I, q).alpha
    lhs = -(-a // q)
    rhs = v_number(I).v + d.height
    if lhs != rhs:
        return _fail({"q": q, "v_plus_height": rhs}, {"ceil_alpha_over_q": lhs, "alpha": a})
    return _ok()


def check_monotone(case: Case, caps: Caps):
    I = case.load()
    v = v_number(I).v
    prev_v = prev_a = None
    for q in case.params["qs"]:
        vq = v_of_frobenius(I, q)
        a = alpha_q(I, q).alpha
        rv, ra = Fraction(vq, q), Fraction(a, q)
        if vq < q * v:
            return _fail({"q": q, "v_frobenius_at_least": q * v}, {"v_frobenius": vq})
        if a > vq:
            return _fail({"q": q, "alpha_at_most": vq}, {"alpha": a})
        if prev_v is not None and (rv < prev_v or ra < prev_a):
            return _fail(
                {"q": q, "v_over_q_at_least": str(prev_v), "alpha_over_q_at_least": str(prev_a)},
                {"v_over_q": str(rv), "alpha_over_q": str(ra)},
            )
        prev_v, prev_a = rv, ra
    return _ok()


def check_alpha_sandwich(case: Case, caps: Caps):
    I = case.load()
    rep = v_number(I)
    top_local = max(d for d, _ in rep.local.values())
    for q in case.params["qs"]:
        vq = v_of_frobenius(I, q)
        a = alpha_q(I, q).alpha
        if a > vq:
            return _fail({"q": q, "alpha_at_most": vq}, {"alpha": a})
        if I.is_square_free() and a < vq - top_local:
            return _fail({"q": q, "alpha_at_least": vq - top_local}, {"alpha": a})
    return _ok()


def _summary(I: MonomialIdeal, caps: Caps, p: int = 0):
    table = betti_table(I, FieldChoice(p), caps.max_polarized_vars)
    return summarize(I, table, irreducible_decomposition(I).height)


def check_gorenstein_eq(case: Case, caps: Caps):
    I = case.load()
    s = _summary(I, caps)
    v = v_number(I).v
    if case.params.get("complete_intersection"):
        expect = sum(g.degree - 1 for g in I.generators)
        if not s.gorenstein or v != expect or s.regularity != expect:
            return _fail(
                {"gorenstein": True, "v": expect, "reg": expect},
                {"gorenstein": s.gorenstein, "v": v, "reg": s.regularity},
            )
    if s.gorenstein and v != s.regularity:
        return _fail({"v_equals_reg": s.regularity}, {"v": v})
    return _ok()


def check_level_ineq(case: Case, caps: Caps):
    I = case.load()
    s = _summary(I, caps, case.params.get("field", 0))
    if s.level:
        v = v_number(I).v
        if v < s.regularity:
            return _fail({"v_at_least": s.regularity}, {"v": v, "level": True})
    return _ok()


def check_artinian_level_iff(case: Case, caps: Caps):
    I = case.load()
    if not I.is_artinian():
        return _fail({"precondition": "artinian"}, {"artinian": False})
    s = _summary(I, caps)
    v = v_number(I).v
    if v > s.regularity or (v == s.regularity) != s.level:
        return _fail(
            {"v_at_most_reg": True, "equality_iff_level": True},
            {"v": v, "reg": s.regularity, "level": s.level},
        )
    return _ok()


def check_polarization_remark(case: Case, caps: Caps):
    I = case.load()
    want = v_number(I).v
    got = v_via_polarization(I)
    if got != want:
        return _fail({"v": want}, {"v_via_polarization": got})
    return _ok()


def check_oracles(case: Case, caps: Caps):
    I = case.load()
    ass = irreducible_decomposition(I).ass
    for p in ass:
        fast, witness = local_v_number(I, p, ass)
        slow = brute_force_v(I, p)
        if fast != slow:
            return _fail({"prime": str(p), "brute_force_v": slow}, {"local_v": fast})
    P, _ = polarize(I)
    if P.ring.num_vars <= caps.oracle_vars:
        for p in (0, 2):
            fast = betti_table(I, FieldChoice(p), caps.max_polarized_vars)
            slow = koszul_betti_oracle(I, FieldChoice(p), caps.oracle_vars)
            if fast.entries != slow.entries:
                return _fail({"koszul": slow.to_json(), "field": p}, {"hochster": fast.to_json()})
    if P.ring.num_vars <= caps.max_polarized_vars:
        a = betti_table(I)
        b = betti_table(P)
        if a.entries != b.entries:
            return _fail({"betti": a.to_json()}, {"betti_of_polarization": b.to_json()})
    return _ok()


# -- case generators ---------------------------------------------------------------------

QS = (2, 3, 4, 5)


def _rand_any(seed: int, caps: Caps, square_free: bool | None = None) -> MonomialIdeal:
    rng = SplitMix64(seed)
    n = rng.randint(2, caps.max_vars)
    sf = rng.below(2) == 0 if square_free is None else square_free
    while True:
        I = random_monomial_ideal(rng.next_u64(), n, caps.max_gens, caps.max_deg, sf, min(2, caps.max_gens))
        # primes are trivial cases; keep only a few
        if not I.is_prime() or rng.below(8) == 0:
            return I


def _rand_unmixed(seed: int, caps: Caps, square_free: bool = False) -> MonomialIdeal:
    rng = SplitMix64(seed)
    n = rng.randint(min(3, caps.max_vars), caps.max_vars)
    return random_unmixed_ideal(rng.next_u64(), n, caps.max_gens, caps.max_deg, square_free)


def gen_frobenius(seed, caps):
    rng = SplitMix64(seed)
    I = _rand_unmixed(rng.next_u64(), caps) if rng.below(3) else _rand_any(rng.next_u64(), caps)
    return _case("random", I, qs=list(QS))


def gen_alpha_ceiling(seed, caps):
    I = _rand_unmixed(seed, caps, square_free=True)
    return _case("random", I, q=next_prime(I.ring.num_vars))


def gen_monotone(seed, caps):
    return _case("random", _rand_any(seed, caps), qs=[2, 4, 8])


def gen_sandwich(seed, caps):
    return _case("random", _rand_any(seed, caps), qs=list(QS))


def gen_gorenstein(seed, caps):
    rng = SplitMix64(seed)
    if rng.below(2):
        k = rng.randint(1, min(caps.max_vars, 5))
        powers = [1] * k
        budget = rng.randint(k, 10) - k
        for _ in range(budget):
            powers[rng.below(k)] += 1
        return _case("complete_intersection", complete_intersection(powers), complete_intersection=True)
    return _case("random", _rand_any(rng.next_u64(), caps))


def gen_level(seed, caps):
    rng = SplitMix64(seed)
    kind = rng.below(3)
    if kind == 0:
        G = random_graph(rng.next_u64(), rng.randint(3, max(caps.max_vars + 2, 3)))
        return _case("random_graph", edge_ideal(G))
    if kind == 1:
        return _case("random_unmixed", _rand_unmixed(rng.next_u64(), caps))
    return _case("random", _rand_any(rng.next_u64(), caps))


def gen_artinian(seed, caps):
    rng = SplitMix64(seed)
    n = rng.randint(1, min(4, caps.max_vars))
    return _case("random_artinian", random_artinian_ideal(rng.next_u64(), n, 4, 3))


def gen_polarization(seed, caps):
    rng = SplitMix64(seed)
    return _case("random_unmixed", _rand_unmixed(rng.next_u64(), caps, square_free=rng.below(2) == 0))


def gen_oracles(seed, caps):
    return _case("random", _rand_any(seed, caps))


@dataclass(frozen=True)
class Suite:
    check: Callable
    generate: Callable
    curated: Callable[[], list[Case]]
    description: str


def _cur(names, **params):
    return lambda: [_case(k, I, **params) for k, I in _curated(set(names))]


def _cur_ci():
    return [
        _case("ci_x2_y3", complete_intersection([2, 3]), complete_intersection=True),
        _case("ci_x3_y2_z2", complete_intersection([3, 2, 2]), complete_intersection=True),
        _case("prime_x1_x2", complete_intersection([1, 1]), complete_intersection=True),
    ]


def _cur_artinian():
    xy = AmbientRing(2, ("x", "y"))
    return [
        _case("ci_x2_y3", xy.ideal("x^2", "y^3")),
        _case("max_ideal_squared", xy.ideal("x^2", "x*y", "y^2")),
        _case("x2_xy_y3", xy.ideal("x^2", "x*y", "y^3")),
    ]


SUITES: dict[str, Suite] = {
    "frobenius_formula": Suite(
        check_frobenius_formula, gen_frobenius,
        _cur(["c4_edge_ideal", "prime_x1_x2", "mixed_x2_xy", "ci_x2_y3", "whisker_star_3"], qs=list(QS)),
        "v(I^[q]) >= q v(I) + (q-1) height(I), with equality for unmixed I",
    ),
    "upper_bound": Suite(
        check_upper_bound, gen_frobenius,
        _cur(["c4_edge_ideal", "prime_x1_x2", "mixed_x2_xy", "ci_x2_y3", "whisker_star_3"], qs=list(QS)),
        "v(I^[q]) <= q v(I) + (q-1) bight(I)",
    ),
    "alpha_ceiling": Suite(
        check_alpha_ceiling, gen_alpha_ceiling,
        _cur(["c4_edge_ideal", "prime_x1_x2"]),
        "ceil(alpha_q(I)/q) = v(I) + height(I) for unmixed square-free I and prime q > n",
    ),
    "monotone": Suite(
        check_monotone, gen_monotone,
        _cur(["c4_edge_ideal", "prime_x1_x2", "mixed_x2_xy", "ci_x2_y3"], qs=[2, 4, 8]),
        "v(I^[q])/q and alpha_q(I)/q non-decreasing along q = 2, 4, 8; alpha_q <= v(I^[q])",
    ),
    "alpha_sandwich": Suite(
        check_alpha_sandwich, gen_sandwich,
        _cur(["c4_edge_ideal", "prime_x1_x2", "mixed_x2_xy", "whisker_star_3"], qs=list(QS)),
        "alpha_q <= v(I^[q]); for square-free I also v(I^[q]) - max v_p(I) <= alpha_q",
    ),
    "gorenstein_eq": Suite(
        check_gorenstein_eq, gen_gorenstein, _cur_ci,
        "Gorenstein S/I has v(I) = reg S/I",
    ),
    "level_ineq": Suite(
        check_level_ineq, gen_level,
        _cur(["paper_graph_11", "c4_edge_ideal", "whisker_star_3", "whisker_star_4", "whisker_star_5"]),
        "level S/I has v(I) >= reg S/I",
    ),
    "artinian_level_iff": Suite(
        check_artinian_level_iff, gen_artinian, _cur_artinian,
        "artinian S/I has v(I) <= reg S/I, with equality iff S/I is level",
    ),
    "polarization_remark": Suite(
        check_polarization_remark, gen_polarization,
        _cur(["c4_edge_ideal", "prime_x1_x2", "ci_x2_y3", "whisker_star_3"]),
        "v(I) = ceil(alpha_q(I^P)/q) - height(I) for unmixed I and prime q > dim S^P",
    ),
    "oracles": Suite(
        check_oracles, gen_oracles,
        _cur(["c4_edge_ideal", "prime_x1_x2", "mixed_x2_xy", "ci_x2_y3"]),
        "fast paths agree with brute-force v and the Koszul Betti oracle; polarization keeps Betti tables",
    ),
}


def _run_case(args):
    name, case, caps = args
    try:
        passed, expected, got = SUITES[name].check(case, caps)
    except Exception as exc:  # a crash is a failed case, reported with its inputs
        passed, expected, got = False, {}, {"error": f"{type(exc).__name__}: {exc}"}
    return passed, expected, got


def run_suite(name: str, seed: int = 0, count: int = 20, caps: Caps = Caps(), jobs: int = 1) -> SuiteReport:
    """Run curated cases first, then ``count`` seeded random cases."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    suite = SUITES[name]
    start = time.perf_counter()
    report = SuiteReport(suite=name, seed=seed)
    curated = suite.curated()
    randoms = [suite.generate(derive_seed(seed, k), caps) for k in range(count)]
    for k, c in enumerate(randoms):
        c.params = dict(c.params, index=k)
    cases = curated + randoms
    work = [(name, c, caps) for c in cases]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_case, work))
    else:
        results = [_run_case(w) for w in work]
    for k, (case, (passed, expected, got)) in enumerate(zip(cases, results)):
        report.cases_run += 1
        if k < len(curated):
            report.curated_run += 1
        if passed:
            report.cases_passed += 1
        elif report.first_failure is None:
            report.first_failure = {
                "case": {"label": case.label, "ideal": case.ideal, "params": case.params},
                "expected": expected,
                "got": got,
            }
    report.wall_time = round(time.perf_counter() - start, 3)
    return report


# -- scan for one-degree last columns with v < reg ------------------------------


@dataclass
class ScanReport:
    seed: int
    cases_run: int = 0
    candidates: int = 0
    violators: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    def to_json(self) -> dict:
        return asdict(self)


def scan_q52(seed: int = 0, count: int = 100, caps: Caps = Caps()) -> ScanReport:
    """Look for unmixed I whose last Betti column sits in one degree yet v(I) < reg S/I.

    Cohen-Macaulayness is not assumed. A violator is a research finding and
    is recorded verbatim, not treated as an error.
    """
    start = time.perf_counter()
    rep = ScanReport(seed=seed)
    for k in range(count):
        rng = SplitMix64(derive_seed(seed, k))
        if rng.below(2):
            n = rng.randint(3, max(caps.max_vars, 3))
            I = random_unmixed_ideal(rng.next_u64(), n, 4, caps.max_deg, square_free=rng.below(2) == 0)
        else:
            G = random_graph(rng.next_u64(), rng.randint(3, max(caps.max_vars + 2, 3)))
            I = edge_ideal(G)
            if not irreducible_decomposition(I).unmixed:
                rep.cases_run += 1
                continue
        rep.cases_run += 1
        table = betti_table(I, FieldChoice(0), caps.max_polarized_vars)
        if len(table.column(table.proj_dim)) != 1:
            continue
        rep.candidates += 1
        v = v_number(I).v
        if v < table.regularity:
            rep.violators.append({"ideal": I.to_text(), "v": v, "reg": table.regularity, "betti": table.to_json()})
    rep.wall_time = round(time.perf_counter() - start, 3)
    return rep
