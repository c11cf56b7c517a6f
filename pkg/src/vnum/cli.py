"""Command-line front end.

Exit codes: 0 success, 1 suite failure, 2 usage or parse error, 3 resource cap,
4 scan found a candidate counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import MonomialIdeal, format_generators, frobenius_power, parse_ideal
from .corpus import edge_ideal, parse_graph
from .decomposition import irreducible_decomposition
from .errors import DomainError, ParseError, ResourceError
from .homological import MAX_ORACLE_VARS, MAX_POLARIZED_VARS, FieldChoice, betti_table, hilbert_series, summarize
from .verify import SUITES, Caps, run_suite, scan_q52
from .vnumber import alpha_q, v_number, v_of_frobenius

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE, EXIT_FINDING = 0, 1, 2, 3, 4


def load_ideal(path: str) -> MonomialIdeal:
    """Read an ideal file, or a graph file (returned as its edge ideal)."""
    text = Path(path).read_text()
    for line in text.splitlines():
        s = line.strip()
        if s and not s.startswith("#"):
            if s.startswith("graph:"):
                return edge_ideal(parse_graph(text))
            break
    return parse_ideal(text)


def _gens(I: MonomialIdeal) -> list[str]:
    return [g.to_string(I.ring) for g in I.generators]


def _prime_names(I: MonomialIdeal, p) -> list[str]:
    return [I.ring.var_names[i] for i in p.support]


def invariants_report(I: MonomialIdeal, field: FieldChoice, cap: int = MAX_POLARIZED_VARS) -> dict:
    if not I.is_proper_nonzero():
        raise DomainError("invariants need a proper nonzero ideal")
    dec = irreducible_decomposition(I)
    rep = v_number(I)
    table = betti_table(I, field, cap)
    hs = hilbert_series(I)
    s = summarize(I, table, dec.height, hs)
    return {
        "vars": list(I.ring.var_names),
        "field": str(field),
        "ideal": _gens(I),
        "v": rep.v,
        "is_prime": rep.is_prime,
        "local_v": [
            {"prime": _prime_names(I, p), "v": d, "witness": w.to_string(I.ring)}
            for p, (d, w) in sorted(rep.local.items())
        ],
        "ass": [_prime_names(I, p) for p in dec.ass],
        "components": [str(c) for c in dec.components],
        "height": dec.height,
        "bight": dec.bight,
        "unmixed": dec.unmixed,
        "krull_dim": s.krull_dim,
        "betti": table.to_json(),
        "regularity": s.regularity,
        "proj_dim": s.proj_dim,
        "depth": s.depth,
        "cohen_macaulay": s.cohen_macaulay,
        "type": s.type,
        "gorenstein": s.gorenstein,
        "level": s.level,
        "a_invariant": s.a_invariant,
        "hilbert_series": {"numerator": list(hs.numerator), "pole_order": hs.pole_order},
    }


def frobenius_report(I: MonomialIdeal, q: int) -> dict:
    if q < 2:
        raise DomainError("--q must be at least 2")
    dec = irreducible_decomposition(I)
    v = v_number(I).v
    Iq = frobenius_power(I, q)
    vq = v_of_frobenius(I, q)
    a = alpha_q(I, q)
    lower = q * v + (q - 1) * dec.height
    upper = q * v + (q - 1) * dec.bight
    return {
        "vars": list(I.ring.var_names),
        "ideal": _gens(I),
        "q": q,
        "frobenius_generators": len(Iq),
        "frobenius_ideal": _gens(Iq),
        "v": v,
        "height": dec.height,
        "bight": dec.bight,
        "unmixed": dec.unmixed,
        "v_frobenius": vq,
        "alpha_q": a.alpha,
        "alpha_witness": a.witness.to_string(I.ring),
        "lower_bound": lower,
        "upper_bound": upper,
        "lower_bound_holds": vq >= lower,
        "upper_bound_holds": vq <= upper,
        "equality": vq == lower,
        "alpha_at_most_v_frobenius": a.alpha <= vq,
    }


def _print_invariants(r: dict) -> None:
    print(f"ideal: ({', '.join(r['ideal'])}) over {r['field']}")
    print(f"v = {r['v']}")
    for loc in r["local_v"]:
        print(f"  v_({', '.join(loc['prime'])}) = {loc['v']}  witness {loc['witness']}")
    print(f"height = {r['height']}  bight = {r['bight']}  unmixed = {r['unmixed']}  dim = {r['krull_dim']}")
    print(f"reg = {r['regularity']}  pd = {r['proj_dim']}  depth = {r['depth']}")
    print(f"cohen_macaulay = {r['cohen_macaulay']}  gorenstein = {r['gorenstein']}  level = {r['level']}")
    h = r["hilbert_series"]
    print(f"hilbert numerator = {h['numerator']}  pole order = {h['pole_order']}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vnum", description="v-numbers and homological invariants of monomial ideals")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="all invariants of an ideal or graph file")
    p.add_argument("file")
    p.add_argument("--field", default="Q", help="Q or a prime p")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--max-polarized-vars", type=int, default=MAX_POLARIZED_VARS)

    p = sub.add_parser("frobenius", help="Frobenius-power invariants")
    p.add_argument("file")
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("betti", help="graded Betti table")
    p.add_argument("file")
    p.add_argument("--field", default="Q")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-polarized-vars", type=int, default=MAX_POLARIZED_VARS)

    def caps_args(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--count", type=int, default=20)
        p.add_argument("--max-vars", type=int, default=6)
        p.add_argument("--max-gens", type=int, default=5)
        p.add_argument("--max-deg", type=int, default=3)
        p.add_argument("--max-polarized-vars", type=int, default=MAX_POLARIZED_VARS)
        p.add_argument("--oracle-vars", type=int, default=MAX_ORACLE_VARS)

    p = sub.add_parser("verify", help="run a theorem suite")
    p.add_argument("--suite", required=True, help="one of: " + ", ".join(sorted(SUITES)) + ", or 'all'")
    p.add_argument("--jobs", type=int, default=1)
    caps_args(p)

    p = sub.add_parser("scan-q52", help="search for unmixed ideals with one-degree last Betti column and v < reg")
    caps_args(p)
    return parser


def _caps(args) -> Caps:
    return Caps(args.max_vars, args.max_gens, args.max_deg, args.max_polarized_vars, args.oracle_vars)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _dispatch(args)
    except ResourceError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ParseError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args) -> int:
    if args.command == "invariants":
        r = invariants_report(load_ideal(args.file), FieldChoice.parse(args.field), args.max_polarized_vars)
        if args.json:
            print(json.dumps(r, indent=2))
        else:
            _print_invariants(r)
        return EXIT_OK
    if args.command == "frobenius":
        print(json.dumps(frobenius_report(load_ideal(args.file), args.q), indent=2))
        return EXIT_OK
    if args.command == "betti":
        table = betti_table(load_ideal(args.file), FieldChoice.parse(args.field), args.max_polarized_vars)
        print(json.dumps(table.to_json(), indent=2) if args.json else table.format())
        return EXIT_OK
    if args.command == "verify":
        names = sorted(SUITES) if args.suite == "all" else [args.suite]
        if any(n not in SUITES for n in names):
            print(f"error: unknown suite {args.suite!r}; known: {', '.join(sorted(SUITES))}", file=sys.stderr)
            return EXIT_USAGE
        reports = []
        for name in names:
            print(f"# suite {name} seed {args.seed} count {args.count}", file=sys.stderr)
            reports.append(run_suite(name, args.seed, args.count, _caps(args), args.jobs).to_json())
        print(json.dumps(reports[0] if len(reports) == 1 else reports, indent=2))
        return EXIT_OK if all(r["ok"] for r in reports) else EXIT_FAIL
    if args.command == "scan-q52":
        print(f"# scan seed {args.seed} count {args.count}", file=sys.stderr)
        rep = scan_q52(args.seed, args.count, _caps(args))
        print(json.dumps(rep.to_json(), indent=2))
        return EXIT_FINDING if rep.violators else EXIT_OK
    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
