"""Command-line front end: single-graph analysis, duals, Betti tables,
quotient-order certificates, exhaustive sweeps, and the Gorenstein census.

Exit codes: 0 success (and no mismatches), 1 usage error, 2 invalid or
malformed input, 3 mismatches found.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classify as cf
from . import ideals as idl
from .betti import hochster_betti, koszul_betti, ring_properties
from .graphs import (
    GraphError,
    emit_graph,
    parse_graph,
    validate_standing_assumptions,
    vertices_of,
)
from .homology import GF2, GF3, QQ, FieldSpec

ANALYSIS_SCHEMA = "compedge/analysis/1"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_MISMATCH = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _field_from_flag(value: str) -> FieldSpec:
    return {"2": GF2, "3": GF3, "q": QQ}[value]


def _add_common(sub, with_graph=True):
    if with_graph:
        sub.add_argument("graph", help="graph text, or - to read stdin")
        sub.add_argument(
            "--format",
            choices=["graph6", "edge-list"],
            default="graph6",
            help="input format (default graph6)",
        )
    sub.add_argument("--field", choices=["2", "3", "q"], default="2")
    sub.add_argument(
        "--mode",
        choices=[cf.MODE_CORRECTED, cf.MODE_PAPER_LITERAL],
        default=cf.MODE_CORRECTED,
    )
    sub.add_argument("--cross-check", action="store_true")
    fmt = sub.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="as_json", action="store_true")
    fmt.add_argument("--text", dest="as_json", action="store_false")
    sub.set_defaults(as_json=False)
    sub.add_argument("--out", default=None, help="write output to a file")


def build_parser() -> _Parser:
    parser = _Parser(prog="compedge", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)
    for name in ("analyze", "betti", "dual", "order"):
        _add_common(subs.add_parser(name))
    sweep_p = subs.add_parser("sweep")
    sweep_p.add_argument("--n", default="4..6", help="vertex range, e.g. 4..6")
    sweep_p.add_argument("--workers", type=int, default=1)
    _add_common(sweep_p, with_graph=False)
    census_p = subs.add_parser("census")
    census_p.add_argument("--n", type=int, required=True)
    _add_common(census_p, with_graph=False)
    return parser


def _load_graph(args):
    text = sys.stdin.read() if args.graph == "-" else args.graph
    return parse_graph(text, args.format)


def _mono_strings(n, masks) -> list[str]:
    return [str(idl.SqfMonomial(n, m)) for m in masks]


def build_analysis_document(G, field, mode, cross_check) -> dict:
    I = idl.complementary_edge_ideal(G)
    primes = idl.minimal_primes(I)
    table = hochster_betti(I, field)
    props = ring_properties(I, field, table=table, primes=primes)
    cls = cf.classify_graph(G, mode)
    consistency = cf.verify_graph(G, field, mode)
    tri = set(g for g in primes if g.bit_count() == 3)
    doc = {
        "schema": ANALYSIS_SCHEMA,
        "input": {
            "graph6": emit_graph(G),
            "n": G.n,
            "edges": [list(e) for e in G.edges()],
        },
        "ideal": {"generators": I.generator_strings()},
        "minimal_primes": _mono_strings(G.n, primes),
        "alexander_dual": {
            "generators": _mono_strings(G.n, primes),
            "from_nonedges": _mono_strings(
                G.n, [p for p in primes if p.bit_count() == 2]
            ),
            "from_triangles": _mono_strings(G.n, sorted(tri)),
        },
        "betti": table.to_json_dict(),
        "properties": props.to_json_dict(),
        "classification": cls.to_json_dict(),
        "consistency": consistency.to_json_dict(),
    }
    if cross_check:
        oracle = koszul_betti(I, field)
        doc["betti_oracle"] = oracle.to_json_dict()
        doc["oracle_matches"] = oracle.entries == table.entries
    return doc


def _render_analysis_text(doc, table_text) -> str:
    lines = [
        f"graph6: {doc['input']['graph6']}   n={doc['input']['n']}   "
        f"edges: {doc['input']['edges']}",
        "generators: " + ", ".join(doc["ideal"]["generators"]),
        "minimal primes: " + ", ".join(doc["minimal_primes"]),
        "dual (nonedges): " + ", ".join(doc["alexander_dual"]["from_nonedges"]),
        "dual (triangles): " + ", ".join(doc["alexander_dual"]["from_triangles"]),
        "",
        f"betti table over {doc['betti']['field']}:",
        table_text,
        "",
        "properties: "
        + ", ".join(f"{k}={v}" for k, v in doc["properties"].items()),
        "classification: "
        + ", ".join(f"{k}={v}" for k, v in doc["classification"].items()),
    ]
    bad = [
        name for name, c in doc["consistency"]["claims"].items() if not c["match"]
    ]
    if bad:
        lines.append("MISMATCHED CLAIMS: " + ", ".join(bad))
    else:
        lines.append("all claims match")
    if "oracle_matches" in doc:
        lines.append(f"koszul oracle matches: {doc['oracle_matches']}")
    return "\n".join(lines)


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


def _cmd_analyze(args) -> int:
    G = _load_graph(args)
    field = _field_from_flag(args.field)
    doc = build_analysis_document(G, field, args.mode, args.cross_check)
    if args.as_json:
        _emit(args, json.dumps(doc, indent=2, sort_keys=True))
    else:
        I = idl.complementary_edge_ideal(G)
        _emit(args, _render_analysis_text(doc, hochster_betti(I, field).render_text()))
    return EXIT_OK


def _cmd_betti(args) -> int:
    G = _load_graph(args)
    validate_standing_assumptions(G)
    field = _field_from_flag(args.field)
    I = idl.complementary_edge_ideal(G)
    table = hochster_betti(I, field)
    payload = {"graph6": emit_graph(G), "betti": table.to_json_dict()}
    matches = True
    if args.cross_check:
        oracle = koszul_betti(I, field)
        payload["betti_oracle"] = oracle.to_json_dict()
        matches = oracle.entries == table.entries
        payload["oracle_matches"] = matches
    if args.as_json:
        _emit(args, json.dumps(payload, indent=2, sort_keys=True))
    else:
        text = table.render_text()
        if args.cross_check:
            text += f"\nkoszul oracle matches: {matches}"
        _emit(args, text)
    return EXIT_OK if matches else EXIT_MISMATCH


def _cmd_dual(args) -> int:
    G = _load_graph(args)
    I = idl.complementary_edge_ideal(G)
    primes = idl.minimal_primes(I)
    nonedges = [p for p in primes if p.bit_count() == 2]
    tri = [p for p in primes if p.bit_count() == 3]
    payload = {
        "graph6": emit_graph(G),
        "generators": _mono_strings(G.n, primes),
        "from_nonedges": _mono_strings(G.n, nonedges),
        "from_triangles": _mono_strings(G.n, tri),
    }
    if args.as_json:
        _emit(args, json.dumps(payload, indent=2, sort_keys=True))
    else:
        _emit(
            args,
            "dual generators: " + ", ".join(payload["generators"])
            + "\nfrom nonedges: " + ", ".join(payload["from_nonedges"])
            + "\nfrom triangles: " + ", ".join(payload["from_triangles"]),
        )
    return EXIT_OK


def _cmd_order(args) -> int:
    G = _load_graph(args)
    try:
        cert = idl.linear_quotient_order(G)
    except idl.NoOrderExistsError as exc:
        if args.as_json:
            _emit(
                args,
                json.dumps(
                    {
                        "graph6": emit_graph(G),
                        "order": None,
                        "components": [list(c) for c in exc.components],
                    },
                    sort_keys=True,
                ),
            )
        else:
            _emit(args, str(exc))
        return EXIT_OK
    steps = [
        [f"x{v}" for v in step] for step in cert.colon_variables()
    ]
    if args.as_json:
        _emit(
            args,
            json.dumps(
                {
                    "graph6": emit_graph(G),
                    "order": [str(m) for m in cert.order],
                    "colon_steps": steps,
                },
                sort_keys=True,
            ),
        )
    else:
        lines = ["order: " + ", ".join(str(m) for m in cert.order)]
        rendered = ["-" if not s else "(" + ",".join(s) + ")" for s in steps]
        lines.append("colon steps: " + " ".join(rendered))
        _emit(args, "\n".join(lines))
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
    else:
        lo = hi = text
    try:
        return int(lo), int(hi)
    except ValueError:
        raise _UsageError(f"bad range {text!r}")


def _cmd_sweep(args) -> int:
    n_min, n_max = _parse_range(args.n)
    field = _field_from_flag(args.field)
    report = cf.sweep(
        n_min,
        n_max,
        field,
        mode=args.mode,
        cross_field=args.cross_check,
        workers=args.workers,
        progress=lambda line: print(line, file=sys.stderr),
    )
    text = json.dumps(report.to_json_dict(), indent=2, sort_keys=True)
    if args.as_json or args.out:
        _emit(args, text)
    else:
        print(text)
    print(
        f"{report.graph_count} graphs, {report.mismatch_count} mismatches, "
        f"{report.wall_time_s:.1f}s",
        file=sys.stderr,
    )
    return EXIT_MISMATCH if report.mismatches else EXIT_OK


def _cmd_census(args) -> int:
    field = _field_from_flag(args.field)
    result = cf.gorenstein_census(args.n, field)
    if args.as_json:
        _emit(args, json.dumps(result))
    else:
        _emit(args, "\n".join(result) if result else "(none)")
    return EXIT_OK


_HANDLERS = {
    "analyze": _cmd_analyze,
    "betti": _cmd_betti,
    "dual": _cmd_dual,
    "order": _cmd_order,
    "sweep": _cmd_sweep,
    "census": _cmd_census,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return _HANDLERS[args.command](args)
    except (GraphError, idl.IdealError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
