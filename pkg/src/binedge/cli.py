"""Command-line front end.

Exit codes: 0 success, 1 sweep violations, 2 input error, 3 capacity
exceeded, 4 internal inconsistency between the two Groebner basis routes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closedness as cl
from . import dual
from . import graphs as gr
from . import sweep as sw
from .errors import BinedgeError, CapacityError, DomainError, GraphParseError, PreconditionError
from .hilbert import DEFAULT_TRUNCATION, hilbert_series
from .ideal import (
    DEFAULT_CHECK_TRUNCATION,
    build_ideal,
    combinatorial_gb,
    nonzerodivisor_check,
    oracle_gb,
    strongly_free_check,
)
from .poly import QQ, field_from_string, is_quadratic_basis

EXIT_OK, EXIT_VIOLATIONS, EXIT_INPUT, EXIT_CAPACITY, EXIT_INTERNAL = 0, 1, 2, 3, 4


class InternalMismatch(BinedgeError):
    pass


def read_graph(source: str) -> gr.Graph:
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphParseError(f"cannot read {source}: {exc.strerror}") from exc
    return gr.parse_graph(text)


def _labeling(arg, n: int):
    if not arg:
        return gr.identity_labeling(n)
    if not isinstance(arg, str):
        return gr.check_labeling(arg, n)
    try:
        values = [int(x) for x in arg.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise PreconditionError(f"bad labeling {arg!r}") from exc
    return gr.check_labeling(values, n)


def _edge(arg: str) -> tuple[int, int]:
    try:
        u, v = (int(x) for x in arg.split(","))
    except ValueError as exc:
        raise PreconditionError(f"bad edge {arg!r}; expected 'u,v'") from exc
    return u, v


def _graph_echo(g: gr.Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()], "graph6": gr.format_graph6(g)}


def _series(s) -> list:
    return [str(c) if not isinstance(c, int) else c for c in s.coeffs]


def _gb_section(g, lab, field) -> dict:
    comb = combinatorial_gb(g, lab, field)
    ref = oracle_gb(g, lab, field)
    if comb != ref:
        raise InternalMismatch(
            "combinatorial Groebner basis differs from Buchberger output for "
            f"{gr.format_graph6(g)} with labeling {list(lab)}"
        )
    return {
        "labeling": list(lab),
        "field": field.name,
        "combinatorial": [p.render() for p in comb],
        "buchberger": [p.render() for p in ref],
        "match": True,
        "quadratic": is_quadratic_basis(comb),
        "size": len(comb),
    }


def _closedness_section(g) -> dict:
    out = {"fast": cl.is_closed_fast(g)}
    if g.n <= cl.SEARCH_CAP:
        search = cl.is_closed_search(g)
        interval = cl.interval_labeling_search(g)
        out["search"] = {"closed": search is not None, "witness": list(search) if search else None}
        out["interval"] = {"closed": interval is not None,
                           "witness": list(interval) if interval else None}
        out["closed"] = search is not None
    else:
        out["search"] = None
        out["interval"] = None
        out["closed"] = out["fast"]
    return out


def _dual_section(g) -> dict:
    rels = dual.dual_generators(g)
    res = dual.verify_orthogonality(g, rels)
    return {
        "count": len(rels),
        "expected_count": dual.expected_dual_count(g),
        "orthogonal": res.all_orthogonal,
        "span_dim": res.span_dim,
        "relations": [r.render() for r in rels],
    }


def _betti_section(g, verify=True) -> dict:
    rep = dual.betti_report(g, verify=verify)
    return {"beta1": rep.beta1, "beta2": rep.beta2,
            "beta2_verified": rep.beta2_verified, "match": rep.match}


def analyze(g: gr.Graph, skip_gb=False, truncation=DEFAULT_CHECK_TRUNCATION, labeling=None,
            field=QQ, add_edge=None) -> dict:
    lab = _labeling(labeling, g.n)
    report = {
        "graph": _graph_echo(g),
        "closedness": _closedness_section(g),
        "koszul": cl.koszul_classify(g).as_dict(),
        "dual": _dual_section(g),
        "betti": _betti_section(g),
    }
    if not skip_gb:
        report["groebner"] = _gb_section(g, lab, field)
        lms = [p.lm for p in oracle_gb(g, lab, field)]
        report["hilbert"] = _series(hilbert_series(lms, truncation, nvars=2 * g.n))
    if add_edge is not None:
        nzd = nonzerodivisor_check(g, add_edge, truncation, field=field)
        sf = strongly_free_check(g, add_edge, truncation, field=field)
        report["add_edge"] = {
            "edge": list(add_edge),
            "truncation": truncation,
            "nonzerodivisor": nzd.holds,
            "nonzerodivisor_first_difference": nzd.first_difference,
            "strongly_free": sf.holds,
            "strongly_free_first_difference": sf.first_difference,
            "certified_up_to": truncation,
        }
    return report


# ------------------------------------------------------------------ output


def _emit_text(obj, indent=0, out=None):
    out = sys.stdout if out is None else out
    pad = "  " * indent
    for key, val in obj.items():
        if isinstance(val, dict):
            print(f"{pad}{key}:", file=out)
            _emit_text(val, indent + 1, out)
        elif isinstance(val, list) and val and all(isinstance(x, str) for x in val):
            print(f"{pad}{key}:", file=out)
            for x in val:
                print(f"{pad}  {x}", file=out)
        else:
            print(f"{pad}{key}: {json.dumps(val) if isinstance(val, (list, type(None), bool)) else val}",
                  file=out)


def emit(obj: dict, as_json: bool):
    if as_json:
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        _emit_text(obj)


# --------------------------------------------------------------- commands


def cmd_analyze(args) -> int:
    g = read_graph(args.input)
    field = field_from_string(args.field)
    edge = _edge(args.add_edge) if args.add_edge else None
    emit(analyze(g, args.skip_gb, args.truncation, args.labeling, field, edge), args.json)
    return EXIT_OK


def cmd_gb(args) -> int:
    g = read_graph(args.input)
    field = field_from_string(args.field)
    lab = _labeling(args.labeling, g.n)
    emit({"graph": _graph_echo(g), "groebner": _gb_section(g, lab, field)}, args.json)
    return EXIT_OK


def cmd_dual(args) -> int:
    g = read_graph(args.input)
    section = _dual_section(g)
    if args.general:
        general = dual.dual_generators_general(build_ideal(g).generators, 2 * g.n)
        section["general"] = [r.render() for r in general]
        section["same_span"] = dual.same_relation_span(dual.dual_generators(g), general)
    emit({"graph": _graph_echo(g), "dual": section}, args.json)
    return EXIT_OK


def cmd_betti(args) -> int:
    g = read_graph(args.input)
    section = _betti_section(g, verify=not args.no_verify)
    if not args.no_verify and g.n <= dual.BETTI_MAX_N:
        cert = dual.explicit_syzygy_certificate(g)
        section["syzygies"] = {"count": cert.count, "in_kernel": cert.all_in_kernel,
                               "independent": cert.independent}
    emit({"graph": _graph_echo(g), "betti": section}, args.json)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    g = read_graph(args.input)
    field = field_from_string(args.field)
    lab = _labeling(args.labeling, g.n)
    lms = [p.lm for p in oracle_gb(g, lab, field)]
    hs = hilbert_series(lms, args.truncation, nvars=2 * g.n)
    emit({"graph": _graph_echo(g), "hilbert": _series(hs), "truncation": args.truncation}, args.json)
    return EXIT_OK


def cmd_cone(args) -> int:
    g = read_graph(args.input)
    sys.stdout.write(gr.format_edge_list(gr.cone(g)))
    return EXIT_OK


def cmd_glue(args) -> int:
    g1 = read_graph(args.first)
    g2 = read_graph(args.second)
    sys.stdout.write(gr.format_edge_list(gr.glue_at_free_vertices(g1, args.v, g2, args.w)))
    return EXIT_OK


def cmd_sweep(args) -> int:
    checks = list(sw.CHECKS) if args.checks == "all" else [c for c in args.checks.split(",") if c]
    try:
        summary = sw.sweep(args.nmax, checks, canonical=args.canonical,
                           parallelism=args.parallel, nmin=args.nmin)
    except KeyError as exc:
        raise PreconditionError(str(exc.args[0])) from exc
    data = summary.as_dict()
    if args.json:
        emit(data, True)
    else:
        print(f"instances: {data['instances']}")
        for name, count in data["counts"].items():
            print(f"  {name}: {count} checked")
        print(f"skipped: {len(data['skipped'])}")
        print(f"violations: {len(data['violations'])}")
        for v in data["violations"]:
            print(f"  [{v['check']}] {v['graph']}: {v['message']}")
    return EXIT_OK if summary.ok else EXIT_VIOLATIONS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binedge",
        description="Binomial edge ideals: Groebner bases, closedness, Koszul duals, Betti numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", help="edge-list or graph6 file, '-' for stdin")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    def field_opts(p):
        p.add_argument("--field", default=None,
                       help="coefficients: 'q' (default) or 'p:<prime>'; default from BEID_FIELD")
        p.add_argument("--labeling", default=None,
                       help="comma-separated positions of vertices 1..n, e.g. '3,1,2'")

    p = graph_cmd("analyze", cmd_analyze, "run the full pipeline on one graph")
    field_opts(p)
    p.add_argument("--skip-gb", action="store_true")
    p.add_argument("--truncation", type=int, default=DEFAULT_CHECK_TRUNCATION)
    p.add_argument("--add-edge", default=None, metavar="U,V",
                   help="also test the binomial of a new edge for (strong) freeness")

    p = graph_cmd("gb", cmd_gb, "combinatorial and Buchberger Groebner bases")
    field_opts(p)

    p = graph_cmd("dual", cmd_dual, "quadratic dual relations")
    p.add_argument("--general", action="store_true",
                   help="also derive the relations from the linear system and compare spans")

    p = graph_cmd("betti", cmd_betti, "beta1 and beta2 of the residue field")
    p.add_argument("--no-verify", action="store_true", help="skip the brute-force kernel")

    p = graph_cmd("hilbert", cmd_hilbert, "Hilbert series of S/J_G")
    field_opts(p)
    p.add_argument("--truncation", type=int, default=DEFAULT_TRUNCATION)

    p = sub.add_parser("cone", help="cone over a graph (edge list on stdout)")
    p.add_argument("input")
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("glue", help="glue two graphs at free vertices (edge list on stdout)")
    p.add_argument("first")
    p.add_argument("v", type=int)
    p.add_argument("second")
    p.add_argument("w", type=int)
    p.set_defaults(func=cmd_glue)

    p = sub.add_parser("sweep", help="exhaustive cross-checks over small graphs")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--nmin", type=int, default=1)
    p.add_argument("--checks", default="all",
                   help=f"comma-separated subset of: {', '.join(sw.CHECKS)}")
    p.add_argument("--canonical", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--parallel", type=int, default=1, help="worker processes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphParseError, PreconditionError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InternalMismatch as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
