"""Command-line interface.

Exit codes: 0 success, 2 bad arguments or unparsable input, 3 a size or
budget limit was exceeded, 4 a construction or search failed its own checks.
"""

from __future__ import annotations

import argparse
import sys

from .canon import canonical_graph
from .constructions import build_extremal_family, build_regular_pfree, f_value
from .decomposition import decomposition_family
from .detect import contains_subgraph, find_disjoint_copies
from .errors import ArgumentError, BudgetExceeded, CapabilityError, TuranLabError
from .graph import Graph, turan_graph
from .graph6 import decode_graph6, encode_graph6
from .patterns import parse_pattern
from .reports import g6_lines, rows_to_csv, to_json
from .search import EXACT_METHODS, HILL_CLIMB, lower_bound_hill_climb, turan_number
from .verify import verify_proposition21, verify_theorem

EXIT_OK, EXIT_ARGUMENT, EXIT_CAPABILITY, EXIT_CONSTRUCTION = 0, 2, 3, 4
FORMATS = ("json", "csv", "g6-lines")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ArgumentError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="turanlab", description="Exact Turan numbers and wheel constructions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=FORMATS):
        p.add_argument("--format", choices=formats, default="json")
        p.add_argument("--output", help="write here instead of stdout")

    p = sub.add_parser("turan", help="exact ex(n, H) or a hill-climbing lower bound")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=EXACT_METHODS + (HILL_CLIMB,), default="augmentation")
    p.add_argument("--budget-ms", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=4)
    p.add_argument("--timing", action="store_true", help="report elapsed_ms (breaks byte-stability)")
    common(p, ("json", "g6-lines"))

    p = sub.add_parser("construct", help="build a construction")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("extremal", "regular", "turan"), default="extremal",
                   help="K^k_n (default), U^k_n(P_{2k-1}), or T(n, k)")
    common(p, ("json", "g6-lines"))

    p = sub.add_parser("verify", help="verification rows")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--claim", choices=("wheel", "prop21"), default="wheel",
                   help="ex(n, W_{2k+1}) rows (default) or ex(n, {S_{k+1}, P_{2k-1}}) rows")
    p.add_argument("--budget-ms", type=int)
    common(p, ("json", "csv"))

    p = sub.add_parser("decomp", help="decomposition family of a graph")
    p.add_argument("--pattern", required=True, help="a single graph, e.g. wheel:7 or g6:<graph6>")
    p.add_argument("--t", type=int)
    common(p, ("json", "g6-lines"))

    p = sub.add_parser("detect", help="find a copy (or s disjoint copies) of a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--graph", required=True, help="host graph in graph6")
    p.add_argument("--copies", type=int, default=1)
    common(p, ("json",))

    p = sub.add_parser("convert", help="graph6 <-> named graphs, optionally canonical")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="graph6 input")
    src.add_argument("--pattern", help="named single graph, e.g. wheel:7")
    p.add_argument("--canonical", action="store_true")
    common(p, ("json", "g6-lines"))
    return parser


def _single_graph(text: str) -> Graph:
    spec = parse_pattern(text)
    if spec.kind == "family":
        raise ArgumentError("expected a single graph, not a family")
    return spec.graphs()[0]


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edge_count": g.edge_count, "graph6": encode_graph6(g),
            "edges": [list(e) for e in g.edges()]}


def _cmd_turan(a):
    pattern = parse_pattern(a.pattern)
    if a.method == HILL_CLIMB:
        report = lower_bound_hill_climb(a.n, pattern, restarts=a.restarts, seed=a.seed,
                                        budget_ms=a.budget_ms)
    else:
        report = turan_number(a.n, pattern, a.method, budget_ms=a.budget_ms)
    if a.format == "g6-lines":
        return g6_lines(report.witnesses)
    return to_json(report.to_dict(timing=a.timing))


def _cmd_construct(a):
    if a.kind == "extremal":
        g, recipe = build_extremal_family(a.n, a.k)
        recipe_d = recipe.to_dict()
        extra = {"f_value": f_value(a.n, a.k)}
    elif a.kind == "regular":
        g, recipe = build_regular_pfree(a.n, a.k)
        recipe_d = recipe.to_dict()
        extra = {}
    else:
        if a.k < 1:
            raise ArgumentError("turan kind needs k >= 1 parts")
        g = turan_graph(a.n, a.k)
        recipe_d = {"kind": "TuranGraph", "k": a.k, "n": a.n, "split": None,
                    "component_sizes": [], "embedded_edge": None}
        extra = {}
    if a.format == "g6-lines":
        return g6_lines([encode_graph6(g)])
    return to_json({"recipe": recipe_d, **extra, "graph": _graph_json(g)})


def _cmd_verify(a):
    fn = verify_theorem if a.claim == "wheel" else verify_proposition21
    rows = fn(a.k, a.n_from, a.n_to, budget_ms=a.budget_ms)
    if a.format == "csv":
        return rows_to_csv(rows)
    return to_json([r.to_dict() for r in rows])


def _cmd_decomp(a):
    result = decomposition_family(_single_graph(a.pattern), a.t)
    if a.format == "g6-lines":
        return g6_lines(encode_graph6(f) for f in result.family)
    return to_json(result.to_dict())


def _cmd_detect(a):
    pattern = parse_pattern(a.pattern)
    host = decode_graph6(a.graph)
    if a.copies < 1:
        raise ArgumentError("--copies must be at least 1")
    if a.copies == 1:
        w = contains_subgraph(host, pattern)
        found = [] if w is None else [w]
    else:
        found = find_disjoint_copies(host, pattern, a.copies) or []
    payload = {"pattern": pattern.render(), "graph": encode_graph6(host), "copies": a.copies,
               "found": bool(found),
               "witnesses": [{"member": w.member, "mapping": list(w.mapping)} for w in found]}
    return to_json(payload)


def _cmd_convert(a):
    g = decode_graph6(a.graph) if a.graph is not None else _single_graph(a.pattern)
    if a.canonical:
        g = canonical_graph(g)
    if a.format == "g6-lines":
        return g6_lines([encode_graph6(g)])
    return to_json(_graph_json(g))


COMMANDS = {"turan": _cmd_turan, "construct": _cmd_construct, "verify": _cmd_verify,
            "decomp": _cmd_decomp, "detect": _cmd_detect, "convert": _cmd_convert}


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        text = COMMANDS[args.command](args)
    except ArgumentError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_ARGUMENT
    except (CapabilityError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CAPABILITY
    except TuranLabError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CONSTRUCTION
    if args.output:
        with open(args.output, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
