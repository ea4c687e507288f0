"""Command-line front end.

JSON goes to stdout; ``--pretty`` adds a human-readable table on stderr.
Exit codes: 0 success, 1 invalid partition or unexpected discrepancy,
2 input error, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .catalog import CatalogError, cubic_catalog
from .coalition import (
    BRUTEFORCE_MAX_ORDER,
    SOLVE_MAX_ORDER,
    FcCertificate,
    cf_bruteforce,
    cf_solve,
    connected_upper_bound_claim,
    parse_partition,
    partition_to_lists,
    upper_bound,
    verify_fc_partition,
)
from .domination import fair_domatic_number, fd_i, gamma, gamma_f, min_fd_set
from .graph import (
    CapExceeded,
    Graph,
    GraphError,
    ParseError,
    bits,
    parse_edge_list,
    parse_family,
    parse_graph6,
    to_edge_list,
)
from .reproduce import SCOPES, reproduce

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
QUANTITIES = ("gamma", "gamma_f", "fd_i", "d_f", "cf", "bounds")


def parse_graph_text(text: str) -> Graph:
    """graph6 if the text is a single non-numeric token, otherwise an edge list."""
    body = [ln for ln in (x.split("#", 1)[0].strip() for x in text.splitlines()) if ln]
    if len(body) == 1 and len(body[0].split()) == 1 and not body[0].isdigit():
        return parse_graph6(body[0])
    return parse_edge_list(text)


def load_graph(source: str) -> Graph:
    if source == "-":
        return parse_graph_text(sys.stdin.read())
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return parse_graph_text(fh.read())
    return parse_family(source)


def _emit(obj, pretty_lines: list[str] | None, args) -> None:
    print(json.dumps(obj, sort_keys=True))
    if args.pretty and pretty_lines:
        print("\n".join(pretty_lines), file=sys.stderr)


def _require_order(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise CapExceeded(f"{what} is limited to order {cap}; got {g.n}")


def cmd_compute(args) -> int:
    g = load_graph(args.graph)
    _require_order(g, SOLVE_MAX_ORDER, "compute")
    wanted = args.what or list(QUANTITIES)
    record: dict = {"n": g.n, "m": g.num_edges}
    t0 = time.perf_counter()
    if "gamma" in wanted:
        record["gamma"] = gamma(g)
    if "gamma_f" in wanted:
        record["gamma_f"] = gamma_f(g)
        if args.witness:
            record["gamma_f_witness"] = list(bits(min_fd_set(g)))
    if "fd_i" in wanted:
        top = max(1, max(g.degrees()))
        record["fd_i"] = {str(i): fd_i(g, i) for i in range(1, top + 1)}
    if "d_f" in wanted:
        res = fair_domatic_number(g)
        record["d_f"] = res.value
        if args.witness:
            record["d_f_witness"] = partition_to_lists(res.witness)
    if "cf" in wanted:
        rep = cf_solve(g)
        record["cf"] = rep.value
        record["cf_nodes"] = rep.nodes
        if args.witness:
            record["cf_witness"] = partition_to_lists(rep.witness)
            record["cf_certificate"] = rep.certificate.to_json() if rep.certificate else None
    if "bounds" in wanted:
        record["upper_bound"] = upper_bound(g)
        record["connected_upper_bound_claim"] = connected_upper_bound_claim(g)
    record["elapsed"] = round(time.perf_counter() - t0, 6)
    lines = [f"{k:>28}  {v}" for k, v in record.items() if not k.endswith(("witness", "certificate"))]
    _emit(record, lines, args)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    with open(args.partition, encoding="utf-8") as fh:
        classes = parse_partition(fh.read())
    result = verify_fc_partition(g, classes)
    if isinstance(result, FcCertificate):
        out = {"valid": True, "classes": len(classes), "certificate": result.to_json()}
        lines = [f"valid fc-partition with {len(classes)} classes"]
        lines += [json.dumps(e) for e in out["certificate"]]
        _emit(out, lines, args)
        return EXIT_OK
    out = {"valid": False, **result.to_json()}
    _emit(out, [f"invalid: {result.reason} (class {result.cls})"], args)
    return EXIT_INVALID


def cmd_oracle(args) -> int:
    g = load_graph(args.graph)
    _require_order(g, BRUTEFORCE_MAX_ORDER, "the brute-force oracle")
    rep = cf_bruteforce(g)
    out = rep.to_json()
    _emit(out, [f"cf = {rep.value} ({rep.nodes} partitions in {rep.elapsed:.3f}s)"], args)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    report = reproduce(args.scope)
    _emit(report.to_json(), [report.table()], args)
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_catalog(args) -> int:
    entries = cubic_catalog(args.order)
    for e in entries:
        flag = "connected" if e.connected else "disconnected"
        if args.format == "graph6":
            print(f"{e.graph6}\t{e.index}\t{flag}")
        else:
            print(f"# {e.index} {flag}")
            sys.stdout.write(to_edge_list(e.graph))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sequential", action="store_true",
                        help="deterministic single-threaded search (the solver is always sequential)")
    common.add_argument("--pretty", action="store_true", help="also print a table on stderr")
    parser = argparse.ArgumentParser(prog="faircoal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    source_help = 'graph6 or edge-list file, "-" for stdin, or a family like path:9, corona:tree:4:seed=7'

    p = sub.add_parser("compute", parents=[common], help="fair domination invariants and the fair coalition number")
    p.add_argument("graph", help=source_help)
    p.add_argument("--what", nargs="+", choices=QUANTITIES)
    p.add_argument("--witness", action="store_true", help="include witnesses")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", parents=[common], help="check an fc-partition and print its certificate")
    p.add_argument("graph", help=source_help)
    p.add_argument("partition", help="one class per line, 0-based vertex ids")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help=f"brute-force fair coalition number (order <= {BRUTEFORCE_MAX_ORDER})")
    p.add_argument("graph", help=source_help)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("reproduce", parents=[common], help="recompute published values and compare")
    p.add_argument("--scope", choices=SCOPES, default="all")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("catalog", parents=[common], help="list the cubic graphs of one order")
    p.add_argument("order", type=int)
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, GraphError, CatalogError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
