"""Command-line surface: compute, search, generate, transform, verify,
table1 and repro subcommands.

All machine output is a single JSON document on stdout with sorted keys, so
identical invocations produce byte-identical output regardless of thread
count.  Averages appear as exact {"num", "den"} pairs; human-facing tables
(--human) render them as "p/q (~decimal)".

Exit codes: 0 success, 1 failed repro criteria, 2 parse error,
3 precondition violation, 4 search cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import acceptance, bounds, families
from .connectivity import (
    potential_digraph,
    potential_graph,
    report_digraph,
    report_graph,
)
from .core import (
    Digraph,
    Graph,
    Orientation,
    ParseError,
    bits_from_hex,
    bits_to_hex,
    fraction_json,
    from_graph6,
    is_connected,
    parse_arc_list_text,
    parse_edge_list_text,
    to_digraph,
    to_edge_list_text,
    to_graph6,
)
from .search import (
    SearchCapExceeded,
    search_branch_and_bound,
    search_exhaustive,
    search_local,
    verify_witness,
)
from .transforms import chord_partition, inflation, subdivision, weak_dual

__all__ = ["main"]


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(f"cannot read input {path!r}: {e}") from None


def _parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "auto":
        first = text.strip().splitlines()[0] if text.strip() else ""
        fmt = "edgelist" if " " in first.strip() else "graph6"
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edgelist":
        return parse_edge_list_text(text)
    raise ParseError(f"unknown format {fmt!r}")


def _load_graph(args) -> Graph:
    return _parse_graph(_read_input(args.input), args.format)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a fraction: {text!r}") from None


def _human_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator} (~{float(x):.6f})"


# ----------------------------------------------------------------------
# Subcommands.
# ----------------------------------------------------------------------

def cmd_compute(args) -> int:
    if args.directed and args.orientation:
        raise ValueError("--directed and --orientation are mutually exclusive")
    if args.orientation is not None:
        g = _load_graph(args)
        o = Orientation(g, bits_from_hex(args.orientation, g.m))
        d = to_digraph(o)
        target: Graph | Digraph = d
    elif args.directed:
        d = parse_arc_list_text(_read_input(args.input))
        target = d
    else:
        target = _load_graph(args)

    directed = isinstance(target, Digraph)
    if args.potential:
        rep = potential_digraph(target) if directed else potential_graph(target)
        _emit(rep.to_json_dict())
        return 0
    rep = report_digraph(target) if directed else report_graph(target)
    if args.pairs:
        _emit(rep.to_json_dict())
    else:
        _emit({"n": rep.n, "total": rep.total, "average": fraction_json(rep.average)})
    return 0


def cmd_search(args) -> int:
    g = _load_graph(args)
    if args.method == "exhaustive":
        kwargs = {} if args.max_edges is None else {"max_edges": args.max_edges}
        res = search_exhaustive(g, args.objective, threads=args.threads, **kwargs)
    elif args.method == "bnb":
        kwargs = {} if args.max_edges is None else {"max_edges": args.max_edges}
        res = search_branch_and_bound(g, args.objective, threads=args.threads, **kwargs)
    else:
        if not is_connected(g):
            sys.stderr.write(
                "warning: disconnected input; local search starts from random orientations\n"
            )
        res = search_local(
            g,
            args.objective,
            seed=args.seed,
            restarts=args.restarts,
            max_plateau=args.max_plateau,
        )
    payload = res.to_json_dict()
    if args.certify:
        payload["certify_ok"] = verify_witness(res)
    _emit(payload)
    return 0


_ORIENTED_FAMILIES = {
    "h_st": families.d_st,
    "lex_ladder": families.lex_ladder_orientation,
    "min2conn_h": families.min2conn_h_orientation,
    "snake": families.snake_orientation,
}


def _generate_graph(args) -> tuple[Graph, dict, Orientation | None]:
    fam = args.family
    params: dict = {}
    orient = None
    if fam in ("complete", "star", "cycle", "path", "fan", "join_k2_empty",
               "complete_bipartite_2", "mobius_ladder", "lex_ladder",
               "min2conn_h", "snake"):
        params["n"] = _req(args, "n")
        g = getattr(families, fam)(params["n"])
    elif fam == "h_st":
        params["s"] = _req(args, "s")
        params["t"] = _req(args, "t")
        g = families.h_st(params["s"], params["t"])
    elif fam == "trigon_lozenge_g":
        params["i"] = _req(args, "i")
        g = families.trigon_lozenge_g(params["i"])
    elif fam == "mop_doubling":
        params["n"] = _req(args, "n")
        g = families.mop_doubling_m(_fan_seed(params["n"]))
    elif fam == "trigon_lozenge_h":
        params["i"] = _req(args, "i")
        params["n"] = _req(args, "n")
        g = families.trigon_lozenge_h(params["i"], _fan_seed(params["n"]))
    elif fam == "two_tree_random":
        params["n"] = _req(args, "n")
        params["seed"] = args.seed
        g = families.two_tree_random(params["n"], args.seed)
    else:
        raise ValueError(f"unknown family {fam!r}")
    if args.orient:
        if fam in _ORIENTED_FAMILIES:
            if fam == "h_st":
                orient = families.d_st(params["s"], params["t"])
            else:
                orient = _ORIENTED_FAMILIES[fam](params["n"])
        elif fam == "two_tree_random":
            orient = families.two_tree_strong_orientation(g)
        else:
            raise ValueError(f"family {fam!r} has no canonical orientation")
    return g, params, orient


def _fan_seed(k: int) -> Graph:
    # The doubled-MOP constructions take an arbitrary seed MOP; the CLI uses
    # the fan of the requested order (the triangle at order 3).
    return families.fan(k)


def _req(args, name: str) -> int:
    val = getattr(args, name, None)
    if val is None:
        raise ValueError(f"family {args.family!r} needs --{name}")
    return val


def cmd_generate(args) -> int:
    g, params, orient = _generate_graph(args)
    if args.raw:
        if args.out == "graph6":
            sys.stdout.write(to_graph6(g) + "\n")
        else:
            sys.stdout.write(to_edge_list_text(g))
        return 0
    payload = {"family": args.family, "params": params, "n": g.n, "m": g.m}
    if args.out == "graph6":
        payload["graph6"] = to_graph6(g)
    else:
        payload["edge_list"] = to_edge_list_text(g)
    if orient is not None:
        payload["orientation"] = {"bits_hex": bits_to_hex(orient.bits)}
    _emit(payload)
    return 0


def cmd_transform(args) -> int:
    g = _load_graph(args)
    if args.kind == "inflate":
        inf = inflation(g)
        _emit(
            {
                "n": inf.graph.n,
                "m": inf.graph.m,
                "graph6": to_graph6(inf.graph),
                "corner_map": inf.corner_map_json(),
            }
        )
    elif args.kind == "subdivide":
        sub = subdivision(g)
        _emit(
            {
                "n": sub.graph.n,
                "m": sub.graph.m,
                "graph6": to_graph6(sub.graph),
                "edge_map": sub.edge_map_json(),
            }
        )
    else:
        tree, faces = weak_dual(g)
        outer, chords = chord_partition(g)
        _emit(
            {
                "tree_graph6": to_graph6(tree),
                "faces": [list(f) for f in faces],
                "outer_edges": [list(e) for e in outer],
                "chords": [list(e) for e in chords],
            }
        )
    return 0


def cmd_verify(args) -> int:
    graph = None
    if args.input is not None:
        graph = _parse_graph(_read_input(args.input), args.format)
    params = {}
    for name in ("n", "r", "m"):
        val = getattr(args, name)
        if val is not None:
            params[name] = val
    if args.K is not None:
        params["K"] = args.K
    if args.kbm is not None:
        params["kbm"] = _fraction(args.kbm)
    if args.search is not None:
        if graph is None:
            raise ValueError("--search needs an input graph")
        fn = search_exhaustive if args.search == "exhaustive" else search_branch_and_bound
        computed = fn(graph, threads=args.threads)
    elif args.computed is not None:
        computed = _fraction(args.computed)
    else:
        raise ValueError("provide --computed or --search")
    verdict = bounds.check_bound(args.bound_id, computed, graph=graph, **params)
    _emit(verdict.to_json_dict())
    return 0


def cmd_table1(args) -> int:
    rows = acceptance.table1_rows(
        args.max_order, threads=args.threads, canonical=args.canonical
    )
    payload_rows = []
    for row in rows:
        payload_rows.append(
            {
                "n": row["n"],
                "min": fraction_json(row["min"]),
                "triangulations": row["triangulations"],
                "argmin_labeled": row["argmin_labeled"],
                "argmin_graph6": sorted(to_graph6(g) for g in row["argmin_classes"]),
                "fan_attains": row["fan_attains"],
                "fan_unique": row["fan_unique"],
            }
        )
    if args.human:
        sys.stdout.write("order  minimum\n")
        for row in rows:
            sys.stdout.write(f"{row['n']:>5}  {_human_fraction(row['min'])}\n")
    else:
        _emit({"rows": payload_rows})
    return 0


def cmd_repro(args) -> int:
    keys = None
    if args.criteria:
        keys = {k.strip() for k in args.criteria.split(",")}
    results = acceptance.run_acceptance(
        extended=args.extended, keys=keys, echo=lambda line: print(line)
    )
    passed = sum(1 for r in results if r.passed)
    print(f"{passed}/{len(results)} criteria passed")
    return 0 if passed == len(results) else 1


# ----------------------------------------------------------------------
# Parser.
# ----------------------------------------------------------------------

def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", default="-", help="input path or - for stdin")
    p.add_argument(
        "--format",
        choices=("auto", "graph6", "edgelist"),
        default="auto",
        help="input format (auto: first-line heuristic)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="avgconn",
        description="Exact average-connectivity computations and orientation search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="connectivity reports and potentials")
    _add_input(p)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--pairs", action="store_true", help="full per-pair table")
    mode.add_argument("--average", action="store_true", help="total and exact average")
    mode.add_argument("--potential", action="store_true", help="degree potential")
    p.add_argument("--directed", action="store_true", help="input is an arc list")
    p.add_argument("--orientation", help="hex bit vector orienting the input graph")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("search", help="maximize average connectivity over orientations")
    _add_input(p)
    p.add_argument("--method", choices=("exhaustive", "bnb", "local"), required=True)
    p.add_argument("--objective", choices=("vertex", "edge"), default="vertex")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=4)
    p.add_argument("--max-plateau", type=int, default=50)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--max-edges", type=int, default=None, help="override the method cap")
    p.add_argument("--certify", action="store_true", help="re-verify the witness total")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("generate", help="emit a named family member")
    p.add_argument("family", choices=sorted(set(families.FAMILY_NAMES) | {"mop_doubling", "trigon_lozenge_h"}))
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--orient", action="store_true", help="include the canonical orientation")
    p.add_argument("--out", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--raw", action="store_true", help="emit only the graph serialization")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("transform", help="inflation, subdivision, weak dual")
    p.add_argument("kind", choices=("inflate", "subdivide", "dual"))
    _add_input(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="check a computed value against a catalog bound")
    p.add_argument("bound_id", choices=bounds.bound_ids())
    p.add_argument("input", nargs="?", default=None, help="optional graph (path or -)")
    p.add_argument(
        "--format",
        choices=("auto", "graph6", "edgelist"),
        default="auto",
        help="input format (auto: first-line heuristic)",
    )
    p.add_argument("--computed", help="value as p/q")
    p.add_argument("--search", choices=("exhaustive", "bnb"), help="derive the value by certified search")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--K", type=int)
    p.add_argument("--kbm", help="max average connectivity parameter as p/q")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table1", help="minima over polygon triangulations by order")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--human", action="store_true")
    p.add_argument(
        "--canonical",
        action="store_true",
        help="search one triangulation per isomorphism class (n <= 9)",
    )
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("repro", help="run the acceptance suite")
    p.add_argument("--extended", action="store_true", help="include the slow order-9 run")
    p.add_argument("--criteria", help="comma-separated criterion numbers to run")
    p.set_defaults(func=cmd_repro)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        sys.stderr.write(f"parse error: {e}\n")
        return 2
    except SearchCapExceeded as e:
        sys.stderr.write(f"search cap exceeded: {e}\n")
        return 4
    except ValueError as e:
        sys.stderr.write(f"precondition violation: {e}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
