"""Command-line interface.

Exit codes: 0 success (or verification PASS / homomorphism found),
1 verification failure (or no homomorphism / property fails),
2 usage or input errors.

Examples:
  orihex tourn list -k 5
  orihex hex gen -m 3 -n 4 --seed 7 > grid.digraph
  orihex hom check -g H4 -t T5
  orihex prop1 -t A6
  orihex color -m 5 -n 5 --seed 1 --json
  orihex chi-o -g grid.digraph
  orihex export-opl -g H4 -t T5
  orihex verify-paper --scale small --json --out report.json
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .digraph import (
    GraphFormatError,
    OrientedGraph,
    orient,
    parse_digraph,
    random_orientation,
    serialize_digraph,
)
from .hexcolor import check_property1, color_hex
from .hexgrid import build_hex_grid, fixture_h4, fixture_h49
from .homomorphism import brute_force_hom, chi_o, homomorphism_exists
from .opl import export_opl_data, export_opl_model
from .tournaments import (
    canonical_form,
    double_score_set,
    enumerate_tournaments,
    resolve_tournament,
)
from .verify import render_text, verify_paper


class UsageError(Exception):
    pass


def _load_graph(name_or_path: str) -> OrientedGraph:
    """Resolve a graph argument: the fixture names H4/H49, or a file path."""
    if name_or_path == "H4":
        return fixture_h4().graph
    if name_or_path == "H49":
        return fixture_h49().graph
    path = Path(name_or_path)
    if not path.is_file():
        raise UsageError(f"no such graph file: {name_or_path}")
    try:
        return parse_digraph(path.read_text())
    except GraphFormatError as exc:
        raise UsageError(f"{name_or_path}: {exc}") from exc


def _tournament(text: str):
    try:
        return resolve_tournament(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _grid_orientation(args) -> tuple:
    grid = build_hex_grid(args.m, args.n)
    n_edges = len(grid.graph.edges)
    if args.graph is not None:
        g = _load_graph(args.graph)
        return grid, g
    if args.code is not None:
        if len(args.code) != n_edges:
            raise UsageError(f"code must have {n_edges} bits for this grid")
        return grid, orient(grid.graph, args.code)
    seed = args.seed if args.seed is not None else 0
    return grid, random_orientation(grid.graph, seed)


def _cmd_hex_gen(args) -> int:
    grid, oriented = _grid_orientation(args)
    sys.stdout.write(serialize_digraph(oriented))
    return 0


def _cmd_tourn_list(args) -> int:
    for t in enumerate_tournaments(args.k, limit=max(args.k, 5)):
        print(f"{t.order}:{t.bits}")
    return 0


def _cmd_tourn_ds(args) -> int:
    t = _tournament(args.tournament)
    print(" ".join(str(x) for x in double_score_set(t)))
    return 0


def _cmd_tourn_canon(args) -> int:
    t = _tournament(args.tournament)
    print(f"{t.order}:{canonical_form(t)}")
    return 0


def _cmd_hom_check(args) -> int:
    g = _load_graph(args.graph)
    t = _tournament(args.tournament)
    result = brute_force_hom(g, t) if args.brute else homomorphism_exists(g, t)
    if args.json:
        print(json.dumps({
            "verdict": "FOUND" if result.found else "NONE",
            "witness": list(result.witness) if result.found else None,
            "nodes_expanded": result.nodes_expanded,
            "max_depth": result.max_depth,
        }))
    elif result.found:
        print("FOUND " + " ".join(str(c) for c in result.witness))
    else:
        print(f"NONE (nodes expanded: {result.nodes_expanded})")
    return 0 if result.found else 1


def _cmd_prop1(args) -> int:
    t = _tournament(args.tournament)
    check = check_property1(t, include_equal_endpoints=not args.distinct_only)
    if args.json:
        print(json.dumps({
            "holds": check.holds,
            "cases": len(check.table) + len(check.missing),
            "missing": [[u, v, list(p)] for (u, v, p) in check.missing],
        }))
    elif check.holds:
        print(f"holds ({len(check.table)} cases)")
    else:
        print(f"fails ({len(check.missing)} unrealizable cases), first: {check.missing[0]}")
    return 0 if check.holds else 1


def _cmd_color(args) -> int:
    grid, oriented = _grid_orientation(args)
    if oriented.n_vertices != grid.graph.n_vertices:
        raise UsageError("graph does not match the requested grid")
    try:
        colors = color_hex(grid, oriented)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        print(json.dumps({"grid": [grid.m, grid.n], "colors": list(colors)}))
    else:
        for v, (coord, c) in enumerate(zip(grid.coords, colors)):
            print(f"{v + 1} v{coord[0]},{coord[1]} {c}")
    return 0


def _cmd_chi_o(args) -> int:
    g = _load_graph(args.graph)
    value = chi_o(g, k_max=args.k_max)
    if args.json:
        print(json.dumps({"chi_o": value, "k_max": args.k_max}))
    elif value is None:
        print(f"> {args.k_max}")
    else:
        print(value)
    return 0


def _cmd_export_opl(args) -> int:
    if args.model:
        sys.stdout.write(export_opl_model())
        return 0
    if args.graph is None or args.tournament is None:
        raise UsageError("export-opl requires -g and -t (or --model)")
    g = _load_graph(args.graph)
    t = _tournament(args.tournament)
    if t.order != 5:
        raise UsageError("data export needs an order-5 tournament")
    sys.stdout.write(export_opl_data(g, t))
    return 0


def _cmd_verify_paper(args) -> int:
    report = verify_paper(seed=args.seed, scale=args.scale, jobs=args.jobs)
    if args.out:
        Path(args.out).write_text(report.to_json())
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(render_text(report))
    return 0 if report.passed else 1


def _add_grid_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("-m", type=int, required=True, help="hexagon rows")
    p.add_argument("-n", type=int, required=True, help="hexagons per row")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--seed", type=int, help="seeded random orientation")
    src.add_argument("--code", help="explicit orientation bits, one per edge")
    src.add_argument("-g", "--graph", help="orientation from a graph file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orihex",
        description="Oriented coloring of hexagonal grids: generators, "
                    "tournament census, homomorphism checks, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    hexp = sub.add_parser("hex", help="hexagonal grid commands")
    hexsub = hexp.add_subparsers(dest="hex_command", required=True)
    gen = hexsub.add_parser("gen", help="emit an oriented hexagonal grid as a graph file")
    _add_grid_source(gen)
    gen.set_defaults(fn=_cmd_hex_gen)

    tourn = sub.add_parser("tourn", help="tournament commands")
    tsub = tourn.add_subparsers(dest="tourn_command", required=True)
    tlist = tsub.add_parser("list", help="census of k-tournaments up to isomorphism")
    tlist.add_argument("-k", type=int, default=5)
    tlist.set_defaults(fn=_cmd_tourn_list)
    tds = tsub.add_parser("ds", help="double score set of a tournament")
    tds.add_argument("-t", "--tournament", required=True)
    tds.set_defaults(fn=_cmd_tourn_ds)
    tcanon = tsub.add_parser("canon", help="canonical bitstring of a tournament")
    tcanon.add_argument("-t", "--tournament", required=True)
    tcanon.set_defaults(fn=_cmd_tourn_canon)

    hom = sub.add_parser("hom", help="homomorphism commands")
    hsub = hom.add_subparsers(dest="hom_command", required=True)
    hcheck = hsub.add_parser("check", help="decide homomorphism existence (exit 1 if none)")
    hcheck.add_argument("-g", "--graph", required=True, help="graph file, or H4/H49")
    hcheck.add_argument("-t", "--tournament", required=True, help="T1..T12, A6, or k:bits")
    hcheck.add_argument("--brute", action="store_true", help="use the exhaustive oracle")
    hcheck.add_argument("--json", action="store_true")
    hcheck.set_defaults(fn=_cmd_hom_check)

    prop1 = sub.add_parser("prop1", help="check the three-step path property")
    prop1.add_argument("-t", "--tournament", required=True)
    prop1.add_argument("--distinct-only", action="store_true",
                       help="skip the equal-endpoint cases")
    prop1.add_argument("--json", action="store_true")
    prop1.set_defaults(fn=_cmd_prop1)

    color = sub.add_parser("color", help="6-color an oriented hexagonal grid")
    _add_grid_source(color)
    color.add_argument("--json", action="store_true")
    color.set_defaults(fn=_cmd_color)

    chio = sub.add_parser("chi-o", help="oriented chromatic number of a digraph")
    chio.add_argument("-g", "--graph", required=True)
    chio.add_argument("--k-max", type=int, default=5)
    chio.add_argument("--json", action="store_true")
    chio.set_defaults(fn=_cmd_chi_o)

    opl = sub.add_parser("export-opl", help="emit OPL data (or model) files")
    opl.add_argument("-g", "--graph")
    opl.add_argument("-t", "--tournament")
    opl.add_argument("--model", action="store_true", help="emit the model file instead")
    opl.set_defaults(fn=_cmd_export_opl)

    vp = sub.add_parser("verify-paper", help="run the full verification pipeline")
    vp.add_argument("--seed", type=int, default=0)
    vp.add_argument("--scale", choices=["small", "full"], default="small")
    vp.add_argument("--jobs", type=int, default=1,
                    help="run the homomorphism checks in N processes")
    vp.add_argument("--json", action="store_true")
    vp.add_argument("--out", help="also write the JSON report to this path")
    vp.set_defaults(fn=_cmd_verify_paper)

    return parser


def cli_dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))
