"""Command line front end.

Subcommands read JSON from a file argument or stdin ("-") and write JSON
(or DOT) to stdout, so they compose in pipes: generate base5 | color
--exact. Exit status: 0 for success and expected verdicts, 1 for a
verification failure, 2 for usage or input errors. Diagnostics go to
stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .claims import CLAIM_IDS, EXPECTED_VERDICTS, HarnessConfig, run_claim
from .coloring import exact_chromatic, induction_color
from .core import Coloring, MapGraph, color_name
from .embedding import PlanarEmbedding
from .generators import (
    base_map_5,
    build_figure1,
    complete_multipartite,
    flower_counterexample,
    random_planar_map,
)
from .hyperdim import adjacency_graph, check_conjecture, curve_map, neighborly_boxes
from .planarity import euler_check, find_kuratowski, is_planar

# Paul Tol's bright palette: readable fills for up to 7 colors.
_DOT_FILLS = (
    "#4477aa",
    "#ee6677",
    "#228833",
    "#ccbb44",
    "#66ccee",
    "#aa3377",
    "#bbbbbb",
)


def export_dot(
    m: MapGraph, col: Coloring | None = None, show_dotted: bool = False
) -> str:
    """Render a map as DOT: solid lines for borders, fills for colors.

    With ``show_dotted``, non-adjacent face pairs are drawn dashed, the way
    complete multipartite families mark their within-class pairs.
    """
    lines = ["graph map {", "  node [shape=circle, style=filled];"]
    for f in m.faces:
        c = col.color_of(f) if col is not None else None
        if c is None:
            lines.append(f'  "{f}" [fillcolor="white"];')
        else:
            fill = _DOT_FILLS[c % len(_DOT_FILLS)]
            lines.append(
                f'  "{f}" [fillcolor="{fill}", label="{f}={color_name(c)}"];'
            )
    for f, g in m.pairs:
        lines.append(f'  "{f}" -- "{g}";')
    if show_dotted:
        adjacent = set(m.pairs)
        for i, f in enumerate(m.faces):
            for g in m.faces[i + 1 :]:
                if (f, g) not in adjacent:
                    lines.append(f'  "{f}" -- "{g}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _read_json(path: str) -> object:
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    return json.loads(text)


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _emit_json(data: object, out: str | None) -> None:
    _emit(json.dumps(data, indent=2), out)


def _load_map(path: str) -> MapGraph:
    data = _read_json(path)
    if not isinstance(data, dict):
        raise ValueError("map JSON must be an object")
    return MapGraph.from_json_dict(data)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mapcolor",
        description="Planar map coloring toolkit: color maps, test planarity, "
        "check Euler counts, generate instances, and run the claim registry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_color = sub.add_parser("color", help="four-color a map")
    p_color.add_argument("map", nargs="?", default="-", help="map JSON path or - for stdin")
    mode = p_color.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact search for the chromatic number")
    mode.add_argument("--induction", action="store_true", help="greedy extension with backtracking (default)")
    p_color.add_argument("--k", type=int, default=4, help="palette cap for --exact (default 4)")
    p_color.add_argument("--format", choices=("json", "dot"), default="json")
    p_color.add_argument("--show-dotted", action="store_true", help="dashed lines for non-adjacent pairs in DOT output")
    p_color.add_argument("-o", "--output", default=None, help="write to file instead of stdout")

    p_plan = sub.add_parser("planarity", help="planarity verdict, optionally with a witness")
    p_plan.add_argument("map", nargs="?", default="-")
    p_plan.add_argument("--witness", action="store_true", help="include a K5/K33 subdivision witness when non-planar")
    p_plan.add_argument("-o", "--output", default=None)

    p_euler = sub.add_parser("euler", help="vertex/edge/face counts of an embedding")
    p_euler.add_argument("embedding", nargs="?", default="-", help="embedding JSON path or - for stdin")
    p_euler.add_argument("-o", "--output", default=None)

    p_gen = sub.add_parser("generate", help="emit a bundled instance as JSON")
    gen = p_gen.add_subparsers(dest="what", required=True)

    def gen_parser(name: str, help_text: str) -> argparse.ArgumentParser:
        p = gen.add_parser(name, help=help_text)
        p.add_argument("-o", "--output", default=None)
        return p

    gen_parser("figure1", "five-face polyhedral fixture (embedding JSON)")
    gen_parser("base5", "five faces, all adjacent except D-E")
    p_multi = gen_parser("multipartite", "complete 4-partite map")
    p_multi.add_argument("i", type=int)
    p_multi.add_argument("j", type=int)
    p_multi.add_argument("k", type=int)
    p_multi.add_argument("l", type=int)
    p_rand = gen_parser("random", "seeded random planar triangulation")
    p_rand.add_argument("n", type=int, help="number of faces (>= 4)")
    p_rand.add_argument("seed", type=int)
    gen_parser("flower", "center/petals/ring map from the blocked-extension fixture")
    p_boxes = gen_parser("boxes", "neighborly voxel regions (voxel JSON)")
    p_boxes.add_argument("m", type=int, help="number of regions (2..32)")
    p_curve = gen_parser("curve", "curve segments: a path, or a cycle with --closed")
    p_curve.add_argument("n", type=int, help="number of segments")
    p_curve.add_argument("--closed", action="store_true")
    for p in (p_multi, p_rand, p_curve):
        p.add_argument("--format", choices=("json", "dot"), default="json")
        p.add_argument("--show-dotted", action="store_true")

    p_claims = sub.add_parser("claims", help="run the claim registry")
    p_claims.add_argument("--claim", choices=CLAIM_IDS, default=None, help="run a single claim")
    p_claims.add_argument("--seed", type=int, default=0, help="master corpus seed")
    p_claims.add_argument("-o", "--output", default=None)

    p_hyper = sub.add_parser("hyperdim", help="dimension sweep checks")
    hyper = p_hyper.add_subparsers(dest="check", required=True)
    p_n1 = hyper.add_parser("check-n1", help="curve maps up to N segments against the bound 3")
    p_n1.add_argument("n", type=int)
    p_n1.add_argument("-o", "--output", default=None)
    p_n3 = hyper.add_parser("check-n3", help="neighborly boxes with M regions against the bound 5")
    p_n3.add_argument("m", type=int)
    p_n3.add_argument("-o", "--output", default=None)

    return parser


def _cmd_color(args: argparse.Namespace) -> int:
    m = _load_map(args.map)
    if args.exact:
        if args.k < 1:
            raise ValueError("--k must be at least 1")
        chi, witness = exact_chromatic(m, args.k)
        if witness is None:
            print(f"no coloring with at most {args.k} colors", file=sys.stderr)
            return 1
        col = witness
    else:
        col = induction_color(m)
        if col is None:
            print("no proper 4-coloring exists", file=sys.stderr)
            return 1
    if args.format == "dot":
        _emit(export_dot(m, col, show_dotted=args.show_dotted), args.output)
    else:
        _emit_json(col.to_json_dict(), args.output)
    return 0


def _cmd_planarity(args: argparse.Namespace) -> int:
    m = _load_map(args.map)
    result: dict[str, object]
    if args.witness:
        witness = find_kuratowski(m)
        result = {
            "planar": witness is None,
            "witness": None if witness is None else witness.to_json_dict(),
        }
    else:
        result = {"planar": is_planar(m)}
    _emit_json(result, args.output)
    return 0


def _cmd_euler(args: argparse.Namespace) -> int:
    data = _read_json(args.embedding)
    if not isinstance(data, dict):
        raise ValueError("embedding JSON must be an object")
    emb = PlanarEmbedding.from_json_dict(data)
    report = euler_check(emb)
    _emit_json(report.to_json_dict(), args.output)
    return 0 if report.consistent else 1


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.what == "figure1":
        _emit_json(build_figure1().embedding.to_json_dict(), args.output)
        return 0
    if args.what == "boxes":
        _emit_json(neighborly_boxes(args.m).to_json_dict(), args.output)
        return 0
    if args.what == "base5":
        m, _col = base_map_5()
    elif args.what == "multipartite":
        m = complete_multipartite(args.i, args.j, args.k, args.l)
    elif args.what == "random":
        m = random_planar_map(args.n, args.seed)
    elif args.what == "flower":
        m, _sub, _precol = flower_counterexample()
    elif args.what == "curve":
        m = curve_map(args.n, closed=args.closed)
    else:  # unreachable with required=True
        raise ValueError(f"unknown generator {args.what!r}")
    if getattr(args, "format", "json") == "dot":
        _emit(export_dot(m, None, show_dotted=args.show_dotted), args.output)
    else:
        _emit_json(m.to_json_dict(), args.output)
    return 0


def _cmd_claims(args: argparse.Namespace) -> int:
    ids = [args.claim] if args.claim else list(CLAIM_IDS)
    cfg = HarnessConfig(seed=args.seed)
    statuses = [run_claim(cid, cfg) for cid in ids]
    _emit_json([s.to_json_dict() for s in statuses], args.output)
    ok = all(s.verdict == EXPECTED_VERDICTS[s.claim_id] for s in statuses)
    if not ok:
        for s in statuses:
            if s.verdict != EXPECTED_VERDICTS[s.claim_id]:
                print(
                    f"claim {s.claim_id}: got {s.verdict}, "
                    f"expected {EXPECTED_VERDICTS[s.claim_id]}",
                    file=sys.stderr,
                )
    return 0 if ok else 1


def _cmd_hyperdim(args: argparse.Namespace) -> int:
    if args.check == "check-n1":
        if args.n < 1:
            raise ValueError("N must be at least 1")
        reports = [
            check_conjecture(1, curve_map(n), f"open curve, {n} segments")
            for n in range(1, args.n + 1)
        ] + [
            check_conjecture(1, curve_map(n, closed=True), f"closed curve, {n} segments")
            for n in range(3, args.n + 1)
        ]
        _emit_json(
            {
                "dimension": 1,
                "bound": 3,
                "instances": [r.to_json_dict() for r in reports],
                "all_consistent": all(r.verdict == "Consistent" for r in reports),
            },
            args.output,
        )
        return 0
    cx = neighborly_boxes(args.m)
    report = check_conjecture(3, adjacency_graph(cx), f"neighborly boxes, m={args.m}")
    _emit_json(report.to_json_dict(), args.output)
    return 0


_DISPATCH = {
    "color": _cmd_color,
    "planarity": _cmd_planarity,
    "euler": _cmd_euler,
    "generate": _cmd_generate,
    "claims": _cmd_claims,
    "hyperdim": _cmd_hyperdim,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
