"""
fliplab command line.

    fliplab gen convex --n 6 | fliplab flipgraph --kind edge
    fliplab connectivity points.txt --kind bistellar
    fliplab link points.txt --triangulation <hex key>
    fliplab poset points.txt
    fliplab regular --mother concurrent
    fliplab verify --suite thm5 --suite thm3ii --n-max 7

Exit codes: 0 when everything passes, 1 on a failed check or an exceeded cap, 2 on a
usage error or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional

import networkx as nx
from loguru import logger

from ..errors import (
    CapExceeded,
    CollinearTriple,
    CoordinateOutOfRange,
    DuplicatePoint,
    FlipLabError,
    InvalidFormatError,
)
from ..flipgraphs import (
    build_bistellar_flip_graph,
    build_edge_flip_graph,
    link_of,
    min_degree,
    vertex_connectivity,
)
from ..generators import (
    SUPPORTED_FAMILIES,
    convex_gon,
    mother_example,
    mother_triangulations,
    random_points,
    stacked_points,
    twisted_double_gon,
)
from ..geometry import PointSet, format_points, parse_points
from ..regularity import is_regular_subdivision, is_regular_triangulation
from ..subdivisions import Subdivision, build_full_poset, build_poset
from ..triangulations import (
    FULL,
    PARTIAL,
    Triangulation,
    key_from_hex,
    seed_full_triangulation,
    triangulation_from_key,
)
from ..utils import Settings, load_settings
from .export import FORMATS, export_graph
from .verify import DEFAULT_N_MAX, SUITE_CHOICES, run_suites

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

INPUT_ERRORS = (
    InvalidFormatError,
    DuplicatePoint,
    CollinearTriple,
    CoordinateOutOfRange,
)


def configure_logging(level: str) -> None:
    logger.remove()
    logger.add(sys.stderr, level=level.upper())


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        logger.error(f"cannot read '{path}': {e}")
        raise InvalidFormatError(f"cannot read '{path}'") from e


def _points(path: str) -> PointSet:
    return parse_points(_read_text(path))


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text)
        logger.info(f"wrote {output}")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _triangulation(ps: PointSet, given: Optional[str]) -> Triangulation:
    """A triangulation given as a hex key or as a JSON file; the seed one by default."""
    if given is None:
        return seed_full_triangulation(ps)
    try:
        if Path(given).is_file():
            t = Triangulation.from_json(ps, Path(given).read_text())
        else:
            t = triangulation_from_key(ps, key_from_hex(given))
    except (ValueError, KeyError, TypeError) as e:
        logger.error(f"cannot read triangulation {given!r}: {e}")
        raise InvalidFormatError(f"not a triangulation key or file: {given!r}") from e
    violations = t.validate()
    if violations:
        logger.error(f"invalid triangulation: {violations[0]}")
        raise InvalidFormatError(f"invalid triangulation: {violations[0]}")
    return t


def _graph_file(text: str) -> Optional[nx.Graph]:
    """An exported JSON graph, or None if text is not one."""
    try:
        payload = json.loads(text)
    except ValueError:
        return None
    if not isinstance(payload, dict) or "edges" not in payload:
        return None
    graph = nx.DiGraph() if payload.get("directed") else nx.Graph()
    graph.add_nodes_from(node["id"] for node in payload["nodes"])
    graph.add_edges_from((e["source"], e["target"]) for e in payload["edges"])
    return graph


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_gen(args, settings: Settings) -> int:
    family = args.family
    if family == "convex":
        ps = convex_gon(args.n)
    elif family == "twisted":
        ps = twisted_double_gon(args.k)
    elif family == "mother":
        ps = mother_example(not args.non_concurrent)
    elif family == "random":
        ps = random_points(args.n, seed=settings.seed, box=args.box)
    else:
        ps = stacked_points(args.depth)
    logger.info(f"generated {family} set: n={ps.n}, h={ps.h}")
    _emit(format_points(ps, "json" if args.format == "json" else "text"), args.output)
    return EXIT_OK


def cmd_flipgraph(args, settings: Settings) -> int:
    ps = _points(args.points)
    if args.kind == "edge":
        g = build_edge_flip_graph(ps, cap=settings.edge_flip_cap)
    else:
        g = build_bistellar_flip_graph(ps, cap=settings.bistellar_cap)
    _emit(export_graph(g, args.format or "dot"), args.output)
    return EXIT_OK


def cmd_connectivity(args, settings: Settings) -> int:
    text = _read_text(args.points)
    graph = _graph_file(text)
    if graph is None:
        ps = parse_points(text)
        if args.kind == "edge":
            graph = build_edge_flip_graph(ps, cap=settings.edge_flip_cap).graph
        else:
            graph = build_bistellar_flip_graph(ps, cap=settings.bistellar_cap).graph
    kappa = vertex_connectivity(graph)
    result = {
        "nodes": graph.number_of_nodes(),
        "edges": graph.number_of_edges(),
        "min_degree": min_degree(graph),
        "connectivity": kappa,
    }
    if args.format == "json":
        _emit(json.dumps(result, sort_keys=True), args.output)
    else:
        _emit(str(kappa), args.output)
    return EXIT_OK


def cmd_link(args, settings: Settings) -> int:
    ps = _points(args.points)
    t = _triangulation(ps, args.triangulation)
    kind = {"full": FULL, "partial": PARTIAL}.get(args.kind) or t.kind
    _emit(export_graph(link_of(t, kind), args.format or "dot"), args.output)
    return EXIT_OK


def cmd_poset(args, settings: Settings) -> int:
    ps = _points(args.points)
    build = build_full_poset if args.full else build_poset
    poset = build(ps, cap=settings.poset_cap)
    _emit(export_graph(poset, args.format or "json"), args.output)
    return EXIT_OK


def cmd_regular(args, settings: Settings) -> int:
    verdicts = {}
    if args.mother:
        ps = mother_example(args.mother == "concurrent")
        s, t1, t2 = mother_triangulations(ps)
        verdicts["S"] = is_regular_subdivision(s, certify=args.certify)
        verdicts["T'"] = is_regular_triangulation(t1, certify=args.certify)
        verdicts["T''"] = is_regular_triangulation(t2, certify=args.certify)
    else:
        if not args.points:
            raise InvalidFormatError("regular needs a point file or --mother")
        ps = _points(args.points)
        if args.subdivision:
            try:
                s = Subdivision.from_json(ps, _read_text(args.subdivision))
            except (ValueError, KeyError, TypeError) as e:
                raise InvalidFormatError(f"cannot read subdivision: {e}") from e
            violations = s.validate()
            if violations:
                raise InvalidFormatError(f"invalid subdivision: {violations[0]}")
            verdicts["S"] = is_regular_subdivision(s, certify=args.certify)
        else:
            t = _triangulation(ps, args.triangulation)
            verdicts["T"] = is_regular_triangulation(t, certify=args.certify)
    if args.format == "text":
        lines = [
            f"{k}: {'regular' if r else 'non-regular'}" for k, r in verdicts.items()
        ]
        _emit("\n".join(lines), args.output)
    else:
        payload = {k: json.loads(r.to_json()) for k, r in verdicts.items()}
        _emit(json.dumps(payload, sort_keys=True, indent=2), args.output)
    return EXIT_OK


def cmd_verify(args, settings: Settings) -> int:
    report = run_suites(args.suite or ["all"], settings, n_max=args.n_max)
    _emit(report.to_json() if args.format == "json" else report.to_table(), args.output)
    return EXIT_OK if report.passed else EXIT_FAILED


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_common_options(parser: argparse.ArgumentParser, nested: bool) -> None:
    # subcommands must not overwrite values given before the subcommand name
    extra = {"default": argparse.SUPPRESS} if nested else {}
    parser.add_argument(
        "--cap", type=int, help="largest n any enumeration may take", **extra
    )
    parser.add_argument("--seed", type=int, help="seed for random point sets", **extra)
    parser.add_argument(
        "--format",
        choices=FORMATS + ("text",),
        help="output format of the command",
        **extra,
    )
    parser.add_argument(
        "--log-level", help="loguru level, e.g. DEBUG or WARNING", **extra
    )
    parser.add_argument("--config", help="YAML settings file", **extra)
    parser.add_argument(
        "-o", "--output", help="write to this file instead of stdout", **extra
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fliplab", description="Flip graphs, subdivisions and regularity checks."
    )
    _add_common_options(parser, nested=False)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a point set")
    gen.add_argument("family", choices=sorted(SUPPORTED_FAMILIES))
    gen.add_argument("--n", type=int, default=6, help="points (convex, random)")
    gen.add_argument("--k", type=int, default=3, help="half the points (twisted)")
    gen.add_argument("--depth", type=int, default=3, help="insertions (stacked)")
    gen.add_argument("--box", type=int, default=1000, help="coordinate box (random)")
    gen.add_argument("--non-concurrent", action="store_true", help="mother variant")
    gen.set_defaults(func=cmd_gen)
    _add_common_options(gen, nested=True)

    fg = sub.add_parser("flipgraph", help="enumerate a flip graph")
    fg.add_argument(
        "points", nargs="?", default="-", help="point file, stdin if omitted"
    )
    fg.add_argument("--kind", choices=["edge", "bistellar"], default="edge")
    fg.set_defaults(func=cmd_flipgraph)
    _add_common_options(fg, nested=True)

    conn = sub.add_parser("connectivity", help="vertex connectivity of a flip graph")
    conn.add_argument("points", help="point file or exported JSON graph")
    conn.add_argument("--kind", choices=["edge", "bistellar"], default="bistellar")
    conn.set_defaults(func=cmd_connectivity)
    _add_common_options(conn, nested=True)

    link = sub.add_parser("link", help="link of a triangulation")
    link.add_argument("points")
    link.add_argument("--triangulation", help="hex key or JSON file")
    link.add_argument("--kind", choices=["full", "partial"])
    link.set_defaults(func=cmd_link)
    _add_common_options(link, nested=True)

    poset = sub.add_parser("poset", help="refinement poset of all subdivisions")
    poset.add_argument("points")
    poset.add_argument("--full", action="store_true", help="full subdivisions only")
    poset.set_defaults(func=cmd_poset)
    _add_common_options(poset, nested=True)

    reg = sub.add_parser("regular", help="decide regularity")
    reg.add_argument("points", nargs="?")
    group = reg.add_mutually_exclusive_group()
    group.add_argument("--triangulation", help="hex key or JSON file")
    group.add_argument("--subdivision", help="JSON file")
    group.add_argument("--mother", choices=["concurrent", "non-concurrent"])
    reg.add_argument("--certify", action="store_true", help="attach certificates")
    reg.set_defaults(func=cmd_regular)
    _add_common_options(reg, nested=True)

    ver = sub.add_parser("verify", help="run verification suites")
    ver.add_argument(
        "--suite", action="append", choices=SUITE_CHOICES, help="repeatable"
    )
    ver.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    ver.set_defaults(func=cmd_verify)
    _add_common_options(ver, nested=True)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = load_settings(args.config).with_cap(args.cap)
    except InvalidFormatError as e:
        configure_logging("INFO")
        logger.error(f"{e}")
        return EXIT_USAGE
    if args.seed is not None:
        settings = replace(settings, seed=args.seed)
    configure_logging(args.log_level or settings.log_level)
    logger.debug(f"settings: {settings}")
    try:
        return args.func(args, settings)
    except INPUT_ERRORS as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    except CapExceeded as e:
        logger.error(f"cap exceeded: instance has n={e.n}, cap is {e.cap}")
        return EXIT_FAILED
    except FlipLabError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
