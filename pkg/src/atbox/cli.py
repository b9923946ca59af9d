"""Command-line interface.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 not AT-free,
4 internal verification failure, 5 cap refusal.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Sequence

from . import cubebound
from .boxrep import (
    InternalVerifyError,
    PreconditionError,
    RepresentationFormatError,
    box_upper,
    chromatic_boxrep,
    dumps_representation,
    girth5_boxrep,
    loads_representation,
    verify,
)
from .cubebound import CapExceeded
from .generators import FAMILIES, GraphFamilySpec, generate
from .graph import (
    Graph,
    GraphError,
    connected_components,
    from_graph6,
    girth,
    parse_edge_list,
    to_edge_list,
    to_graph6,
)
from .invariants import (
    EXACT_COLOR_LIMIT,
    NotATFreeError,
    claw_number,
    color,
    diametral_dominating_pair,
    find_asteroidal_triple,
    has_claw,
    is_chordal,
    is_interval,
    require_at_free,
)
from .triangulate import is_minimal_triangulation, minimize_triangulation, split_supergraph

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_NOT_AT_FREE = 3
EXIT_INTERNAL = 4
EXIT_CAP = 5

log = logging.getLogger("atbox")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class CliConfig:
    command: str
    input: str = "-"
    input_format: Optional[str] = None
    output: Optional[str] = None
    json: bool = False
    seed: int = 0
    exact_n: int = EXACT_COLOR_LIMIT
    kmax: int = cubebound.KMAX_CAP
    verbosity: int = 0

    def __post_init__(self) -> None:
        if self.exact_n > EXACT_COLOR_LIMIT:
            raise CliError(f"--exact-n may not exceed {EXACT_COLOR_LIMIT}", EXIT_CAP)
        if not 0 <= self.kmax <= cubebound.KMAX_CAP:
            raise CliError(f"--kmax must lie in 0..{cubebound.KMAX_CAP}", EXIT_CAP)


# ---------------------------------------------------------------------------
# I/O helpers
# ---------------------------------------------------------------------------


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_INPUT) from None


def _guess_format(path: str, text: str) -> str:
    if path != "-":
        suffix = Path(path).suffix.lower()
        if suffix in (".g6", ".graph6"):
            return "graph6"
        if suffix in (".txt", ".edges", ".el", ".edgelist"):
            return "edgelist"
    first = text.strip().splitlines()[0] if text.strip() else ""
    return "edgelist" if len(first.split()) == 2 else "graph6"


def load_graph(path: str, fmt: Optional[str]) -> Graph:
    text = _read_text(path)
    fmt = fmt or _guess_format(path, text)
    try:
        return from_graph6(text.strip().splitlines()[0] if text.strip() else "") if fmt == "graph6" else parse_edge_list(text)
    except GraphError as exc:
        raise CliError(f"{path}: {exc}", EXIT_INPUT) from None


def _emit(text: str, output: Optional[str]) -> None:
    if output and output != "-":
        try:
            Path(output).write_text(text)
        except OSError as exc:
            raise CliError(f"cannot write {output}: {exc}", EXIT_INPUT) from None
    else:
        sys.stdout.write(text)


def _report(cfg: CliConfig, data: dict[str, Any]) -> None:
    if cfg.json:
        _emit(json.dumps(data, indent=1) + "\n", cfg.output)
        return
    lines = []
    for key, value in data.items():
        if isinstance(value, bool):
            value = str(value).lower()
        elif value is None:
            value = "none"
        elif isinstance(value, (dict, list)):
            value = json.dumps(value)
        lines.append(f"{key}: {value}")
    _emit("\n".join(lines) + "\n", cfg.output)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def run_analyze(cfg: CliConfig) -> int:
    G = load_graph(cfg.input, cfg.input_format)
    triple = find_asteroidal_triple(G)
    comps = connected_components(G)
    g = girth(G)
    psi, witness = claw_number(G)
    mode = "exact" if G.n <= cfg.exact_n else "heuristic"
    coloring = color(G, mode, cfg.exact_n)
    pair = None
    if triple is None and len(comps) == 1 and G.n >= 1:
        x, y, path = diametral_dominating_pair(G)
        pair = {"x": x, "y": y, "path": path}
    data = {
        "n": G.n,
        "m": G.m,
        "girth": g if g is not None else "acyclic",
        "components": len(comps),
        "at_free": triple is None,
        "asteroidal_triple": list(triple) if triple else None,
        "dominating_pair": pair,
        "psi": psi,
        "claw": {"center": witness.center, "leaves": list(witness.leaves)} if witness else None,
        "colors": coloring.k,
        "coloring_mode": mode,
        "chordal": bool(is_chordal(G)),
        "interval": triple is None and bool(is_chordal(G)),
        "unit_interval": triple is None and bool(is_chordal(G)) and not has_claw(G),
    }
    _report(cfg, data)
    return EXIT_OK


def run_boxrep(cfg: CliConfig, method: str = "auto") -> int:
    G = load_graph(cfg.input, cfg.input_format)
    require_at_free(G)
    if method == "auto":
        R = box_upper(G).representation
    elif method == "girth5":
        R = girth5_boxrep(G)
    elif method == "coloring":
        mode = "exact" if G.n <= cfg.exact_n else "heuristic"
        R = chromatic_boxrep(G, color(G, mode, cfg.exact_n))
    else:
        raise CliError(f"unknown method {method!r}", EXIT_INPUT)
    problems = verify(G, R)
    if problems:
        raise CliError(f"internal verification failure: {problems[0]}", EXIT_INTERNAL)
    _emit(dumps_representation(R, G) + "\n", cfg.output)
    summary = f"dims: {R.dimension}\nmethod: {R.method}\nverified\n"
    (sys.stderr if not cfg.output or cfg.output == "-" else sys.stdout).write(summary)
    return EXIT_OK


def run_verify(cfg: CliConfig, rep_path: str) -> int:
    G = load_graph(cfg.input, cfg.input_format)
    try:
        R, embedded = loads_representation(_read_text(rep_path))
    except RepresentationFormatError as exc:
        raise CliError(f"{rep_path}: {exc}", EXIT_INPUT) from None
    if R.n != G.n:
        raise CliError(f"representation has n={R.n}, graph has n={G.n}", EXIT_INPUT)
    if embedded is not None and embedded != G:
        log.warning("representation's embedded graph6 differs from the input graph")
    problems = verify(G, R)
    if cfg.json:
        _emit(json.dumps({"ok": not problems, "violations": [
            {"pair": list(p.pair), "kind": p.kind, "pattern": list(p.pattern)} for p in problems
        ]}, indent=1) + "\n", cfg.output)
    else:
        text = "Ok\n" if not problems else "".join(f"violation: {p}\n" for p in problems)
        _emit(text, cfg.output)
    return EXIT_OK if not problems else EXIT_VERIFY


def run_exact(cfg: CliConfig, param: str) -> int:
    G = load_graph(cfg.input, cfg.input_format)
    result = cubebound.exact_parameter(G, param, cfg.kmax)
    data: dict[str, Any] = {
        "param": param,
        "value": result.value,
        "exceeds_kmax": result.exceeds,
        "kmax": cfg.kmax,
    }
    if result.representation is not None:
        data["witness"] = json.loads(dumps_representation(result.representation, G))
    elif result.factors:
        data["witness_factors"] = [to_graph6(F) for F in result.factors]
    if cfg.json:
        _report(cfg, data)
    else:
        value = result.value if result.value is not None else f"> {cfg.kmax}"
        lines = [f"{param}: {value}"]
        if "witness" in data:
            lines.append("witness: " + json.dumps(data["witness"]))
        if "witness_factors" in data:
            lines.append("witness_factors: " + " ".join(data["witness_factors"]))
        _emit("\n".join(lines) + "\n", cfg.output)
    return EXIT_OK


def run_bounds(cfg: CliConfig, with_exact: bool = False) -> int:
    G = load_graph(cfg.input, cfg.input_format)
    report = cubebound.cub_upper(G, with_exact=with_exact)
    _emit(json.dumps(report.as_dict(), indent=1) + "\n", cfg.output)
    return EXIT_OK


def run_triangulate(cfg: CliConfig, color_class: int = 0) -> int:
    G = load_graph(cfg.input, cfg.input_format)
    require_at_free(G)
    mode = "exact" if G.n <= cfg.exact_n else "heuristic"
    coloring = color(G, mode, cfg.exact_n)
    if G.n and not 0 <= color_class < coloring.k:
        raise CliError(f"--class must lie in 0..{coloring.k - 1}", EXIT_INPUT)
    H = split_supergraph(G, coloring, color_class) if G.n else G
    fill = minimize_triangulation(G, H)
    H_min = fill.graph
    data = {
        "n": G.n,
        "fill": [list(e) for e in sorted(fill.fill)],
        "graph6": to_graph6(H_min),
        "minimal": is_minimal_triangulation(G, H_min),
        "interval": is_interval(H_min),
        "unit_interval": is_interval(H_min) and not has_claw(H_min),
        "psi_G": claw_number(G)[0],
        "psi_H": claw_number(H_min)[0],
    }
    _report(cfg, data)
    return EXIT_OK


def run_gen(cfg: CliConfig, family: str, params: Sequence[int], fmt: str) -> int:
    try:
        spec = GraphFamilySpec(family, tuple(params), cfg.seed)
        G = generate(spec)
    except GraphError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    sys.stderr.write(f"# family={family} params={list(params)} seed={cfg.seed} n={G.n} m={G.m}\n")
    _emit(to_graph6(G) + "\n" if fmt == "graph6" else to_edge_list(G), cfg.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="atbox", description="Box representations of AT-free graphs.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", default="-", help="graph file or '-' for stdin")
        p.add_argument("--format", dest="input_format", choices=["edgelist", "graph6"])
        p.add_argument("-o", "--output")
        p.add_argument("--json", action="store_true")
        p.add_argument("--exact-n", type=int, default=EXACT_COLOR_LIMIT)
        return p

    graph_command("analyze", "recognition predicates and parameters")
    p = graph_command("boxrep", "build and verify a box representation")
    p.add_argument("--method", choices=["auto", "girth5", "coloring"], default="auto")
    p = graph_command("verify", "check a representation file against a graph")
    p.add_argument("rep", help="representation JSON file")
    p = graph_command("exact", "exact box / cub / chord for small graphs")
    p.add_argument("--param", choices=list(cubebound.PARAMS), default="box")
    p.add_argument("--kmax", type=int, default=cubebound.KMAX_CAP)
    p = graph_command("bounds", "cubicity bound report (JSON)")
    p.add_argument("--exact", action="store_true", help="include exact oracle values")
    p = graph_command("triangulate", "minimal triangulation from a split supergraph")
    p.add_argument("--class", dest="color_class", type=int, default=0)

    p = sub.add_parser("gen", help="generate a graph family member")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", dest="out_format", choices=["edgelist", "graph6"], default="edgelist")
    p.add_argument("-o", "--output")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s: %(message)s")
    try:
        cfg = CliConfig(
            command=args.command,
            input=getattr(args, "input", "-"),
            input_format=getattr(args, "input_format", None),
            output=getattr(args, "output", None),
            json=getattr(args, "json", False),
            seed=getattr(args, "seed", 0),
            exact_n=getattr(args, "exact_n", EXACT_COLOR_LIMIT),
            kmax=getattr(args, "kmax", cubebound.KMAX_CAP),
            verbosity=args.verbose,
        )
        if args.command == "analyze":
            return run_analyze(cfg)
        if args.command == "boxrep":
            return run_boxrep(cfg, args.method)
        if args.command == "verify":
            return run_verify(cfg, args.rep)
        if args.command == "exact":
            return run_exact(cfg, args.param)
        if args.command == "bounds":
            return run_bounds(cfg, args.exact)
        if args.command == "triangulate":
            return run_triangulate(cfg, args.color_class)
        return run_gen(cfg, args.family, args.params, args.out_format)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code
    except (NotATFreeError, PreconditionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NOT_AT_FREE
    except InternalVerifyError as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    except CapExceeded as exc:
        sys.stderr.write(f"refused: {exc}\n")
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
