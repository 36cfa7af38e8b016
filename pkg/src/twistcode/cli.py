"""Command-line entry point.

Exit codes: 0 success (or proposition verified), 1 proposition failed,
2 parse error, 3 validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import graphs
from .codes import DEFAULT_DIM_CAP
from .errors import DimensionMismatch, ParseError, ValidationError
from .realization import build_graph_code, parse_assignment, report, uniform_assignment, verify_proposition

EXIT_OK, EXIT_FALSE, EXIT_PARSE, EXIT_VALIDATION = 0, 1, 2, 3

_GRAPH_KINDS = {
    "complete": 1,
    "cycle": 1,
    "path": 1,
    "petersen": 0,
    "hypercube": 1,
    "star": 1,
    "complete-bipartite": 2,
    "paley": 1,
    "random-regular": 2,
    "random": 2,
}


def _emit(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    lines = []
    for key, value in record.items():
        if isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {v}" for k, v in value.items())
        elif isinstance(value, list):
            lines.append(f"{key}:")
            lines.extend(f"  - {v}" for v in value)
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _load_graph(path: str) -> graphs.Graph:
    try:
        return graphs.parse_graph(_read(path))
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _load_instance(args):
    G = _load_graph(args.graph)
    if args.assignment and args.local_code:
        raise ValidationError("give either an assignment file or --local-code, not both")
    if args.assignment:
        try:
            assignment = parse_assignment(_read(args.assignment), G)
        except ParseError as exc:
            raise ParseError(f"{args.assignment}: {exc}") from exc
    elif args.local_code:
        assignment = uniform_assignment(G, args.local_code, seed=args.seed)
    else:
        raise ValidationError("need an assignment file or --local-code")
    return build_graph_code(G, assignment)


def cmd_gen_graph(args) -> int:
    kind = args.kind
    if kind not in _GRAPH_KINDS:
        raise ValidationError(f"unknown graph kind {kind!r}; choose from {', '.join(_GRAPH_KINDS)}")
    if len(args.params) != _GRAPH_KINDS[kind]:
        raise ValidationError(f"{kind} takes {_GRAPH_KINDS[kind]} integer parameter(s), got {len(args.params)}")
    if kind == "random-regular":
        G = graphs.random_regular(*args.params, seed=args.seed)
    elif kind == "random":
        G = graphs.random_graph(*args.params, seed=args.seed)
    else:
        G = graphs.named_graph(kind, *args.params)
    text = graphs.format_graph(G)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    G = _load_graph(args.graph)
    spec = graphs.spectrum(G) if G.n else []
    record = {
        "vertices": G.n,
        "edges": G.m,
        "regular_degree": graphs.is_regular(G),
        "lambda1": round(float(spec[0]), 12) + 0.0 if G.n >= 1 else None,
        "lambda2": round(float(spec[1]), 12) + 0.0 if G.n >= 2 else None,
        "lambda2_abs": round(graphs.second_eigenvalue_abs(G), 12) + 0.0 if G.n >= 2 else None,
        "girth": graphs.girth(G),
        "cycle_space_dimension": graphs.cycle_space_dimension(G),
    }
    sys.stdout.write(_emit(record, args.format))
    return EXIT_OK


def cmd_report(args) -> int:
    instance = _load_instance(args)
    sys.stdout.write(_emit(report(instance, args.max_bruteforce_dim), args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    instance = _load_instance(args)
    verdict = verify_proposition(instance)
    record = {
        "code_dimension": verdict.code_dimension,
        "homology_dimension": verdict.homology_dimension,
        "holds": verdict.holds,
    }
    if not verdict.holds:
        record["reason"] = verdict.reason
        record["witness"] = None if verdict.witness is None else str(verdict.witness)
    sys.stdout.write(_emit(record, args.format))
    return EXIT_OK if verdict.holds else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice (default 0)")
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="twistcode", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-graph", parents=[common], help="write a graph file")
    p.add_argument("kind", help=", ".join(_GRAPH_KINDS))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen_graph)

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues, girth and cycle-space dimension")
    p.add_argument("graph")
    p.set_defaults(func=cmd_spectrum)

    for name, func, help_ in (
        ("report", cmd_report, "code parameters, bounds and verdict"),
        ("verify", cmd_verify, "check graph code == twisted H_1; exit 0 iff equal"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("graph")
        p.add_argument("assignment", nargs="?")
        p.add_argument("--local-code", help="parity | full | zero | hamming74 | random:<k>")
        p.add_argument("--max-bruteforce-dim", type=int, default=DEFAULT_DIM_CAP)
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValidationError, DimensionMismatch) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
