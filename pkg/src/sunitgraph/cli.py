"""Command-line interface: JSON on stdout, exit 0 / 1 (domain failure) / 2 (usage)."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .analyze import brute_force_search, census_equivalence_classes, classify
from .diophantine import UnitEquation, solve_bounded
from .errors import SUnitGraphError
from .graphcore import Graph, is_forest
from .sintring import PrimeSet, format_rational, parse_rational
from .synthesis import (
    cubical_to_representation,
    hypercube_embed,
    represent_any,
    represent_forest,
    rescale_representation,
)
from .unitgraph import Representation, build_graph, canonical_values


class DomainFailure(Exception):
    """The command ran but produced no result; the payload is still printed."""

    def __init__(self, payload: Any, message: str) -> None:
        super().__init__(message)
        self.payload = payload


def _primes(text: str) -> PrimeSet:
    try:
        return PrimeSet.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rationals(text: str) -> list[Fraction]:
    try:
        return [parse_rational(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _graph(path: str) -> Graph:
    try:
        return Graph.parse(_read(path))
    except OSError as exc:
        raise argparse.ArgumentTypeError(f"cannot read {path}: {exc.strerror}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"cannot parse graph in {path}: {exc}") from None


def _representation(path: str) -> Representation:
    try:
        return Representation.from_json(json.loads(_read(path)))
    except OSError as exc:
        raise argparse.ArgumentTypeError(f"cannot read {path}: {exc.strerror}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"cannot parse representation in {path}: {exc}") from None


def _cmd_build(args: argparse.Namespace) -> Any:
    return build_graph(args.primes, args.points).to_json()


def _cmd_represent(args: argparse.Namespace) -> Any:
    G = args.graph
    if args.primes is None:
        return represent_any(G, variant=args.variant).to_json()
    if is_forest(G):
        return represent_forest(G, args.primes).to_json()
    embedding = hypercube_embed(G, args.max_dim)
    if embedding is None:
        raise DomainFailure(None, "graph is neither a forest nor cubical; omit --primes to let S be chosen")
    return cubical_to_representation(G, embedding, args.primes).to_json()


def _cmd_rescale(args: argparse.Namespace) -> Any:
    return rescale_representation(args.rep, args.primes, variant=args.variant).to_json()


def _cmd_analyze(args: argparse.Namespace) -> Any:
    return classify(args.graph, args.primes).to_json()


def _cmd_embed(args: argparse.Namespace) -> Any:
    embedding = hypercube_embed(args.graph, args.max_dim, induced=not args.non_induced)
    if embedding is None:
        raise DomainFailure(None, f"no hypercube embedding up to dimension {args.max_dim}")
    return embedding.to_json()


def _cmd_units(args: argparse.Namespace) -> Any:
    coefficients = args.coefficients or [Fraction(1)] * args.arity
    eq = UnitEquation(tuple(coefficients), args.primes, args.bound)
    return [
        {"values": [format_rational(v) for v in sol.values], "degenerate": sol.degenerate}
        for sol in solve_bounded(eq)
    ]


def _cmd_canon(args: argparse.Namespace) -> Any:
    return [format_rational(v) for v in canonical_values(args.primes, args.points)]


def _cmd_census(args: argparse.Namespace) -> Any:
    return census_equivalence_classes(args.graph, args.primes, args.limit).to_json()


def _cmd_search(args: argparse.Namespace) -> Any:
    rep = brute_force_search(args.graph, args.primes, args.limit)
    if rep is None:
        raise DomainFailure(None, f"no representation in 0..{args.limit}")
    return rep.to_json()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sunitgraph", description="Construct and analyze S-unit difference graphs."
    )
    parser.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def command(name: str, fn, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=fn)
        return p

    p = command("build", _cmd_build, "unit graph of a point set")
    p.add_argument("--primes", type=_primes, required=True)
    p.add_argument("--points", type=_rationals, required=True, help="comma-separated, e.g. 0,1,3/2")

    p = command("represent", _cmd_represent, "point set whose unit graph is the given graph")
    p.add_argument("--graph", type=_graph, required=True, help="Graph JSON or edge list; - for stdin")
    p.add_argument("--primes", type=_primes, help="fixed S (forests and cubical graphs only)")
    p.add_argument("--variant", type=int, default=0)
    p.add_argument("--max-dim", type=int, default=10)

    p = command("rescale", _cmd_rescale, "move a single-prime representation to another S")
    p.add_argument("--rep", type=_representation, required=True, help="Representation JSON")
    p.add_argument("--primes", type=_primes, required=True)
    p.add_argument("--variant", type=int, default=0)

    p = command("analyze", _cmd_analyze, "representability verdict")
    p.add_argument("--graph", type=_graph, required=True)
    p.add_argument("--primes", type=_primes, required=True)

    p = command("embed", _cmd_embed, "hypercube embedding")
    p.add_argument("--graph", type=_graph, required=True)
    p.add_argument("--max-dim", type=int, default=10)
    p.add_argument("--non-induced", action="store_true", help="allow extra cube edges between non-adjacent vertices")

    p = command("units", _cmd_units, "solutions of a1 x1 + ... + an xn = 1 in a bounded exponent box")
    p.add_argument("--primes", type=_primes, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--arity", type=int, default=2)
    p.add_argument("--coefficients", type=_rationals, help="defaults to all ones")

    p = command("canon", _cmd_canon, "canonical representative of the equivalence class")
    p.add_argument("--primes", type=_primes, required=True)
    p.add_argument("--points", type=_rationals, required=True)

    p = command("census", _cmd_census, "equivalence classes of representations in a window")
    p.add_argument("--graph", type=_graph, required=True)
    p.add_argument("--primes", type=_primes, required=True)
    p.add_argument("--limit", type=int, default=40)

    p = command("search", _cmd_search, "first representation in a window, by brute force")
    p.add_argument("--graph", type=_graph, required=True)
    p.add_argument("--primes", type=_primes, required=True)
    p.add_argument("--limit", type=int, default=32)
    return parser


def _emit(payload: Any, pretty: bool) -> None:
    text = json.dumps(payload, indent=2 if pretty else None, separators=None if pretty else (",", ":"))
    sys.stdout.write(text + "\n")


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with code 2
        return int(exc.code or 0)
    try:
        payload = args.func(args)
    except DomainFailure as exc:
        _emit(exc.payload, args.pretty)
        print(f"sunitgraph: {exc}", file=sys.stderr)
        return 1
    except (SUnitGraphError, ValueError) as exc:
        print(f"sunitgraph: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    _emit(payload, args.pretty)
    return 0


def main() -> None:
    sys.exit(run())
