"""Command-line front door: arbor {color,verify,oracle,sweep,gen}.

Documents go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 parse/input error (and failed verification/sweeps), 2 construction out of
scope, 3 oracle cap exceeded, 64 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import construct, graph, oracle
from .errors import ArborError, CapExceeded, FormatError, OutOfScope

EX_OK = 0
EX_ERROR = 1
EX_OUT_OF_SCOPE = 2
EX_CAP = 3
EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _write_output(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def _load_graph(path: str) -> graph.Graph:
    return graph.read_graph(_read_input(path))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="arbor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_color = sub.add_parser("color", help="construct an equitable tree coloring")
    p_color.add_argument("input", help="graph document path, or - for stdin")
    p_color.add_argument("-o", "--output", default="-", help="coloring output path (default stdout)")

    p_verify = sub.add_parser("verify", help="check a coloring against a graph")
    p_verify.add_argument("input", help="graph document path, or - for stdin")
    p_verify.add_argument("coloring", help="coloring document path")
    p_verify.add_argument("--strict", action="store_true", help="require linear forests per class")

    p_oracle = sub.add_parser("oracle", help="exact equitable vertex arboricity")
    p_oracle.add_argument("input", help="graph document path, or - for stdin")
    p_oracle.add_argument("--k", type=int, default=None, help="also decide a specific class count")
    p_oracle.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP, help="order cap for the exact search")

    p_sweep = sub.add_parser("sweep", help="exhaustive check over all labeled graphs of order n")
    p_sweep.add_argument("--n", type=int, required=True, help="graph order (1..7)")
    p_sweep.add_argument(
        "--regime-only",
        action="store_true",
        help="only construct+verify graphs with max degree >= n/2 (skip the exact oracle)",
    )
    p_sweep.add_argument("--threads", type=int, default=None, help="worker count (ARBOR_THREADS also caps it)")

    p_gen = sub.add_parser("gen", help="seeded random graph with max degree >= n/2")
    p_gen.add_argument("--n", type=int, required=True, help="graph order (>= 2)")
    p_gen.add_argument("--seed", type=int, required=True, help="generator seed")
    p_gen.add_argument("-o", "--output", default="-", help="graph output path (default stdout)")

    return parser


def _cmd_color(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    try:
        coloring = construct.equitable_tree_coloring(g)
    except OutOfScope as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_OUT_OF_SCOPE
    _write_output(args.output, construct.write_coloring(coloring))
    return EX_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    coloring = construct.read_coloring(_read_input(args.coloring))
    try:
        report = oracle.verify(g, coloring, strict_linear=args.strict)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_ERROR
    sys.stdout.write(report.to_text())
    return EX_OK if report.ok else EX_ERROR


def _cmd_oracle(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    try:
        a_eq = oracle.exact_a_eq(g, cap=args.cap)
        lines = [f"a_eq {a_eq}", f"gamma {construct.gamma(g)}"]
        if args.k is not None:
            witness = oracle.find_equitable_coloring(g, args.k, cap=args.cap)
            lines.append(f"exists_{args.k} {'yes' if witness is not None else 'no'}")
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_CAP
    print("\n".join(lines))
    return EX_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    try:
        report = oracle.sweep_conjecture(args.n, regime_only=args.regime_only, threads=args.threads)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_CAP
    sys.stdout.write(report.to_text())
    return EX_OK if report.ok else EX_ERROR


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.n < 2:
        print("error: gen needs --n >= 2", file=sys.stderr)
        return EX_USAGE
    g = oracle.gen_random(args.n, args.seed)
    _write_output(args.output, graph.write_graph(g))
    return EX_OK


_COMMANDS = {
    "color": _cmd_color,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "sweep": _cmd_sweep,
    "gen": _cmd_gen,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_ERROR
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_ERROR
    except ArborError as exc:
        # Internal construction defects (insufficient matching, failed
        # allocation, failed self-verification) abort with a diagnostic.
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EX_ERROR


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
