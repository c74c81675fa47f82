"""Command-line front end.

Exit codes: 0 success, 1 mathematical refusal (not threshold, disconnected,
...), 2 bad invocation or malformed input.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass

from . import bijection, counting
from .difference import (
    DifferenceGraph,
    build_bipartite,
    parse_bipartite,
    parse_bipartite_edge_list,
    recognize_bipartite,
    recognize_bipartite_with_order,
)
from .exceptions import ConsistencyError, GraphError, PreconditionError
from .graph_core import Graph, is_connected, parse_edge_list, to_dot
from .threshold import ThresholdGraph, build, parse, recognize, recognize_with_order

METHODS = ("formula", "uz", "kirchhoff", "enumerate")
ENUMERATE_MAX_N = 8


class Refusal(Exception):
    """The input is well formed but the request has no answer (exit 1)."""


class UsageError(Exception):
    """Malformed input (exit 2)."""


@dataclass
class Instance:
    graph: Graph
    threshold: ThresholdGraph | None = None
    difference: DifferenceGraph | None = None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _is_bipartite_header(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].split()
        if line:
            return len(line) == 2
    return False


def _load_edges(path: str, x_size: int | None = None) -> tuple[Graph, frozenset | None, frozenset | None]:
    """Plain or bipartite edge list, telling them apart by the header width."""
    text = _read(path)
    try:
        if _is_bipartite_header(text):
            return parse_bipartite_edge_list(text)
        graph = parse_edge_list(text)
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None
    if x_size is None:
        return graph, None, None
    if not 0 <= x_size <= graph.n:
        raise UsageError(f"--bipartite {x_size} is outside 0..{graph.n}")
    return graph, frozenset(range(x_size)), frozenset(range(x_size, graph.n))


def _instance(args, need_threshold: bool = False) -> Instance:
    try:
        if args.seq is not None:
            tg = build(parse(args.seq))
            return Instance(tg.graph, threshold=tg)
        if args.bipartite_seq is not None:
            H = build_bipartite(parse_bipartite(args.bipartite_seq))
            return Instance(H.graph, difference=H)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    graph, X, Y = _load_edges(args.edges)
    if X is not None:
        try:
            seq = recognize_bipartite(graph, X, Y)
        except GraphError as exc:
            raise UsageError(str(exc)) from None
        if seq is None:
            if need_threshold:
                raise Refusal("not-difference")
            return Instance(graph)
        return Instance(graph, difference=build_bipartite(seq))
    seq = recognize(graph)
    if seq is None:
        if need_threshold:
            raise Refusal("not-threshold")
        return Instance(graph)
    # build() renumbers vertices by creation index; counts are unaffected
    tg = build(seq)
    return Instance(tg.graph, threshold=tg)


def _count_with(inst: Instance, method: str) -> int:
    if method in ("formula", "uz"):
        if inst.threshold is not None:
            fn = counting.tau_threshold_formula if method == "formula" else counting.tau_threshold_uz
            return fn(inst.threshold)
        if inst.difference is not None:
            fn = (counting.tau_difference_conjugate if method == "formula"
                  else counting.tau_difference_degrees)
            return fn(inst.difference)
        raise Refusal("not-threshold: closed-form methods need a threshold or difference graph")
    if method == "kirchhoff":
        return counting.tau_kirchhoff(inst.graph)
    return len(counting.enumerate_spanning_trees(inst.graph))


def _emit_record(out, fields: dict) -> None:
    for key, value in fields.items():
        out.write(f"{key}={value}\n")


def cmd_count(args, out) -> int:
    inst = _instance(args)
    if args.check_all:
        methods = ["kirchhoff"]
        if inst.threshold is not None or inst.difference is not None:
            methods = ["formula", "uz", "kirchhoff"]
        if inst.graph.n <= ENUMERATE_MAX_N:
            methods.append("enumerate")
        values = {m: _count_with(inst, m) for m in methods}
        if len(set(values.values())) != 1:
            raise ConsistencyError("methods disagree: " +
                                   ", ".join(f"{m}={v}" for m, v in values.items()))
        tau = values[methods[0]]
        method = ",".join(methods)
    else:
        method = args.method
        tau = _count_with(inst, method)
    if args.machine:
        fields = {"n": inst.graph.n, "edges": inst.graph.edge_count(), "tau": tau}
        if inst.threshold is not None:
            fields["merris_spectrum"] = ",".join(map(str, counting.merris_spectrum(inst.threshold)))
        fields["method"] = method
        _emit_record(out, fields)
    else:
        out.write(f"{tau}\n")
    return 0


def cmd_spectrum(args, out) -> int:
    inst = _instance(args, need_threshold=True)
    if inst.threshold is None:
        raise Refusal("not-threshold")
    spectrum = counting.merris_spectrum(inst.threshold)
    verified = counting.verify_merris(inst.threshold) if args.verify else None
    if args.machine:
        fields = {"n": inst.graph.n, "merris_spectrum": ",".join(map(str, spectrum))}
        if verified is not None:
            fields["verified"] = str(verified).lower()
        _emit_record(out, fields)
    else:
        out.write(" ".join(map(str, spectrum)) + "\n")
        if verified is not None:
            out.write("verified\n" if verified else "verification FAILED\n")
    return 0 if verified is not False else 1


def cmd_sample(args, out) -> int:
    inst = _instance(args, need_threshold=True)
    if inst.graph.n < 2 or not is_connected(inst.graph):
        raise Refusal("disconnected: no spanning tree to sample")
    rng = random.Random(args.seed)
    for k in range(args.count):
        if inst.threshold is not None:
            edges = bijection.sample_spanning_tree(inst.threshold, rng=rng)
        else:
            edges = bijection.sample_difference_spanning_tree(inst.difference, rng=rng)
        if args.format == "dot":
            out.write(to_dot(inst.graph, name=f"T{k}", edges=edges))
        else:
            out.write(f"# tree {k}\n{inst.graph.n}\n")
            out.writelines(f"{u} {v}\n" for u, v in edges)
    return 0


def cmd_recognize(args, out) -> int:
    graph, X, Y = _load_edges(args.path, args.bipartite)
    if X is not None:
        try:
            found = recognize_bipartite_with_order(graph, X, Y)
        except GraphError as exc:
            raise UsageError(str(exc)) from None
        label = "not-difference"
    else:
        found = recognize_with_order(graph)
        label = "not-threshold"
    if found is None:
        out.write(f"{label}\n")
        return 1
    seq, order = found
    if args.machine:
        _emit_record(out, {"sequence": seq.chars, "order": ",".join(map(str, order))})
    else:
        out.write(f"{seq.chars}\n")
    return 0


def cmd_gen(args, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if not 0.0 <= args.p <= 1.0:
        raise UsageError("--p must lie in [0, 1]")
    rng = random.Random(args.seed)
    if args.bipartite:
        chars = "".join("1" if rng.random() < args.p else "0" for _ in range(args.n))
    else:
        chars = "*" + "".join("1" if rng.random() < args.p else "0" for _ in range(args.n - 1))
    out.write(chars + "\n")
    return 0


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--seq", help="creation sequence such as '*0101'")
    src.add_argument("--bipartite-seq", help="bipartite creation sequence such as '0011'")
    src.add_argument("--edges", metavar="FILE", help="edge-list file ('-' for stdin)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threshold-trees",
        description="Spanning trees of threshold and difference graphs.")
    parser.add_argument("--machine", action="store_true",
                        help="print key=value records instead of human output")
    # also accepted after the subcommand; SUPPRESS keeps it from resetting the global flag
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", default=argparse.SUPPRESS,
                        help="print key=value records instead of human output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count spanning trees")
    _add_input(p)
    p.add_argument("--method", choices=METHODS, default="formula")
    p.add_argument("--check-all", action="store_true",
                   help="run every applicable method and require agreement")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("spectrum", parents=[common], help="Laplacian spectrum of a threshold graph")
    _add_input(p)
    p.add_argument("--verify", action="store_true",
                   help="check against the exact characteristic polynomial")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("sample", parents=[common], help="uniformly sample spanning trees")
    _add_input(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--format", choices=("edges", "dot"), default="edges")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("recognize", parents=[common], help="recover a creation sequence from an edge list")
    p.add_argument("path", help="edge-list file ('-' for stdin)")
    p.add_argument("--bipartite", type=int, metavar="X_SIZE",
                   help="treat vertices 0..X_SIZE-1 as X and recognize a difference graph")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("gen", parents=[common], help="random creation sequence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--bipartite", action="store_true")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except Refusal as exc:
        out.write(f"{exc}\n")
        return 1
    except (UsageError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
