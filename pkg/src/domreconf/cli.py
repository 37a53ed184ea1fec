"""Command-line interface: ``domreconf {info,build,walk,verify,scan}``.

Exit codes: 0 success, 1 usage or parse error, 2 no walk / disconnected /
rejected walk, 3 internal construction failure.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import Iterator

from .domination import domination_profile, is_dominating, minimal_subset
from .graph import Graph, GraphFormatError, VertexSet, from_bitstring, has_two_independent_edges, mask_of, parse_graph, parse_graph6, to_bitstring
from .iso import enumerate_small_graphs
from .reconfig import EdgeRule, build, component_diameters, d0, scan_conjecture
from .structure import bipartition_min_side, chordal_structure, independence_number
from .walks import (
    ChordalDiagnostics,
    JumpPath,
    ProofViolation,
    Walk,
    format_walk,
    oracle_bfs,
    parse_walk,
    verify_jump_path,
    verify_walk,
    walk_bipartite,
    walk_chordal,
    walk_subset_chain,
    walk_via_near_full,
    walk_via_union,
)

log = logging.getLogger("domreconf")

EXIT_OK, EXIT_USAGE, EXIT_NO_WALK, EXIT_INTERNAL = 0, 1, 2, 3

STRATEGIES = ("auto", "union", "near-full", "bipartite", "chordal", "oracle")


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def emit(line: str) -> None:
    print(line)


def notice(line: str) -> None:
    print(line, file=sys.stderr)


def load_graph(source: str, fmt: str | None) -> Graph:
    """Read ``source`` as a file when it exists, otherwise as inline text (``;`` separates lines)."""
    if source == "-":
        return parse_graph(sys.stdin.read(), fmt, "<stdin>")
    if os.path.exists(source):
        with open(source) as fh:
            return parse_graph(fh.read(), fmt, source)
    return parse_graph(source.replace(";", "\n"), fmt, "<inline>")


def parse_set(text: str, n: int) -> VertexSet:
    """A 0/1 string of length ``n`` or a comma-separated vertex list."""
    text = text.strip()
    if len(text) == n and set(text) <= {"0", "1"}:
        return from_bitstring(text)
    try:
        verts = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise CliError(f"cannot read vertex set {text!r}") from None
    if any(not 0 <= v < n for v in verts):
        raise CliError(f"vertex set {text!r} has vertices outside 0..{n - 1}")
    return mask_of(verts)


def _rule(name: str) -> EdgeRule:
    return EdgeRule(name)


# ---------------------------------------------------------------------------


def cmd_info(args: argparse.Namespace) -> int:
    g = load_graph(args.graph, args.format)
    prof = domination_profile(g)
    cs = chordal_structure(g)
    emit(f"n={g.n}")
    emit(f"m={g.m}")
    emit(f"gamma={prof.gamma}")
    emit(f"Gamma={prof.big_gamma}")
    emit(f"bipartite={str(bipartition_min_side(g) is not None).lower()}")
    emit(f"chordal={str(cs is not None).lower()}")
    emit(f"two_independent_edges={str(has_two_independent_edges(g)).lower()}")
    if g.n <= 20:
        emit(f"alpha={independence_number(g)}")
    if args.d0:
        emit(f"d0={d0(g, gamma=prof.gamma)}")
    return EXIT_OK


def cmd_build(args: argparse.Namespace) -> int:
    g = load_graph(args.graph, args.format)
    rule = _rule(args.rule)
    prof = domination_profile(g)
    k = args.k
    if k is None:
        k = prof.big_gamma + 1 if rule is EdgeRule.ADD_REMOVE else prof.gamma
        k = min(k, g.n)
    try:
        rg = build(g, rule, k, gamma=prof.gamma)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    rep = rg.report
    if args.out:
        dot = rg.to_dot()
        if args.out == "-":
            sys.stdout.write(dot)
        else:
            with open(args.out, "w") as fh:
                fh.write(dot)
    emit(f"rule={rule.value} k={k} nodes={len(rg.nodes)} edges={rg.edge_count} components={rep.component_count}")
    emit("component_sizes=" + ",".join(map(str, rep.component_sizes)))
    emit("isolated=" + ",".join(to_bitstring(s, g.n) for s in rep.isolated_nodes))
    if args.diameter:
        emit("diameters=" + ",".join(map(str, component_diameters(rg))))
    return EXIT_OK


def _pick_strategy(g: Graph, prof, k: int, requested: str) -> str:
    if requested == "auto":
        if chordal_structure(g) is not None:
            requested = "chordal"
        elif bipartition_min_side(g) is not None:
            requested = "bipartite"
        elif k >= prof.big_gamma + prof.gamma:
            requested = "union"
        elif k >= g.n - 1 and has_two_independent_edges(g):
            requested = "near-full"
        else:
            return "oracle"
    two_edges = has_two_independent_edges(g)
    gamma_bound = k >= prof.big_gamma + 1
    needs = {
        "chordal": (chordal_structure(g) is not None and gamma_bound, "a chordal graph and k >= Gamma+1"),
        "bipartite": (bipartition_min_side(g) is not None and gamma_bound, "a bipartite graph and k >= Gamma+1"),
        "union": (k >= prof.big_gamma + prof.gamma or (k >= g.n - 1 and two_edges), "k >= min(n-1, Gamma+gamma)"),
        "near-full": (k >= g.n - 1 and two_edges, "two independent edges and k >= n-1"),
        "oracle": (True, ""),
    }
    ok, why = needs[requested]
    if not ok:
        notice(f"notice: strategy {requested} needs {why}; falling back to oracle")
        return "oracle"
    return requested


def _walk_through(g: Graph, builder, a: VertexSet, b: VertexSet, k: int, bound: int | None = None) -> Walk:
    """Join ``a`` and ``b`` through the builder's common endpoint.

    Start sets above ``bound`` first shrink to a minimal subset.
    """

    def leg(s: VertexSet) -> Walk:
        if bound is not None and s.bit_count() > bound:
            return walk_subset_chain(g, s, minimal_subset(g, s), k).then(builder(minimal_subset(g, s)))
        return builder(s)

    w = leg(a).then(leg(b).reversed())
    return Walk(w.steps, w.moves, k)


def cmd_walk(args: argparse.Namespace) -> int:
    g = load_graph(args.graph, args.format)
    rule = _rule(args.rule)
    src, dst = parse_set(args.from_set, g.n), parse_set(args.to_set, g.n)
    prof = domination_profile(g)
    if rule is EdgeRule.ADD_REMOVE:
        k = args.k if args.k is not None else min(g.n, max(prof.big_gamma + 1, src.bit_count(), dst.bit_count()))
    else:
        k = args.k if args.k is not None else src.bit_count()
    for s, what in ((src, "from"), (dst, "to")):
        if not is_dominating(g, s):
            raise CliError(f"--{what} set {to_bitstring(s, g.n)} is not dominating")
        if rule is EdgeRule.ADD_REMOVE and s.bit_count() > k:
            raise CliError(f"--{what} set has more than k={k} vertices")
        if rule is not EdgeRule.ADD_REMOVE and s.bit_count() != k:
            raise CliError(f"--{what} set must have exactly k={k} vertices")

    strategy = "oracle" if rule is not EdgeRule.ADD_REMOVE else _pick_strategy(g, prof, k, args.strategy)
    if rule is not EdgeRule.ADD_REMOVE and args.strategy not in ("auto", "oracle"):
        notice(f"notice: rule {rule.value} supports only the oracle strategy")
    diag = ChordalDiagnostics()
    try:
        if strategy == "chordal":
            w = _walk_through(g, lambda s: walk_chordal(g, s, diag), src, dst, k, prof.big_gamma + 1)
        elif strategy == "bipartite":
            w = _walk_through(g, lambda s: walk_bipartite(g, s, prof), src, dst, k, prof.big_gamma + 1)
        elif strategy == "union":
            hub = prof.gamma_sets[0]
            w = _walk_through(g, lambda s: walk_via_union(g, s, hub, k, prof), src, dst, k)
        elif strategy == "near-full":
            w = walk_via_near_full(g, src, dst)
            w = Walk(w.steps, w.moves, k)
        else:
            w = oracle_bfs(g, src, dst, k, rule)
    except ProofViolation as exc:
        raise CliError(f"internal: {exc}", EXIT_INTERNAL) from None
    for msg in diag.fallbacks:
        notice(f"diagnostic: {msg}")
    if w is None:
        emit(f"disconnected: no walk at k={k}")
        return EXIT_NO_WALK

    verdict = verify_jump_path(g, w, rule) if isinstance(w, JumpPath) else verify_walk(g, w)
    if not verdict:
        raise CliError(f"internal: constructed walk fails at {verdict.index}: {verdict.reason}", EXIT_INTERNAL)
    text = format_walk(w, g.n)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        emit(f"strategy={strategy} k={k} length={len(w)}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = load_graph(args.graph, args.format)
    with open(args.walk) as fh:
        try:
            w = parse_walk(fh.read(), args.k)
        except ValueError as exc:
            raise CliError(f"{args.walk}: {exc}") from None
    if isinstance(w, JumpPath):
        verdict = verify_jump_path(g, w, _rule(args.rule) if args.rule != "add-remove" else EdgeRule.JUMP)
    else:
        verdict = verify_walk(g, w)
    if verdict:
        emit(f"ok length={len(w)}")
        return EXIT_OK
    emit(f"invalid index={verdict.index} reason={verdict.reason}")
    return EXIT_NO_WALK


def _scan_source(args: argparse.Namespace) -> Iterator[Graph]:
    if args.source:
        with open(args.source) as fh:
            for lineno, line in enumerate(fh, start=1):
                if line.strip():
                    try:
                        yield parse_graph6(line)
                    except GraphFormatError as exc:
                        raise CliError(f"{args.source}:{lineno}: {exc}") from None
        return
    for n in range(1, args.max_n + 1):
        yield from enumerate_small_graphs(n, args.connected_only)


def cmd_scan(args: argparse.Namespace) -> int:
    source = _scan_source(args)
    if args.only == "bipartite":
        source = (g for g in source if bipartition_min_side(g) is not None)
    elif args.only == "chordal":
        source = (g for g in source if chordal_structure(g) is not None)
    elif args.connected_only and args.source:
        source = (g for g in source if len(g.components()) == 1)
    result = scan_conjecture(source, checkpoint=args.checkpoint, workers=args.workers)
    for cx in result.counterexamples:
        emit(f"COUNTEREXAMPLE {cx.graph6} Gamma={cx.big_gamma} component=" + ",".join(str(s) for s in cx.component))
    if result.resumed:
        notice(f"resumed {result.resumed} graphs from checkpoint")
    emit(result.summary())
    return EXIT_OK


# ---------------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domreconf", description="Dominating-set reconfiguration toolkit.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("graph", help="graph file, '-' for stdin, or inline text")
        p.add_argument("--format", choices=("edgelist", "graph6"), default=None)

    p = sub.add_parser("info", help="domination parameters and structure")
    graph_args(p)
    p.add_argument("--d0", action="store_true", help="also compute d0 (exponential)")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("build", help="materialise a reconfiguration graph")
    graph_args(p)
    p.add_argument("--k", type=int)
    p.add_argument("--rule", choices=[r.value for r in EdgeRule], default="add-remove")
    p.add_argument("--out", help="DOT output path ('-' for stdout)")
    p.add_argument("--diameter", action="store_true")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("walk", help="construct a verified reconfiguration walk")
    graph_args(p)
    p.add_argument("--from", dest="from_set", required=True)
    p.add_argument("--to", dest="to_set", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--rule", choices=[r.value for r in EdgeRule], default="add-remove")
    p.add_argument("--strategy", choices=STRATEGIES, default="auto")
    p.add_argument("--out")
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("verify", help="check a serialized walk")
    graph_args(p)
    p.add_argument("walk")
    p.add_argument("--k", type=int)
    p.add_argument("--rule", choices=[r.value for r in EdgeRule], default="add-remove")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="search for graphs with D_{Gamma+1} disconnected")
    p.add_argument("source", nargs="?", help="graph6 file, one graph per line")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--only", choices=("all", "bipartite", "chordal"), default="all")
    p.add_argument("--checkpoint")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        notice(f"error: {exc}")
        return exc.code
    except (GraphFormatError, ValueError, OSError) as exc:
        notice(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
