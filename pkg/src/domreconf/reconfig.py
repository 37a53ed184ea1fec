"""Reconfiguration graphs of dominating sets, connectivity, d0 and the Gamma+1 scan."""

from __future__ import annotations

import enum
import logging
import os
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .domination import dominated_by, domination_profile, enumerate_dominating_sets
from .graph import (
    MAX_VERTICES,
    Graph,
    GraphFormatError,
    VertexSet,
    encode_graph6,
    has_two_independent_edges,
    members,
    to_bitstring,
)

log = logging.getLogger(__name__)


class EdgeRule(enum.Enum):
    ADD_REMOVE = "add-remove"
    JUMP = "jump"
    SLIDE = "slide"


def rule_allows(g: Graph, rule: EdgeRule, a: VertexSet, b: VertexSet) -> bool:
    """Whether ``a`` and ``b`` differ by one move of ``rule`` (domination not checked)."""
    diff = a ^ b
    if rule is EdgeRule.ADD_REMOVE:
        return diff.bit_count() == 1
    if a.bit_count() != b.bit_count() or diff.bit_count() != 2:
        return False
    if rule is EdgeRule.JUMP:
        return True
    s, t = a & diff, b & diff
    return g.has_edge(s.bit_length() - 1, t.bit_length() - 1)


def candidate_moves(g: Graph, rule: EdgeRule, s: VertexSet, k: int) -> Iterator[VertexSet]:
    """Sets one move away from ``s`` that satisfy the size bound (domination unchecked)."""
    if rule is EdgeRule.ADD_REMOVE:
        size = s.bit_count()
        for v in range(g.n):
            bit = 1 << v
            if s & bit:
                yield s ^ bit
            elif size < k:
                yield s | bit
        return
    outside = g.full & ~s
    for a in members(s):
        pool = outside if rule is EdgeRule.JUMP else g.adj[a] & outside
        base = s & ~(1 << a)
        for b in members(pool):
            yield base | 1 << b


@dataclass
class ReconfigGraph:
    base: Graph
    rule: EdgeRule
    k: int
    nodes: list[VertexSet]
    edges: list[list[int]]
    index: dict[VertexSet, int] = field(repr=False)

    @property
    def edge_count(self) -> int:
        return sum(map(len, self.edges)) // 2

    def edge_pairs(self) -> Iterator[tuple[int, int]]:
        for i, nb in enumerate(self.edges):
            for j in nb:
                if i < j:
                    yield i, j

    def as_graph(self) -> Graph:
        if len(self.nodes) > MAX_VERTICES:
            raise ValueError("reconfiguration graph too large to convert")
        return Graph.from_edges(len(self.nodes), self.edge_pairs())

    @cached_property
    def report(self) -> ConnectivityReport:
        return connectivity(self)

    def to_dot(self) -> str:
        n = self.base.n
        name = {EdgeRule.ADD_REMOVE: "D", EdgeRule.JUMP: "X", EdgeRule.SLIDE: "S"}[self.rule]
        lines = [f"graph {name}{self.k} {{"]
        for i, s in enumerate(self.nodes):
            lines.append(f'  {i} [label="{to_bitstring(s, n)}"];')
        for i, j in self.edge_pairs():
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build(g: Graph, rule: EdgeRule, k: int, gamma: int | None = None) -> ReconfigGraph:
    """Materialise D_k (add-remove) or the size-k token graph (jump / slide).

    Neighbours are found by generating every one-move candidate of each node
    and looking it up in a hash index.
    """
    if rule is EdgeRule.ADD_REMOVE:
        if gamma is None:
            gamma = domination_profile(g).gamma
        if not gamma <= k <= g.n:
            raise ValueError(f"k must be in {gamma}..{g.n} for add-remove, got {k}")
        nodes = enumerate_dominating_sets(g, k)
    else:
        if not 0 <= k <= g.n:
            raise ValueError(f"k must be in 0..{g.n}, got {k}")
        nodes = [s for s in enumerate_dominating_sets(g, k) if s.bit_count() == k]
    index = {s: i for i, s in enumerate(nodes)}
    edges: list[list[int]] = []
    for s in nodes:
        nb = [index[t] for t in candidate_moves(g, rule, s, k) if t in index]
        nb.sort()
        edges.append(nb)
    return ReconfigGraph(g, rule, k, nodes, edges, index)


@dataclass(frozen=True)
class ConnectivityReport:
    component_count: int
    component_of: tuple[int, ...]
    component_sizes: tuple[int, ...]
    isolated_nodes: tuple[VertexSet, ...]

    @property
    def connected(self) -> bool:
        # an empty node set counts as connected
        return self.component_count <= 1


def connectivity(rg: ReconfigGraph) -> ConnectivityReport:
    """BFS components; component ids follow the smallest node index they contain."""
    comp = [-1] * len(rg.nodes)
    sizes = []
    for start in range(len(rg.nodes)):
        if comp[start] >= 0:
            continue
        cid = len(sizes)
        comp[start] = cid
        queue = deque([start])
        size = 0
        while queue:
            i = queue.popleft()
            size += 1
            for j in rg.edges[i]:
                if comp[j] < 0:
                    comp[j] = cid
                    queue.append(j)
        sizes.append(size)
    isolated = tuple(s for s, nb in zip(rg.nodes, rg.edges) if not nb)
    return ConnectivityReport(len(sizes), tuple(comp), tuple(sizes), isolated)


def component_diameters(rg: ReconfigGraph) -> list[int]:
    """Eccentricity maximum per component, by BFS from every node."""
    rep = rg.report
    diam = [0] * rep.component_count
    for start in range(len(rg.nodes)):
        dist = {start: 0}
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in rg.edges[i]:
                if j not in dist:
                    dist[j] = dist[i] + 1
                    queue.append(j)
        cid = rep.component_of[start]
        diam[cid] = max(diam[cid], max(dist.values()))
    return diam


def is_connected_level(g: Graph, k: int, rule: EdgeRule = EdgeRule.ADD_REMOVE, gamma: int | None = None) -> bool:
    return build(g, rule, k, gamma=gamma).report.connected


def d0(g: Graph, gamma: int | None = None) -> int:
    """Least d such that D_k(g) is connected for every d <= k <= n.

    Levels are tested from ``n`` downwards until the first disconnected one.
    An edgeless graph has a single dominating set, so ``n`` is returned.
    """
    if g.m == 0:
        log.info("edgeless graph: D_k exists only at k = n")
        return g.n
    if gamma is None:
        gamma = domination_profile(g).gamma
    for k in range(g.n, gamma - 1, -1):
        if not is_connected_level(g, k, gamma=gamma):
            return k + 1
    return gamma


@dataclass(frozen=True)
class BoundsReport:
    n: int
    gamma: int
    big_gamma: int
    d0: int
    hypothesis: bool
    lower_ok: bool
    upper_ok: bool

    @property
    def upper(self) -> int:
        return min(self.n - 1, self.big_gamma + self.gamma)

    @property
    def ok(self) -> bool:
        return not self.hypothesis or (self.lower_ok and self.upper_ok)


def check_bounds(g: Graph) -> BoundsReport:
    """Check ``Gamma + 1 <= d0 <= min(n - 1, Gamma + gamma)``.

    The bounds are only claimed for graphs with two disjoint edges; for other
    graphs ``hypothesis`` is False and the inequalities are reported as is.
    """
    prof = domination_profile(g)
    d = d0(g, gamma=prof.gamma)
    upper = min(g.n - 1, prof.big_gamma + prof.gamma)
    return BoundsReport(
        n=g.n,
        gamma=prof.gamma,
        big_gamma=prof.big_gamma,
        d0=d,
        hypothesis=has_two_independent_edges(g),
        lower_ok=prof.big_gamma + 1 <= d,
        upper_ok=d <= upper,
    )


# ---------------------------------------------------------------------------
# Conjecture scan


@dataclass(frozen=True)
class ScanRecord:
    graph6: str
    gamma: int
    big_gamma: int
    d0: int
    ok: bool
    # nodes of a component of D_{Gamma+1} not containing V(G); empty when ok
    witness: tuple[VertexSet, ...] = ()

    def checkpoint_line(self) -> str:
        status = "ok" if self.ok else "COUNTEREXAMPLE"
        return f"{self.graph6} {self.gamma} {self.big_gamma} {self.d0} {status}"


@dataclass(frozen=True)
class Counterexample:
    graph6: str
    big_gamma: int
    component: tuple[VertexSet, ...]


def scan_graph(g: Graph) -> ScanRecord:
    """Test connectivity of D_{Gamma+1}(g) and compute d0(g)."""
    if g.m == 0:
        raise ValueError("scan needs a graph with at least one edge")
    prof = domination_profile(g)
    rg = build(g, EdgeRule.ADD_REMOVE, prof.big_gamma + 1, gamma=prof.gamma)
    rep = rg.report
    witness: tuple[VertexSet, ...] = ()
    if not rep.connected:
        principal = rep.component_of[rg.index[g.full]]
        other = next(c for c in range(rep.component_count) if c != principal)
        witness = tuple(s for s, c in zip(rg.nodes, rep.component_of) if c == other)
    return ScanRecord(
        graph6=encode_graph6(g),
        gamma=prof.gamma,
        big_gamma=prof.big_gamma,
        d0=d0(g, gamma=prof.gamma),
        ok=rep.connected,
        witness=witness,
    )


def _parse_checkpoint_line(line: str) -> tuple[str, str]:
    parts = line.split()
    if len(parts) != 5 or parts[4] not in ("ok", "COUNTEREXAMPLE"):
        raise GraphFormatError(f"bad checkpoint line {line!r}")
    for p in parts[1:4]:
        int(p)
    return parts[0], parts[4]


def read_checkpoint(path: str | os.PathLike) -> dict[str, str] | None:
    """Map graph6 -> status from a checkpoint file; ``None`` if it is corrupt."""
    done: dict[str, str] = {}
    try:
        with open(path) as fh:
            for line in fh:
                if line.strip():
                    g6, status = _parse_checkpoint_line(line)
                    done[g6] = status
    except FileNotFoundError:
        return {}
    except ValueError:
        return None
    return done


@dataclass
class ScanResult:
    scanned: int = 0
    resumed: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    def summary(self) -> str:
        return f"scanned={self.scanned} counterexamples={len(self.counterexamples)}"


def scan_conjecture(
    source: Iterable[Graph],
    checkpoint: str | os.PathLike | None = None,
    workers: int = 1,
    chunksize: int = 16,
) -> ScanResult:
    """Look for graphs whose D_{Gamma+1} is disconnected.

    Graphs already marked ``ok`` in ``checkpoint`` are skipped; new records
    are appended in input order.  A corrupt checkpoint is discarded with a
    warning and the scan restarts from scratch.
    """
    done: dict[str, str] = {}
    if checkpoint is not None:
        loaded = read_checkpoint(checkpoint)
        if loaded is None:
            log.warning("checkpoint %s is corrupt; restarting scan", checkpoint)
            open(checkpoint, "w").close()
        else:
            done = loaded

    result = ScanResult()
    todo: list[Graph] = []
    for g in source:
        if g.m == 0:
            continue
        if done.get(encode_graph6(g)) == "ok":
            result.scanned += 1
            result.resumed += 1
        else:
            todo.append(g)

    out = open(checkpoint, "a") if checkpoint is not None else None
    try:
        for rec in _map(scan_graph, todo, workers, chunksize):
            result.scanned += 1
            if not rec.ok:
                result.counterexamples.append(Counterexample(rec.graph6, rec.big_gamma, rec.witness))
            if out is not None and rec.graph6 not in done:
                out.write(rec.checkpoint_line() + "\n")
                out.flush()
    finally:
        if out is not None:
            out.close()
    return result


def _map(fn, items: list, workers: int, chunksize: int) -> Iterator:
    if workers <= 1 or len(items) < 2:
        yield from map(fn, items)
        return
    import multiprocessing

    with multiprocessing.Pool(workers) as pool:
        yield from pool.imap(fn, items, chunksize=chunksize)


def is_self_dominating_graph(g: Graph, k: int) -> bool:
    """Whether D_k(g) is isomorphic to g itself."""
    from .iso import are_isomorphic

    rg = build(g, EdgeRule.ADD_REMOVE, k)
    if len(rg.nodes) != g.n:
        return False
    return are_isomorphic(rg.as_graph(), g)
