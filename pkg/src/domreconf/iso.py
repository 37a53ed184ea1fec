"""Exhaustive canonical labelling for tiny graphs and the small-graph corpus.

Only meant for deduplicating corpora of at most 8 vertices.  The canonical
form is the lexicographically smallest upper-triangle adjacency string
(graph6 bit order) over all vertex permutations.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, members

MAX_ENUM_VERTICES = 8


def _canonical_perm(g: Graph) -> tuple[int, tuple[int, ...]]:
    # The string is built column by column and column p depends only on the
    # first p+1 placed vertices, so keeping every partial placement that ties
    # for the minimal prefix at each level finds the global minimum.
    adj = g.adj
    frontier: list[tuple[tuple[int, ...], int]] = [((), 0)]
    code = 0
    for p in range(g.n):
        best_col = None
        nxt = []
        for perm, placed in frontier:
            for v in members(g.full & ~placed):
                col = 0
                for u in perm:
                    col = col << 1 | (adj[v] >> u & 1)
                if best_col is None or col < best_col:
                    best_col = col
                    nxt = [(perm + (v,), placed | 1 << v)]
                elif col == best_col:
                    nxt.append((perm + (v,), placed | 1 << v))
        code = code << p | best_col
        frontier = nxt
    return code, frontier[0][0]


def canonical_form(g: Graph) -> tuple[int, int]:
    """``(n, code)`` where ``code`` is the minimal adjacency string read as an integer."""
    return g.n, _canonical_perm(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The relabelling of ``g`` that realises its canonical form."""
    _, order = _canonical_perm(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking search for an isomorphism, pruned by degree and adjacency."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    image = [-1] * g.n

    def extend(i: int, used: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        for w in range(h.n):
            if used >> w & 1 or h.degree(w) != g.degree(v):
                continue
            if any(g.has_edge(v, order[j]) != h.has_edge(w, image[order[j]]) for j in range(i)):
                continue
            image[v] = w
            if extend(i + 1, used | 1 << w):
                return True
        image[v] = -1
        return False

    return extend(0, 0)


def is_connected(g: Graph) -> bool:
    return len(g.components()) == 1


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[int, Graph] = {}
    for base in _classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            adj = list(base.adj) + [nbrs]
            for u in members(nbrs):
                adj[u] |= 1 << (n - 1)
            cand = Graph(n, tuple(adj))
            code, order = _canonical_perm(cand)
            if code not in seen:
                perm = [0] * n
                for pos, v in enumerate(order):
                    perm[v] = pos
                seen[code] = cand.relabel(perm)
    return tuple(seen[c] for c in sorted(seen))


def enumerate_small_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class on ``n`` vertices."""
    if not 1 <= n <= MAX_ENUM_VERTICES:
        raise ValueError(f"n must be in 1..{MAX_ENUM_VERTICES}, got {n}")
    for g in _classes(n):
        if not connected_only or is_connected(g):
            yield g
