"""Dominating-set predicates, enumeration, and the parameters gamma / Gamma.

Every function accepts an optional ``within`` mask restricting the graph to
the induced subgraph on those vertices (sets must then lie inside it).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet, members
from .structure import chordal_structure


def dominated_by(g: Graph, s: VertexSet) -> VertexSet:
    """Union of the closed neighbourhoods of ``s``."""
    out = 0
    closed = g.closed
    for v in members(s):
        out |= closed[v]
    return out


def is_dominating(g: Graph, s: VertexSet, within: VertexSet | None = None) -> bool:
    universe = g.full if within is None else within
    return dominated_by(g, s) & universe == universe


def is_minimal_dominating(g: Graph, s: VertexSet, within: VertexSet | None = None) -> bool:
    if not is_dominating(g, s, within):
        return False
    return not any(is_dominating(g, s & ~(1 << v), within) for v in members(s))


def minimal_subset(g: Graph, s: VertexSet, within: VertexSet | None = None) -> VertexSet:
    """Drop removable vertices of ``s``, highest index first, until none is removable.

    One pass suffices: a vertex that could not be dropped stays
    indispensable as the set shrinks.
    """
    if not is_dominating(g, s, within):
        raise ValueError("minimal_subset needs a dominating set")
    for v in sorted(members(s), reverse=True):
        if is_dominating(g, s & ~(1 << v), within):
            s &= ~(1 << v)
    return s


def _deadlines(g: Graph) -> list[int]:
    # deadline[i]: vertices whose closed neighbourhood has highest index i;
    # once vertex i is decided they can no longer be dominated later.
    dl = [0] * g.n
    for u in range(g.n):
        dl[g.closed[u].bit_length() - 1] |= 1 << u
    return dl


def enumerate_dominating_sets(g: Graph, k: int) -> list[VertexSet]:
    """All dominating sets of size at most ``k``, ascending as integers.

    Branches on vertices in index order, pruning a branch as soon as some
    undominated vertex has no undecided neighbour left or the remaining
    budget cannot cover what is still undominated.
    """
    if not 0 <= k <= g.n:
        raise ValueError(f"k must be in 0..{g.n}, got {k}")
    closed = g.closed
    deadline = _deadlines(g)
    full = g.full
    best_cover = max(c.bit_count() for c in closed)
    out: list[int] = []

    def rec(i: int, chosen: int, covered: int, budget: int) -> None:
        missing = full & ~covered
        if not missing:
            # every extension by undecided vertices also dominates
            _supersets(i, chosen, budget)
            return
        if budget == 0 or i == g.n:
            return
        if -(-missing.bit_count() // best_cover) > budget:
            return
        rec_include = covered | closed[i]
        if not deadline[i] & ~rec_include:
            rec(i + 1, chosen | 1 << i, rec_include, budget - 1)
        if not deadline[i] & ~covered:
            rec(i + 1, chosen, covered, budget)

    def _supersets(i: int, chosen: int, budget: int) -> None:
        out.append(chosen)
        if budget == 0:
            return
        for j in range(i, g.n):
            _supersets(j + 1, chosen | 1 << j, budget - 1)

    rec(0, 0, 0, k)
    out.sort()
    return out


def enumerate_minimal_dominating_sets(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    """All minimal dominating sets, ascending as integers.

    A vertex without a private neighbour stays without one in every
    superset, which prunes the include branch.
    """
    universe = g.full if within is None else within
    verts = list(members(universe))
    closed = [c & universe for c in g.closed]
    last = {}
    for u in verts:
        last[u] = max(i for i, v in enumerate(verts) if closed[u] >> v & 1)
    deadline = [0] * len(verts)
    for u in verts:
        deadline[last[u]] |= 1 << u
    out: list[int] = []

    def has_private(v: int, chosen: int) -> bool:
        others = 0
        for w in members(chosen & ~(1 << v)):
            others |= closed[w]
        return bool(closed[v] & ~others)

    def rec(i: int, chosen: int, covered: int) -> None:
        if covered & universe == universe:
            out.append(chosen)
            return
        if i == len(verts):
            return
        v = verts[i]
        inc = chosen | 1 << v
        inc_cov = covered | closed[v]
        if not deadline[i] & ~inc_cov and all(has_private(w, inc) for w in members(inc)):
            rec(i + 1, inc, inc_cov)
        if not deadline[i] & ~covered:
            rec(i + 1, chosen, covered)

    rec(0, 0, 0)
    out.sort()
    return out


@dataclass(frozen=True)
class DominationProfile:
    gamma: int
    big_gamma: int
    gamma_sets: tuple[VertexSet, ...]
    minimal_sets: tuple[VertexSet, ...]


def domination_profile(g: Graph) -> DominationProfile:
    minimal = enumerate_minimal_dominating_sets(g)
    sizes = [s.bit_count() for s in minimal]
    gamma, big_gamma = min(sizes), max(sizes)
    return DominationProfile(
        gamma=gamma,
        big_gamma=big_gamma,
        gamma_sets=tuple(s for s in minimal if s.bit_count() == gamma),
        minimal_sets=tuple(minimal),
    )


def upper_domination(g: Graph) -> int:
    """Gamma(g), read off the chordal certificate when one exists."""
    cs = chordal_structure(g)
    if cs is not None:
        return len(cs)
    return domination_profile(g).big_gamma
