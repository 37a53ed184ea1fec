"""Bipartite and chordal recognition with the certificates the walk builders use."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet, members


@dataclass(frozen=True)
class Bipartition:
    """Two independent sides ``X``/``Y`` with ``|X| <= |Y|``; isolated vertices sit in ``Y``."""

    X: VertexSet
    Y: VertexSet


@dataclass(frozen=True)
class ChordalStructure:
    """Elimination order plus a maximum independent set and a matching clique cover.

    ``independent[i]`` lies in ``cliques[i]``; the cliques are disjoint and
    cover every vertex, so ``len(independent)`` is both the independence
    number and the clique cover number.
    """

    peo: tuple[int, ...]
    independent: tuple[int, ...]
    cliques: tuple[VertexSet, ...]

    @property
    def S(self) -> VertexSet:
        s = 0
        for v in self.independent:
            s |= 1 << v
        return s

    def __len__(self) -> int:
        return len(self.independent)


def bipartition_min_side(g: Graph) -> Bipartition | None:
    """Two-colour each component, putting its smaller colour class into ``X``.

    On equal class sizes the class holding the component's lowest vertex
    goes to ``X``.  Returns ``None`` when an odd cycle exists.
    """
    X = Y = 0
    for comp in g.components():
        if comp & (comp - 1) == 0:
            Y |= comp
            continue
        root = comp & -comp
        sides = [root, 0]
        frontier, side = root, 0
        seen = root
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= g.adj[v]
            if nxt & sides[side]:
                return None
            side ^= 1
            frontier = nxt & ~seen
            sides[side] |= frontier
            seen |= frontier
        a, b = sides
        if b.bit_count() < a.bit_count():
            a, b = b, a
        X |= a
        Y |= b
    return Bipartition(X, Y)


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of MCS; ties go to the lowest vertex index."""
    weight = [0] * g.n
    unvisited = g.full
    order = []
    for _ in range(g.n):
        best = max(members(unvisited), key=lambda v: (weight[v], -v))
        order.append(best)
        unvisited &= ~(1 << best)
        for u in members(g.adj[best] & unvisited):
            weight[u] += 1
    return order


def is_perfect_elimination_ordering(g: Graph, order: list[int] | tuple[int, ...]) -> bool:
    later = g.full
    for v in order:
        later &= ~(1 << v)
        if not g.is_clique(g.adj[v] & later):
            return False
    return True


def perfect_elimination_ordering(g: Graph) -> list[int] | None:
    peo = maximum_cardinality_search(g)[::-1]
    return peo if is_perfect_elimination_ordering(g, peo) else None


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def chordal_structure(g: Graph) -> ChordalStructure | None:
    """Greedy independent set and clique cover along a perfect elimination ordering.

    Scanning the ordering, every still-unassigned vertex ``v`` opens the
    clique ``{v} | (N(v) & unassigned)``.  Its unassigned neighbours all come
    later in the ordering, so that set is a clique.  The openers form an
    independent set of the same size as the cover.
    """
    peo = perfect_elimination_ordering(g)
    if peo is None:
        return None
    unassigned = g.full
    independent, cliques = [], []
    for v in peo:
        if not unassigned >> v & 1:
            continue
        clique = (g.adj[v] & unassigned) | 1 << v
        independent.append(v)
        cliques.append(clique)
        unassigned &= ~clique
    return ChordalStructure(tuple(peo), tuple(independent), tuple(cliques))


def independence_number(g: Graph, within: VertexSet | None = None) -> int:
    """Exact alpha by branching on a maximum-degree vertex."""
    cache: dict[int, int] = {}

    def solve(rest: int) -> int:
        if rest in cache:
            return cache[rest]
        if not rest:
            return 0
        best_v, best_deg = -1, -1
        for v in members(rest):
            d = (g.adj[v] & rest).bit_count()
            if d > best_deg:
                best_v, best_deg = v, d
        if best_deg == 0:
            result = rest.bit_count()
        else:
            bit = 1 << best_v
            result = max(solve(rest & ~bit), 1 + solve(rest & ~bit & ~g.adj[best_v]))
        cache[rest] = result
        return result

    return solve(g.full if within is None else within)
