"""Naive reference implementations used only by the tests.

Nothing here imports the library's algorithms; each routine works from the
definitions by exhaustive search over subsets or permutations.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, permutations


def adjacency(g):
    return [{u for u in range(g.n) if g.adj[v] >> u & 1} for v in range(g.n)]


def subsets(n):
    return range(1 << n)


def naive_dominates(g, s):
    nb = adjacency(g)
    inside = {v for v in range(g.n) if s >> v & 1}
    return all(v in inside or nb[v] & inside for v in range(g.n))


def naive_dominating_sets(g, k):
    return [s for s in subsets(g.n) if bin(s).count("1") <= k and naive_dominates(g, s)]


def naive_minimal_dominating_sets(g):
    out = []
    for s in subsets(g.n):
        if naive_dominates(g, s) and all(not naive_dominates(g, s & ~(1 << v)) for v in range(g.n) if s >> v & 1):
            out.append(s)
    return out


def naive_gamma(g):
    return min(bin(s).count("1") for s in naive_minimal_dominating_sets(g))


def naive_upper_gamma(g):
    return max(bin(s).count("1") for s in naive_minimal_dominating_sets(g))


def naive_alpha(g):
    nb = adjacency(g)
    best = 0
    for s in subsets(g.n):
        vs = [v for v in range(g.n) if s >> v & 1]
        if all(u not in nb[v] for u, v in combinations(vs, 2)):
            best = max(best, len(vs))
    return best


def has_long_induced_cycle(g):
    """Brute force: some vertex subset of size >= 4 induces a cycle."""
    nb = adjacency(g)
    for size in range(4, g.n + 1):
        for vs in combinations(range(g.n), size):
            vset = set(vs)
            if any(len(nb[v] & vset) != 2 for v in vs):
                continue
            # 2-regular; a cycle iff connected
            seen, queue = {vs[0]}, deque([vs[0]])
            while queue:
                v = queue.popleft()
                for u in nb[v] & vset:
                    if u not in seen:
                        seen.add(u)
                        queue.append(u)
            if seen == vset:
                return True
    return False


def has_odd_closed_walk(g):
    """BFS layering: an edge inside one layer closes an odd walk."""
    nb = adjacency(g)
    layer = {}
    for root in range(g.n):
        if root in layer:
            continue
        layer[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in nb[v]:
                if u not in layer:
                    layer[u] = layer[v] + 1
                    queue.append(u)
    return any(layer[u] == layer[v] for v in range(g.n) for u in nb[v])


def adjacency_string(n, edges, perm):
    es = {frozenset((perm[u], perm[v])) for u, v in edges}
    return tuple(int(frozenset((i, j)) in es) for j in range(1, n) for i in range(j))


def naive_class_count(n):
    """Isomorphism classes on n labelled vertices, every graph and every permutation."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    perms = list(permutations(range(n)))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [p for b, p in enumerate(pairs) if mask >> b & 1]
        seen.add(min(adjacency_string(n, edges, p) for p in perms))
    return len(seen)


def naive_isomorphic(g, h):
    if g.n != h.n:
        return False
    ge = {frozenset(e) for e in g.edges()}
    he = {frozenset(e) for e in h.edges()}
    if len(ge) != len(he):
        return False
    return any({frozenset((p[u], p[v])) for u, v in ge} == he for p in permutations(range(g.n)))


def naive_reconfig_components(nodes, adjacent):
    """Components by all-pairs comparison; ``adjacent(a, b)`` is the edge rule."""
    comp = {}
    for start in nodes:
        if start in comp:
            continue
        comp[start] = start
        queue = deque([start])
        while queue:
            a = queue.popleft()
            for b in nodes:
                if b not in comp and adjacent(a, b):
                    comp[b] = start
                    queue.append(b)
    return comp
