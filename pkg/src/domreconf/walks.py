"""Constructive reconfiguration walks between dominating sets.

Each builder returns a :class:`Walk` whose consecutive sets differ by one
added or removed vertex and which stays inside the dominating sets of size
at most ``k``.  :func:`oracle_bfs` is the ground truth the builders are
checked against.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field

from .domination import DominationProfile, domination_profile, is_dominating, minimal_subset
from .graph import Graph, VertexSet, from_bitstring, has_two_independent_edges, isolated_vertices, members, to_bitstring
from .reconfig import EdgeRule, candidate_moves
from .structure import bipartition_min_side, chordal_structure

log = logging.getLogger(__name__)

Move = tuple[str, int]


class ProofViolation(RuntimeError):
    """A construction step the underlying argument guarantees turned out impossible."""


def _move(a: VertexSet, b: VertexSet) -> Move:
    diff = a ^ b
    if diff.bit_count() != 1:
        raise ValueError(f"sets {a:#x} and {b:#x} differ in {diff.bit_count()} vertices")
    return ("+" if b & diff else "-", diff.bit_length() - 1)


@dataclass
class Walk:
    steps: list[VertexSet]
    moves: list[Move]
    k: int

    @classmethod
    def from_steps(cls, steps: list[VertexSet], k: int) -> Walk:
        if not steps:
            raise ValueError("a walk needs at least one set")
        return cls(list(steps), [_move(a, b) for a, b in zip(steps, steps[1:])], k)

    @property
    def start(self) -> VertexSet:
        return self.steps[0]

    @property
    def end(self) -> VertexSet:
        return self.steps[-1]

    def __len__(self) -> int:
        return len(self.steps)

    def reversed(self) -> Walk:
        return Walk.from_steps(self.steps[::-1], self.k)

    def then(self, other: Walk) -> Walk:
        if self.end != other.start:
            raise ValueError("walks do not meet")
        return Walk.from_steps(self.steps + other.steps[1:], max(self.k, other.k))

    def max_size(self) -> int:
        return max(s.bit_count() for s in self.steps)


@dataclass
class JumpPath:
    steps: list[VertexSet]
    moves: list[tuple[int, int]]

    @classmethod
    def from_steps(cls, steps: list[VertexSet]) -> JumpPath:
        moves = []
        for a, b in zip(steps, steps[1:]):
            out, inn = a & ~b, b & ~a
            if out.bit_count() != 1 or inn.bit_count() != 1:
                raise ValueError(f"{a:#x} -> {b:#x} is not a single token jump")
            moves.append((out.bit_length() - 1, inn.bit_length() - 1))
        return cls(list(steps), moves)

    @property
    def k(self) -> int:
        return self.steps[0].bit_count()

    def __len__(self) -> int:
        return len(self.steps)


@dataclass
class Verdict:
    ok: bool
    index: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_walk(g: Graph, w: Walk) -> Verdict:
    """Check every walk invariant against ``g``; report the first failing index."""
    if not w.steps:
        return Verdict(False, None, "empty walk")
    if len(w.moves) != len(w.steps) - 1:
        return Verdict(False, None, "move count does not match step count")
    for i, s in enumerate(w.steps):
        if s & ~g.full:
            return Verdict(False, i, "set contains vertices outside the graph")
        if s.bit_count() > w.k:
            return Verdict(False, i, f"cardinality {s.bit_count()} exceeds k={w.k}")
        if not is_dominating(g, s):
            return Verdict(False, i, "set is not dominating")
        if i:
            prev = w.steps[i - 1]
            diff = prev ^ s
            sign, v = w.moves[i - 1]
            if diff != 1 << v or (sign == "+") != bool(s & diff):
                return Verdict(False, i, f"step does not match move {sign}{v}")
    return Verdict(True)


def verify_jump_path(g: Graph, p: JumpPath, rule: EdgeRule = EdgeRule.JUMP) -> Verdict:
    if not p.steps:
        return Verdict(False, None, "empty path")
    if len(p.moves) != len(p.steps) - 1:
        return Verdict(False, None, "move count does not match step count")
    size = p.steps[0].bit_count()
    for i, s in enumerate(p.steps):
        if s & ~g.full or s.bit_count() != size:
            return Verdict(False, i, "set size changes along the path")
        if not is_dominating(g, s):
            return Verdict(False, i, "set is not dominating")
        if i:
            out, inn = p.moves[i - 1]
            prev = p.steps[i - 1]
            if not (prev >> out & 1) or prev >> inn & 1 or s != (prev & ~(1 << out)) | 1 << inn:
                return Verdict(False, i, f"step does not match jump {out}>{inn}")
            if rule is EdgeRule.SLIDE and not g.has_edge(out, inn):
                return Verdict(False, i, f"jump {out}>{inn} is not along an edge")
    return Verdict(True)


# ---------------------------------------------------------------------------
# Builders


def _chain(a: VertexSet, b: VertexSet) -> list[VertexSet]:
    # from a to b with one side containing the other; removals go in
    # descending vertex order, additions are the mirror image
    if a & b == b:
        steps = [a]
        for v in sorted(members(a & ~b), reverse=True):
            steps.append(steps[-1] & ~(1 << v))
        return steps
    if a & b == a:
        return _chain(b, a)[::-1]
    raise ValueError("subset chain needs one set to contain the other")


def _check_node(g: Graph, s: VertexSet, k: int, what: str = "set") -> None:
    if s & ~g.full:
        raise ValueError(f"{what} has vertices outside the graph")
    if not is_dominating(g, s):
        raise ValueError(f"{what} {to_bitstring(s, g.n)} is not dominating")
    if s.bit_count() > k:
        raise ValueError(f"{what} {to_bitstring(s, g.n)} has more than k={k} vertices")


def walk_subset_chain(g: Graph, a: VertexSet, b: VertexSet, k: int) -> Walk:
    """Walk from ``a`` to ``b`` when one contains the other; supersets of dominating sets dominate."""
    _check_node(g, a, k, "start")
    _check_node(g, b, k, "end")
    return Walk.from_steps(_chain(a, b), k)


def walk_via_union(
    g: Graph, a: VertexSet, s: VertexSet, k: int, profile: DominationProfile | None = None
) -> Walk:
    """Walk ``a -> A1 -> A1 | s -> s`` with ``A1`` a minimal subset of ``a`` and ``s`` a gamma-set.

    Sizes stay within ``Gamma + gamma``.  When ``k`` is below that the graph
    must have two independent edges and the walk is routed through
    ``(n-1)``-sets by :func:`walk_via_near_full` instead.
    """
    prof = profile or domination_profile(g)
    _check_node(g, a, k, "start")
    if s.bit_count() != prof.gamma or not is_dominating(g, s):
        raise ValueError("target must be a minimum dominating set")
    if prof.big_gamma + prof.gamma > k:
        if k < g.n - 1 or not has_two_independent_edges(g):
            raise ValueError(f"k={k} is below min(n-1, Gamma+gamma)")
        w = walk_via_near_full(g, a, s)
        return Walk(w.steps, w.moves, k)
    a1 = minimal_subset(g, a)
    steps = _chain(a, a1)
    steps += _chain(a1, a1 | s)[1:]
    steps += _chain(a1 | s, s)[1:]
    return Walk.from_steps(steps, k)


def walk_via_near_full(g: Graph, s: VertexSet, t: VertexSet) -> Walk:
    """Walk in D_{n-1} between two dominating sets of a graph with two independent edges.

    If ``s | t`` misses a vertex the walk goes through the union.  Otherwise
    both ends are grown to ``V - {x}`` and ``V - {y}`` and joined through
    ``V - {x, y}`` when that dominates, else through ``V - {x, u}``,
    ``V - {u}``, ``V - {u, y}`` for an edge ``uv`` avoiding ``x`` and ``y``.
    """
    n, full = g.n, g.full
    k = n - 1
    if not has_two_independent_edges(g):
        raise ValueError("graph needs two independent edges")
    _check_node(g, s, k, "start")
    _check_node(g, t, k, "end")
    if (s | t).bit_count() <= k:
        steps = _chain(s, s | t) + _chain(s | t, t)[1:]
        return Walk.from_steps(steps, k)
    # s and t complement each other's gaps, so the two extensions differ
    x = next(v for v in range(n) if not s >> v & 1)
    y = next(v for v in range(n) if not t >> v & 1)
    s_full, t_full = full & ~(1 << x), full & ~(1 << y)
    middle = s_full & t_full
    if is_dominating(g, middle):
        hub = [s_full, middle, t_full]
    else:
        u, v = next((u, v) for u, v in g.edges() if not {u, v} & {x, y})
        hub = [s_full, s_full & ~(1 << u), full & ~(1 << u), t_full & ~(1 << u), t_full]
    steps = _chain(s, s_full) + hub[1:] + _chain(t_full, t)[1:]
    return Walk.from_steps(steps, k)


def bipartite_target(g: Graph) -> VertexSet:
    bp = bipartition_min_side(g)
    if bp is None:
        raise ValueError("graph is not bipartite")
    return bp.X | isolated_vertices(g)


def _forest_degrees(g: Graph, within: VertexSet) -> tuple[list[int], list[int]]:
    # BFS spanning forest of g[within], roots and neighbours in ascending order
    degree = [0] * g.n
    partner = [-1] * g.n
    seen = 0
    for root in members(within):
        if seen >> root & 1:
            continue
        seen |= 1 << root
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in members(g.adj[v] & within & ~seen):
                seen |= 1 << w
                degree[v] += 1
                degree[w] += 1
                partner[v] = w
                partner[w] = v
                queue.append(w)
    return degree, partner


def walk_bipartite(g: Graph, s: VertexSet, profile: DominationProfile | None = None) -> Walk:
    """Walk in D_{Gamma+1} from ``s`` to the smaller bipartition side (plus isolated vertices).

    First ``s`` is reduced to a minimal subset and regrown to exactly Gamma
    vertices, preferring vertices of ``X``.  Then, while ``X`` is not covered,
    a token on ``Y`` is exchanged for one on ``X``: a ``Y`` token with no
    neighbour in the uncovered part of ``X`` goes to the lowest uncovered
    ``X`` vertex, otherwise a leaf ``y`` of a spanning forest of
    ``G[(X - S) | (Y & S)]`` moves to its forest neighbour.
    """
    bp = bipartition_min_side(g)
    if bp is None:
        raise ValueError("graph is not bipartite")
    prof = profile or domination_profile(g)
    k = prof.big_gamma + 1
    _check_node(g, s, k, "start")
    iso = isolated_vertices(g)
    X, Y = bp.X, bp.Y & ~iso
    target = X | iso

    current = minimal_subset(g, s)
    steps = _chain(s, current)
    for v in list(members(X & ~current)) + list(members(g.full & ~X)):
        if current.bit_count() >= prof.big_gamma:
            break
        if not current >> v & 1:
            current |= 1 << v
            steps.append(current)

    while X & ~current:
        x_out, y_in = X & ~current, Y & current
        lonely = [y for y in members(y_in) if not g.adj[y] & x_out]
        if lonely:
            y, x = lonely[0], (x_out & -x_out).bit_length() - 1
        else:
            degree, partner = _forest_degrees(g, x_out | y_in)
            leaf = next((y for y in members(y_in) if degree[y] == 1), None)
            if leaf is None:
                raise ProofViolation(f"no forest leaf among Y tokens for set {to_bitstring(current, g.n)}")
            y, x = leaf, partner[leaf]
        nxt = (current | 1 << x) & ~(1 << y)
        if not is_dominating(g, nxt):
            raise ProofViolation(f"exchange {y}->{x} broke domination")
        steps += [current | 1 << x, nxt]
        current = nxt
    steps += _chain(current, target)[1:]
    return Walk.from_steps(steps, k)


@dataclass
class ChordalDiagnostics:
    fallbacks: list[str] = field(default_factory=list)


def walk_chordal(g: Graph, a: VertexSet, diagnostics: ChordalDiagnostics | None = None) -> Walk:
    """Walk in D_{Gamma+1} from ``a`` to the independent set of :func:`chordal_structure`.

    Follows an induction over the clique cover.  If some clique holds no
    token of the minimal subset ``A1``, solve the problem on the graph with
    that clique removed and add its representative to every set.  Otherwise
    every clique holds exactly one token, which is swapped for the clique's
    representative one clique at a time.  A swap that fails to dominate is
    repaired by a BFS to the target and noted in ``diagnostics``.
    """
    cs = chordal_structure(g)
    if cs is None:
        raise ValueError("graph is not chordal")
    k = len(cs) + 1
    _check_node(g, a, k, "start")
    diag = diagnostics if diagnostics is not None else ChordalDiagnostics()
    steps = _chordal_steps(g, list(cs.cliques), list(cs.independent), g.full, a, diag)
    return Walk.from_steps(steps, k)


def _chordal_steps(
    g: Graph, cliques: list[int], reps: list[int], universe: int, a: int, diag: ChordalDiagnostics
) -> list[int]:
    k = len(cliques) + 1
    a1 = minimal_subset(g, a, within=universe)
    steps = _chain(a, a1)
    empty = next((i for i, h in enumerate(cliques) if not h & a1), None)
    if empty is not None:
        rep = 1 << reps[empty]
        sub = _chordal_steps(
            g,
            cliques[:empty] + cliques[empty + 1:],
            reps[:empty] + reps[empty + 1:],
            universe & ~cliques[empty],
            a1,
            diag,
        )
        steps.append(a1 | rep)
        steps += [b | rep for b in sub[1:]]
        return steps

    current = a1
    for h, r in zip(cliques, reps):
        token = h & current
        rep = 1 << r
        if token == rep:
            continue
        nxt = (current | rep) & ~token
        if not is_dominating(g, nxt, within=universe):
            target = 0
            for v in reps:
                target |= 1 << v
            msg = f"swap in clique {to_bitstring(h, g.n)} fails to dominate; BFS fallback"
            log.warning(msg)
            diag.fallbacks.append(msg)
            tail = _bfs(g, current, target, k, EdgeRule.ADD_REMOVE, universe)
            if tail is None:
                raise ProofViolation("fallback found no walk inside D_{Gamma+1}")
            return steps + tail[1:]
        steps += [current | rep, nxt]
        current = nxt
    return steps


# ---------------------------------------------------------------------------
# Rewrites between D_{l+1} walks and token-jump paths


def _alternates(steps: list[VertexSet], l: int) -> bool:
    return all(s.bit_count() == (l if i % 2 == 0 else l + 1) for i, s in enumerate(steps))


def compress_walk(g: Graph, w: Walk, l: int) -> Walk:
    """Rewrite a D_{l+1} walk between size-l sets to use only sizes l and l+1.

    The first dip below ``l`` that starts at ``A_p`` and ends with the first
    re-addition ``A_{j+1} = A_j | {x}`` is replaced by
    ``A_p, A_p | {x}, A_{p+1} | {x}, ..., A_{j-1} | {x}, A_{j+1}``.  The total
    deficit below ``l`` strictly drops with every rewrite and the length never
    grows.
    """
    if not verify_walk(g, Walk(w.steps, w.moves, l + 1)):
        raise ValueError(f"walk is not valid in D_{l + 1}")
    if w.start.bit_count() != l or w.end.bit_count() != l:
        raise ValueError(f"walk endpoints must have {l} vertices")
    steps = list(w.steps)

    def deficit(seq: list[int]) -> int:
        return sum(max(0, l - s.bit_count()) for s in seq)

    while True:
        dip = next((i for i, s in enumerate(steps) if s.bit_count() < l), None)
        if dip is None:
            break
        before = deficit(steps)
        p = dip - 1
        j = next(i for i in range(dip, len(steps) - 1) if steps[i + 1] & ~steps[i])
        x = steps[j + 1] & ~steps[j]
        middle = [steps[p] | x] + [steps[i] | x for i in range(p + 1, j)]
        rewritten = steps[:p + 1] + middle + steps[j + 1:]
        steps = [s for i, s in enumerate(rewritten) if i == 0 or s != rewritten[i - 1]]
        assert deficit(steps) < before
    out = Walk.from_steps(steps, l + 1)
    assert _alternates(out.steps, l), "compressed walk does not alternate"
    if len(out) > 2 * len(w) + 2:
        log.warning("compressed walk longer than 2*len+2 (%d vs %d)", len(out), len(w))
    return out


def project_to_jump(g: Graph, w: Walk) -> JumpPath:
    """Keep the even positions of an alternating l / l+1 walk.

    Positions where the walk returns to the set it left collapse, so the
    result is a path of genuine token jumps.
    """
    if not w.steps:
        raise ValueError("empty walk")
    l = w.start.bit_count()
    if not _alternates(w.steps, l) or w.end.bit_count() != l:
        raise ValueError("walk must alternate between sizes l and l+1 with size-l ends")
    if not verify_walk(g, Walk(w.steps, w.moves, l + 1)):
        raise ValueError("walk is not valid")
    even = w.steps[::2]
    steps = [s for i, s in enumerate(even) if i == 0 or s != even[i - 1]]
    return JumpPath.from_steps(steps)


def lift_from_jump(g: Graph, p: JumpPath) -> Walk:
    """Each jump ``s -> t`` becomes add ``t`` then remove ``s``."""
    if not verify_jump_path(g, p):
        raise ValueError("not a valid token-jump path")
    steps = [p.steps[0]]
    for (out, inn), nxt in zip(p.moves, p.steps[1:]):
        steps.append(steps[-1] | 1 << inn)
        steps.append(nxt)
    return Walk.from_steps(steps, p.k + 1)


# ---------------------------------------------------------------------------
# Oracle


def _bfs(
    g: Graph, a: int, b: int, k: int, rule: EdgeRule, within: int | None = None
) -> list[int] | None:
    universe = g.full if within is None else within
    if a == b:
        return [a]
    if within is None:
        sub = g
    else:
        # restrict moves to the universe by masking adjacency
        sub = Graph(g.n, tuple(nb & universe if universe >> v & 1 else 0 for v, nb in enumerate(g.adj)))
    parent = {a: a}
    queue = deque([a])
    closed = g.closed
    while queue:
        s = queue.popleft()
        for t in candidate_moves(sub, rule, s, k):
            if t in parent or t & ~universe:
                continue
            cov = 0
            for v in members(t):
                cov |= closed[v]
            if cov & universe != universe:
                continue
            parent[t] = s
            if t == b:
                path = [t]
                while path[-1] != a:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(t)
    return None


def oracle_bfs(
    g: Graph, a: VertexSet, b: VertexSet, k: int, rule: EdgeRule = EdgeRule.ADD_REMOVE
) -> Walk | JumpPath | None:
    """Shortest reconfiguration sequence from ``a`` to ``b``, or ``None`` if none exists.

    Neighbours are generated on the fly; nothing is materialised.
    """
    for s, what in ((a, "start"), (b, "end")):
        if rule is EdgeRule.ADD_REMOVE:
            _check_node(g, s, k, what)
        elif s & ~g.full or s.bit_count() != k or not is_dominating(g, s):
            raise ValueError(f"{what} is not a dominating set of size {k}")
    path = _bfs(g, a, b, k, rule)
    if path is None:
        return None
    if rule is EdgeRule.ADD_REMOVE:
        return Walk.from_steps(path, k)
    return JumpPath.from_steps(path)


# ---------------------------------------------------------------------------
# Text format


def format_walk(w: Walk | JumpPath, n: int) -> str:
    """One set per line as a 0/1 string; later lines carry ``+v``, ``-v`` or ``s>t``."""
    if isinstance(w, JumpPath):
        lines = [f"# k={w.k} rule=jump", to_bitstring(w.steps[0], n)]
        lines += [f"{s}>{t} {to_bitstring(x, n)}" for (s, t), x in zip(w.moves, w.steps[1:])]
    else:
        lines = [f"# k={w.k}", to_bitstring(w.steps[0], n)]
        lines += [f"{sign}{v} {to_bitstring(x, n)}" for (sign, v), x in zip(w.moves, w.steps[1:])]
    return "\n".join(lines) + "\n"


def parse_walk(text: str, k: int | None = None) -> Walk | JumpPath:
    header_k = None
    jump = False
    steps: list[int] = []
    moves: list = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for tok in line[1:].split():
                if tok.startswith("k="):
                    header_k = int(tok[2:])
                elif tok == "rule=jump":
                    jump = True
            continue
        parts = line.split()
        try:
            if not steps:
                if len(parts) != 1:
                    raise ValueError("first set carries no move")
                steps.append(from_bitstring(parts[0]))
                continue
            if len(parts) != 2:
                raise ValueError("expected '<move> <set>'")
            mv, bits = parts
            steps.append(from_bitstring(bits))
            if ">" in mv:
                jump = True
                out, inn = mv.split(">")
                moves.append((int(out), int(inn)))
            elif mv[:1] in "+-" and mv[1:].isdigit():
                moves.append((mv[0], int(mv[1:])))
            else:
                raise ValueError(f"bad move {mv!r}")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if not steps:
        raise ValueError("walk file contains no sets")
    if jump:
        return JumpPath(steps, moves)
    bound = k if k is not None else header_k
    if bound is None:
        raise ValueError("walk file has no k; pass one explicitly")
    return Walk(steps, moves, bound)
