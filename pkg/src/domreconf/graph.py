"""Simple graphs on at most 64 vertices with bit-mask adjacency.

Vertex sets are plain ``int`` bit masks throughout the package: bit ``v`` is
set iff vertex ``v`` belongs to the set.  The helpers below cover the few
set operations that are not already Python operators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

MAX_VERTICES = 64

VertexSet = int


class GraphFormatError(ValueError):
    """Raised when graph text cannot be decoded."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


def members(s: VertexSet) -> Iterator[int]:
    """Yield the vertices of ``s`` in ascending order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


def to_bitstring(s: VertexSet, n: int) -> str:
    """Render ``s`` as an n-character 0/1 string, vertex 0 leftmost."""
    return "".join("1" if s >> v & 1 else "0" for v in range(n))


def from_bitstring(text: str) -> VertexSet:
    if not text or set(text) - {"0", "1"}:
        raise ValueError(f"not a 0/1 string: {text!r}")
    return sum(1 << i for i, ch in enumerate(text) if ch == "1")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbour mask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"neighbours of {v} fall outside the vertex range")
            if nb >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in members(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    @cached_property
    def closed(self) -> tuple[int, ...]:
        """Closed neighbourhood masks N[v]."""
        return tuple(nb | 1 << v for v, nb in enumerate(self.adj))

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_clique(self, s: VertexSet) -> bool:
        return all(self.closed[v] & s == s for v in members(s))

    def is_independent(self, s: VertexSet) -> bool:
        return all(not self.adj[v] & s for v in members(s))

    def components(self, within: VertexSet | None = None) -> list[VertexSet]:
        """Connected components of the subgraph induced by ``within``, ordered by lowest vertex."""
        remaining = self.full if within is None else within
        comps = []
        while remaining:
            comp = frontier = remaining & -remaining
            while frontier:
                nxt = 0
                for v in members(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & remaining & ~comp
                comp |= frontier
            comps.append(comp)
            remaining &= ~comp
        return comps

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def isolated_vertices(g: Graph) -> VertexSet:
    return mask_of(v for v in range(g.n) if not g.adj[v])


def has_two_independent_edges(g: Graph) -> bool:
    edges = g.edges()
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if len({a, b, c, d}) == 4:
                return True
    return False


# ---------------------------------------------------------------------------
# Named families


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


# ---------------------------------------------------------------------------
# Text formats


def parse_edge_list(text: str, source: str | None = None) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines of ``"u v"``.

    Blank lines and ``#`` comments are skipped.  Duplicate edges collapse.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise GraphFormatError("empty edge list", source=source)

    def ints(lineno: int, line: str) -> tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno, source)
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno, source) from None

    lineno, header = rows[0]
    n, m = ints(lineno, header)
    if not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"vertex count {n} outside 1..{MAX_VERTICES}", lineno, source)
    if m < 0:
        raise GraphFormatError(f"negative edge count {m}", lineno, source)
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(rows) - 1}", lineno, source)

    adj = [0] * n
    for lineno, line in rows[1:]:
        u, v = ints(lineno, line)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in {line!r}", lineno, source)
        if u == v:
            raise GraphFormatError(f"self-loop at {u}", lineno, source)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


_G6_HEADER = ">>graph6<<"


def _triangle_pairs(n: int) -> Iterator[tuple[int, int]]:
    # graph6 order: column by column over the upper triangle
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~"] + [chr(63 + (n >> shift & 63)) for shift in (12, 6, 0)]
    bits = [g.adj[i] >> j & 1 for i, j in _triangle_pairs(n)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = chunk << 1 | b
        out.append(chr(63 + chunk))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"stray character {ch!r} in graph6 string")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    else:
        if len(vals) < 4 or vals[1] == 63:
            raise GraphFormatError("unsupported or truncated graph6 size field")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    if not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"graph6 vertex count {n} outside 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) != need:
        kind = "truncated" if len(body) < need else "overlong"
        raise GraphFormatError(f"{kind} graph6 bit stream: {len(body)} chunks, expected {need}")
    adj = [0] * n
    for idx, (i, j) in enumerate(_triangle_pairs(n)):
        if body[idx // 6] >> (5 - idx % 6) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def parse_graph(text: str, fmt: str | None = None, source: str | None = None) -> Graph:
    """Parse an edge list or graph6 string; ``fmt=None`` sniffs the first line."""
    if fmt is None:
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        fmt = "edgelist" if first[:1].isdigit() else "graph6"
    if fmt == "edgelist":
        return parse_edge_list(text, source)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected one graph6 line, got {len(lines)}", source=source)
        try:
            return parse_graph6(lines[0])
        except GraphFormatError as exc:
            raise GraphFormatError(str(exc), line=1, source=source) from None
    raise ValueError(f"unknown graph format {fmt!r}")
