"""Simple undirected graphs stored as per-vertex neighbour bitmasks.

Vertices are the integers ``0..n-1``.  Bit ``j`` of ``adj[i]`` is set iff
``{i, j}`` is an edge.  Python integers are unbounded, so the same
representation serves every order up to :data:`MAX_ORDER`.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Literal

MAX_ORDER = 256
GRAPH6_MAX_ORDER = 62
GRAPH6_HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    """Raised for malformed graph6 or edge-list input."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


def popcount(x: int) -> int:
    return x.bit_count()


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"graph order must lie in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {i} has a neighbour out of range")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in vertices_of(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    def neighbors(self, v: int) -> tuple[int, ...]:
        return vertices_of(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in self.neighbors(i) if i < j]

    def is_regular(self) -> bool:
        return len(set(self.degrees())) == 1

    def __str__(self) -> str:
        return encode_graph6(self) if self.n <= GRAPH6_MAX_ORDER else f"Graph(n={self.n})"


# ---------------------------------------------------------------- graph6

def _pairs_graph6_order(n: int) -> Iterator[tuple[int, int]]:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` header is allowed)."""
    data = line.rstrip("\r\n")
    base = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not data:
        raise GraphFormatError("empty graph6 record", base)
    for k, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {ord(ch)} outside 63..126", base + k)
    n = ord(data[0]) - 63
    if n == 63:
        raise GraphFormatError(
            f"multi-byte order encoding unsupported (max order {GRAPH6_MAX_ORDER})", base)
    if n == 0:
        raise GraphFormatError("graph6 record encodes the empty graph", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) != nbytes:
        where = base + 1 + min(len(body), nbytes)
        kind = "truncated" if len(body) < nbytes else "trailing garbage in"
        raise GraphFormatError(
            f"{kind} graph6 record: order {n} needs {nbytes} data bytes, got {len(body)}", where)
    bits = 0
    for ch in body:
        bits = bits << 6 | (ord(ch) - 63)
    pad = nbytes * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits", base + len(data) - 1)
    bits >>= pad
    adj = [0] * n
    for k, (i, j) in enumerate(_pairs_graph6_order(n)):
        if bits >> (nbits - 1 - k) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_ORDER:
        raise ValueError(
            f"graph6 encoding supports order <= {GRAPH6_MAX_ORDER}, got {g.n}")
    out = [chr(g.n + 63)]
    chunk = 0
    filled = 0
    for i, j in _pairs_graph6_order(g.n):
        chunk = chunk << 1 | (g.adj[i] >> j & 1)
        filled += 1
        if filled == 6:
            out.append(chr(chunk + 63))
            chunk = filled = 0
    if filled:
        out.append(chr((chunk << (6 - filled)) + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for every non-blank record; errors name the line."""
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line.strip())
        except GraphFormatError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from exc


# ---------------------------------------------------------------- edge lists

def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty edge list")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphFormatError(f"line 1: expected vertex count, got {lines[0]!r}") from None
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in {ln!r}") from None
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


# ---------------------------------------------------------------- families

FamilyKind = Literal["complete", "complete_bipartite", "cycle", "path", "star"]


@dataclass(frozen=True)
class GraphFamily:
    kind: FamilyKind
    params: tuple[int, ...]

    def __post_init__(self):
        expected = 2 if self.kind == "complete_bipartite" else 1
        if len(self.params) != expected:
            raise ValueError(f"{self.kind} takes {expected} parameter(s), got {self.params}")
        if any(p < 1 for p in self.params):
            raise ValueError(f"family parameters must be positive, got {self.params}")
        if self.kind == "cycle" and self.params[0] < 3:
            raise ValueError("cycle needs at least 3 vertices")

    @classmethod
    def parse(cls, spec: str) -> GraphFamily:
        """Parse ``K:n``, ``K:r,s``, ``C:n``, ``P:n`` or ``S:n``."""
        try:
            tag, rest = spec.split(":", 1)
            params = tuple(int(x) for x in rest.split(","))
        except ValueError:
            raise ValueError(f"bad family spec {spec!r}") from None
        tag = tag.strip().upper()
        if tag == "K":
            kind = "complete" if len(params) == 1 else "complete_bipartite"
        else:
            kinds = {"C": "cycle", "P": "path", "S": "star"}
            if tag not in kinds:
                raise ValueError(f"unknown family tag {tag!r} in {spec!r}")
            kind = kinds[tag]
        return cls(kind, params)


def complete(n: int) -> Graph:
    return generate(GraphFamily("complete", (n,)))


def complete_bipartite(r: int, s: int) -> Graph:
    return generate(GraphFamily("complete_bipartite", (r, s)))


def cycle(n: int) -> Graph:
    return generate(GraphFamily("cycle", (n,)))


def path(n: int) -> Graph:
    return generate(GraphFamily("path", (n,)))


def star(n: int) -> Graph:
    """The star on ``n`` vertices, i.e. ``K_{1,n-1}``."""
    return generate(GraphFamily("star", (n,)))


def generate(family: GraphFamily) -> Graph:
    kind, params = family.kind, family.params
    if kind == "complete":
        n = params[0]
        return Graph.from_edges(n, itertools.combinations(range(n), 2))
    if kind == "complete_bipartite":
        r, s = params
        return Graph.from_edges(r + s, [(i, r + j) for i in range(r) for j in range(s)])
    if kind == "cycle":
        n = params[0]
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "path":
        n = params[0]
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "star":
        n = params[0]
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    raise ValueError(f"unknown family {kind!r}")


# ---------------------------------------------------------------- structure

def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``G[S]`` re-indexed to ``0..|S|-1`` and the map new index -> old vertex."""
    verts = sorted(set(vertices))
    if not verts:
        raise ValueError("induced subgraph needs a nonempty vertex set")
    if verts[0] < 0 or verts[-1] >= g.n:
        raise ValueError(f"vertex set {verts} not contained in 0..{g.n - 1}")
    return induced_by_mask(g, mask_of(verts)), tuple(verts)


def induced_adjacency(g: Graph, mask: int) -> tuple[int, ...]:
    """Neighbour masks of ``G[mask]`` relabelled to 0..k-1 in vertex order."""
    verts = vertices_of(mask)
    index = {v: k for k, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for w in vertices_of(g.adj[v] & mask):
            row |= 1 << index[w]
        adj.append(row)
    return tuple(adj)


def induced_by_mask(g: Graph, mask: int) -> Graph:
    adj = induced_adjacency(g, mask)
    return Graph(len(adj), adj)


def reachable(g: Graph, start: int, within: int | None = None) -> int:
    """Bitmask of vertices reachable from ``start`` inside the vertex mask ``within``."""
    within = g.full_mask if within is None else within
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in vertices_of(frontier):
            nxt |= g.adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return reachable(g, 0) == g.full_mask


def is_connected_mask(g: Graph, mask: int) -> bool:
    if not mask:
        return False
    start = (mask & -mask).bit_length() - 1
    return reachable(g, start, mask) == mask


def is_complete(g: Graph) -> bool:
    return g.num_edges == g.n * (g.n - 1) // 2


def bipartition(g: Graph) -> tuple[int, int] | None:
    """Two-colour a connected graph; returns the colour-class masks or None."""
    colour = [-1] * g.n
    colour[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if colour[w] < 0:
                colour[w] = 1 - colour[v]
                stack.append(w)
            elif colour[w] == colour[v]:
                return None
    a = mask_of(v for v in range(g.n) if colour[v] == 0)
    return a, g.full_mask & ~a


def complete_bipartite_parts(g: Graph) -> tuple[int, int] | None:
    """``(r, s)`` with ``r <= s`` if ``g`` is ``K_{r,s}``, else None."""
    if g.n < 2 or not is_connected(g):
        return None
    parts = bipartition(g)
    if parts is None:
        return None
    r, s = sorted((popcount(parts[0]), popcount(parts[1])))
    return (r, s) if g.num_edges == r * s else None


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and is_connected(g)


# ---------------------------------------------------------------- enumeration

MAX_ENUMERATION_ORDER = 7


def enumerate_connected(n: int, shard: tuple[int, int] = (0, 1)) -> Iterator[Graph]:
    """Every labelled connected graph on ``n`` vertices, exactly once.

    Order is lexicographic in the graph6 upper-triangle bit vector (first pair
    most significant).  ``shard=(k, m)`` keeps the connected graphs whose
    ordinal is congruent to ``k`` mod ``m``.
    """
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(
            f"built-in enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}; "
            "supply a graph6 stream for larger orders")
    k, m = shard
    if not 0 <= k < m:
        raise ValueError(f"bad shard {k}/{m}")
    pairs = list(_pairs_graph6_order(n))
    nbits = len(pairs)
    full = (1 << n) - 1
    ordinal = 0
    for code in range(1 << nbits):
        adj = [0] * n
        for b, (i, j) in enumerate(pairs):
            if code >> (nbits - 1 - b) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        # inline reachability from vertex 0
        seen = frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
        if seen != full:
            continue
        if ordinal % m == k:
            yield Graph(n, tuple(adj))
        ordinal += 1
