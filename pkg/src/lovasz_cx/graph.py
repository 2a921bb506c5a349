"""Immutable simple graphs with bitset adjacency.

Vertices are ``0..order-1``.  A vertex set is a plain ``int`` bitmask; the
helpers :func:`mask_of` and :func:`members` convert to and from iterables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import IndexOutOfRange, LoopRejected

INF = math.inf

VertexSet = int


def mask_of(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    # For graphs produced by delete_vertices: new index -> index in the parent.
    index_map: tuple[int, ...] | None = field(default=None, compare=False)

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={len(self.edges)})"

    @property
    def size(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular, else ``None``."""
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        if not degs:
            return 0
        return None

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def is_independent(self, vertices: Iterable[int] | int) -> bool:
        m = mask_of(vertices)
        for v in iter_bits(m):
            if self.adj[v] & m:
                return False
        return True

    def full_mask(self) -> int:
        return (1 << self.order) - 1


def from_edges(order: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph; duplicate pairs collapse, loops and bad indices raise."""
    if order < 0:
        raise IndexOutOfRange(f"negative order {order}")
    adj = [0] * order
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < order and 0 <= v < order):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{order - 1}")
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return _from_adj(adj)


def _from_adj(adj: Sequence[int], index_map: tuple[int, ...] | None = None) -> Graph:
    edges = []
    for u, a in enumerate(adj):
        for v in iter_bits(a >> (u + 1)):
            edges.append((u, u + 1 + v))
    return Graph(len(adj), tuple(adj), tuple(edges), index_map)


def induced_subgraph(g: Graph, keep: Iterable[int] | int) -> Graph:
    """Subgraph induced on ``keep``; vertices renumbered in increasing order."""
    keep_mask = mask_of(keep)
    if keep_mask >> g.order:
        raise IndexOutOfRange("vertex set exceeds graph order")
    old = members(keep_mask)
    new_of = {o: i for i, o in enumerate(old)}
    adj = []
    for o in old:
        a = 0
        for w in iter_bits(g.adj[o] & keep_mask):
            a |= 1 << new_of[w]
        adj.append(a)
    return _from_adj(adj, tuple(old))


def delete_vertices(g: Graph, s: Iterable[int] | int) -> Graph:
    """``g`` minus the vertices in ``s``; ``index_map`` records new -> old."""
    s_mask = mask_of(s)
    if s_mask >> g.order:
        raise IndexOutOfRange("vertex set exceeds graph order")
    return induced_subgraph(g, g.full_mask() & ~s_mask)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex bijection ``v -> perm[v]``."""
    return from_edges(g.order, ((perm[u], perm[v]) for u, v in g.edges))


def line_graph(g: Graph) -> Graph:
    """One vertex per edge of ``g`` (in ``g.edges`` order), adjacent iff they share an endpoint."""
    star = [0] * g.order
    for i, (u, v) in enumerate(g.edges):
        star[u] |= 1 << i
        star[v] |= 1 << i
    adj = [(star[u] | star[v]) & ~(1 << i) for i, (u, v) in enumerate(g.edges)]
    return _from_adj(adj)


def complete_graph(n: int) -> Graph:
    return from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    return from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def empty_graph(n: int) -> Graph:
    return from_edges(n, ())


# ---------------------------------------------------------------------------
# metrics


@dataclass(frozen=True)
class GraphMetrics:
    connected: bool
    girth: float  # INF when acyclic
    diameter: float  # INF when disconnected
    degree_min: int
    degree_max: int

    def as_dict(self) -> dict:
        def fin(x):
            return None if x == INF else int(x)

        return {
            "connected": self.connected,
            "girth": fin(self.girth),
            "diameter": fin(self.diameter),
            "degree_min": self.degree_min,
            "degree_max": self.degree_max,
        }


def bfs_layers(g: Graph, root: int) -> list[int]:
    """Distance layers from ``root`` as bitmasks."""
    seen = 1 << root
    frontier = seen
    layers = [frontier]
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def distance_profile(g: Graph, v: int) -> tuple[int, ...]:
    """Number of vertices at distance 0, 1, 2, ... from ``v``."""
    return tuple(layer.bit_count() for layer in bfs_layers(g, v))


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    return sum(distance_profile(g, 0)) == g.order


def girth(g: Graph) -> float:
    best = INF
    for root in range(g.order):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            du = dist[u]
            if 2 * du + 1 >= best:
                break
            for w in iter_bits(g.adj[u]):
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, du + dist[w] + 1)
    return best


def diameter(g: Graph) -> float:
    if g.order == 0:
        return 0
    worst = 0
    for v in range(g.order):
        layers = bfs_layers(g, v)
        if sum(x.bit_count() for x in layers) != g.order:
            return INF
        worst = max(worst, len(layers) - 1)
    return worst


def metrics(g: Graph) -> GraphMetrics:
    degs = g.degrees() or [0]
    diam = diameter(g)
    return GraphMetrics(
        connected=g.order == 0 or diam != INF,
        girth=girth(g),
        diameter=diam,
        degree_min=min(degs),
        degree_max=max(degs),
    )
