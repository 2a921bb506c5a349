"""Exact r-edge-colourability by backtracking with forward checking."""

from __future__ import annotations

import sys
from dataclasses import dataclass

from ..graph import Graph, iter_bits


@dataclass(frozen=True)
class EdgeColoring:
    r: int
    colors: tuple[int, ...]  # indexed like graph.edges

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.r)]
        for i, c in enumerate(self.colors):
            out[c].append(i)
        return out


def is_proper(g: Graph, colors) -> bool:
    seen = set()
    for (u, v), c in zip(g.edges, colors):
        for x in (u, v):
            if (x, c) in seen:
                return False
            seen.add((x, c))
    return True


def dfs_edge_order(g: Graph) -> list[int]:
    """Edges in the order a DFS from vertex 0 meets them (restarting per component)."""
    eidx = g.edge_index()
    order, seen_e = [], set()
    visited = 0
    for root in range(g.order):
        if visited >> root & 1:
            continue
        stack = [root]
        while stack:
            u = stack.pop()
            if visited >> u & 1:
                continue
            visited |= 1 << u
            for w in sorted(g.neighbors(u), reverse=True):
                e = eidx[(min(u, w), max(u, w))]
                if e not in seen_e:
                    seen_e.add(e)
                    order.append(e)
                if not visited >> w & 1:
                    stack.append(w)
    return order


def edge_colorable(g: Graph, r: int, node_limit: int | None = None) -> EdgeColoring | None:
    """A proper r-edge-colouring, or ``None`` when none exists.

    Edges are taken in DFS order, except that an uncoloured edge with the
    fewest remaining colours is always taken first (ties broken by DFS
    position); a forward check rejects any step that leaves some edge with
    no colour.  The edges at the DFS root get colours 0, 1, ... in order to
    break colour symmetry.  Raises ``TimeoutError`` after ``node_limit``
    search nodes.
    """
    if g.size == 0:
        return EdgeColoring(r, ())
    if max(g.degrees()) > r:
        return None
    order = dfs_edge_order(g)
    pos_of = {e: i for i, e in enumerate(order)}
    m = len(order)
    full = (1 << r) - 1
    used = [0] * g.order  # colour bitmask at each vertex
    colors = [-1] * g.size
    edges = g.edges
    inc: list[list[int]] = [[] for _ in range(g.order)]
    for i, (u, v) in enumerate(edges):
        inc[u].append(i)
        inc[v].append(i)

    root = edges[order[0]][0]
    fixed = {e: c for c, e in enumerate(sorted(inc[root], key=pos_of.__getitem__))}

    nodes = 0
    if sys.getrecursionlimit() < m + 200:
        sys.setrecursionlimit(m + 200)

    def pick() -> tuple[int, int]:
        best, best_choices, best_k = -1, 0, r + 1
        for e in order:
            if colors[e] >= 0:
                continue
            u, v = edges[e]
            choices = full & ~(used[u] | used[v])
            if e in fixed:
                choices &= 1 << fixed[e]
            k = choices.bit_count()
            if k < best_k:
                best, best_choices, best_k = e, choices, k
                if k <= 1:
                    break
        return best, best_choices

    def go(done: int) -> bool:
        nonlocal nodes
        if done == m:
            return True
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise TimeoutError("edge colouring node budget exhausted")
        e, choices = pick()
        u, v = edges[e]
        for c in iter_bits(choices):
            bit = 1 << c
            colors[e] = c
            used[u] |= bit
            used[v] |= bit
            if go(done + 1):
                return True
            used[u] &= ~bit
            used[v] &= ~bit
            colors[e] = -1
        return False

    if go(0):
        return EdgeColoring(r, tuple(colors))
    return None
