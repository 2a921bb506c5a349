"""Maximum cardinality matching (Edmonds' blossom algorithm)."""

from __future__ import annotations

from collections import deque

from ..graph import Graph, line_graph
from .mis import max_independent_set


def _blossom(g: Graph) -> list[int]:
    """``mate[v]`` for a maximum matching; -1 marks exposed vertices."""
    n = g.order
    nbrs = [g.neighbors(v) for v in range(n)]
    mate = [-1] * n

    # greedy start
    for v in range(n):
        if mate[v] < 0:
            for w in nbrs[v]:
                if mate[w] < 0:
                    mate[v], mate[w] = w, v
                    break

    def augment_from(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        q = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] < 0:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
            while base[v] != b:
                in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while q:
            v = q.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] >= 0 and parent[mate[to]] >= 0):
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom)
                    mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if mate[to] < 0:
                        # augmenting path found: flip it
                        while to >= 0:
                            pv = parent[to]
                            nxt = mate[pv]
                            mate[to], mate[pv] = pv, to
                            to = nxt
                        return True
                    used[mate[to]] = True
                    q.append(mate[to])
        return False

    for v in range(n):
        if mate[v] < 0:
            augment_from(v)
    return mate


def max_matching_edges(g: Graph) -> list[tuple[int, int]]:
    mate = _blossom(g)
    return [(v, w) for v, w in enumerate(mate) if v < w]


def max_matching(g: Graph) -> int:
    return len(max_matching_edges(g))


def max_matching_via_line_graph(g: Graph) -> int:
    """Matching number as alpha of the line graph; slow, kept as a cross-check."""
    return max_independent_set(line_graph(g)).alpha
