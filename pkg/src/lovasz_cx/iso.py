"""Exact pairwise isomorphism test: colour refinement followed by backtracking."""

from __future__ import annotations

import sys

from .graph import Graph, distance_profile, iter_bits


def _joint_refine(g: Graph, h: Graph) -> tuple[list, list] | None:
    """Refine both graphs with a shared palette so colours can be compared."""
    cg = [(g.degree(v), distance_profile(g, v)) for v in range(g.order)]
    ch = [(h.degree(v), distance_profile(h, v)) for v in range(h.order)]
    while True:
        if sorted(cg) != sorted(ch):
            return None
        palette = {c: i for i, c in enumerate(sorted(set(cg)))}
        ng = [palette[c] for c in cg]
        nh = [palette[c] for c in ch]
        sg = [(ng[v], tuple(sorted(ng[w] for w in iter_bits(g.adj[v])))) for v in range(g.order)]
        sh = [(nh[v], tuple(sorted(nh[w] for w in iter_bits(h.adj[v])))) for v in range(h.order)]
        if len(set(sg)) == len(palette):
            if sorted(sg) != sorted(sh):
                return None
            return ng, nh
        cg, ch = sg, sh


def isomorphic(g: Graph, h: Graph) -> tuple[bool, list[int] | None]:
    """Decide ``g ≅ h``; on success also return a mapping ``g-vertex -> h-vertex``."""
    if g.order != h.order or g.size != h.size:
        return False, None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False, None
    if g.order == 0:
        return True, []
    refined = _joint_refine(g, h)
    if refined is None:
        return False, None
    cg, ch = refined

    # g's vertices in BFS order, each component seeded from its rarest colour class
    class_size: dict[int, int] = {}
    for c in cg:
        class_size[c] = class_size.get(c, 0) + 1
    order: list[int] = []
    parent: list[int] = []
    placed = 0
    while len(order) < g.order:
        root = min(
            (v for v in range(g.order) if not placed >> v & 1),
            key=lambda v: (class_size[cg[v]], v),
        )
        order.append(root)
        parent.append(-1)
        placed |= 1 << root
        head = len(order) - 1
        while head < len(order):
            u = order[head]
            head += 1
            for w in iter_bits(g.adj[u] & ~placed):
                order.append(w)
                parent.append(u)
                placed |= 1 << w

    n = g.order
    fwd = [-1] * n
    used_h = 0
    mapped_g = 0

    def consistent(v: int, w: int) -> bool:
        img = 0
        for u in iter_bits(g.adj[v] & mapped_g):
            img |= 1 << fwd[u]
        return img == h.adj[w] & used_h

    def extend(pos: int) -> bool:
        nonlocal used_h, mapped_g
        if pos == n:
            return True
        v = order[pos]
        p = parent[pos]
        pool = h.adj[fwd[p]] & ~used_h if p >= 0 else h.full_mask() & ~used_h
        for w in iter_bits(pool):
            if ch[w] != cg[v] or not consistent(v, w):
                continue
            fwd[v] = w
            used_h |= 1 << w
            mapped_g |= 1 << v
            if extend(pos + 1):
                return True
            fwd[v] = -1
            used_h &= ~(1 << w)
            mapped_g &= ~(1 << v)
        return False

    limit = sys.getrecursionlimit()
    if limit < n + 100:
        sys.setrecursionlimit(n + 100)
    if extend(0):
        return True, fwd
    return False, None


def is_isomorphism(g: Graph, h: Graph, mapping: list[int]) -> bool:
    if len(mapping) != g.order or sorted(mapping) != list(range(h.order)):
        return False
    return sorted(tuple(sorted((mapping[u], mapping[v]))) for u, v in g.edges) == list(h.edges)
