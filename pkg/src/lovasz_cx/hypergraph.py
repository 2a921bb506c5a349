"""Line hypergraphs: vertices are the edges of a base graph, hyperedges are
vertex stars.  Exact matching and cover numbers, r-partitions, and the
independent-set / matching correspondence."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import IsolatedVertex, NotIndependent
from .graph import Graph, _from_adj, iter_bits, mask_of, members
from .solvers.coloring import edge_colorable
from .solvers.matching import max_matching
from .solvers.mis import max_independent_set

GENERIC_COVER_MAX_ORDER = 14


@dataclass(frozen=True)
class LineHypergraph:
    base: Graph
    hyperedges: tuple[int, ...]  # star of base vertex v, as a bitmask over edge indices

    @property
    def n_vertices(self) -> int:
        return self.base.size

    @property
    def n_hyperedges(self) -> int:
        return len(self.hyperedges)

    def hyperedge(self, v: int) -> list[int]:
        return members(self.hyperedges[v])

    def uniformity(self) -> int | None:
        sizes = {h.bit_count() for h in self.hyperedges}
        return sizes.pop() if len(sizes) == 1 else None

    def to_text(self) -> str:
        lines = [f"v {self.n_vertices}"]
        lines += [" ".join(map(str, members(h))) for h in self.hyperedges]
        return "\n".join(lines) + "\n"

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_text())


@dataclass(frozen=True)
class HypergraphMetrics:
    nu: int
    tau: int
    r: int | None
    partite: tuple[tuple[int, ...], ...] | None


@dataclass(frozen=True)
class RyserReport:
    nu: int
    tau: int
    bound: int
    satisfied: bool
    extremal: bool

    def as_dict(self) -> dict:
        return {
            "nu": self.nu,
            "tau": self.tau,
            "bound": self.bound,
            "satisfied": self.satisfied,
            "extremal": self.extremal,
        }


def line_hypergraph(g: Graph) -> LineHypergraph:
    stars = [0] * g.order
    for i, (u, v) in enumerate(g.edges):
        stars[u] |= 1 << i
        stars[v] |= 1 << i
    for v, s in enumerate(stars):
        if not s:
            raise IsolatedVertex(f"vertex {v} has no incident edge")
    return LineHypergraph(g, tuple(stars))


def r_partition(h: LineHypergraph, r: int) -> list[list[int]] | None:
    """Colour classes of a proper r-edge-colouring of the base, or ``None``."""
    if h.base.regular_degree() != r:
        return None
    coloring = edge_colorable(h.base, r)
    if coloring is None:
        return None
    return coloring.classes()


def conflict_graph(h: LineHypergraph) -> Graph:
    """Hyperedges adjacent iff they intersect."""
    hs = h.hyperedges
    adj = [0] * len(hs)
    for i, a in enumerate(hs):
        for j in range(i + 1, len(hs)):
            if a & hs[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return _from_adj(adj)


def matching_number(h: LineHypergraph) -> int:
    return max_independent_set(conflict_graph(h)).alpha


def maximum_matching(h: LineHypergraph) -> list[int]:
    """Indices of pairwise disjoint hyperedges of maximum count."""
    return list(max_independent_set(conflict_graph(h)).witness)


def _hitting_set(hyperedges: Sequence[int]) -> int:
    """Minimum number of vertices meeting every hyperedge (branch and bound).

    Branches on a smallest uncovered hyperedge; the i-th branch picks its
    i-th vertex and forbids the earlier ones.  Lower bound: a greedy family
    of pairwise disjoint uncovered hyperedges.
    """
    best = [sum(1 for x in hyperedges if x) + 1]
    if sys.getrecursionlimit() < 4 * len(hyperedges) + 200:
        sys.setrecursionlimit(4 * len(hyperedges) + 200)

    def lower(open_: list[int], forbidden: int) -> int:
        taken = 0
        lb = 0
        for e in sorted(open_, key=lambda x: ((x & ~forbidden).bit_count(), x)):
            if not e & taken:
                taken |= e
                lb += 1
        return lb

    def go(open_: list[int], forbidden: int, size: int) -> None:
        if not open_:
            best[0] = min(best[0], size)
            return
        if size + lower(open_, forbidden) >= best[0]:
            return
        e = min(open_, key=lambda x: ((x & ~forbidden).bit_count(), x))
        choices = e & ~forbidden
        if not choices:
            return
        banned = forbidden
        for x in iter_bits(choices):
            bit = 1 << x
            go([f for f in open_ if not f & bit], banned, size + 1)
            banned |= bit

    go([x for x in hyperedges if x], 0, 0)
    return best[0]


def cover_number(h: LineHypergraph, cross_validate: bool | None = None) -> int:
    """Exact cover number.

    The fast path uses the fact that a cover of the line hypergraph is an edge
    cover of the base: ``|V| - matching(base)``.  The generic hitting-set
    search also runs when the base has at most 14 vertices, or when
    ``cross_validate`` is true; the two must agree.
    """
    fast = h.base.order - max_matching(h.base)
    if cross_validate is None:
        cross_validate = h.base.order <= GENERIC_COVER_MAX_ORDER
    if cross_validate:
        generic = _hitting_set(h.hyperedges)
        if generic != fast:
            raise AssertionError(f"cover number mismatch: edge-cover path {fast}, hitting-set path {generic}")
    return fast


def cover_number_generic(h: LineHypergraph) -> int:
    return _hitting_set(h.hyperedges)


def matching_from_independent_set(h: LineHypergraph, independent: Iterable[int] | int) -> list[int]:
    """Stars of an independent set; returned as hyperedge indices (= base vertices)."""
    mask = mask_of(independent)
    if not h.base.is_independent(mask):
        raise NotIndependent("vertex set is not independent in the base graph")
    return members(mask)


def independent_set_from_matching(h: LineHypergraph, matching: Iterable[int]) -> list[int]:
    idx = sorted(set(matching))
    seen = 0
    for i in idx:
        if h.hyperedges[i] & seen:
            raise NotIndependent("hyperedges are not pairwise disjoint")
        seen |= h.hyperedges[i]
    return idx


def ryser_report(h: LineHypergraph, r: int) -> RyserReport:
    nu = matching_number(h)
    tau = cover_number(h)
    bound = (r - 1) * nu
    return RyserReport(nu, tau, bound, tau <= bound, tau == bound)


def hypergraph_metrics(h: LineHypergraph) -> HypergraphMetrics:
    r = h.uniformity()
    part = r_partition(h, r) if r else None
    return HypergraphMetrics(
        nu=matching_number(h),
        tau=cover_number(h),
        r=r,
        partite=tuple(tuple(c) for c in part) if part is not None else None,
    )
