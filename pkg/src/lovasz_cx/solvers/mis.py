"""Exact maximum independent set by bitset branch and bound.

Search rules (fixed, so node counts are reproducible):

* vertices of residual degree 0 or 1 are taken greedily (always safe);
* the upper bound partitions the candidates greedily into cliques and
  5-cycles, scanning vertices in index order: a clique of size s costs 1,
  a 5-cycle costs 2.  Cliques are the usual greedy-colouring bound in the
  complement; 5-cycles tighten it on the girth-5 graphs this package studies;
* branching is on a vertex of maximum residual degree, lowest index first,
  include branch before exclude branch.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterable

from ..graph import Graph, iter_bits, mask_of, members


@dataclass(frozen=True)
class IndependenceResult:
    alpha: int
    witness: tuple[int, ...]
    nodes_explored: int

    @property
    def witness_mask(self) -> int:
        return mask_of(self.witness)


def partition_bound(adj: list[int] | tuple[int, ...], P: int) -> int:
    """Upper bound on the independence number of the subgraph induced by ``P``."""
    bound = 0
    R = P
    while R:
        low = R & -R
        v = low.bit_length() - 1
        R ^= low
        nv = adj[v] & R
        if not nv:
            bound += 1
            continue
        # greedy clique through v
        cand = nv
        size = 1
        clique = low
        while cand:
            lw = cand & -cand
            w = lw.bit_length() - 1
            clique |= lw
            size += 1
            cand &= adj[w]
            cand &= ~lw
        if size >= 3:
            R &= ~clique
            bound += 1
            continue
        # 5-cycle v - x - p - q - y - v
        found = 0
        xs = nv
        while xs and not found:
            lx = xs & -xs
            x = lx.bit_length() - 1
            xs ^= lx
            ys = xs  # y > x among v's neighbours
            while ys and not found:
                ly = ys & -ys
                y = ly.bit_length() - 1
                ys ^= ly
                rest = R & ~(lx | ly)
                ny = adj[y] & rest
                ps = adj[x] & rest
                while ps:
                    lp = ps & -ps
                    p = lp.bit_length() - 1
                    ps ^= lp
                    qs = adj[p] & ny
                    if qs:
                        lq = qs & -qs
                        found = lx | ly | lp | lq
                        break
        if found:
            R &= ~found
            bound += 2
        else:
            R &= ~clique
            bound += 1
    return bound


def _greedy(adj, P: int) -> list[int]:
    """Min-degree greedy independent set (lowest index tiebreak)."""
    out = []
    while P:
        best_v, best_d = -1, 1 << 30
        for v in iter_bits(P):
            d = (adj[v] & P).bit_count()
            if d < best_d:
                best_v, best_d = v, d
                if d == 0:
                    break
        out.append(best_v)
        P &= ~(adj[best_v] | (1 << best_v))
    return out


class _Search:
    def __init__(self, adj, lower: int, stop_at: int | None):
        self.adj = adj
        self.best = lower  # size to beat
        self.best_set: list[int] = []
        self.stop_at = stop_at
        self.nodes = 0
        self.done = False

    def run(self, P: int, chosen: list[int]) -> None:
        adj = self.adj
        self.nodes += 1
        # reductions
        forced = []
        changed = True
        while changed and P:
            changed = False
            for v in iter_bits(P):
                if not P >> v & 1:
                    continue
                nv = adj[v] & P
                if nv.bit_count() <= 1:
                    forced.append(v)
                    P &= ~(nv | (1 << v))
                    changed = True
        cur = len(chosen) + len(forced)
        if not P or (self.stop_at is not None and cur >= self.stop_at):
            if cur > self.best:
                self.best = cur
                self.best_set = chosen + forced
                if self.stop_at is not None and cur >= self.stop_at:
                    self.done = True
            return
        if cur + partition_bound(adj, P) <= self.best:
            return
        # branch vertex: max residual degree, lowest index
        bv, bd = -1, -1
        for v in iter_bits(P):
            d = (adj[v] & P).bit_count()
            if d > bd:
                bv, bd = v, d
        base = chosen + forced
        base.append(bv)
        self.run(P & ~(adj[bv] | (1 << bv)), base)
        if self.done:
            return
        base.pop()
        self.run(P & ~(1 << bv), base)


def _ensure_recursion(n: int) -> None:
    need = 4 * n + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def max_independent_set(g: Graph, restrict: int | Iterable[int] | None = None) -> IndependenceResult:
    """Exact independence number with a witness.  ``restrict`` limits the candidate vertices."""
    P = g.full_mask() if restrict is None else mask_of(restrict) & g.full_mask()
    adj = list(g.adj)
    _ensure_recursion(g.order)
    seed = _greedy(adj, P)
    s = _Search(adj, len(seed), None)
    s.best_set = seed
    s.run(P, [])
    return IndependenceResult(s.best, tuple(sorted(s.best_set)), s.nodes)


def has_independent_set(
    g: Graph,
    target: int,
    excluded: int | Iterable[int] = 0,
) -> tuple[int, ...] | None:
    """Witness of size >= ``target`` avoiding ``excluded``, or ``None`` if none exists."""
    witness, _ = has_independent_set_counted(g, target, excluded)
    return witness


def has_independent_set_counted(g: Graph, target: int, excluded: int | Iterable[int] = 0):
    P = g.full_mask() & ~mask_of(excluded)
    if target <= 0:
        return (), 0
    adj = list(g.adj)
    _ensure_recursion(g.order)
    seed = _greedy(adj, P)
    if len(seed) >= target:
        return tuple(sorted(seed)), 0
    s = _Search(adj, target - 1, target)
    s.run(P, [])
    if s.best >= target:
        return tuple(sorted(s.best_set)), s.nodes
    return None, s.nodes


def independence_number(g: Graph) -> int:
    return max_independent_set(g).alpha


__all__ = [
    "IndependenceResult",
    "max_independent_set",
    "has_independent_set",
    "independence_number",
    "partition_bound",
    "members",
]
