"""Hamiltonian cycle search over edge decisions.

Every vertex needs exactly two cycle edges.  Propagation rules:

* a vertex with two usable edges left must use both (degree-2 forcing);
* a vertex with two chosen edges drops its other edges;
* chosen edges form path fragments; an edge joining the two ends of one
  fragment is dropped unless it closes the full cycle;
* the usable edges must keep the graph connected (cut check).

Branching takes an undecided edge at a fragment end with the fewest
usable edges (lowest vertex, then lowest neighbour), trying "use" first.
A node budget turns an unfinished search into ``unknown``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from ..graph import Graph, iter_bits

YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass(frozen=True)
class HamiltonResult:
    status: str
    cycle: tuple[int, ...] | None
    nodes: int

    def __bool__(self) -> bool:
        return self.status == YES


def is_hamilton_cycle(g: Graph, cycle) -> bool:
    if cycle is None or len(cycle) != g.order or set(cycle) != set(range(g.order)):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


class _Budget(Exception):
    pass


class _State:
    __slots__ = ("avail", "chosen", "end", "n_in")

    def __init__(self, avail, chosen, end, n_in):
        self.avail = avail  # usable (not dropped) neighbours, bitmask per vertex
        self.chosen = chosen  # chosen cycle neighbours, bitmask per vertex
        self.end = end  # other end of the fragment for fragment ends
        self.n_in = n_in

    def copy(self) -> "_State":
        return _State(list(self.avail), list(self.chosen), list(self.end), self.n_in)


def _cycle_from(chosen: list[int]) -> tuple[int, ...]:
    cyc = [0]
    prev, cur = -1, 0
    while True:
        nbrs = [w for w in iter_bits(chosen[cur]) if w != prev]
        nxt = nbrs[0]
        if nxt == 0:
            break
        cyc.append(nxt)
        prev, cur = cur, nxt
        if len(cyc) > len(chosen):
            break
    return tuple(cyc)


def hamiltonian(g: Graph, node_budget: int | None = 2_000_000) -> HamiltonResult:
    n = g.order
    if n < 3 or min(g.degrees()) < 2:
        return HamiltonResult(NO, None, 0)
    full = g.full_mask()
    nodes = 0

    def drop(st: _State, u: int, v: int, queue: list) -> bool:
        if st.chosen[u] >> v & 1:
            return False
        if st.avail[u] >> v & 1:
            st.avail[u] &= ~(1 << v)
            st.avail[v] &= ~(1 << u)
            queue.append(u)
            queue.append(v)
        return True

    def use(st: _State, u: int, v: int, queue: list) -> bool:
        if st.chosen[u] >> v & 1:
            return True
        if not st.avail[u] >> v & 1:
            return False
        if st.chosen[u].bit_count() >= 2 or st.chosen[v].bit_count() >= 2:
            return False
        a, b = st.end[u], st.end[v]
        st.chosen[u] |= 1 << v
        st.chosen[v] |= 1 << u
        st.n_in += 1
        if a == v:
            # closes a cycle: only acceptable if it is Hamiltonian
            return st.n_in == n
        st.end[a] = b
        st.end[b] = a
        queue.append(u)
        queue.append(v)
        if st.n_in < n - 1 and st.avail[a] >> b & 1 and not st.chosen[a] >> b & 1:
            if not drop(st, a, b, queue):
                return False
        return True

    def propagate(st: _State, queue: list) -> bool:
        while queue:
            x = queue.pop()
            av = st.avail[x]
            k = av.bit_count()
            if k < 2:
                return False
            ch = st.chosen[x]
            c = ch.bit_count()
            if c == 2 and k > 2:
                for w in iter_bits(av & ~ch):
                    if not drop(st, x, w, queue):
                        return False
            elif k == 2 and c < 2:
                for w in iter_bits(av & ~ch):
                    if not use(st, x, w, queue):
                        return False
                    if st.n_in == n:
                        return True
        return True

    def connected(st: _State) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= st.avail[v]
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        return seen == full

    def search(st: _State) -> _State | None:
        nonlocal nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise _Budget
        if st.n_in == n:
            return st
        if not connected(st):
            return None
        # branch vertex: fragment end (one chosen edge) with fewest usable edges
        best, best_k = -1, 1 << 30
        for v in range(n):
            if st.chosen[v].bit_count() == 1:
                k = st.avail[v].bit_count()
                if k < best_k:
                    best, best_k = v, k
        if best < 0:
            best = 0
        w = (st.avail[best] & ~st.chosen[best])
        w = (w & -w).bit_length() - 1
        for choice in (use, drop):
            child = st.copy()
            q: list = []
            if choice(child, best, w, q) and propagate(child, q):
                res = search(child)
                if res is not None:
                    return res
        return None

    root = _State(list(g.adj), [0] * n, list(range(n)), 0)
    if sys.getrecursionlimit() < 4 * n + 200:
        sys.setrecursionlimit(4 * n + 200)
    try:
        q = list(range(n))
        res = search(root) if propagate(root, q) else None
    except _Budget:
        return HamiltonResult(UNKNOWN, None, nodes)
    if res is None:
        return HamiltonResult(NO, None, nodes)
    cyc = _cycle_from(res.chosen)
    if not is_hamilton_cycle(g, cyc):
        raise AssertionError("Hamiltonian search produced an invalid cycle")
    return HamiltonResult(YES, cyc, nodes)
