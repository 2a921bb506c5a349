"""Constructive maximum independent sets for gp(5k+11, 2) minus two edges.

Rungs are numbered 1..n as in :class:`~lovasz_cx.families.RungView`; a
vertex is given by its internal index (``a_i -> 2(i-1)``, ``b_i -> 2(i-1)+1``).

For k <= 2 the set comes from the exact solver.  For larger k it is built
from the set for k-1: rotate so that ten consecutive rungs ending at rung n
avoid both edges, cut out the last five rungs and re-glue (which gives
gp(n-5, 2) on rungs 1..n-5), recurse, then re-insert five rungs after a
rung ``i1`` that the smaller set leaves empty, filling them with
``a_{i1+1}, b_{i1+2}, b_{i1+3}, a_{i1+4}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalProofViolation, PreconditionViolated
from .families import gen_petersen
from .graph import Graph
from .solvers.mis import has_independent_set

Edge = tuple[int, int]


def rung(v: int) -> int:
    return v // 2 + 1


def vertex(kind: str, i: int, n: int) -> int:
    """Internal index of ``a_i`` / ``b_i`` (i taken mod n, 1-based)."""
    return 2 * ((i - 1) % n) + (kind == "b")


def parse_gp_edge(text: str, n: int) -> Edge:
    """``"a1a2"`` / ``"a_1 b_1"`` / ``"b3-b5"`` -> internal vertex pair."""
    parts = re.findall(r"([ab])_?\{?(\d+)\}?", text)
    if len(parts) != 2:
        raise PreconditionViolated(f"cannot parse edge {text!r}")
    u, v = (vertex(kind, int(i), n) for kind, i in parts)
    return (min(u, v), max(u, v))


def format_vertex(v: int) -> str:
    return f"{'ab'[v % 2]}{rung(v)}"


def _rotate(v: int, shift: int, n: int) -> int:
    return 2 * ((v // 2 + shift) % n) + v % 2


def _check_edge(g: Graph, e: Edge, n: int) -> None:
    if not g.has_edge(*e):
        raise PreconditionViolated(f"{format_vertex(e[0])}{format_vertex(e[1])} is not an edge of gp({n},2)")


def _segment(i: int, length: int, n: int) -> set[int]:
    out = set()
    for j in range(i, i + length):
        out.add(vertex("a", j, n))
        out.add(vertex("b", j, n))
    return out


def find_free_segment(n: int, e1: Edge, e2: Edge) -> int:
    """A rung ``i0`` (1..n) whose ten-rung segment avoids both edges' endpoints."""
    if n < 26:
        raise PreconditionViolated(f"need n >= 26, got {n}")
    g = gen_petersen(n, 2)
    for e in (e1, e2):
        _check_edge(g, e, n)

    def span(e: Edge) -> tuple[int, int]:
        # (start rung, length-1) of an edge read forwards; edges span <= 3 rungs
        r1, r2 = rung(e[0]), rung(e[1])
        d = (r2 - r1) % n
        return (r1, d) if d <= 2 else (r2, (r1 - r2) % n)

    def inside(p: int, q: int, d: int) -> bool:
        # p strictly after q within q's span
        return 0 < (p - q) % n <= d

    (p, dp), (q, dq) = span(e1), span(e2)
    # the edge whose start is not strictly inside the other becomes uv
    if inside(p, q, dq):
        (p, dp), (q, dq) = (q, dq), (p, dp)
    # rotate so that r(u) = 1
    w = (q - p) % n + 1
    half = n // 2
    i0_rot = 4 if w > half else half + 3
    i0 = (i0_rot - 1 + p - 1) % n + 1
    seg = _segment(i0, 10, n)
    if seg & {*e1, *e2}:
        raise InternalProofViolation(f"segment starting at rung {i0} meets the deleted edges")
    return i0


@dataclass(frozen=True)
class OracleTrace:
    k: int
    n: int
    edges: tuple[Edge, Edge]
    I: tuple[int, ...]
    i0: int | None
    i1: int | None  # in the rotated frame
    shift: int
    recursion_depth: int
    child: "OracleTrace | None" = None

    def levels(self) -> list["OracleTrace"]:
        out, t = [], self
        while t is not None:
            out.append(t)
            t = t.child
        return out


@lru_cache(maxsize=None)
def _base_case(k: int, excluded: frozenset[int]) -> tuple[int, ...] | None:
    g = gen_petersen(5 * k + 11, 2)
    return has_independent_set(g, 4 * k + 8, excluded)


def _verify(g: Graph, I: set[int], size: int, avoid: set[int], where: str) -> None:
    if len(I) != size:
        raise InternalProofViolation(f"{where}: |I| = {len(I)}, expected {size}")
    if not g.is_independent(I):
        raise InternalProofViolation(f"{where}: set is not independent")
    if I & avoid:
        raise InternalProofViolation(f"{where}: set meets a deleted endpoint")


def boundary_edges(i1: int, n: int) -> list[Edge]:
    """The nine edges joining the kept, inserted and shifted parts."""
    a = lambda i: vertex("a", i, n)  # noqa: E731
    b = lambda i: vertex("b", i, n)  # noqa: E731
    return [
        (a(i1), a(i1 + 1)),
        (b(i1), b(i1 + 2)),
        (b(i1 - 1), b(i1 + 1)),
        (a(i1 + 5), a(i1 + 6)),
        (b(i1 + 5), b(i1 + 7)),
        (b(i1 + 4), b(i1 + 6)),
        (a(n), a(1)),
        (b(n - 1), b(1)),
        (b(n), b(2)),
    ]


def oracle_independent_set(k: int, e1: Edge, e2: Edge) -> OracleTrace:
    """Independent set of size 4k+8 in gp(5k+11, 2) avoiding the endpoints of ``e1`` and ``e2``."""
    if k < 0:
        raise PreconditionViolated("k must be >= 0")
    n = 5 * k + 11
    g = gen_petersen(n, 2)
    e1 = (min(e1), max(e1))
    e2 = (min(e2), max(e2))
    for e in (e1, e2):
        _check_edge(g, e, n)
    avoid = {*e1, *e2}
    size = 4 * k + 8

    if k <= 2:
        w = _base_case(k, frozenset(avoid))
        if w is None:
            raise InternalProofViolation(f"exact solver found no set of size {size} for k={k}")
        I = set(w)
        _verify(g, I, size, avoid, f"k={k} base case")
        return OracleTrace(k, n, (e1, e2), tuple(sorted(I)), None, None, 0, 0)

    i0 = find_free_segment(n, e1, e2)
    shift = (n - 9 - i0) % n
    r1 = tuple(sorted(_rotate(v, shift, n) for v in e1))
    r2 = tuple(sorted(_rotate(v, shift, n) for v in e2))
    ravoid = {*r1, *r2}
    if ravoid & _segment(n - 9, 10, n):
        raise InternalProofViolation("rotation did not clear rungs n-9..n")

    # rungs 1..n-5 of gp(n,2) re-glued form gp(n-5,2) with identical internal indices
    child = oracle_independent_set(k - 1, r1, r2)
    small = set(child.I)
    i1 = next((i for i in range(n - 9, n - 4) if not small & {vertex("a", i, n), vertex("b", i, n)}), None)
    if i1 is None:
        raise InternalProofViolation("every rung in n-9..n-5 meets the smaller set")

    I = set()
    for z in small:
        rz = rung(z)
        if rz <= i1:
            I.add(z)
        else:
            I.add(z + 10)  # rung +5
    I |= {vertex("a", i1 + 1, n), vertex("b", i1 + 2, n), vertex("b", i1 + 3, n), vertex("a", i1 + 4, n)}

    _verify(g, I, size, ravoid, f"k={k} rotated frame")
    for u, v in boundary_edges(i1, n):
        if u in I and v in I:
            raise InternalProofViolation(f"boundary edge {format_vertex(u)}{format_vertex(v)} inside I")

    I = {_rotate(v, -shift, n) for v in I}
    _verify(g, I, size, avoid, f"k={k}")
    return OracleTrace(k, n, (e1, e2), tuple(sorted(I)), i0, i1, shift, child.recursion_depth + 1, child)
