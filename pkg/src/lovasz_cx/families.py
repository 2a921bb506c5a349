"""Parametric graph families: generalized, supergeneralized and
Cayley-generalized Petersen graphs, permutation graphs and Cayley graphs.

Indexing conventions
--------------------
``gp(n, k)``: outer vertex ``a_i`` is ``2i`` and inner vertex ``b_i`` is
``2i + 1`` for ``i`` in ``0..n-1``.  :class:`RungView` speaks the 1-based
rung numbering used in proofs: rung ``i`` (taken mod n, so rung ``n`` is rung
``0``) holds ``a(i) = 2((i-1) mod n)`` and ``b(i) = a(i) + 1``.

``sgp`` and ``cgp``: vertex ``(layer, j)`` is ``layer * block + j``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .errors import (
    AsymmetricConnectionSet,
    DegenerateParameter,
    EdgeCollision,
    IdentityInConnectionSet,
    NotAGpGraph,
    NotAPermutation,
    SpecSyntaxError,
)
from .graph import Graph, from_edges
from .graph6 import decode_graph6, encode_graph6
from .groups import FiniteGroup, builtin_group, evaluate_word

DATA_DIR = Path(__file__).parent / "data"


def gen_petersen(n: int, k: int) -> Graph:
    if n < 3:
        raise DegenerateParameter(f"gp needs n >= 3, got {n}")
    k %= n
    if k == 0 or (2 * k) % n == 0:
        raise DegenerateParameter(f"gp({n},{k}): need k != 0 and 2k != 0 mod n")
    edges = []
    for i in range(n):
        edges.append((2 * i, 2 * i + 1))
        edges.append((2 * i, 2 * ((i + 1) % n)))
        edges.append((2 * i + 1, 2 * ((i + k) % n) + 1))
    return from_edges(2 * n, edges)


def _add_unique(edges: set, u: int, v: int, what: str) -> None:
    e = (min(u, v), max(u, v))
    if e in edges:
        raise EdgeCollision(f"{what} edge {e} already present")
    edges.add(e)


def supergen_petersen(m: int, n: int, ks: Sequence[int]) -> Graph:
    """``sgp(m, n; k_0..k_{m-1})``; the two spoke families coincide when m = 2."""
    if m < 2 or n < 3:
        raise DegenerateParameter(f"sgp needs m >= 2 and n >= 3, got m={m}, n={n}")
    if len(ks) != m:
        raise DegenerateParameter(f"sgp needs {m} jumps, got {len(ks)}")
    inner: set = set()
    for i, k in enumerate(ks):
        k %= n
        if k == 0 or (2 * k) % n == 0:
            raise DegenerateParameter(f"sgp jump k_{i}={k} invalid mod {n}")
        for j in range(n):
            _add_unique(inner, i * n + j, i * n + (j + k) % n, "inner")
    spokes = set()
    for i in range(m):
        for j in range(n):
            u, v = i * n + j, ((i + 1) % m) * n + j
            spokes.add((min(u, v), max(u, v)))
    if inner & spokes:
        raise EdgeCollision("an inner edge duplicates a spoke")
    return from_edges(m * n, sorted(inner | spokes))


def cayley_gen_petersen(m: int, group: FiniteGroup, ks: Sequence[int], cs: Sequence[int]) -> Graph:
    """``cgp(m, G; k_i; c_i)``: ``(i, j) ~ (i, j k_i)`` and ``(i, j) ~ (i+1, j c_i)``."""
    if m < 2:
        raise DegenerateParameter(f"cgp needs m >= 2, got {m}")
    if len(ks) != m or len(cs) != m:
        raise DegenerateParameter(f"cgp needs {m} k- and c-parameters, got {len(ks)} and {len(cs)}")
    N = group.order
    edges: set = set()
    for i, k in enumerate(ks):
        if k == group.identity or group.inv(k) == k:
            raise DegenerateParameter(f"k_{i} must be neither the identity nor an involution")
        for j in range(N):
            e = (i * N + j, i * N + group.mul(j, k))
            edges.add((min(e), max(e)))
    for i, c in enumerate(cs):
        group._check(c)
        nxt = (i + 1) % m
        for j in range(N):
            _add_unique(edges, i * N + j, nxt * N + group.mul(j, c), f"cross (layer {i})")
    return from_edges(m * N, sorted(edges))


def permutation_graph(base: Graph, perm: Sequence[int]) -> Graph:
    """Two copies of ``base``; ``v`` in the first copy meets ``perm[v]`` in the second."""
    n = base.order
    if sorted(perm) != list(range(n)):
        raise NotAPermutation(f"{list(perm)} is not a permutation of 0..{n - 1}")
    edges = list(base.edges)
    edges += [(u + n, v + n) for u, v in base.edges]
    edges += [(v, n + perm[v]) for v in range(n)]
    return from_edges(2 * n, edges)


def cayley_graph(group: FiniteGroup, connection_set: Sequence[int]) -> Graph:
    s = set(connection_set)
    if group.identity in s:
        raise IdentityInConnectionSet("connection set contains the identity")
    for x in s:
        if group.inv(x) not in s:
            raise AsymmetricConnectionSet(f"inverse of {x} missing from connection set")
    edges = [(j, group.mul(j, x)) for j in range(group.order) for x in sorted(s)]
    return from_edges(group.order, edges)


# ---------------------------------------------------------------------------
# rungs


@dataclass(frozen=True)
class RungView:
    graph: Graph
    n: int
    k: int

    def _r(self, i: int) -> int:
        return (i - 1) % self.n

    def a(self, i: int) -> int:
        return 2 * self._r(i)

    def b(self, i: int) -> int:
        return 2 * self._r(i) + 1

    def R(self, i: int) -> frozenset[int]:
        return frozenset((self.a(i), self.b(i)))

    def S(self, i: int, length: int) -> frozenset[int]:
        out: set[int] = set()
        for j in range(i, i + length):
            out |= self.R(j)
        return frozenset(out)

    def rung_of(self, v: int) -> int:
        """1-based rung number in ``1..n``."""
        return v // 2 + 1


def rung_view(g: Graph) -> RungView:
    """Recover ``(n, k)`` from a graph built by :func:`gen_petersen`."""
    if g.order < 6 or g.order % 2:
        raise NotAGpGraph("order must be even and at least 6")
    n = g.order // 2
    for i in range(n):
        if not (g.has_edge(2 * i, 2 * i + 1) and g.has_edge(2 * i, 2 * ((i + 1) % n))):
            raise NotAGpGraph(f"missing spoke or rim edge at rung index {i}")
    inner = [w // 2 for w in g.neighbors(1) if w % 2 == 1]
    for k in sorted(inner):
        if k and (2 * k) % n and g.edges == gen_petersen(n, k).edges:
            return RungView(g, n, k)
    raise NotAGpGraph("inner edges do not match any gp(n, k)")


# ---------------------------------------------------------------------------
# specs


@dataclass(frozen=True)
class FamilySpec:
    """Declarative description of a parametric graph; ``str()`` gives its text form."""

    variant: str  # gp | sgp | cgp | perm | cayley | g6
    params: tuple = ()
    group: str = ""
    bindings: tuple[tuple[str, int], ...] = ()
    text: str = field(default="", compare=False)

    def __str__(self) -> str:
        return self.text or format_spec(self)

    def build(self, base_dir: str | Path | None = None) -> Graph:
        return build(self, base_dir)

    def resolve_group(self, base_dir: str | Path | None = None) -> FiniteGroup:
        return builtin_group(self.group, base_dir=base_dir or DATA_DIR)


def _split_top(s: str) -> list[str]:
    """Split on commas outside brackets and braces."""
    out, depth, cur = [], 0, []
    for ch in s:
        if ch in "[{(":
            depth += 1
        elif ch in "]})":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur).strip())
    return out


def _ints(parts) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise SpecSyntaxError(str(exc)) from exc


def _bracketed(s: str, open_: str = "[", close: str = "]") -> list[str]:
    s = s.strip()
    if not (s.startswith(open_) and s.endswith(close)):
        raise SpecSyntaxError(f"expected {open_}...{close}, got {s!r}")
    inner = s[1:-1].strip()
    return [p.strip() for p in inner.split(",")] if inner else []


def parse_spec(text: str) -> FamilySpec:
    """Parse ``gp:n,k``, ``sgp:m,n,k0,..``, ``cgp:m,<group>,[ks],[cs][,{f1=..}]``,
    ``perm:<graph6>,<p0 p1 ..>``, ``cayley:<group>,{s1,s2,..}`` or ``g6:<graph6>``."""
    text = text.strip()
    kind, sep, rest = text.partition(":")
    if not sep:
        raise SpecSyntaxError(f"missing ':' in spec {text!r}")
    kind = kind.strip().lower()
    if kind == "gp":
        n, k = _ints(_split_top(rest))
        return FamilySpec("gp", (n, k), text=text)
    if kind == "sgp":
        vals = _ints(_split_top(rest))
        if len(vals) < 3:
            raise SpecSyntaxError("sgp needs m,n,k0,...")
        return FamilySpec("sgp", (vals[0], vals[1], vals[2:]), text=text)
    if kind == "cgp":
        parts = _split_top(rest)
        if len(parts) not in (4, 5):
            raise SpecSyntaxError("cgp needs m,<group>,[k-words],[c-words][,{bindings}]")
        m = _ints([parts[0]])[0]
        ks = tuple(_bracketed(parts[2]))
        cs = tuple(_bracketed(parts[3]))
        binds: tuple = ()
        if len(parts) == 5:
            pairs = []
            for item in _bracketed(parts[4], "{", "}"):
                key, _, val = item.partition("=")
                pairs.append((key.strip(), int(val)))
            binds = tuple(pairs)
        return FamilySpec("cgp", (m, ks, cs), group=parts[1], bindings=binds, text=text)
    if kind == "perm":
        g6, _, perm = rest.partition(",")
        vals = _ints(p for p in re.split(r"[\s,\[\]]+", perm) if p)
        return FamilySpec("perm", (g6.strip(), vals), text=text)
    if kind == "cayley":
        parts = _split_top(rest)
        if len(parts) != 2:
            raise SpecSyntaxError("cayley needs <group>,{s1,...}")
        return FamilySpec("cayley", (tuple(_bracketed(parts[1], "{", "}")),), group=parts[0], text=text)
    if kind == "g6":
        return FamilySpec("g6", (rest.strip(),), text=text)
    raise SpecSyntaxError(f"unknown family {kind!r}")


def format_spec(spec: FamilySpec) -> str:
    p = spec.params
    if spec.variant == "gp":
        return f"gp:{p[0]},{p[1]}"
    if spec.variant == "sgp":
        return f"sgp:{p[0]},{p[1]}," + ",".join(map(str, p[2]))
    if spec.variant == "cgp":
        s = f"cgp:{p[0]},{spec.group},[{','.join(map(str, p[1]))}],[{','.join(map(str, p[2]))}]"
        if spec.bindings:
            s += ",{" + ",".join(f"{k}={v}" for k, v in spec.bindings) + "}"
        return s
    if spec.variant == "perm":
        return f"perm:{p[0]}," + " ".join(map(str, p[1]))
    if spec.variant == "cayley":
        return f"cayley:{spec.group},{{{','.join(map(str, p[0]))}}}"
    return f"g6:{p[0]}"


def build(spec: FamilySpec | str, base_dir: str | Path | None = None) -> Graph:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    p = spec.params
    if spec.variant == "gp":
        return gen_petersen(*p)
    if spec.variant == "sgp":
        return supergen_petersen(p[0], p[1], p[2])
    if spec.variant == "g6":
        return decode_graph6(p[0])
    if spec.variant == "perm":
        return permutation_graph(decode_graph6(p[0]), p[1])
    group = spec.resolve_group(base_dir)
    binds = dict(spec.bindings)
    if spec.variant == "cgp":
        m, ks, cs = p
        kv = [evaluate_word(group, w, binds) for w in ks]
        cv = [evaluate_word(group, w, binds) for w in cs]
        return cayley_gen_petersen(m, group, kv, cv)
    if spec.variant == "cayley":
        return cayley_graph(group, [evaluate_word(group, w, binds) for w in p[0]])
    raise SpecSyntaxError(f"cannot build {spec.variant!r}")


def spec_graph6(spec: FamilySpec | str) -> str:
    return encode_graph6(build(spec))
