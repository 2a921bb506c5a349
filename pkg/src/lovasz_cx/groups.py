"""Small finite groups stored as multiplication tables.

Elements are indices ``0..order-1``.  ``builtin_group`` understands the
descriptors ``cyclic:n``, ``dihedral:n`` (order 2n), ``symmetric:n``,
``gl2_3``, ``table:<path>`` and products joined with ``x`` or ``*``, e.g.
``cyclic:2 x gl2_3``.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, replace
from functools import cached_property, reduce
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    IndexOutOfRange,
    NoIdentity,
    NotAssociative,
    NotLatinSquare,
    OrderTooLarge,
    UnboundGenerator,
    UnknownDescriptor,
)

MAX_ORDER = 200


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    element_names: tuple[str, ...] | None = None
    label: str = ""
    additive: bool = False

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label or '?'}, order={self.order})"

    def mul(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        return self.table[x][y]

    def inv(self, x: int) -> int:
        self._check(x)
        return self.inverse[x]

    def power(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inverse[x], -e
        out = self.identity
        for _ in range(e):
            out = self.table[out][x]
        return out

    def _check(self, x: int) -> None:
        if not 0 <= x < self.order:
            raise IndexOutOfRange(f"element {x} not in group of order {self.order}")

    @cached_property
    def is_abelian(self) -> bool:
        t = np.asarray(self.table)
        return bool((t == t.T).all())

    def name(self, x: int) -> str:
        if self.element_names:
            return self.element_names[x]
        return str(x)


def element_order(g: FiniteGroup, x: int) -> int:
    g._check(x)
    t, y = 1, x
    while y != g.identity:
        y = g.table[y][x]
        t += 1
    return t


def element_orders(g: FiniteGroup) -> list[int]:
    return [element_order(g, x) for x in range(g.order)]


def from_table(rows: Sequence[Sequence[int]], names: Sequence[str] | None = None, label: str = "") -> FiniteGroup:
    """Validate a Cayley table and wrap it as a group."""
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotLatinSquare("table must be a non-empty square matrix")
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds {MAX_ORDER}")
    t = np.asarray(rows, dtype=np.int64)
    if t.min() < 0 or t.max() >= n:
        raise NotLatinSquare("entries outside 0..n-1")
    full = np.arange(n)
    if not all((np.sort(t, axis=1) == full).all(axis=1)) or not all((np.sort(t, axis=0).T == full).all(axis=1)):
        raise NotLatinSquare("some row or column is not a permutation")
    ids = [e for e in range(n) if (t[e] == full).all() and (t[:, e] == full).all()]
    if not ids:
        raise NoIdentity("no two-sided identity")
    e = ids[0]
    if not (t[t, :] == t[:, t]).all():
        raise NotAssociative("multiplication is not associative")
    inverse = tuple(int(np.nonzero(t[x] == e)[0][0]) for x in range(n))
    if names is not None and len(names) != n:
        raise NotLatinSquare("names list length differs from order")
    return FiniteGroup(
        order=n,
        table=tuple(tuple(int(v) for v in r) for r in t),
        identity=e,
        inverse=inverse,
        element_names=tuple(names) if names is not None else None,
        label=label,
    )


def _from_elements(elems: list, op, label: str, names=None) -> FiniteGroup:
    index = {el: i for i, el in enumerate(elems)}
    rows = [[index[op(a, b)] for b in elems] for a in elems]
    return from_table(rows, names=names, label=label)


def cyclic(n: int) -> FiniteGroup:
    g = from_table([[(a + b) % n for b in range(n)] for a in range(n)], label=f"cyclic:{n}")
    return replace(g, additive=True)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; index ``i + n*s`` is ``r^i s^s``."""
    elems = [(i, s) for s in (0, 1) for i in range(n)]

    def op(x, y):
        (a, b), (c, d) = x, y
        return ((a + (c if b == 0 else -c)) % n, (b + d) % 2)

    names = [("r^%d" % i if i else "1") if s == 0 else ("r^%d s" % i if i else "s") for i, s in elems]
    return _from_elements(elems, op, f"dihedral:{n}", names)


def symmetric(n: int) -> FiniteGroup:
    if n > 6:
        raise OrderTooLarge(f"symmetric:{n} has order {math.factorial(n)}")
    elems = list(itertools.permutations(range(n)))

    def op(p, q):  # apply q first, then p
        return tuple(p[q[x]] for x in range(n))

    return _from_elements(elems, op, f"symmetric:{n}", ["".join(map(str, p)) for p in elems])


def gl2_3() -> FiniteGroup:
    """Invertible 2x2 matrices over GF(3), identity first, rest in lexicographic order."""
    mats = [
        (a, b, c, d)
        for a, b, c, d in itertools.product(range(3), repeat=4)
        if (a * d - b * c) % 3
    ]
    ident = (1, 0, 0, 1)
    mats.remove(ident)
    mats.insert(0, ident)

    def op(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3, (c * e + d * g) % 3, (c * f + d * h) % 3)

    return _from_elements(mats, op, "gl2_3", ["[%d%d;%d%d]" % m for m in mats])


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Componentwise product; element ``(x, y)`` has index ``x*|b| + y``."""
    n = a.order * b.order
    if n > MAX_ORDER:
        raise OrderTooLarge(f"product order {n} exceeds {MAX_ORDER}")
    nb = b.order
    rows = [
        [a.table[x1][x2] * nb + b.table[y1][y2] for x2 in range(a.order) for y2 in range(nb)]
        for x1 in range(a.order)
        for y1 in range(nb)
    ]
    names = [f"({a.name(x)},{b.name(y)})" for x in range(a.order) for y in range(nb)]
    return from_table(rows, names=names, label=f"{a.label} x {b.label}")


_ATOM = re.compile(r"^(cyclic|dihedral|symmetric):(\d+)$|^gl2_3$|^table:(.+)$")


def builtin_group(spec: str, base_dir: str | Path | None = None) -> FiniteGroup:
    """Resolve a group descriptor (see module docstring)."""
    parts = [p.strip() for p in re.split(r"\s+x\s+|\*", spec.strip()) if p.strip()]
    if not parts:
        raise UnknownDescriptor(f"empty group descriptor {spec!r}")
    groups = [_atom(p, base_dir) for p in parts]
    g = reduce(direct_product, groups)
    return replace(g, label=" x ".join(parts)) if len(groups) > 1 else g


def _atom(text: str, base_dir) -> FiniteGroup:
    m = _ATOM.match(text)
    if not m:
        raise UnknownDescriptor(f"unknown group descriptor {text!r}")
    if text == "gl2_3":
        return gl2_3()
    if m.group(3):
        path = Path(m.group(3))
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        return read_table_file(path)
    kind, n = m.group(1), int(m.group(2))
    if n < 1:
        raise UnknownDescriptor(f"{kind}:{n} needs n >= 1")
    if kind == "cyclic":
        if n > MAX_ORDER:
            raise OrderTooLarge(f"cyclic:{n}")
        return cyclic(n)
    if kind == "dihedral":
        if 2 * n > MAX_ORDER:
            raise OrderTooLarge(f"dihedral:{n}")
        return dihedral(n)
    return symmetric(n)


# ---------------------------------------------------------------------------
# files


def read_table_file(path: str | Path) -> FiniteGroup:
    """Read ``order n`` / n rows of indices / optional ``names ...`` line."""
    lines = [ln.strip() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    head = lines[0].split()
    if len(head) != 2 or head[0] != "order":
        raise UnknownDescriptor(f"{path}: first line must be 'order n'")
    n = int(head[1])
    rows = [[int(x) for x in ln.split()] for ln in lines[1 : n + 1]]
    names = None
    if len(lines) > n + 1 and lines[n + 1].startswith("names"):
        names = lines[n + 1].split()[1:]
    return from_table(rows, names=names, label=f"table:{Path(path).name}")


def write_table_file(g: FiniteGroup, path: str | Path) -> None:
    out = [f"order {g.order}"]
    out += [" ".join(map(str, row)) for row in g.table]
    if g.element_names:
        out.append("names " + " ".join(g.element_names))
    Path(path).write_text("\n".join(out) + "\n")


def read_bindings(path: str | Path) -> dict[str, int]:
    """Generator bindings, lines ``f_k = <element index>``."""
    out = {}
    for ln in Path(path).read_text().splitlines():
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        key, _, val = ln.partition("=")
        out[_norm_gen(key.strip())] = int(val)
    return out


# ---------------------------------------------------------------------------
# words

_TOKEN = re.compile(r"([A-Za-z]+)_?(\d+)(?:\^\{?(-?\d+)\}?)?|(-?\d+)")


def _norm_gen(name: str) -> str:
    m = re.fullmatch(r"([A-Za-z]+)_?(\d+)", name)
    if not m:
        raise UnboundGenerator(f"bad generator name {name!r}")
    return f"{m.group(1)}{m.group(2)}"


def parse_word(word: str) -> list[tuple[str, int]]:
    """``"f2 f3^2"`` -> ``[("f2", 1), ("f3", 2)]``; a bare integer is an element index."""
    out = []
    for m in _TOKEN.finditer(word):
        if m.group(4) is not None:
            out.append(("#", int(m.group(4))))
        else:
            out.append((f"{m.group(1)}{m.group(2)}", int(m.group(3) or 1)))
    return out


def evaluate_word(
    g: FiniteGroup,
    word: str | Iterable[tuple[str, int]],
    bindings: Mapping[str, int] | None = None,
) -> int:
    """Fold a word left to right.  Literal integers are element indices."""
    tokens = parse_word(word) if isinstance(word, str) else list(word)
    bindings = {_norm_gen(k): v for k, v in (bindings or {}).items()}
    out = g.identity
    for name, exp in tokens:
        if name == "#":
            if g.additive:
                out = g.mul(out, exp % g.order)
            elif exp != 1:
                # multiplicative words write the identity as "1"; other integers are indices
                out = g.mul(out, exp)
            continue
        if name not in bindings:
            raise UnboundGenerator(f"generator {name} has no binding")
        out = g.mul(out, g.power(bindings[name], exp))
    return out
