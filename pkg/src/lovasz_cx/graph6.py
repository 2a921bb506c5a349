"""graph6 encoding and decoding (bit-exact with the nauty format)."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .errors import InvalidCharacter, MalformedHeader, OrderTooLarge, TrailingBits
from .graph import Graph, _from_adj

MAX_ORDER = (1 << 36) - 1
HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n < 0 or n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} outside graph6 range")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return (order, header length)."""
    if not data:
        raise MalformedHeader("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedHeader("truncated 8-byte size header")
        chunk, hl = data[2:8], 8
    else:
        if len(data) < 4:
            raise MalformedHeader("truncated 4-byte size header")
        chunk, hl = data[1:4], 4
    n = 0
    for c in chunk:
        if not 63 <= c <= 126:
            raise InvalidCharacter(f"byte {c} in size header")
        n = (n << 6) | (c - 63)
    if hl == 4 and n <= 62 or hl == 8 and n <= 258047:
        raise MalformedHeader(f"non-canonical size header for order {n}")
    return n, hl


def encode_graph6(g: Graph) -> str:
    n = g.order
    out = [_encode_order(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(s: str | bytes) -> Graph:
    if isinstance(s, str):
        s = s.strip()
        if s.startswith(HEADER):
            s = s[len(HEADER):]
        try:
            data = s.encode("ascii")
        except UnicodeEncodeError as exc:
            raise InvalidCharacter("non-ascii character in graph6 string") from exc
    else:
        data = s.strip()
    if data[:1] in (b":", b"&", b";"):
        raise MalformedHeader("sparse6/digraph6 input is not graph6")
    n, hl = _decode_order(data)
    if n < 0:
        raise MalformedHeader("size byte below 63")
    body = data[hl:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        if len(body) > expected:
            raise TrailingBits(f"{len(body) - expected} extra bytes after adjacency data")
        raise MalformedHeader(f"expected {expected} data bytes, got {len(body)}")
    for c in body:
        if not 63 <= c <= 126:
            raise InvalidCharacter(f"byte {c} outside graph6 range")
    pad = expected * 6 - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise TrailingBits("nonzero padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return _from_adj(adj)


def read_graph6_file(path: str | Path) -> list[Graph]:
    lines = Path(path).read_text().splitlines()
    return [decode_graph6(line) for line in lines if line.strip() and not line.startswith("#")]


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> None:
    Path(path).write_text("".join(encode_graph6(g) + "\n" for g in graphs))
