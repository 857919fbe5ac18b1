"""graph6 short-form codec (n <= 62), bit compatible with nauty's tools.

Layout: byte 0 is n + 63; the payload packs the upper-triangle adjacency
bits in column order (0,1),(0,2),(1,2),(0,3),... big-endian 6 bits per
byte, each payload byte offset by 63.  Pad bits must be zero.
"""

from __future__ import annotations

from .canon import MAX_VERTICES, TooLargeError
from .graph import Graph


class MalformedGraph6Error(ValueError):
    """Input line is not a valid short-form graph6 record."""


def encode(g: Graph) -> str:
    if g.n > MAX_VERTICES:
        raise TooLargeError(f"n={g.n} exceeds graph6 short form limit")
    n = g.n
    rows = g.rows
    out = [n + 63]
    acc = 0
    width = 0
    for v in range(1, n):
        for u in range(v):
            acc = acc << 1 | (rows[u] >> v & 1)
            width += 1
            if width == 6:
                out.append(acc + 63)
                acc = width = 0
    if width:
        out.append((acc << (6 - width)) + 63)
    return bytes(out).decode("ascii")


def decode(line: str) -> Graph:
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise MalformedGraph6Error("empty line")
    try:
        raw = text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise MalformedGraph6Error("non-ASCII byte") from exc
    if any(not 63 <= b <= 126 for b in raw):
        raise MalformedGraph6Error("byte outside 63..126")
    n = raw[0] - 63
    if n > MAX_VERTICES:
        raise MalformedGraph6Error("long-form n >= 63 not supported")
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(raw) - 1 != expect:
        raise MalformedGraph6Error(
            f"payload length {len(raw) - 1}, expected {expect} for n={n}"
        )
    bits = 0
    for b in raw[1:]:
        bits = bits << 6 | (b - 63)
    pad = expect * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise MalformedGraph6Error("nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    i = nbits
    for v in range(1, n):
        for u in range(v):
            i -= 1
            if bits >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph.from_rows(tuple(rows))
