"""Isomorphism-invariant canonical forms, used as memoization keys.

The canonical form of a graph is the lexicographically least row-major
upper-triangle adjacency bit-string over the relabelings admitted by an
equitable refinement of the vertices: vertices are first classified by
iterated degree signatures, classes are ordered by signature, and the
remaining freedom (order within classes) is resolved by a greedy
row-by-row minimization.  Keys are equal exactly for isomorphic graphs
and are stable across runs and platforms.
"""

from __future__ import annotations

from .graph import Graph, _bits


class TooLargeError(ValueError):
    """Graph exceeds the n <= 62 limit shared with graph6 short form."""


MAX_VERTICES = 62


def _refine_colors(n: int, rows: tuple[int, ...]) -> list[int]:
    """Iterated-degree vertex classes as dense ids, 0 = structurally least.

    Ids are assigned by sorting signatures, so the class order depends
    only on graph structure, never on the input labeling.
    """
    colors = [rows[v].bit_count() for v in range(n)]
    order = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [order[c] for c in colors]
    ncls = len(order)
    while ncls < n:
        sigs = []
        for v in range(n):
            nb = sorted(colors[w] for w in _bits(rows[v]))
            sigs.append((colors[v], tuple(nb)))
        uniq = sorted(set(sigs))
        if len(uniq) == ncls:
            break
        order = {s: i for i, s in enumerate(uniq)}
        colors = [order[s] for s in sigs]
        ncls = len(uniq)
    return colors


def _min_bits(n: int, rows: tuple[int, ...], colors: list[int]) -> int:
    """Least row-major adjacency bit-string over admissible relabelings.

    Positions are filled left to right; the vertex for each position
    must come from the first cell of the current ordered partition.
    Placing a vertex fixes its row (future cells split into
    non-neighbors-then-neighbors), so rows can be minimized greedily.
    Prefixes that induce the same ordered partition of the remaining
    vertices are interchangeable and deduplicated, which keeps highly
    symmetric graphs cheap.
    """
    cells: dict[int, int] = {}
    for v, c in enumerate(colors):
        cells[c] = cells.get(c, 0) | 1 << v
    frontier = {tuple(cells[c] for c in sorted(cells))}
    out = 0
    for pos in range(n):
        best = -1
        best_states = set()
        for part in frontier:
            first = part[0]
            rest = part[1:]
            f = first
            while f:
                vbit = f & -f
                f ^= vbit
                rv = rows[vbit.bit_length() - 1]
                row = 0
                state = []
                rem = first ^ vbit
                future = ((rem,) + rest) if rem else rest
                for cell in future:
                    adj = cell & rv
                    na = adj.bit_count()
                    row = row << cell.bit_count() | (1 << na) - 1
                    if adj != cell:
                        state.append(cell ^ adj)
                    if adj:
                        state.append(adj)
                if best < 0 or row < best:
                    best = row
                    best_states = {tuple(state)}
                elif row == best:
                    best_states.add(tuple(state))
        out = out << (n - 1 - pos) | best
        frontier = best_states
    return out


def canonical_bits(g: Graph) -> int:
    """Canonical row-major upper-triangle adjacency bits as an integer."""
    if g.n > MAX_VERTICES:
        raise TooLargeError(f"n={g.n} exceeds limit {MAX_VERTICES}")
    if g.n < 2:
        return 0
    return _min_bits(g.n, g.rows, _refine_colors(g.n, g.rows))


def canonical_key(g: Graph) -> bytes:
    """Canonical form as bytes: one length byte (n), then the canonical
    adjacency bits packed 8 per byte, most significant first, zero-padded."""
    bits = canonical_bits(g)
    nbits = g.n * (g.n - 1) // 2
    nbytes = (nbits + 7) // 8
    return bytes([g.n]) + (bits << (nbytes * 8 - nbits)).to_bytes(nbytes, "big")


def graph_from_bits(n: int, bits: int) -> Graph:
    """Rebuild a graph from row-major upper-triangle adjacency bits."""
    rows = [0] * n
    i = n * (n - 1) // 2
    for u in range(n):
        for v in range(u + 1, n):
            i -= 1
            if bits >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph.from_rows(tuple(rows))


def graph_from_key(key: bytes) -> Graph:
    n = key[0]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 7) // 8
    bits = int.from_bytes(key[1:], "big") >> (nbytes * 8 - nbits) if nbits else 0
    return graph_from_bits(n, bits)


def canonical_graph(g: Graph) -> Graph:
    """A canonically labeled copy: isomorphic to g, identical for all
    relabelings of g."""
    return graph_from_bits(g.n, canonical_bits(g))


def labeled_bits(g: Graph) -> int:
    """Row-major upper-triangle bits of g as labeled (no relabeling)."""
    bits = 0
    rows = g.rows
    for u in range(g.n):
        for v in range(u + 1, g.n):
            bits = bits << 1 | (rows[u] >> v & 1)
    return bits
