"""Simple undirected graphs with the two move operations of the game.

Vertices are integers 0..n-1.  Adjacency is stored as one bitmask per
vertex (bit v of rows[u] set iff u~v), which keeps edge deletion,
contraction and the connectivity scans cheap for the graph sizes this
project works at (n <= 62, matching graph6 short form).
"""

from __future__ import annotations

import math
from enum import IntEnum
from typing import Iterator, NamedTuple


class EdgeNotPresentError(ValueError):
    """Raised when a move names an edge the graph does not contain."""


class Action(IntEnum):
    """The two legal kinds of move.  DELETE sorts before CONTRACT."""

    DELETE = 0
    CONTRACT = 1


class Move(NamedTuple):
    edge: tuple[int, int]
    action: Action

    def sort_key(self) -> tuple[int, int, int]:
        return (self.edge[0], self.edge[1], int(self.action))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, edges: Iterator[tuple[int, int]] = ()):
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows = tuple(rows)

    @classmethod
    def from_rows(cls, rows: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        g.n = len(rows)
        g.rows = tuple(rows)
        return g

    # -- basic queries ------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            r = self.rows[u] >> (u + 1) << (u + 1)
            for v in _bits(r):
                out.append((u, v))
        return out

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((r.bit_count() for r in self.rows), reverse=True))

    # -- moves ---------------------------------------------------------

    def delete_edge(self, edge: tuple[int, int]) -> "Graph":
        u, v = edge
        if not self.has_edge(u, v):
            raise EdgeNotPresentError(f"no edge ({u},{v})")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph.from_rows(tuple(rows))

    def contract_edge(self, edge: tuple[int, int]) -> "Graph":
        """Merge the endpoints of an edge.

        The merged vertex keeps index min(u,v); vertices above max(u,v)
        shift down by one, so results are deterministic for a given
        labeled input.  Loops and parallel edges are dropped.
        """
        u, v = edge
        if not self.has_edge(u, v):
            raise EdgeNotPresentError(f"no edge ({u},{v})")
        if u > v:
            u, v = v, u
        rows = self.rows
        merged = (rows[u] | rows[v]) & ~((1 << u) | (1 << v))
        lo = (1 << v) - 1
        out = []
        for k in range(self.n):
            if k == v:
                continue
            if k == u:
                r = merged
            else:
                r = rows[k]
                if r >> v & 1:
                    r |= 1 << u
            out.append((r & lo) | (r >> (v + 1) << v))
        return Graph.from_rows(tuple(out))

    def apply(self, move: Move) -> "Graph":
        if move.action is Action.DELETE:
            return self.delete_edge(move.edge)
        return self.contract_edge(move.edge)

    def moves(self) -> list[Move]:
        out = []
        for e in self.edges():
            out.append(Move(e, Action.DELETE))
            out.append(Move(e, Action.CONTRACT))
        return out

    def options(self) -> list[tuple[Move, "Graph"]]:
        """All 2m positions reachable in one move, in (u, v, action) order."""
        return [(mv, self.apply(mv)) for mv in self.moves()]

    # -- relabeling ----------------------------------------------------

    def permuted(self, perm) -> "Graph":
        """Relabel: vertex v becomes perm[v]."""
        rows = [0] * self.n
        for old in range(self.n):
            r = 0
            for w in _bits(self.rows[old]):
                r |= 1 << perm[w]
            rows[perm[old]] = r
        return Graph.from_rows(tuple(rows))

    def without_isolated(self) -> "Graph":
        """Copy with degree-0 vertices dropped (relative order kept)."""
        keep = [v for v in range(self.n) if self.rows[v]]
        if len(keep) == self.n:
            return self
        index = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v in keep:
            r = 0
            for w in _bits(self.rows[v]):
                r |= 1 << index[w]
            rows[index[v]] = r
        return Graph.from_rows(tuple(rows))

    # -- plumbing --------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __reduce__(self):
        return (Graph.from_rows, (self.rows,))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()!r})"


# -- connectivity and blocks ------------------------------------------


def _reachable(rows: tuple[int, ...], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from start inside the allowed set."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    """Connectivity over non-isolated vertices (edgeless graphs count as connected)."""
    active = 0
    for v in range(g.n):
        if g.rows[v]:
            active |= 1 << v
    if active == 0:
        return True
    start = (active & -active).bit_length() - 1
    return _reachable(g.rows, start, active) == active


def is_biconnected(g: Graph) -> bool:
    """True iff g is connected, has >= 3 vertices and no cut vertex.

    Single edges (K2) report False; block decomposition still emits them
    as blocks.
    """
    n = g.n
    if n < 3:
        return False
    full = (1 << n) - 1
    rows = g.rows
    if any(r == 0 for r in rows):
        return False
    if _reachable(rows, 0, full) != full:
        return False
    for v in range(n):
        allowed = full & ~(1 << v)
        start = (allowed & -allowed).bit_length() - 1
        if _reachable(rows, start, allowed) != allowed:
            return False
    return True


def blocks(g: Graph) -> list[Graph]:
    """The blocks of g: maximal biconnected subgraphs plus bridge edges.

    Edge sets of the returned graphs partition E(g); isolated vertices
    are discarded; each block is returned on its own vertex range
    0..k-1 (original relative order kept).  Order is deterministic for
    a given labeled graph (DFS from the lowest vertex, ascending
    neighbors).
    """
    n = g.n
    rows = g.rows
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[tuple[int, int]] = []
    out: list[Graph] = []
    timer = 0

    def emit(upto: tuple[int, int]) -> None:
        comp = []
        while True:
            e = edge_stack.pop()
            comp.append(e)
            if e == upto:
                break
        verts = sorted({x for e in comp for x in e})
        index = {v: i for i, v in enumerate(verts)}
        out.append(Graph(len(verts), [(index[a], index[b]) for a, b in comp]))

    for root in range(n):
        if disc[root] != -1 or rows[root] == 0:
            continue
        # iterative DFS: (vertex, parent, neighbor iterator)
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, _bits(rows[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, _bits(rows[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                if low[v] < low[pv]:
                    low[pv] = low[v]
                if low[v] >= disc[pv]:
                    emit((pv, v))
    return out


# -- structural predicates ---------------------------------------------

GIRTH_INFINITE = math.inf


def girth(g: Graph):
    """Length of the shortest cycle, or GIRTH_INFINITE when acyclic.

    Computed as min over edges (u,v) of 1 + dist(u, v) in g - (u,v);
    exact, and cheap at this project's sizes.
    """
    best = None
    rows = g.rows
    full = (1 << g.n) - 1
    for u, v in g.edges():
        # BFS from u to v avoiding the edge (u,v)
        seen = 1 << u
        frontier = seen
        dist = 0
        target = 1 << v
        while frontier and not seen & target:
            nxt = 0
            for x in _bits(frontier):
                r = rows[x]
                if x == u:
                    r &= ~target
                if x == v:
                    r &= ~(1 << u)
                nxt |= r
            frontier = nxt & full & ~seen
            seen |= frontier
            dist += 1
        if seen & target:
            cycle = dist + 1
            if best is None or cycle < best:
                best = cycle
                if best == 3:
                    return 3
    return GIRTH_INFINITE if best is None else best


def is_acyclic(g: Graph) -> bool:
    """True iff g is a forest: m = (active vertices) - (components)."""
    active = [v for v in range(g.n) if g.rows[v]]
    if not active:
        return True
    active_mask = 0
    for v in active:
        active_mask |= 1 << v
    seen = 0
    components = 0
    for v in active:
        if seen >> v & 1:
            continue
        seen |= _reachable(g.rows, v, active_mask)
        components += 1
    return g.m == len(active) - components


def is_cycle(g: Graph) -> int | None:
    """Cycle length k when g is a single cycle C_k (ignoring isolated
    vertices), else None."""
    active = [v for v in range(g.n) if g.rows[v]]
    k = len(active)
    if k < 3:
        return None
    mask = 0
    for v in active:
        mask |= 1 << v
    if any(g.rows[v].bit_count() != 2 for v in active):
        return None
    if _reachable(g.rows, active[0], mask) != mask:
        return None
    return k


def fused_cycle_params(g: Graph) -> tuple[int, int] | None:
    """(p, q) with p <= q when g is two cycles sharing exactly one edge,
    else None.

    Such a graph has degree multiset {3, 3, 2, ..., 2}, one more edge
    than vertices, and its two degree-3 vertices joined by the shared
    edge; removing that edge must leave a single cycle.
    """
    active = [v for v in range(g.n) if g.rows[v]]
    nv = len(active)
    if nv < 4 or g.m != nv + 1:
        return None
    three = [v for v in active if g.rows[v].bit_count() == 3]
    if len(three) != 2:
        return None
    if any(g.rows[v].bit_count() != 2 for v in active if v not in three):
        return None
    a, b = three
    if not g.has_edge(a, b):
        return None
    rest = g.delete_edge((a, b))
    if is_cycle(rest) != nv:
        return None
    # arc lengths between a and b around the remaining cycle
    prev, cur = a, next(iter(rest.neighbors(a)))
    arc = 1
    while cur != b:
        nxt = [w for w in rest.neighbors(cur) if w != prev]
        prev, cur = cur, nxt[0]
        arc += 1
    p, q = arc + 1, nv - arc + 1
    return (p, q) if p <= q else (q, p)


def has_property_s(g: Graph) -> bool:
    """No edge joins two vertices of degree > 2, and no block is a triangle."""
    rows = g.rows
    for u, v in g.edges():
        if rows[u].bit_count() > 2 and rows[v].bit_count() > 2:
            return False
    return all(not (b.n == 3 and b.m == 3) for b in blocks(g))
