"""Enumeration of non-isomorphic biconnected graphs and value censuses.

Built-in enumeration (n <= 8) sweeps all labeled graphs as upper-triangle
bitmasks, keeps only masks whose degree vector is non-increasing (every
isomorphism class has such a labeling), filters by biconnectivity and
deduplicates by canonical form.  Larger sizes are ingested from graph6
files produced by an external generator.

A separate ear-decomposition generator grows biconnected graphs from
cycles by adding ears; with a girth or degree constraint it reaches the
sparse classes (girth >= 5, subcubic) well past n = 8.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable, Iterator

import numpy as np

from .canon import canonical_bits, canonical_key, graph_from_bits
from .engine import MemoTable, nim_value
from .graph import Graph, girth, is_biconnected
from . import graph6


class TooLargeError(ValueError):
    pass


BUILTIN_LIMIT = 8


def _pair_bit(u: int, v: int) -> int:
    """Index of pair (u,v), u < v, in column order (0,1),(0,2),(1,2),..."""
    return v * (v - 1) // 2 + u


def _mask_to_graph(n: int, mask: int) -> Graph:
    rows = [0] * n
    for v in range(1, n):
        base = v * (v - 1) // 2
        chunk = mask >> base & ((1 << v) - 1)
        while chunk:
            low = chunk & -chunk
            chunk ^= low
            u = low.bit_length() - 1
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph.from_rows(tuple(rows))


def _degree_sorted_masks(n: int, chunk_bits: int = 22) -> Iterator[np.ndarray]:
    """All adjacency masks whose degree vector satisfies
    deg(0) >= deg(1) >= ... >= deg(n-1), in ascending mask order."""
    nbits = n * (n - 1) // 2
    vertex_bits = np.zeros(n, dtype=np.uint64)
    for v in range(n):
        bits = 0
        for u in range(n):
            if u != v:
                bits |= 1 << _pair_bit(min(u, v), max(u, v))
        vertex_bits[v] = bits
    total = 1 << nbits
    step = min(total, 1 << chunk_bits)
    for start in range(0, total, step):
        masks = np.arange(start, start + step, dtype=np.uint64)
        prev = np.bitwise_count(masks & vertex_bits[0])
        keep = np.ones(step, dtype=bool)
        for v in range(1, n):
            deg = np.bitwise_count(masks & vertex_bits[v])
            keep &= prev >= deg
            prev = deg
        yield masks[keep]


def enumerate_biconnected(n: int) -> list[Graph]:
    """One canonically labeled representative per isomorphism class of
    biconnected n-vertex graphs, sorted by canonical key."""
    if not 3 <= n <= BUILTIN_LIMIT:
        raise TooLargeError(
            f"built-in enumeration covers 3 <= n <= {BUILTIN_LIMIT}; "
            "ingest a graph6 file for larger sizes"
        )
    found: set[int] = set()
    for chunk in _degree_sorted_masks(n):
        for mask in chunk.tolist():
            g = _mask_to_graph(n, mask)
            if is_biconnected(g):
                found.add(canonical_bits(g))
    graphs = [graph_from_bits(n, bits) for bits in found]
    graphs.sort(key=canonical_key)
    return graphs


def enumerate_biconnected_ear(
    n_max: int, min_girth: int = 3, max_degree: int | None = None
) -> list[Graph]:
    """All biconnected graphs with n <= n_max meeting the constraints,
    grown from cycles by ear additions.

    Every biconnected graph has an ear decomposition, and girth never
    rises nor degrees fall when an ear is added, so constraints prune
    exactly.  Without constraints the space explodes past n = 8; callers
    must pass min_girth >= 5 or max_degree <= 3 beyond that.
    """
    if n_max > BUILTIN_LIMIT and min_girth < 5 and (max_degree is None or max_degree > 3):
        raise TooLargeError(
            "unconstrained ear enumeration is limited to n <= 8; "
            "set min_girth >= 5 or max_degree <= 3"
        )

    def admissible(g: Graph) -> bool:
        if max_degree is not None and any(g.degree(v) > max_degree for v in range(g.n)):
            return False
        return girth(g) >= min_girth

    seen: dict[bytes, Graph] = {}
    frontier: list[Graph] = []
    for k in range(max(3, min_girth), n_max + 1):
        cyc = Graph(k, [(i, (i + 1) % k) for i in range(k)])
        if admissible(cyc):
            key = canonical_key(cyc)
            seen[key] = cyc
            frontier.append(cyc)
    while frontier:
        nxt: list[Graph] = []
        for g in frontier:
            for h in _ear_successors(g, n_max):
                if not admissible(h):
                    continue
                key = canonical_key(h)
                if key not in seen:
                    seen[key] = h
                    nxt.append(h)
        frontier = nxt
    return [seen[k] for k in sorted(seen)]


def _ear_successors(g: Graph, n_max: int) -> Iterator[Graph]:
    """All graphs formed by adding one ear (a path between two distinct
    existing vertices whose interior vertices are new)."""
    n = g.n
    for u in range(n):
        for v in range(u + 1, n):
            if not g.has_edge(u, v):
                yield Graph(n, g.edges() + [(u, v)])
            for inner in range(1, n_max - n + 1):
                total = n + inner
                chain = [u] + list(range(n, n + inner)) + [v]
                yield Graph(total, g.edges() + list(zip(chain, chain[1:])))


# -- distributions -----------------------------------------------------


@dataclass
class Distribution:
    """Counts of game values per (vertex count, edge count)."""

    entries: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def add(self, n: int, m: int, value: int, count: int = 1) -> None:
        key = (n, m, value)
        self.entries[key] = self.entries.get(key, 0) + count

    def merge(self, other: "Distribution") -> None:
        for key, count in other.entries.items():
            self.entries[key] = self.entries.get(key, 0) + count

    def total(self, n: int | None = None, m: int | None = None) -> int:
        return sum(
            c
            for (en, em, _), c in self.entries.items()
            if (n is None or en == n) and (m is None or em == m)
        )

    def max_value(self, n: int) -> int:
        values = [v for (en, _, v), c in self.entries.items() if en == n and c > 0]
        if not values:
            raise KeyError(f"no entries for n={n}")
        return max(values)

    def to_lines(self) -> list[str]:
        return [
            f"{n} {m} {value} {count}"
            for (n, m, value), count in sorted(self.entries.items())
        ]

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "Distribution":
        dist = cls()
        for line in lines:
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            n, m, value, count = map(int, text.split())
            dist.add(n, m, value, count)
        return dist


def _solve_chunk(graphs: list[Graph]) -> Distribution:
    memo = MemoTable()
    dist = Distribution()
    for g in graphs:
        dist.add(g.n, g.m, nim_value(g, memo))
    return dist


def distribution(
    graphs: Iterable[Graph], memo: MemoTable | None = None, jobs: int = 1
) -> Distribution:
    """Tally of nim values per (n, m) over a stream of graphs.

    Results are independent of stream order and of the worker count;
    with jobs > 1 each worker owns a private memo table and tallies are
    merged.
    """
    if jobs <= 1:
        if memo is None:
            memo = MemoTable()
        dist = Distribution()
        for g in graphs:
            dist.add(g.n, g.m, nim_value(g, memo))
        return dist
    items = list(graphs)
    size = max(1, (len(items) + jobs - 1) // jobs)
    chunks = [items[i : i + size] for i in range(0, len(items), size)]
    dist = Distribution()
    with Pool(jobs) as pool:
        for part in pool.map(_solve_chunk, chunks):
            dist.merge(part)
    return dist


def ingest_graph6(path) -> Iterator[Graph]:
    """Decode a file of graph6 lines; malformed lines report their number."""
    with open(path, "r", encoding="ascii") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                yield graph6.decode(line)
            except graph6.MalformedGraph6Error as exc:
                raise graph6.MalformedGraph6Error(f"line {lineno}: {exc}") from exc


# -- reference data ----------------------------------------------------


@dataclass
class ReferenceTable:
    """Published results this artifact reproduces: the per-(n,m) value
    distribution, the per-n maxima, complete and complete-bipartite
    values, and a few named single-graph values."""

    distribution: Distribution = field(default_factory=Distribution)
    max_biconnected: dict[int, int] = field(default_factory=dict)
    complete: dict[int, int] = field(default_factory=dict)
    complete_bipartite: dict[tuple[int, int], int] = field(default_factory=dict)
    named: dict[str, int] = field(default_factory=dict)


def parse_reference(text: str) -> ReferenceTable:
    ref = ReferenceTable()
    section = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1]
            continue
        parts = line.split()
        if section == "distribution":
            n, m, value, count = map(int, parts)
            ref.distribution.add(n, m, value, count)
        elif section == "max-biconnected":
            ref.max_biconnected[int(parts[0])] = int(parts[1])
        elif section == "complete":
            ref.complete[int(parts[0])] = int(parts[1])
        elif section == "complete-bipartite":
            ref.complete_bipartite[(int(parts[0]), int(parts[1]))] = int(parts[2])
        elif section == "named":
            ref.named[parts[0]] = int(parts[1])
        else:
            raise ValueError(f"line outside any section: {raw!r}")
    return ref


def load_reference() -> ReferenceTable:
    text = (
        importlib.resources.files("nimors.data")
        .joinpath("reference.txt")
        .read_text(encoding="ascii")
    )
    return parse_reference(text)


def compare_reference(
    dist: Distribution,
    ref: ReferenceTable,
    ns: Iterable[int] | None = None,
    ms: Iterable[int] | None = None,
) -> list[str]:
    """Every (n, m, value) whose count differs from the reference, as
    human-readable diff lines; empty means exact reproduction."""
    ns = set(ns) if ns is not None else None
    ms = set(ms) if ms is not None else None

    def in_scope(key: tuple[int, int, int]) -> bool:
        n, m, _ = key
        return (ns is None or n in ns) and (ms is None or m in ms)

    diffs = []
    keys = set(filter(in_scope, dist.entries)) | set(
        filter(in_scope, ref.distribution.entries)
    )
    for key in sorted(keys):
        got = dist.entries.get(key, 0)
        want = ref.distribution.entries.get(key, 0)
        if got != want:
            n, m, value = key
            diffs.append(f"n={n} m={m} value={value}: got {got}, reference {want}")
    return diffs
