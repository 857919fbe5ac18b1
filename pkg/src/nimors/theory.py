"""Closed-form game values and structural bounds.

Everything here is engine-independent: formulas for the solved families
(forests, cycles, fused cycle pairs), the separated-vertices parity
theorem, the parity heuristic prediction, and the edge-orbit bound from
graph symmetry.
"""

from __future__ import annotations

from enum import Enum

from .canon import _refine_colors
from .graph import Graph, has_property_s


class InvalidLengthError(ValueError):
    pass


class InvalidParamsError(ValueError):
    pass


class PropertySViolatedError(ValueError):
    pass


class TooLargeError(ValueError):
    pass


class Outcome(Enum):
    """N: next player wins; P: previous player wins (value 0)."""

    N_POSITION = "N"
    P_POSITION = "P"


def acyclic_value(m: int) -> int:
    """Value of any forest: the parity of its edge count."""
    return m & 1


def cycle_value(k: int) -> int:
    """Value of the cycle C_k: 2 for the triangle, else the parity of k."""
    if k < 3:
        raise InvalidLengthError(f"no cycle of length {k}")
    return 2 if k == 3 else k & 1


def fused_cycle_value(p: int, q: int) -> int:
    """Value of two cycles C_p, C_q (p <= q) sharing one edge."""
    if not 3 <= p <= q:
        raise InvalidParamsError(f"need 3 <= p <= q, got ({p},{q})")
    if p == 3:
        if q == 3:
            return 1
        if q == 4:
            return 4
        return 2 if q & 1 else 3
    return (p + q + 1) & 1


def parity_heuristic_value(g: Graph) -> int:
    """The parity heuristic's prediction: edge count mod 2."""
    return g.m & 1


def property_s_outcome(g: Graph) -> Outcome:
    """Winner for a graph whose high-degree vertices are separated by
    degree-2 vertices and whose blocks are triangle-free.

    Every move on such a graph removes exactly one edge, and the player
    moving on an odd edge count can always restore the property, so the
    position is a previous-player win exactly when the edge count is
    even.  (Equivalently: value 0 iff m is even.)
    """
    if not has_property_s(g):
        raise PropertySViolatedError("graph lacks the separation property")
    return Outcome.P_POSITION if g.m % 2 == 0 else Outcome.N_POSITION


# -- symmetry bound ----------------------------------------------------


def automorphisms(g: Graph):
    """Yield all adjacency-preserving permutations (perm[v] = image).

    Brute-force backtracking pruned by refinement classes and partial
    adjacency consistency; fine up to n ~ 10.
    """
    n = g.n
    if n > 10:
        raise TooLargeError("automorphism search capped at n <= 10")
    if n == 0:
        yield ()
        return
    rows = g.rows
    colors = _refine_colors(n, rows)
    candidates = [
        [u for u in range(n) if colors[u] == colors[v]] for v in range(n)
    ]
    perm = [-1] * n
    used = [False] * n

    def extend(v: int):
        if v == n:
            yield tuple(perm)
            return
        rv = rows[v]
        for u in candidates[v]:
            if used[u]:
                continue
            ru = rows[u]
            ok = True
            for w in range(v):
                if (rv >> w & 1) != (ru >> perm[w] & 1):
                    ok = False
                    break
            if ok:
                perm[v] = u
                used[u] = True
                yield from extend(v + 1)
                used[u] = False
                perm[v] = -1

    yield from extend(0)


def edge_orbit_count(g: Graph) -> int:
    """Number of edge orbits under the automorphism group."""
    edges = g.edges()
    if not edges:
        return 0
    index = {e: i for i, e in enumerate(edges)}
    parent = list(range(len(edges)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in automorphisms(g):
        for (u, v), i in index.items():
            a, b = perm[u], perm[v]
            j = index[(a, b) if a < b else (b, a)]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    return len({find(i) for i in range(len(edges))})


def edge_orbit_bound(g: Graph) -> int:
    """Upper bound on the game value: twice the number of edge orbits."""
    return 2 * edge_orbit_count(g)
