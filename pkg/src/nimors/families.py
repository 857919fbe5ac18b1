"""Constructors for the named graph families used by the CLI, the play
server and the closed-form results."""

from __future__ import annotations

from .graph import Graph


class InvalidParamsError(ValueError):
    pass


def path_graph(edges: int) -> Graph:
    if edges < 0:
        raise InvalidParamsError("edge count must be >= 0")
    return Graph(edges + 1 if edges else 1, [(i, i + 1) for i in range(edges)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise InvalidParamsError(f"cycle needs k >= 3, got {k}")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParamsError("complete graph needs n >= 1")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite_graph(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise InvalidParamsError("both parts must be nonempty")
    return Graph(p + q, [(u, p + v) for u in range(p) for v in range(q)])


def fused_cycle_graph(p: int, q: int) -> Graph:
    """Two cycles C_p and C_q sharing exactly one edge.

    The shared edge is (0,1); the p-side arc runs 1,2,..,p-1,0 and the
    q-side arc runs 1,p,p+1,..,p+q-3,0, giving p+q-2 vertices and
    p+q-1 edges.
    """
    if not 3 <= p <= q:
        raise InvalidParamsError(f"need 3 <= p <= q, got ({p},{q})")
    edges = [(0, 1)]
    arc = [1] + list(range(2, p)) + [0]
    edges += list(zip(arc, arc[1:]))
    arc = [1] + list(range(p, p + q - 2)) + [0]
    edges += list(zip(arc, arc[1:]))
    return Graph(p + q - 2, edges)


def petersen_graph() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))        # outer cycle
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
        edges.append((i, 5 + i))              # spokes
    return Graph(10, edges)


def triangular_prism_graph() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                     (0, 3), (1, 4), (2, 5)])
