"""Parity-heuristic scanning and the value tables for named families.

The parity heuristic (PH) predicts value (m mod 2) for a graph with m
edges.  The scanner checks PH over a stream of graphs restricted to a
structural class and reports every counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from . import graph6, theory
from .canon import canonical_key
from .engine import MemoTable, nim_value
from .families import complete_bipartite_graph, complete_graph
from .graph import Graph, girth, has_property_s


class GraphClass(Enum):
    GIRTH5_PLUS = "girth5"
    CUBIC_TRIANGLE_FREE = "cubic-trianglefree"
    PROPERTY_S_ODD = "property-s-odd"
    COMPLETE_BIPARTITE_P3 = "k3q"
    ALL = "all"


def class_predicate(cls: GraphClass):
    if cls is GraphClass.GIRTH5_PLUS:
        return lambda g: girth(g) >= 5
    if cls is GraphClass.CUBIC_TRIANGLE_FREE:
        return lambda g: (
            all(g.degree(v) == 3 for v in range(g.n)) and girth(g) >= 4
        )
    if cls is GraphClass.PROPERTY_S_ODD:
        return lambda g: g.m % 2 == 1 and has_property_s(g)
    if cls is GraphClass.COMPLETE_BIPARTITE_P3:
        return lambda g: g.n >= 6 and canonical_key(g) == canonical_key(
            complete_bipartite_graph(3, g.n - 3)
        )
    return lambda g: True


@dataclass
class PHReport:
    """Result of scanning one class for parity-heuristic failures."""

    class_name: str
    n_min: int
    n_max: int
    scanned: int = 0
    counterexamples: list[tuple[str, int, int, int]] = field(default_factory=list)

    def to_lines(self) -> list[str]:
        lines = [
            f"class {self.class_name} n {self.n_min}..{self.n_max} "
            f"scanned {self.scanned} counterexamples {len(self.counterexamples)}"
        ]
        lines += [f"{g6} {n} {m} {value}" for g6, n, m, value in self.counterexamples]
        return lines


def ph_holds(g: Graph, memo: MemoTable | None = None) -> bool:
    """Whether the parity heuristic predicts this graph's value."""
    return nim_value(g, memo) == theory.parity_heuristic_value(g)


def scan_class(cls: GraphClass, n_max: int, graphs, memo: MemoTable | None = None) -> PHReport:
    """Check PH over every stream member in the class with n <= n_max.

    Counterexamples are reported as (graph6, n, m, value), sorted by
    canonical key so the output is independent of stream order.
    """
    if memo is None:
        memo = MemoTable()
    predicate = class_predicate(cls)
    report = PHReport(class_name=cls.value, n_min=3, n_max=n_max)
    found: list[tuple[bytes, tuple[str, int, int, int]]] = []
    for g in graphs:
        if g.n > n_max or not predicate(g):
            continue
        report.scanned += 1
        value = nim_value(g, memo)
        if value != theory.parity_heuristic_value(g):
            key = canonical_key(g)
            found.append((key, (graph6.encode(g), g.n, g.m, value)))
    found.sort(key=lambda item: (item[0][0], item[0]))
    report.counterexamples = [entry for _, entry in found]
    return report


def complete_graph_values(n_max: int, memo: MemoTable | None = None) -> list[tuple[int, int]]:
    """Values of the complete graphs K_1..K_{n_max}."""
    if memo is None:
        memo = MemoTable()
    return [(n, nim_value(complete_graph(n), memo)) for n in range(1, n_max + 1)]


def complete_bipartite_values(
    p_max: int, q_max: int, edge_budget: int, memo: MemoTable | None = None
) -> list[tuple[int, int, int]]:
    """Values of K_{p,q} for p <= q within the edge budget."""
    if memo is None:
        memo = MemoTable()
    out = []
    for p in range(1, p_max + 1):
        for q in range(p, q_max + 1):
            if p * q > edge_budget:
                break
            out.append((p, q, nim_value(complete_bipartite_graph(p, q), memo)))
    return out
