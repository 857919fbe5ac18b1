"""Nimors: two players alternately delete or contract an edge of a graph;
whoever makes the last move wins.  This package computes game values,
censuses them over graph classes, and serves interactive play."""

from .canon import canonical_graph, canonical_key
from .engine import MemoTable, analyze, best_move, classify, mex, nim_sum, nim_value
from .graph import Action, Graph, Move, blocks, girth, has_property_s, is_biconnected
from .theory import Outcome

__all__ = [
    "Action",
    "Graph",
    "MemoTable",
    "Move",
    "Outcome",
    "analyze",
    "best_move",
    "blocks",
    "canonical_graph",
    "canonical_key",
    "classify",
    "girth",
    "has_property_s",
    "is_biconnected",
    "mex",
    "nim_sum",
    "nim_value",
]
