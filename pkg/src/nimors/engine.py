"""Game value solver.

A position's value is the mex of its options' values; blocks are
independent subgames, so the value of a graph is the XOR of its block
values.  The solver recurses over options only for biconnected graphs,
after trying closed-form answers (forests, cycles, fused cycle pairs,
even-edge separated graphs) and the memoization caches.
"""

from __future__ import annotations

import logging
import zlib
from dataclasses import dataclass
from functools import reduce
from operator import xor

from . import theory
from .canon import canonical_key
from .graph import (
    Graph,
    Move,
    blocks,
    fused_cycle_params,
    has_property_s,
    is_acyclic,
    is_biconnected,
    is_cycle,
)
from .theory import Outcome

log = logging.getLogger(__name__)


class NoMovesError(ValueError):
    """best_move was asked for on an edgeless position."""


def mex(values) -> int:
    """Least nonnegative integer not in values."""
    present = set(values)
    r = 0
    while r in present:
        r += 1
    return r


def nim_sum(values) -> int:
    """XOR fold; combines values of independent subgames."""
    return reduce(xor, values, 0)


class MemoTable:
    """Solver cache: a fixed-size local table plus an optional remote
    cache client.

    The local table is open-addressed with a single slot per hash and
    overwrite-on-collision eviction, so it is bounded and lossy but
    never wrong.  Remote transport failures switch the table into
    local-only degraded mode instead of failing the solve.
    """

    __slots__ = ("_keys", "_vals", "_mask", "remote", "degraded",
                 "hits", "misses", "stores")

    def __init__(self, slots_log2: int = 20, remote=None):
        if not 1 <= slots_log2 <= 25:
            raise ValueError("slots_log2 must be in 1..25")
        size = 1 << slots_log2
        self._keys: list[bytes | None] = [None] * size
        self._vals = [0] * size
        self._mask = size - 1
        self.remote = remote
        self.degraded = False
        self.hits = 0
        self.misses = 0
        self.stores = 0

    def _slot(self, key: bytes) -> int:
        return zlib.crc32(key) & self._mask

    # the wire protocol caps keys at 64 bytes; longer keys (graphs past
    # n = 32, far beyond solvable sizes) stay local-only
    _REMOTE_KEY_LIMIT = 64

    def get(self, key: bytes) -> int | None:
        i = self._slot(key)
        if self._keys[i] == key:
            self.hits += 1
            return self._vals[i]
        if (
            self.remote is not None
            and not self.degraded
            and len(key) <= self._REMOTE_KEY_LIMIT
        ):
            try:
                value = self.remote.get(key)
            except OSError as exc:
                log.warning("remote cache unavailable, going local-only: %s", exc)
                self.degraded = True
                value = None
            if value is not None:
                self._keys[i] = key
                self._vals[i] = value
                self.hits += 1
                return value
        self.misses += 1
        return None

    def put(self, key: bytes, value: int) -> None:
        i = self._slot(key)
        self._keys[i] = key
        self._vals[i] = value
        self.stores += 1
        if (
            self.remote is not None
            and not self.degraded
            and len(key) <= self._REMOTE_KEY_LIMIT
        ):
            try:
                self.remote.put(key, value)
            except OSError as exc:
                log.warning("remote cache unavailable, going local-only: %s", exc)
                self.degraded = True


@dataclass
class Analysis:
    """A position's value and the value reached by each legal move."""

    value: int
    per_move: list[tuple[Move, int]]


def _closed_form(g: Graph) -> int | None:
    if is_acyclic(g):
        return g.m & 1
    k = is_cycle(g)
    if k is not None:
        return theory.cycle_value(k)
    pq = fused_cycle_params(g)
    if pq is not None:
        return theory.fused_cycle_value(*pq)
    if g.m % 2 == 0 and has_property_s(g):
        return 0
    return None


def _solve(g: Graph, memo: MemoTable, fast: bool) -> int:
    m = g.m
    if m == 0:
        return 0
    if m == 1:
        return 1
    if fast:
        value = _closed_form(g)
        if value is not None:
            return value
    if not is_biconnected(g):
        return nim_sum(_solve(b, memo, fast) for b in blocks(g))
    key = canonical_key(g)
    value = memo.get(key)
    if value is not None:
        return value
    seen = set()
    for e in g.edges():
        seen.add(_solve(g.delete_edge(e), memo, fast))
        seen.add(_solve(g.contract_edge(e), memo, fast))
    value = mex(seen)
    memo.put(key, value)
    return value


def nim_value(g: Graph, memo: MemoTable | None = None, *, fast_paths: bool = True) -> int:
    """The Sprague-Grundy value of a position.

    fast_paths=False forces full recursion (block decomposition and the
    m <= 1 base cases stay on); used to cross-check the closed forms.
    """
    if memo is None:
        memo = MemoTable()
    return _solve(g.without_isolated(), memo, fast_paths)


def nim_value_bruteforce(g: Graph, memo: dict | None = None) -> int:
    """Independent oracle: plain mex recursion over options, memoized on
    the labeled adjacency only.  No canonicalization, no block splitting,
    no closed forms.  Exponential; keep m small (<= 15)."""
    if memo is None:
        memo = {}

    def solve(h: Graph) -> int:
        key = (h.n, h.rows)
        cached = memo.get(key)
        if cached is not None:
            return cached
        value = mex(solve(child) for _, child in h.options())
        memo[key] = value
        return value

    return solve(g)


def classify(g: Graph, memo: MemoTable | None = None) -> Outcome:
    """N (next player wins) iff the value is nonzero."""
    if nim_value(g, memo) == 0:
        return Outcome.P_POSITION
    return Outcome.N_POSITION


def analyze(g: Graph, memo: MemoTable | None = None) -> Analysis:
    """Value of the position plus the value reached by every move."""
    if memo is None:
        memo = MemoTable()
    per_move = [(mv, nim_value(child, memo)) for mv, child in g.options()]
    return Analysis(value=mex(v for _, v in per_move), per_move=per_move)


def best_move(g: Graph, memo: MemoTable | None = None) -> Move:
    """An optimal move.

    From a winning position: the first move (least (u, v, action), with
    delete before contract) to a zero-value position.  From a lost
    position every move loses, so return the move that maximizes the
    number of opponent replies leading to nonzero values, same
    tie-break.
    """
    if memo is None:
        memo = MemoTable()
    analysis = analyze(g, memo)
    if not analysis.per_move:
        raise NoMovesError("no edges left")
    if analysis.value > 0:
        for mv, value in analysis.per_move:
            if value == 0:
                return mv
        raise AssertionError("nonzero position with no zero option")
    best_mv = None
    best_count = -1
    for mv, _ in analysis.per_move:
        child = g.apply(mv)
        count = sum(
            1 for _, reply in child.options() if nim_value(reply, memo) != 0
        )
        if count > best_count:
            best_mv = mv
            best_count = count
    return best_mv
