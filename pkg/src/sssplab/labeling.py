"""Label-correcting run state: potentials, parent tree, counted checks.

The per-run state couples three things the algorithms share: the
potential / parent-pointer labels, the doubly linked parent-tree
preorder list that subtree disassembly walks, and the aux/main check
tallies that are the evaluation currency of the whole artifact.

All vertex ids at this layer are internal (0-indexed).  The heavy
lifting lives in the jitted kernels; LabelState is the inspectable,
step-at-a-time wrapper around the very same routines.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import _kernels as K
from .graph import VERY_FAR, Graph

#: classic statuses
UNREACHED, LABELED, SCANNED = K.UNREACHED, K.LABELED, K.SCANNED
#: zdo statuses
OUT, ACTIVE, INACTIVE = K.OUT, K.ACTIVE, K.INACTIVE

NIL = K.NIL

_KINDS = {"aux": K.AUX, "main": K.MAIN}


def default_budget(n: int, m: int) -> int:
    """Labeling-operation budget: loose upper bound for the O(n*m) runs.

    A run that exhausts it is aborted with a suspected negative cycle
    (the time-out detector).  Pape's exponential worst case deliberately
    gets the same allowance, so there it surfaces as a budget abort.
    """
    return (n + 1) * m + n


class BudgetExhausted(RuntimeError):
    """Raised by LabelState.relax_check when the budget runs out."""


@dataclass(frozen=True)
class CheckCounters:
    aux: int
    main: int

    @property
    def total(self) -> int:
        return self.aux + self.main


@dataclass(frozen=True)
class Tree:
    """Shortest-path tree: dist[i] / parent of internal vertex i."""

    dist: np.ndarray
    parent_vertex: np.ndarray
    parent_arc: np.ndarray

    def reachable(self, i: int) -> bool:
        return int(self.dist[i]) < VERY_FAR // 2


@dataclass(frozen=True)
class NegativeCycle:
    """Witnessed negative cycle; vertices are external (1-indexed), forward order."""

    vertices: tuple


@dataclass(frozen=True)
class BudgetAbort:
    """Budget exhausted: negative cycle suspected but not witnessed."""


@dataclass(frozen=True)
class TimedOut:
    """Wall-clock cap hit before the run finished."""


class Disassembly(NamedTuple):
    dropped: list
    cycle: Optional[list]  # internal ids, forward order, None if no cycle


class LabelState:
    """One run's labels plus the preorder list, driven operation by operation.

    ``track_tree`` enables the preorder list / degree counters (needed by
    the subtree-disassembly detector); runs without disassembly keep
    plain parent pointers only.
    """

    def __init__(self, graph: Graph, track_tree: bool = True,
                 drop_mode: int = K.DROP_UNREACHED, budget: Optional[int] = None):
        n = graph.n
        self.graph = graph
        self.track_tree = track_tree
        self.drop_mode = drop_mode
        self.d = np.full(n, VERY_FAR, np.int64)
        self.parent_v = np.full(n, NIL, np.int64)
        self.parent_arc = np.full(n, NIL, np.int64)
        self.status = np.zeros(n, np.int64)
        self.prev = np.full(n, K.NOT_IN_LIST, np.int64)
        self.nxt = np.full(n, K.NOT_IN_LIST, np.int64)
        self.deg = np.zeros(n, np.int64)
        self.counters = np.zeros(3, np.int64)
        self.counters[K.BUDGET] = default_budget(n, graph.m) if budget is None else budget
        self._drop_buf = np.empty(max(n, 1), np.int64)
        self._cycle_buf = np.empty(max(n, 1), np.int64)
        self._pending = None  # (u, v, arc_id) awaiting disassembly

        s = graph.source
        self.d[s] = 0
        self.status[s] = LABELED  # same code as ACTIVE
        if track_tree:
            self.prev[s] = NIL
            self.nxt[s] = NIL
            self.deg[s] = -1

    # -- counted predicate -------------------------------------------------

    def relax_check(self, u: int, v: int, length: int, kind: str) -> bool:
        """Counted test whether arc (u, v) of the given length is relaxable."""
        diff = K.check(self.d, self.counters, u, v, length, _KINDS[kind])
        if self.counters[K.BUDGET] < 0:
            raise BudgetExhausted(
                f"labeling budget exhausted after {self.checks.total} checks; "
                "negative cycle suspected"
            )
        return diff < 0

    # -- labeling ------------------------------------------------------------

    def apply_relax(self, u: int, v: int, arc_id: int) -> None:
        """Apply a relaxation that relax_check just approved.

        Fresh vertices are attached as u's newest child immediately.  A
        vertex that already sits in the tree keeps its old block until
        subtree_disassembly is called, which this state records as
        pending (detach-inspect-reattach order).
        """
        self.d[v] = self.d[u] + int(self.graph.length[arc_id])
        if not self.track_tree:
            self.parent_v[v] = u
            self.parent_arc[v] = arc_id
            return
        if self.prev[v] == K.NOT_IN_LIST:
            K.tree_attach(self.prev, self.nxt, self.deg, self.parent_v,
                          self.parent_arc, self.status, u, v, arc_id,
                          self.drop_mode, self._drop_buf)
        else:
            self._pending = (u, v, arc_id)

    def subtree_disassembly(self, u: int, v: int) -> Disassembly:
        """Drop v's old descendants; detect u among them as a negative cycle."""
        if self._pending is not None:
            pu, pv, arc_id = self._pending
            if (pu, pv) != (u, v):
                raise RuntimeError("disassembly must follow the matching apply_relax")
            self._pending = None
            r = K.tree_attach(self.prev, self.nxt, self.deg, self.parent_v,
                              self.parent_arc, self.status, u, v, arc_id,
                              self.drop_mode, self._drop_buf)
            if r < 0:
                ln = K.extract_chain_cycle(self.parent_v, u, v, self._cycle_buf)
                return Disassembly([], [int(x) for x in self._cycle_buf[:ln]])
            return Disassembly([int(x) for x in self._drop_buf[:r]], None)
        # freshly attached leaf: block is {v}, nothing to drop
        return Disassembly([], None)

    # -- detectors -----------------------------------------------------------

    def walk_to_root(self, u: int, v: int) -> bool:
        """Before relaxing (u, v): is v an ancestor of u in the parent tree?"""
        return bool(K.walk_to_root(self.parent_v, u, v, self.graph.n))

    def extract_cycle(self, v: int) -> list:
        """Forward cycle through v in the current parent links, starting at v."""
        chain = [v]
        w = self.parent_v[v]
        for _ in range(self.graph.n + 1):
            if w == NIL:
                break
            if w == v:
                return [chain[0]] + list(reversed(chain[1:]))
            chain.append(int(w))
            w = self.parent_v[w]
        raise ValueError(f"no parent cycle through vertex {v} within n steps")

    # -- inspection ----------------------------------------------------------

    @property
    def checks(self) -> CheckCounters:
        return CheckCounters(int(self.counters[K.AUX]), int(self.counters[K.MAIN]))

    @property
    def budget_left(self) -> int:
        return int(self.counters[K.BUDGET])

    def preorder_sequence(self) -> list:
        """Current preorder list contents, head (source) first."""
        seq = []
        w = self.graph.source
        while w != NIL:
            seq.append(int(w))
            w = self.nxt[w]
        return seq

    def preorder_valid(self) -> bool:
        return bool(K.preorder_ok(self.prev, self.nxt, self.deg, self.parent_v,
                                  self.graph.source, self.graph.n))
