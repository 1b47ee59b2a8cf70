"""The seven shortest-path drivers and their shared run report.

Every driver consumes an immutable Graph and produces distances plus a
witnessed negative cycle or an abort, together with the aux/main
relaxation-check tallies.  Scan order is always forward-adjacency
(insertion) order and the queue disciplines are literal, so the check
counts are bit-reproducible across runs and platforms.

Detectors: ``bfm`` and ``pape`` walk to the root before applying a
relaxation; ``tarjan`` (= bfm + subtree disassembly), ``pallottino``,
``zdo`` and ``zdo_bits`` disassemble the relaxed subtree; ``gor``
searches the admissible graph during its per-round DFS.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from numba import njit, objmode

from . import _kernels as K
from ._kernels import (ACTIVE, AUX, BUDGET, DROP_INACTIVE, DROP_UNREACHED,
                       INACTIVE, LABELED, MAIN, NIL, OUT, RC_BUDGET, RC_DEBUG,
                       RC_NEGCYCLE, RC_TIMEOUT, RC_TREE, SCANNED, UNREACHED)
from .graph import VERY_FAR, Graph
from .labeling import (BudgetAbort, CheckCounters, NegativeCycle, TimedOut,
                       Tree, default_budget)

ALGO_IDS = ("bfm", "pape", "pallottino", "tarjan", "gor", "zdo", "zdo_bits")

_ALIASES = {
    "pal": "pallottino",
    "tar": "tarjan",
    "zdo-bits": "zdo_bits",
    "zdobits": "zdo_bits",
}

_DET_NONE = 0
_DET_WALK = 1
_DET_SUBTREE = 2

_TICK_EVERY = 4096


@dataclass(frozen=True)
class RunReport:
    """Outcome + instrumentation of one driver run."""

    algo: str
    n: int
    m: int
    outcome: Union[Tree, NegativeCycle, BudgetAbort, TimedOut]
    counters: CheckCounters
    elapsed_ns: int
    scans: int
    rounds: int = 0

    def _per_arc(self, count: int) -> float:
        return round(count / self.m, 3) if self.m else 0.0

    @property
    def aux_per_arc(self) -> float:
        return self._per_arc(self.counters.aux)

    @property
    def main_per_arc(self) -> float:
        return self._per_arc(self.counters.main)

    @property
    def outcome_name(self) -> str:
        if isinstance(self.outcome, Tree):
            return "tree"
        if isinstance(self.outcome, NegativeCycle):
            return "negcycle"
        if isinstance(self.outcome, BudgetAbort):
            return "budget_abort"
        return "timeout"


# ---------------------------------------------------------------------------
# Bellman-Ford-Moore (FIFO), optionally with walk-to-root or subtree detector


@njit(cache=True)
def _run_bfm(n, src, fstart, fhead, flen, farc, detector,
             d, parent_v, parent_arc, status, prev, nxt, deg,
             counters, queue, in_queue, drop_buf, cycle_buf, stats,
             deadline, debug):
    cap = n + 1
    head = 0
    tail = 0
    queue[tail] = src
    tail = (tail + 1) % cap
    in_queue[src] = True
    scans = 0
    ticks = 0
    while head != tail:
        if counters[BUDGET] <= 0:
            stats[0] = scans
            return RC_BUDGET
        if deadline > 0.0:
            ticks += 1
            if ticks >= _TICK_EVERY:
                ticks = 0
                with objmode(now="float64"):
                    now = time.perf_counter()
                if now > deadline:
                    stats[0] = scans
                    return RC_TIMEOUT
        u = queue[head]
        head = (head + 1) % cap
        in_queue[u] = False
        if status[u] != LABELED:
            continue
        status[u] = SCANNED
        if debug and detector == _DET_SUBTREE:
            if not K.preorder_ok(prev, nxt, deg, parent_v, src, n):
                stats[0] = scans
                return RC_DEBUG
        scans += 1
        du = d[u]
        for j in range(fstart[u], fstart[u + 1]):
            v = fhead[j]
            diff = K.check(d, counters, u, v, flen[j], MAIN)
            if diff < 0:
                if u == v and detector != _DET_NONE:
                    cycle_buf[0] = u
                    stats[0] = scans
                    stats[1] = 1
                    return RC_NEGCYCLE
                if detector == _DET_WALK and u != v:
                    if K.walk_to_root(parent_v, u, v, n):
                        ln = K.extract_chain_cycle(parent_v, u, v, cycle_buf)
                        stats[0] = scans
                        stats[1] = ln
                        return RC_NEGCYCLE
                d[v] = du + flen[j]
                if detector == _DET_SUBTREE:
                    r = K.tree_attach(prev, nxt, deg, parent_v, parent_arc,
                                      status, u, v, farc[j], DROP_UNREACHED,
                                      drop_buf)
                    if r < 0:
                        ln = K.extract_chain_cycle(parent_v, u, v, cycle_buf)
                        stats[0] = scans
                        stats[1] = ln
                        return RC_NEGCYCLE
                else:
                    parent_v[v] = u
                    parent_arc[v] = farc[j]
                status[v] = LABELED
                if u == v:
                    du = d[u]
                if not in_queue[v]:
                    queue[tail] = v
                    tail = (tail + 1) % cap
                    in_queue[v] = True
    stats[0] = scans
    return RC_TREE


# ---------------------------------------------------------------------------
# D'Esopo-Pape: deque, head-insertion for previously labeled vertices


@njit(cache=True)
def _run_pape(n, src, fstart, fhead, flen, farc,
              d, parent_v, parent_arc, status,
              counters, queue, in_queue, ever_labeled, cycle_buf, stats,
              deadline, debug):
    cap = n + 1
    head = 0
    tail = 0
    queue[tail] = src
    tail = (tail + 1) % cap
    in_queue[src] = True
    ever_labeled[src] = True
    scans = 0
    ticks = 0
    while head != tail:
        if counters[BUDGET] <= 0:
            stats[0] = scans
            return RC_BUDGET
        if deadline > 0.0:
            ticks += 1
            if ticks >= _TICK_EVERY:
                ticks = 0
                with objmode(now="float64"):
                    now = time.perf_counter()
                if now > deadline:
                    stats[0] = scans
                    return RC_TIMEOUT
        u = queue[head]
        head = (head + 1) % cap
        in_queue[u] = False
        if status[u] != LABELED:
            continue
        status[u] = SCANNED
        scans += 1
        du = d[u]
        for j in range(fstart[u], fstart[u + 1]):
            v = fhead[j]
            diff = K.check(d, counters, u, v, flen[j], MAIN)
            if diff < 0:
                if u == v:
                    cycle_buf[0] = u
                    stats[0] = scans
                    stats[1] = 1
                    return RC_NEGCYCLE
                if K.walk_to_root(parent_v, u, v, n):
                    ln = K.extract_chain_cycle(parent_v, u, v, cycle_buf)
                    stats[0] = scans
                    stats[1] = ln
                    return RC_NEGCYCLE
                d[v] = du + flen[j]
                parent_v[v] = u
                parent_arc[v] = farc[j]
                status[v] = LABELED
                if not in_queue[v]:
                    if ever_labeled[v]:
                        head = (head - 1) % cap  # relabeled: jump the line
                        queue[head] = v
                    else:
                        queue[tail] = v
                        tail = (tail + 1) % cap
                    ever_labeled[v] = True
                    in_queue[v] = True
    stats[0] = scans
    return RC_TREE


# ---------------------------------------------------------------------------
# Pallottino: two FIFO queues + subtree disassembly


@njit(cache=True)
def _run_pallottino(n, src, fstart, fhead, flen, farc,
                    d, parent_v, parent_arc, status, prev, nxt, deg,
                    counters, q1, q2, in_queue, ever_scanned,
                    drop_buf, cycle_buf, stats, deadline, debug):
    cap = n + 1
    h1 = t1 = 0
    h2 = t2 = 0
    q2[t2] = src
    t2 = (t2 + 1) % cap
    in_queue[src] = True
    scans = 0
    ticks = 0
    while h1 != t1 or h2 != t2:
        if counters[BUDGET] <= 0:
            stats[0] = scans
            return RC_BUDGET
        if deadline > 0.0:
            ticks += 1
            if ticks >= _TICK_EVERY:
                ticks = 0
                with objmode(now="float64"):
                    now = time.perf_counter()
                if now > deadline:
                    stats[0] = scans
                    return RC_TIMEOUT
        if h1 != t1:
            u = q1[h1]
            h1 = (h1 + 1) % cap
        else:
            u = q2[h2]
            h2 = (h2 + 1) % cap
        in_queue[u] = False
        if status[u] != LABELED:
            continue
        status[u] = SCANNED
        ever_scanned[u] = True
        if debug:
            if not K.preorder_ok(prev, nxt, deg, parent_v, src, n):
                stats[0] = scans
                return RC_DEBUG
        scans += 1
        du = d[u]
        for j in range(fstart[u], fstart[u + 1]):
            v = fhead[j]
            diff = K.check(d, counters, u, v, flen[j], MAIN)
            if diff < 0:
                if u == v:
                    cycle_buf[0] = u
                    stats[0] = scans
                    stats[1] = 1
                    return RC_NEGCYCLE
                d[v] = du + flen[j]
                r = K.tree_attach(prev, nxt, deg, parent_v, parent_arc,
                                  status, u, v, farc[j], DROP_UNREACHED,
                                  drop_buf)
                if r < 0:
                    ln = K.extract_chain_cycle(parent_v, u, v, cycle_buf)
                    stats[0] = scans
                    stats[1] = ln
                    return RC_NEGCYCLE
                status[v] = LABELED
                if not in_queue[v]:
                    if ever_scanned[v]:
                        q1[t1] = v
                        t1 = (t1 + 1) % cap
                    else:
                        q2[t2] = v
                        t2 = (t2 + 1) % cap
                    in_queue[v] = True
    stats[0] = scans
    return RC_TREE


# ---------------------------------------------------------------------------
# Goldberg-Radzik: topological scan over the admissible graph


@njit(cache=True)
def _run_gor(n, src, fstart, fhead, flen, farc,
             d, parent_v, parent_arc,
             counters, b_list, in_b, visit_mark, on_stack, ai, stack,
             entry_arc, post, cycle_buf, stats, deadline, debug):
    b_size = 1
    b_list[0] = src
    scans = 0
    ticks = 0
    epoch = 0
    b_epoch = 0
    while b_size > 0:
        # step 1: keep only B vertices with a strictly negative out-arc,
        # testing arcs in order and stopping at the first hit
        k = 0
        for i in range(b_size):
            v = b_list[i]
            if counters[BUDGET] <= 0:
                stats[0] = scans
                return RC_BUDGET
            hit = False
            for j in range(fstart[v], fstart[v + 1]):
                diff = K.check(d, counters, v, fhead[j], flen[j], AUX)
                if diff < 0:
                    hit = True
                    break
            if hit:
                b_list[k] = v
                k += 1
        b_size = k
        if b_size == 0:
            break

        # step 2: DFS from the survivors over arcs with l_d <= 0; a back
        # arc closing a cycle that carries a strictly negative arc is a
        # negative cycle (all-zero cycles are not)
        epoch += 1
        post_size = 0
        for i in range(b_size):
            root = b_list[i]
            if visit_mark[root] == epoch:
                continue
            visit_mark[root] = epoch
            on_stack[root] = True
            ai[root] = fstart[root]
            top = 0
            stack[0] = root
            while top >= 0:
                x = stack[top]
                if counters[BUDGET] <= 0:
                    stats[0] = scans
                    return RC_BUDGET
                if deadline > 0.0:
                    ticks += 1
                    if ticks >= _TICK_EVERY:
                        ticks = 0
                        with objmode(now="float64"):
                            now = time.perf_counter()
                        if now > deadline:
                            stats[0] = scans
                            return RC_TIMEOUT
                if ai[x] < fstart[x + 1]:
                    j = ai[x]
                    ai[x] += 1
                    y = fhead[j]
                    diff = K.check(d, counters, x, y, flen[j], AUX)
                    if diff <= 0:
                        if visit_mark[y] != epoch:
                            visit_mark[y] = epoch
                            on_stack[y] = True
                            entry_arc[y] = j
                            ai[y] = fstart[y]
                            top += 1
                            stack[top] = y
                        elif on_stack[y]:
                            neg = diff < 0
                            t0 = top
                            while stack[t0] != y:
                                t0 -= 1
                            if not neg:
                                for t in range(t0 + 1, top + 1):
                                    ea = entry_arc[stack[t]]
                                    tl = stack[t - 1]
                                    if d[tl] + flen[ea] - d[stack[t]] < 0:
                                        neg = True
                                        break
                            if neg:
                                ln = top - t0 + 1
                                for t in range(t0, top + 1):
                                    cycle_buf[t - t0] = stack[t]
                                stats[0] = scans
                                stats[1] = ln
                                return RC_NEGCYCLE
                else:
                    on_stack[x] = False
                    post[post_size] = x
                    post_size += 1
                    top -= 1

        # step 3: scan in reverse postorder; touched vertices form next B
        b_epoch += 1
        b_size = 0
        for i in range(post_size - 1, -1, -1):
            u = post[i]
            if counters[BUDGET] <= 0:
                stats[0] = scans
                return RC_BUDGET
            scans += 1
            du = d[u]
            for j in range(fstart[u], fstart[u + 1]):
                v = fhead[j]
                diff = K.check(d, counters, u, v, flen[j], MAIN)
                if diff < 0:
                    if u == v:
                        cycle_buf[0] = u
                        stats[0] = scans
                        stats[1] = 1
                        return RC_NEGCYCLE
                    d[v] = du + flen[j]
                    parent_v[v] = u
                    parent_arc[v] = farc[j]
                    if in_b[v] != b_epoch:
                        in_b[v] = b_epoch
                        b_list[b_size] = v
                        b_size += 1
    stats[0] = scans
    return RC_TREE


# ---------------------------------------------------------------------------
# Zero-in-degree-only scanning


@njit(cache=True)
def _run_zdo(n, src, fstart, fhead, flen, farc, rstart, rorig, rlen,
             d, parent_v, parent_arc, status, prev, nxt, deg,
             counters, queue, drop_buf, cycle_buf, stats, deadline, debug):
    cap = n + 1
    head = 0
    tail = 0
    queue[tail] = src
    tail = (tail + 1) % cap
    status[src] = ACTIVE
    scans = 0
    rounds = 0
    ticks = 0
    deq_count = 0
    enq_count = 1
    round_limit = 1
    touched_this_round = False
    while head != tail:
        if counters[BUDGET] <= 0:
            stats[0] = scans
            return RC_BUDGET
        if deadline > 0.0:
            ticks += 1
            if ticks >= _TICK_EVERY:
                ticks = 0
                with objmode(now="float64"):
                    now = time.perf_counter()
                if now > deadline:
                    stats[0] = scans
                    return RC_TIMEOUT
        u = queue[head]
        head = (head + 1) % cap
        deq_count += 1
        if status[u] == ACTIVE:
            zin = True
            for j in range(rstart[u], rstart[u + 1]):
                diff = K.check(d, counters, rorig[j], u, rlen[j], AUX)
                if diff < 0:
                    zin = False
                    break
            if zin:
                if debug:
                    if not K.preorder_ok(prev, nxt, deg, parent_v, src, n):
                        stats[0] = scans
                        return RC_DEBUG
                scans += 1
                du = d[u]
                for j in range(fstart[u], fstart[u + 1]):
                    v = fhead[j]
                    diff = K.check(d, counters, u, v, flen[j], MAIN)
                    if diff < 0:
                        if u == v:
                            cycle_buf[0] = u
                            stats[0] = scans
                            stats[1] = 1
                            return RC_NEGCYCLE
                        d[v] = du + flen[j]
                        touched_this_round = True
                        if status[v] == OUT:
                            queue[tail] = v
                            tail = (tail + 1) % cap
                            enq_count += 1
                        status[v] = ACTIVE
                        r = K.tree_attach(prev, nxt, deg, parent_v, parent_arc,
                                          status, u, v, farc[j], DROP_INACTIVE,
                                          drop_buf)
                        if r < 0:
                            ln = K.extract_chain_cycle(parent_v, u, v, cycle_buf)
                            stats[0] = scans
                            stats[1] = ln
                            return RC_NEGCYCLE
        status[u] = OUT
        if deq_count == round_limit:
            if touched_this_round:
                rounds += 1
            touched_this_round = False
            round_limit = enq_count
    stats[0] = scans
    stats[2] = rounds
    return RC_TREE


# ---------------------------------------------------------------------------
# Zero-in-degree-only scanning over lazy per-arc candidacy bits


@njit(cache=True)
def _zin_bits(u, rstart, rorig, rlen, rfwdpos, in_wbase, in_words,
              out_wbase, out_words, d, counters):
    """Bit-driven zero-in-degree test for u.

    Only set in-bits are checked (ffs order).  A relaxable in-arc stops
    the test with every bit left as-is; non-relaxable candidates are
    cleared on both endpoints as they are ruled out.
    """
    base = rstart[u]
    wb = in_wbase[u]
    nw = in_wbase[u + 1] - wb
    wi = 0
    while wi < nw:
        word = in_words[wb + wi]
        if word == 0:
            wi += 1
            continue
        b = K.ctz64(word)
        j = (wi << 6) + b
        t = rorig[base + j]
        diff = K.check(d, counters, t, u, rlen[base + j], AUX)
        if diff < 0:
            return False
        in_words[wb + wi] = word & ~(np.int64(1) << np.int64(b))
        op = rfwdpos[base + j]
        out_words[out_wbase[t] + (op >> 6)] &= ~(np.int64(1) << np.int64(op & 63))
    return True


@njit(cache=True)
def _update_bits(v, fstart, fhead, flen, frevpos, out_wbase, out_words,
                 in_wbase, in_words, d, status, counters):
    """After d[v] dropped: re-test v's zero-bit out-arcs.

    Arcs that became relaxable get their candidacy bits set on both
    endpoints, and their (queued) targets are put to sleep for the round.
    """
    base = fstart[v]
    nbits = fstart[v + 1] - base
    wb = out_wbase[v]
    nw = out_wbase[v + 1] - wb
    for wi in range(nw):
        comp = ~out_words[wb + wi]
        rem = nbits - (wi << 6)
        if rem < 64:
            comp &= (np.int64(1) << np.int64(rem)) - 1
        while comp != 0:
            b = K.ctz64(comp)
            comp &= ~(np.int64(1) << np.int64(b))
            j = (wi << 6) + b
            w = fhead[base + j]
            diff = K.check(d, counters, v, w, flen[base + j], AUX)
            if diff < 0:
                out_words[wb + wi] |= np.int64(1) << np.int64(b)
                ip = frevpos[base + j]
                in_words[in_wbase[w] + (ip >> 6)] |= np.int64(1) << np.int64(ip & 63)
                if status[w] == ACTIVE:
                    status[w] = INACTIVE


@njit(cache=True)
def _run_zdo_bits(n, src, fstart, fhead, flen, farc, frevpos,
                  rstart, rorig, rlen, rfwdpos,
                  out_wbase, out_words, in_wbase, in_words,
                  d, parent_v, parent_arc, status, prev, nxt, deg,
                  counters, queue, drop_buf, cycle_buf, stats, deadline, debug):
    cap = n + 1
    head = 0
    tail = 0
    queue[tail] = src
    tail = (tail + 1) % cap
    status[src] = ACTIVE
    K.fill_word_bits(out_words, out_wbase[src], fstart[src + 1] - fstart[src])
    scans = 0
    rounds = 0
    ticks = 0
    deq_count = 0
    enq_count = 1
    round_limit = 1
    touched_this_round = False
    while head != tail:
        if counters[BUDGET] <= 0:
            stats[0] = scans
            return RC_BUDGET
        if deadline > 0.0:
            ticks += 1
            if ticks >= _TICK_EVERY:
                ticks = 0
                with objmode(now="float64"):
                    now = time.perf_counter()
                if now > deadline:
                    stats[0] = scans
                    return RC_TIMEOUT
        u = queue[head]
        head = (head + 1) % cap
        deq_count += 1
        if status[u] == ACTIVE:
            if debug:
                if not K.lazy_bits_ok(n, fstart, fhead, flen, d,
                                      out_wbase, out_words):
                    stats[0] = scans
                    return RC_DEBUG
            if _zin_bits(u, rstart, rorig, rlen, rfwdpos, in_wbase, in_words,
                         out_wbase, out_words, d, counters):
                if debug:
                    if not K.preorder_ok(prev, nxt, deg, parent_v, src, n):
                        stats[0] = scans
                        return RC_DEBUG
                scans += 1
                du = d[u]
                obase = out_wbase[u]
                onw = out_wbase[u + 1] - obase
                fb = fstart[u]
                wi = 0
                while wi < onw:
                    word = out_words[obase + wi]
                    if word == 0:
                        wi += 1
                        continue
                    b = K.ctz64(word)
                    j = (wi << 6) + b
                    out_words[obase + wi] = word & ~(np.int64(1) << np.int64(b))
                    v = fhead[fb + j]
                    ip = frevpos[fb + j]
                    in_words[in_wbase[v] + (ip >> 6)] &= ~(np.int64(1) << np.int64(ip & 63))
                    diff = K.check(d, counters, u, v, flen[fb + j], MAIN)
                    if diff < 0:
                        if u == v:
                            cycle_buf[0] = u
                            stats[0] = scans
                            stats[1] = 1
                            return RC_NEGCYCLE
                        d[v] = du + flen[fb + j]
                        touched_this_round = True
                        if status[v] == OUT:
                            queue[tail] = v
                            tail = (tail + 1) % cap
                            enq_count += 1
                        status[v] = ACTIVE
                        _update_bits(v, fstart, fhead, flen, frevpos,
                                     out_wbase, out_words, in_wbase, in_words,
                                     d, status, counters)
                        r = K.tree_attach(prev, nxt, deg, parent_v, parent_arc,
                                          status, u, v, farc[fb + j],
                                          DROP_INACTIVE, drop_buf)
                        if r < 0:
                            ln = K.extract_chain_cycle(parent_v, u, v, cycle_buf)
                            stats[0] = scans
                            stats[1] = ln
                            return RC_NEGCYCLE
        status[u] = OUT
        if deq_count == round_limit:
            if touched_this_round:
                rounds += 1
            touched_this_round = False
            round_limit = enq_count
    stats[0] = scans
    stats[2] = rounds
    return RC_TREE


# ---------------------------------------------------------------------------
# dispatch


def normalize_algo(algo: str) -> str:
    a = algo.lower().replace("-", "_") if algo else algo
    a = {"pal": "pallottino", "tar": "tarjan", "zdo_bits": "zdo_bits"}.get(a, a)
    a = _ALIASES.get(algo.lower(), a)
    if a not in ALGO_IDS:
        raise ValueError(f"unknown algorithm {algo!r}; expected one of {ALGO_IDS}")
    return a


def _word_layout(start: np.ndarray) -> np.ndarray:
    degs = np.diff(start)
    words = (degs + 63) // 64
    base = np.zeros(len(words) + 1, np.int64)
    np.cumsum(words, out=base[1:])
    return base


def run(graph: Graph, algo: str, budget: Optional[int] = None,
        deadline_s: Optional[float] = None, debug: bool = False) -> RunReport:
    """Run one algorithm over the graph and report outcome + counters."""
    algo = normalize_algo(algo)
    n, m, src = graph.n, graph.m, graph.source

    t0 = time.perf_counter_ns()
    d = np.full(n, VERY_FAR, np.int64)
    d[src] = 0
    parent_v = np.full(n, NIL, np.int64)
    parent_arc = np.full(n, NIL, np.int64)
    status = np.zeros(n, np.int64)
    counters = np.zeros(3, np.int64)
    counters[BUDGET] = default_budget(n, m) if budget is None else budget
    cycle_buf = np.empty(n + 1, np.int64)
    stats = np.zeros(3, np.int64)
    deadline = time.perf_counter() + deadline_s if deadline_s else 0.0

    needs_tree = algo in ("tarjan", "pallottino", "zdo", "zdo_bits")
    if needs_tree:
        prev = np.full(n, K.NOT_IN_LIST, np.int64)
        nxt = np.full(n, K.NOT_IN_LIST, np.int64)
        deg = np.zeros(n, np.int64)
        prev[src] = NIL
        nxt[src] = NIL
        deg[src] = -1
        drop_buf = np.empty(n, np.int64)
    else:
        prev = nxt = deg = drop_buf = np.empty(0, np.int64)

    queue = np.empty(n + 1, np.int64)

    if algo in ("bfm", "tarjan"):
        status[src] = LABELED
        in_queue = np.zeros(n, np.bool_)
        detector = _DET_SUBTREE if algo == "tarjan" else _DET_WALK
        code = _run_bfm(n, src, graph.fstart, graph.fhead, graph.flen,
                        graph.farc, detector, d, parent_v, parent_arc, status,
                        prev, nxt, deg, counters, queue, in_queue, drop_buf,
                        cycle_buf, stats, deadline, debug)
    elif algo == "pape":
        status[src] = LABELED
        in_queue = np.zeros(n, np.bool_)
        ever_labeled = np.zeros(n, np.bool_)
        code = _run_pape(n, src, graph.fstart, graph.fhead, graph.flen,
                         graph.farc, d, parent_v, parent_arc, status,
                         counters, queue, in_queue, ever_labeled, cycle_buf,
                         stats, deadline, debug)
    elif algo == "pallottino":
        status[src] = LABELED
        in_queue = np.zeros(n, np.bool_)
        ever_scanned = np.zeros(n, np.bool_)
        q2 = np.empty(n + 1, np.int64)
        code = _run_pallottino(n, src, graph.fstart, graph.fhead, graph.flen,
                               graph.farc, d, parent_v, parent_arc, status,
                               prev, nxt, deg, counters, queue, q2, in_queue,
                               ever_scanned, drop_buf, cycle_buf, stats,
                               deadline, debug)
    elif algo == "gor":
        b_list = np.empty(n, np.int64)
        in_b = np.zeros(n, np.int64)
        visit_mark = np.zeros(n, np.int64)
        on_stack = np.zeros(n, np.bool_)
        ai = np.zeros(n, np.int64)
        stack = np.empty(n, np.int64)
        entry_arc = np.zeros(n, np.int64)
        post = np.empty(n, np.int64)
        code = _run_gor(n, src, graph.fstart, graph.fhead, graph.flen,
                        graph.farc, d, parent_v, parent_arc, counters,
                        b_list, in_b, visit_mark, on_stack, ai, stack,
                        entry_arc, post, cycle_buf, stats, deadline, debug)
    elif algo == "zdo":
        status[src] = ACTIVE
        code = _run_zdo(n, src, graph.fstart, graph.fhead, graph.flen,
                        graph.farc, graph.rstart, graph.rorig, graph.rlen,
                        d, parent_v, parent_arc, status, prev, nxt, deg,
                        counters, queue, drop_buf, cycle_buf, stats,
                        deadline, debug)
    else:  # zdo_bits
        status[src] = ACTIVE
        out_wbase = _word_layout(graph.fstart)
        in_wbase = _word_layout(graph.rstart)
        out_words = np.zeros(max(int(out_wbase[-1]), 1), np.int64)
        in_words = np.zeros(max(int(in_wbase[-1]), 1), np.int64)
        code = _run_zdo_bits(n, src, graph.fstart, graph.fhead, graph.flen,
                             graph.farc, graph.frevpos, graph.rstart,
                             graph.rorig, graph.rlen, graph.rfwdpos,
                             out_wbase, out_words, in_wbase, in_words,
                             d, parent_v, parent_arc, status, prev, nxt, deg,
                             counters, queue, drop_buf, cycle_buf, stats,
                             deadline, debug)
    elapsed = time.perf_counter_ns() - t0

    if code == RC_TREE:
        outcome = Tree(dist=d, parent_vertex=parent_v, parent_arc=parent_arc)
    elif code == RC_NEGCYCLE:
        ln = int(stats[1])
        outcome = NegativeCycle(tuple(int(x) + 1 for x in cycle_buf[:ln]))
    elif code == RC_BUDGET:
        outcome = BudgetAbort()
    elif code == RC_TIMEOUT:
        outcome = TimedOut()
    else:
        raise AssertionError(f"{algo}: internal invariant violated (debug mode)")

    return RunReport(
        algo=algo, n=n, m=m, outcome=outcome,
        counters=CheckCounters(int(counters[AUX]), int(counters[MAIN])),
        elapsed_ns=elapsed, scans=int(stats[0]), rounds=int(stats[2]),
    )
