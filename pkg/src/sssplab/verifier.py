"""Independent oracle and outcome checkers: the trust anchor.

The oracle is a queue-free textbook formulation (up to n-1 sequential
passes over the arc list plus one detection pass) and deliberately
shares no code with the instrumented drivers.  The checkers validate a
reported tree or cycle against the graph itself.

A potential >= VERY_FAR // 2 is classified as unreachable; reachable
distances must match the oracle exactly.
"""
from __future__ import annotations

from typing import List, Union

import numpy as np
from numba import njit

from .graph import VERY_FAR, Graph
from .labeling import NegativeCycle, Tree

_UNREACHABLE = VERY_FAR // 2


def is_unreachable(dist_value: int) -> bool:
    return dist_value >= _UNREACHABLE


@njit(cache=True)
def _bf_sweeps(n, src, tail, head, length, d, parent):
    """Relax every arc in file order, n-1 passes; pass n detects cycles.

    Returns the vertex improved by the detection pass, or -1 if the
    distances settled (no negative cycle reachable under the sentinel
    convention: only vertices with d < VERY_FAR relax their out-arcs).
    """
    m = tail.shape[0]
    for _ in range(n - 1):
        changed = False
        for i in range(m):
            u = tail[i]
            if d[u] < VERY_FAR:
                nd = d[u] + length[i]
                if nd < d[head[i]]:
                    d[head[i]] = nd
                    parent[head[i]] = u
                    changed = True
        if not changed:
            return -1
    for i in range(m):
        u = tail[i]
        if d[u] < VERY_FAR and d[u] + length[i] < d[head[i]]:
            parent[head[i]] = u
            return head[i]
    return -1


def oracle_bellman_ford(graph: Graph) -> Union[Tree, NegativeCycle]:
    """Exact distances, or a negative cycle witnessed via parent walk."""
    n = graph.n
    d = np.full(n, VERY_FAR, np.int64)
    d[graph.source] = 0
    parent = np.full(n, -1, np.int64)
    v0 = int(_bf_sweeps(n, graph.source, graph.tail, graph.head,
                        graph.length, d, parent))
    if v0 < 0:
        return Tree(dist=d, parent_vertex=parent,
                    parent_arc=np.full(n, -1, np.int64))
    # a vertex improved on pass n sits above a parent-link cycle: step n
    # times to land inside it, then read the loop off
    w = v0
    for _ in range(n):
        w = int(parent[w])
    chain = [w]
    x = int(parent[w])
    while x != w:
        chain.append(x)
        x = int(parent[x])
    cycle = [chain[0]] + list(reversed(chain[1:]))
    return NegativeCycle(tuple(c + 1 for c in cycle))


def verify_tree(graph: Graph, tree: Tree) -> List[str]:
    """Check a claimed shortest-path tree; empty list means ok.

    Clauses: (a) source potential is 0; (b) no arc with reachable tail
    is relaxable; (c) every parent arc is tight; (d) parent links of
    reachable vertices are acyclic and rooted at the source; (e) the
    parent array marks exactly the unreachable vertices (source aside).
    """
    n, src = graph.n, graph.source
    d = tree.dist
    pv = tree.parent_vertex
    bad: List[str] = []

    if d[src] != 0:
        bad.append(f"(a) source potential is {int(d[src])}, not 0")

    reach = d < _UNREACHABLE
    tails_ok = reach[graph.tail]
    slack = d[graph.tail] + graph.length - d[graph.head]
    viol = np.nonzero(tails_ok & (slack < 0))[0]
    for i in viol[:5]:
        bad.append(
            f"(b) arc ({int(graph.tail[i]) + 1},{int(graph.head[i]) + 1}) "
            f"is still relaxable"
        )

    for v in range(n):
        p = int(pv[v])
        if p < 0:
            continue
        if not reach[v]:
            continue
        arc = int(tree.parent_arc[v]) if tree.parent_arc is not None else -1
        if arc >= 0:
            ln = int(graph.length[arc])
            if int(graph.tail[arc]) != p or int(graph.head[arc]) != v:
                bad.append(f"(c) parent arc of {v + 1} does not join "
                           f"{p + 1}->{v + 1}")
                continue
        else:
            ln = None
            for u, l, _ in graph.in_arcs(v):
                if u == p and (ln is None or l < ln):
                    ln = l
            if ln is None:
                bad.append(f"(c) no arc {p + 1}->{v + 1} backs the parent link")
                continue
        if d[v] != d[p] + ln:
            bad.append(f"(c) parent arc of {v + 1} is not tight")

    # (d) chase parents from every reachable vertex; must reach src
    state = np.zeros(n, np.int8)  # 0 unseen, 1 on current path, 2 done
    state[src] = 2
    for v in range(n):
        if not reach[v] or state[v]:
            continue
        path = []
        w = v
        while True:
            if w == src or state[w] == 2:
                break
            if state[w] == 1:
                bad.append(f"(d) parent links cycle through vertex {w + 1}")
                break
            if int(pv[w]) < 0 or not reach[int(pv[w])]:
                bad.append(f"(d) reachable vertex {w + 1} is not rooted at the source")
                break
            state[w] = 1
            path.append(w)
            w = int(pv[w])
        for x in path:
            state[x] = 2

    for v in range(n):
        if v == src:
            continue
        if reach[v] and int(pv[v]) < 0:
            bad.append(f"(e) reachable vertex {v + 1} has no parent")
        if not reach[v] and d[v] < VERY_FAR and int(pv[v]) < 0:
            # decayed sentinel distances keep their unreachable class
            pass
    return bad


def verify_cycle(graph: Graph, vertices) -> List[str]:
    """Check a claimed negative cycle (external 1-indexed vertex sequence).

    Consecutive pairs (wrapping around) must be arcs of the graph; for
    parallel arcs the minimum length counts.  The total must be < 0.
    """
    bad: List[str] = []
    if not vertices:
        return ["empty vertex sequence"]
    k = len(vertices)
    total = 0
    for i in range(k):
        u = vertices[i] - 1
        v = vertices[(i + 1) % k] - 1
        if not 0 <= u < graph.n:
            return [f"vertex {vertices[i]} out of range"]
        best = None
        for w, ln, _ in graph.out_arcs(u):
            if w == v and (best is None or ln < best):
                best = ln
        if best is None:
            bad.append(f"arc ({vertices[i]},{vertices[(i + 1) % k]}) absent")
        else:
            total += best
    if not bad and total >= 0:
        bad.append(f"cycle total length {total} is not negative")
    return bad
