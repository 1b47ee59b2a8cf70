"""Shared jitted primitives for the label-correcting runs.

Everything here operates on flat int64 arrays so the same machine code
backs both the algorithm drivers and the inspectable LabelState wrapper.
Set NUMBA_DISABLE_JIT=1 to run the identical Python source uncompiled.
"""
from __future__ import annotations

import numpy as np
from numba import njit

# counter cells
AUX = 0
MAIN = 1
BUDGET = 2

# parent / preorder-list sentinels
NIL = -1
NOT_IN_LIST = -2

# classic statuses
UNREACHED = 0
LABELED = 1
SCANNED = 2

# zdo statuses
OUT = 0
ACTIVE = 1
INACTIVE = 2

# subtree-drop policies
DROP_UNREACHED = 1
DROP_INACTIVE = 2

# driver return codes
RC_TREE = 0
RC_NEGCYCLE = 1
RC_BUDGET = 2
RC_TIMEOUT = 3
RC_DEBUG = 4


@njit(cache=True, inline="always")
def check(d, counters, u, v, length, kind):
    """The counted relaxation predicate.

    Returns d[u] + length - d[v]; the arc is relaxable iff the result is
    negative.  Every predicate evaluation in the package goes through
    here: it bumps exactly one of the aux/main tallies and burns one
    unit of the labeling budget.
    """
    counters[kind] += 1
    counters[BUDGET] -= 1
    return d[u] + length - d[v]


@njit(cache=True, inline="always")
def list_insert_after(prev, nxt, u, v):
    w = nxt[u]
    nxt[u] = v
    prev[v] = u
    nxt[v] = w
    if w != NIL:
        prev[w] = v


@njit(cache=True, inline="always")
def list_remove(prev, nxt, v):
    p = prev[v]
    w = nxt[v]
    if p != NIL:
        nxt[p] = w
    if w != NIL:
        prev[w] = p
    prev[v] = NOT_IN_LIST
    nxt[v] = NOT_IN_LIST


@njit(cache=True)
def tree_attach(prev, nxt, deg, parent_v, parent_arc, status,
                u, v, arc_id, drop_mode, drop_buf):
    """Relink v under u after a successful relaxation of arc (u, v).

    First attachment: v is spliced in right after u (newest child first)
    and no block exists to inspect.  Re-attachment: v's contiguous
    descendant block is walked by summing degree counters until the
    running sum hits -1; finding u in the block means arc (u, v) closes
    a negative cycle.  Otherwise every strict descendant is dropped
    (unlinked, parent cleared, status downgraded per drop_mode) and v
    moves to sit right after u.

    Returns the number of dropped vertices (stored in drop_buf), or -1
    when u was found inside v's old subtree.
    """
    if prev[v] == NOT_IN_LIST:
        list_insert_after(prev, nxt, u, v)
        deg[v] = -1
        deg[u] += 1
        parent_v[v] = u
        parent_arc[v] = arc_id
        return 0

    # pass 1: look for u; parent links must stay intact so the caller
    # can extract the cycle chain u -> ... -> v afterwards
    run = deg[v]
    w = nxt[v]
    while run != -1:
        if w == u:
            return -1
        run += deg[w]
        w = nxt[w]

    # pass 2: drop the strict descendants
    ndropped = 0
    run = deg[v]
    w = nxt[v]
    while run != -1:
        run += deg[w]
        nw = nxt[w]
        list_remove(prev, nxt, w)
        parent_v[w] = NIL
        parent_arc[w] = NIL
        deg[w] = -1
        if drop_mode == DROP_UNREACHED:
            status[w] = UNREACHED
        elif drop_mode == DROP_INACTIVE:
            # only queue residents are put to sleep; a vertex outside the
            # queue must stay OUT or a later relaxation could not requeue it
            if status[w] == ACTIVE:
                status[w] = INACTIVE
        drop_buf[ndropped] = w
        ndropped += 1
        w = nw

    deg[parent_v[v]] -= 1
    list_remove(prev, nxt, v)
    list_insert_after(prev, nxt, u, v)
    deg[v] = -1
    deg[u] += 1
    parent_v[v] = u
    parent_arc[v] = arc_id
    return ndropped


@njit(cache=True)
def walk_to_root(parent_v, u, v, n):
    """True iff v is an ancestor of u (inclusive) in the parent tree."""
    w = u
    steps = 0
    while w != NIL and steps <= n:
        if w == v:
            return True
        w = parent_v[w]
        steps += 1
    return False


@njit(cache=True)
def extract_chain_cycle(parent_v, u, v, buf):
    """Fill buf with the forward cycle [v, ..., u] closed by arc (u, v).

    Precondition: v is an ancestor of u with intact parent links.
    Returns the cycle length.
    """
    ln = 0
    w = u
    while True:
        buf[ln] = w
        ln += 1
        if w == v:
            break
        w = parent_v[w]
    i = 0
    j = ln - 1
    while i < j:
        t = buf[i]
        buf[i] = buf[j]
        buf[j] = t
        i += 1
        j -= 1
    return ln


@njit(cache=True)
def ctz64(x):
    """Count trailing zeros of a nonzero 64-bit word (int64 carrier)."""
    nz = 0
    if x & np.int64(0xFFFFFFFF) == 0:
        nz += 32
        x >>= np.int64(32)
    if x & np.int64(0xFFFF) == 0:
        nz += 16
        x >>= np.int64(16)
    if x & np.int64(0xFF) == 0:
        nz += 8
        x >>= np.int64(8)
    if x & np.int64(0xF) == 0:
        nz += 4
        x >>= np.int64(4)
    if x & np.int64(0x3) == 0:
        nz += 2
        x >>= np.int64(2)
    if x & np.int64(0x1) == 0:
        nz += 1
    return nz


@njit(cache=True)
def fill_word_bits(words, base, k):
    """Set the first k bits of the word run starting at words[base]."""
    full = k >> 6
    for i in range(full):
        words[base + i] = np.int64(-1)
    rem = k & 63
    if rem:
        words[base + full] = (np.int64(1) << np.int64(rem)) - 1


@njit(cache=True)
def preorder_ok(prev, nxt, deg, parent_v, src, n):
    """Validate the preorder list against the live parent links.

    Checks: the list starts at the root, visits each live vertex once in
    an order where every vertex appears after its parent with its
    ancestors forming the current stack (i.e. a tree preorder), degree
    counters equal children-minus-one, and off-list vertices carry no
    parent.
    """
    ch = np.zeros(n, np.int64)
    live = 0
    for x in range(n):
        p = parent_v[x]
        if p != NIL:
            ch[p] += 1
            live += 1
        elif x != src and prev[x] != NOT_IN_LIST:
            return False  # in list without a parent
    if prev[src] != NIL:
        return False

    stack = np.empty(n, np.int64)
    top = -1
    seen = 0
    w = src
    while w != NIL:
        if w != src:
            p = parent_v[w]
            if p == NIL:
                return False
            while top >= 0 and stack[top] != p:
                top -= 1
            if top < 0:
                return False
        top += 1
        stack[top] = w
        seen += 1
        if deg[w] != ch[w] - 1:
            return False
        nw = nxt[w]
        if nw != NIL and prev[nw] != w:
            return False
        w = nw
    return seen == live + 1


@njit(cache=True)
def lazy_bits_ok(n, fstart, fhead, flen, d, out_wbase, out_words):
    """Zero candidacy bit must imply a non-relaxable arc (full sweep)."""
    for u in range(n):
        base = fstart[u]
        nb = fstart[u + 1] - base
        for j in range(nb):
            w = out_words[out_wbase[u] + (j >> 6)]
            if (w >> np.int64(j & 63)) & 1 == 0:
                if d[u] + flen[base + j] < d[fhead[base + j]]:
                    return False
    return True
