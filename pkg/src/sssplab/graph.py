"""Directed graph with dual adjacency, arc cross-positions, and DIMACS I/O.

The graph is stored in compressed form: one forward (outgoing) and one
reverse (incoming) adjacency, both in arc-insertion order, plus for every
arc the *local* slot it occupies in the opposite list.  The cross slots
are what let the bit-vector algorithm clear an arc's candidacy bit on
both endpoints in O(1).

Vertices are 1-indexed in files and in the public arc API (DIMACS
convention) and 0-indexed in the internal arrays.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: Sentinel potential for vertices not (yet) reached.  Finite on purpose:
#: the relaxation predicate stays a plain integer comparison, and the
#: verifier classifies any potential >= VERY_FAR // 2 as unreachable.
VERY_FAR = 1 << 60

#: Overflow guard: n * (max |length| + 1) must stay below this.
_LENGTH_BOUND = 1 << 62


@dataclass(frozen=True)
class Graph:
    """Immutable directed graph; safe to share across concurrent runs.

    ``tail/head/length`` hold the arcs in insertion order (0-indexed
    endpoints).  ``fstart/rstart`` are CSR offsets; the per-slot arrays
    carry the neighbour, the arc length, the original arc id, and the
    cross slot in the opposite adjacency list.
    """

    n: int
    m: int
    source: int  # 0-indexed
    tail: np.ndarray
    head: np.ndarray
    length: np.ndarray
    fstart: np.ndarray
    fhead: np.ndarray
    flen: np.ndarray
    farc: np.ndarray
    frevpos: np.ndarray  # local slot of this arc in head's reverse list
    rstart: np.ndarray
    rorig: np.ndarray
    rlen: np.ndarray
    rarc: np.ndarray
    rfwdpos: np.ndarray  # local slot of this arc in tail's forward list

    def out_arcs(self, u: int):
        """Yield (v, length, arc_id) for vertex u's outgoing arcs (0-indexed)."""
        for j in range(self.fstart[u], self.fstart[u + 1]):
            yield int(self.fhead[j]), int(self.flen[j]), int(self.farc[j])

    def in_arcs(self, v: int):
        """Yield (u, length, arc_id) for vertex v's incoming arcs (0-indexed)."""
        for j in range(self.rstart[v], self.rstart[v + 1]):
            yield int(self.rorig[j]), int(self.rlen[j]), int(self.rarc[j])

    def out_degree(self, u: int) -> int:
        return int(self.fstart[u + 1] - self.fstart[u])

    def in_degree(self, v: int) -> int:
        return int(self.rstart[v + 1] - self.rstart[v])

    def arcs_external(self):
        """Arcs as (u, v, length) with 1-indexed endpoints, insertion order."""
        return [
            (int(u) + 1, int(v) + 1, int(l))
            for u, v, l in zip(self.tail, self.head, self.length)
        ]


def build_graph(n: int, arcs, source: int) -> Graph:
    """Build a Graph from 1-indexed (u, v, length) triples.

    Arc order is preserved in both adjacency directions; parallel arcs
    and self-loops are legal.  Raises ValueError on endpoints outside
    1..n or when the distance-arithmetic overflow bound is violated.
    """
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    if not 1 <= source <= n:
        raise ValueError(f"source {source} outside 1..{n}")

    m = len(arcs)
    tail = np.empty(m, np.int64)
    head = np.empty(m, np.int64)
    length = np.empty(m, np.int64)
    for i, (u, v, l) in enumerate(arcs):
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"arc {i}: endpoint ({u},{v}) outside 1..{n}")
        tail[i] = u - 1
        head[i] = v - 1
        length[i] = l

    max_abs = int(np.max(np.abs(length))) if m else 0
    if n * (max_abs + 1) >= _LENGTH_BOUND:
        raise ValueError(
            f"overflow bound violated: n*(max|length|+1) = {n * (max_abs + 1)} >= 2^62"
        )

    fstart = np.zeros(n + 1, np.int64)
    rstart = np.zeros(n + 1, np.int64)
    np.add.at(fstart, tail + 1, 1)
    np.add.at(rstart, head + 1, 1)
    np.cumsum(fstart, out=fstart)
    np.cumsum(rstart, out=rstart)

    fhead = np.empty(m, np.int64)
    flen = np.empty(m, np.int64)
    farc = np.empty(m, np.int64)
    frevpos = np.empty(m, np.int64)
    rorig = np.empty(m, np.int64)
    rlen = np.empty(m, np.int64)
    rarc = np.empty(m, np.int64)
    rfwdpos = np.empty(m, np.int64)

    fslot = np.zeros(n, np.int64)  # next free local slot per vertex
    rslot = np.zeros(n, np.int64)
    for i in range(m):
        u = int(tail[i])
        v = int(head[i])
        fj = int(fslot[u])
        rj = int(rslot[v])
        fslot[u] += 1
        rslot[v] += 1
        fp = fstart[u] + fj
        rp = rstart[v] + rj
        fhead[fp] = v
        flen[fp] = length[i]
        farc[fp] = i
        frevpos[fp] = rj
        rorig[rp] = u
        rlen[rp] = length[i]
        rarc[rp] = i
        rfwdpos[rp] = fj

    g = Graph(
        n=n, m=m, source=source - 1,
        tail=tail, head=head, length=length,
        fstart=fstart, fhead=fhead, flen=flen, farc=farc, frevpos=frevpos,
        rstart=rstart, rorig=rorig, rlen=rlen, rarc=rarc, rfwdpos=rfwdpos,
    )
    for a in (g.tail, g.head, g.length, g.fstart, g.fhead, g.flen, g.farc,
              g.frevpos, g.rstart, g.rorig, g.rlen, g.rarc, g.rfwdpos):
        a.setflags(write=False)
    return g


def parse_dimacs(text: str) -> Graph:
    """Parse the DIMACS-style shortest-path format.

    Grammar, one directive per line: ``c <comment>``; ``p sp <n> <m>``
    (exactly once, first non-comment line); ``n <source>`` (exactly
    once); ``a <u> <v> <len>`` exactly m times.
    """
    n = m = None
    source = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "p":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate 'p' line")
            if len(parts) != 4 or parts[1] != "sp":
                raise ValueError(f"line {lineno}: malformed problem line {line!r}")
            n, m = int(parts[2]), int(parts[3])
        elif kind == "n":
            if n is None:
                raise ValueError(f"line {lineno}: 'n' before 'p' line")
            if source is not None:
                raise ValueError(f"line {lineno}: duplicate source line")
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: malformed source line {line!r}")
            source = int(parts[1])
        elif kind == "a":
            if n is None:
                raise ValueError(f"line {lineno}: 'a' before 'p' line")
            if len(parts) != 4:
                raise ValueError(f"line {lineno}: malformed arc line {line!r}")
            arcs.append((int(parts[1]), int(parts[2]), int(parts[3])))
        else:
            raise ValueError(f"line {lineno}: unknown directive {line!r}")
    if n is None:
        raise ValueError("missing 'p sp <n> <m>' line")
    if source is None:
        raise ValueError("missing 'n <source>' line")
    if len(arcs) != m:
        raise ValueError(f"arc count mismatch: header says {m}, file has {len(arcs)}")
    return build_graph(n, arcs, source)


def write_dimacs(graph: Graph) -> str:
    """Canonical DIMACS text: one comment, p line, source, arcs in order."""
    out = ["c sssplab", f"p sp {graph.n} {graph.m}", f"n {graph.source + 1}"]
    tail = graph.tail
    head = graph.head
    length = graph.length
    out.extend(
        f"a {int(tail[i]) + 1} {int(head[i]) + 1} {int(length[i])}"
        for i in range(graph.m)
    )
    return "\n".join(out) + "\n"
