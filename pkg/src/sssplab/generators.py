"""Deterministic constructors for the benchmark graph families.

Every family is a pure function of (params, seed): the arc emission
order and the order of random draws are both fixed, so regenerating
with the same GenSpec is byte-identical.  No generator emits self-loops.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, build_graph
from .prng import SplitMix64

LONG_ARC = 10**8  # artificial-source arc length


# ---------------------------------------------------------------------------
# adversarial fixed families


def gen_star(k: int) -> Graph:
    """Chain into a high-degree center, all arc lengths -1.

    Vertices 1..k form a chain; vertex k+1 receives an arc from every
    chain vertex and feeds k sink vertices.  n = 2k+1, m = 3k-1.
    """
    if k < 1:
        raise ValueError("star family needs k >= 1")
    arcs = []
    for i in range(1, k):
        arcs.append((i, i + 1, -1))
    for i in range(1, k + 1):
        arcs.append((i, k + 1, -1))
    for i in range(k + 2, 2 * k + 2):
        arcs.append((k + 1, i, -1))
    return build_graph(2 * k + 1, arcs, 1)


def gen_bad_gor(k: int) -> Graph:
    """Star-like gadget with positive chain arcs that defeats topological scans.

    l(1,2) = -3k; l(i,i+1) = 1; l(1,k+1) = -1; l(i,k+1) = 2(k-i);
    l(k+1,j) = -1.  n = 2k+1, m = 3k-1.
    """
    if k < 2:
        raise ValueError("bad-gor family needs k >= 2")
    arcs = [(1, 2, -3 * k)]
    for i in range(2, k):
        arcs.append((i, i + 1, 1))
    arcs.append((1, k + 1, -1))
    for i in range(2, k + 1):
        arcs.append((i, k + 1, 2 * (k - i)))
    for i in range(k + 2, 2 * k + 2):
        arcs.append((k + 1, i, -1))
    return build_graph(2 * k + 1, arcs, 1)


# ---------------------------------------------------------------------------
# grid families


def _grid_id(x: int, y: int, Y: int) -> int:
    return (x - 1) * Y + y


def gen_spgrid(X: int, Y: int, seed: int) -> Graph:
    """Layered grid: forward arcs between layers, cyclic up/down inside.

    Grid arc lengths are uniform in [0, 10000].  A plain source feeds
    the first layer; an artificial source reaches the plain source with
    a zero arc and every grid vertex with a 10^8 arc, and is the run
    source.  Degenerate modular self-loops (1-wide grids) are skipped.
    """
    if X < 1 or Y < 1:
        raise ValueError("grid dims must be >= 1")
    rng = SplitMix64(seed)
    arcs = []
    for x in range(1, X):
        for y in range(1, Y + 1):
            arcs.append((_grid_id(x, y, Y), _grid_id(x + 1, y, Y),
                         rng.uniform_int(0, 10000)))
    for x in range(1, X + 1):
        for y in range(1, Y + 1):
            yy = y % Y + 1
            if yy != y:
                arcs.append((_grid_id(x, y, Y), _grid_id(x, yy, Y),
                             rng.uniform_int(0, 10000)))
    for x in range(1, X + 1):
        for y in range(1, Y + 1):
            yy = (y - 2) % Y + 1
            if yy != y:
                arcs.append((_grid_id(x, y, Y), _grid_id(x, yy, Y),
                             rng.uniform_int(0, 10000)))
    n_grid = X * Y
    plain = n_grid + 1
    art = n_grid + 2
    for y in range(1, Y + 1):
        arcs.append((plain, _grid_id(1, y, Y), rng.uniform_int(0, 10000)))
    arcs.append((art, plain, 0))
    for v in range(1, n_grid + 1):
        arcs.append((art, v, LONG_ARC))
    return build_graph(n_grid + 2, arcs, art)


def gen_hard_grid(X: int, Y: int, seed: int, sign: str) -> Graph:
    """Layers of cycles-plus-chords with long jumps to higher layers.

    Each layer is a Y-cycle plus Y random chords, lengths uniform
    [1, 100].  Every vertex below the last layer sends one arc to a
    uniformly chosen higher layer at a uniform position, with base
    length uniform [0, 10000] scaled by (dx)^2 and negated for
    sign="negative".  Sources as in gen_spgrid.
    """
    if X < 2 or Y < 3:
        raise ValueError("hard grids need X >= 2 and Y >= 3")
    if sign not in ("positive", "negative"):
        raise ValueError(f"sign must be positive|negative, got {sign!r}")
    rng = SplitMix64(seed)
    arcs = []
    for x in range(1, X + 1):
        for y in range(1, Y + 1):
            arcs.append((_grid_id(x, y, Y), _grid_id(x, y % Y + 1, Y),
                         rng.uniform_int(1, 100)))
        for _ in range(Y):
            y1 = rng.uniform_int(1, Y)
            y2 = rng.uniform_int(1, Y)
            while y2 == y1:
                y2 = rng.uniform_int(1, Y)
            arcs.append((_grid_id(x, y1, Y), _grid_id(x, y2, Y),
                         rng.uniform_int(1, 100)))
    for x in range(1, X):
        for y in range(1, Y + 1):
            x2 = rng.uniform_int(x + 1, X)
            y2 = rng.uniform_int(1, Y)
            base = rng.uniform_int(0, 10000) * (x2 - x) ** 2
            arcs.append((_grid_id(x, y, Y), _grid_id(x2, y2, Y),
                         -base if sign == "negative" else base))
    n_grid = X * Y
    plain = n_grid + 1
    art = n_grid + 2
    for y in range(1, Y + 1):
        arcs.append((plain, _grid_id(1, y, Y), rng.uniform_int(0, 10000)))
    arcs.append((art, plain, 0))
    for v in range(1, n_grid + 1):
        arcs.append((art, v, LONG_ARC))
    return build_graph(n_grid + 2, arcs, art)


def gen_sqnc(X: int, Y: int, seed: int) -> Graph:
    """Layered square grid carrying a hidden negative Hamiltonian cycle.

    Grid topology as gen_spgrid, but layer (up/down) arcs are uniform
    [1000, 10000] and inter-layer/source arcs uniform [1, 100].  A
    boustrophedon tour over the grid is overlaid with n_grid-1 unit arcs
    plus a closing arc of length -n_grid, so the tour totals -1.
    """
    if X != Y or X < 2:
        raise ValueError("sqnc family needs X == Y >= 2")
    rng = SplitMix64(seed)
    arcs = []
    for x in range(1, X):
        for y in range(1, Y + 1):
            arcs.append((_grid_id(x, y, Y), _grid_id(x + 1, y, Y),
                         rng.uniform_int(1, 100)))
    for x in range(1, X + 1):
        for y in range(1, Y + 1):
            yy = y % Y + 1
            if yy != y:
                arcs.append((_grid_id(x, y, Y), _grid_id(x, yy, Y),
                             rng.uniform_int(1000, 10000)))
    for x in range(1, X + 1):
        for y in range(1, Y + 1):
            yy = (y - 2) % Y + 1
            if yy != y:
                arcs.append((_grid_id(x, y, Y), _grid_id(x, yy, Y),
                             rng.uniform_int(1000, 10000)))
    n_grid = X * Y
    tour = []
    for x in range(1, X + 1):
        ys = range(1, Y + 1) if x % 2 == 1 else range(Y, 0, -1)
        tour.extend(_grid_id(x, y, Y) for y in ys)
    for a, b in zip(tour, tour[1:]):
        arcs.append((a, b, 1))
    arcs.append((tour[-1], tour[0], -n_grid))
    plain = n_grid + 1
    art = n_grid + 2
    for y in range(1, Y + 1):
        arcs.append((plain, _grid_id(1, y, Y), rng.uniform_int(1, 100)))
    arcs.append((art, plain, 0))
    for v in range(1, n_grid + 1):
        arcs.append((art, v, LONG_ARC))
    return build_graph(n_grid + 2, arcs, art)


# ---------------------------------------------------------------------------
# random families


def gen_sprand(n: int, m: int, seed: int, L: int = 0, U: int = 10000,
               P: int = 0, artificial_source: bool = False,
               unit_cycle: bool = False) -> Graph:
    """Hamiltonian cycle plus random arcs, optionally potential-shifted.

    Cycle arcs (i, i mod n + 1) get length uniform [L, U], or exactly 1
    with unit_cycle.  The m-n extra arcs draw distinct endpoints (the
    head is redrawn on collision) and a uniform [L, U] length.  With
    P > 0, per-vertex potentials uniform [0, P] re-weight every arc as
    l + p(u) - p(v), which flips signs without creating negative cycles.
    """
    if n < 2:
        raise ValueError("sprand needs n >= 2")
    if m < n:
        raise ValueError("sprand needs m >= n")
    rng = SplitMix64(seed)
    arcs = []
    for i in range(1, n + 1):
        ln = 1 if unit_cycle else rng.uniform_int(L, U)
        arcs.append((i, i % n + 1, ln))
    for _ in range(m - n):
        u = rng.uniform_int(1, n)
        v = rng.uniform_int(1, n)
        while v == u:
            v = rng.uniform_int(1, n)
        arcs.append((u, v, rng.uniform_int(L, U)))
    if P > 0:
        pot = [rng.uniform_int(0, P) for _ in range(n)]
        arcs = [(u, v, l + pot[u - 1] - pot[v - 1]) for u, v, l in arcs]
    source = 1
    nn = n
    if artificial_source:
        art = n + 1
        arcs.append((art, 1, 0))
        for v in range(2, n + 1):
            arcs.append((art, v, LONG_ARC))
        source = art
        nn = n + 1
    return build_graph(nn, arcs, source)


def gen_rand05(n: int, m: int, L: int, U: int, seed: int) -> Graph:
    """Negative-cycle hunting ground: sprand with a wide [L, U] range."""
    return gen_sprand(n, m, seed, L=L, U=U)


def gen_spacyc(n: int, m: int, seed: int, L: int = 0, U: int = 10000,
               path_length=1, random_path: bool = False) -> Graph:
    """Acyclic graph: a 1..n path plus random low-to-high arcs.

    Path arcs (i, i+1) carry the fixed path_length, or uniform [L, U]
    when random_path.  Extra arcs draw two distinct vertices (second
    redrawn on collision) and point from the lower to the higher id.
    """
    if n < 2:
        raise ValueError("spacyc needs n >= 2")
    if m < n - 1:
        raise ValueError("spacyc needs m >= n-1")
    rng = SplitMix64(seed)
    arcs = []
    for i in range(1, n):
        ln = rng.uniform_int(L, U) if random_path else path_length
        arcs.append((i, i + 1, ln))
    for _ in range(m - (n - 1)):
        u = rng.uniform_int(1, n)
        v = rng.uniform_int(1, n)
        while v == u:
            v = rng.uniform_int(1, n)
        lo, hi = (u, v) if u < v else (v, u)
        arcs.append((lo, hi, rng.uniform_int(L, U)))
    return build_graph(n, arcs, 1)


def p2n_range(f: float):
    """[L, U] giving an expected negative-arc fraction of roughly f."""
    shift = int(10000 * f)
    return -shift, 10000 - shift


# ---------------------------------------------------------------------------
# family registry


@dataclass(frozen=True)
class GenSpec:
    """Family + parameters + seed; determines the instance bit-for-bit."""

    family: str
    params: dict = field(default_factory=dict)
    seed: int = 1

    def build(self) -> Graph:
        return build_family(self.family, self.params, self.seed)

    def params_str(self) -> str:
        return ";".join(f"{k}={v}" for k, v in sorted(self.params.items()))


def build_family(family: str, params: dict, seed: int) -> Graph:
    """Construct one instance of a named family.

    Unknown families and unknown parameter keys raise ValueError.
    """
    fam = family.lower()
    p = dict(params)

    def take(key, default=None):
        if key in p:
            return p.pop(key)
        if default is None:
            raise ValueError(f"family {family!r} needs parameter {key!r}")
        return default

    def done():
        if p:
            raise ValueError(f"family {family!r}: unknown parameters {sorted(p)}")

    if fam == "star":
        k = int(take("k"))
        done()
        return gen_star(k)
    if fam in ("bad-gor", "bad_gor", "badgor"):
        k = int(take("k"))
        done()
        return gen_bad_gor(k)
    if fam in ("s-grid", "s_grid"):
        x = int(take("X"))
        done()
        return gen_spgrid(x, x, seed)
    if fam in ("w-grid", "w_grid"):
        y = int(take("Y"))
        x = int(take("X", 16))
        done()
        return gen_spgrid(x, y, seed)
    if fam in ("l-grid", "l_grid"):
        x = int(take("X"))
        y = int(take("Y", 16))
        done()
        return gen_spgrid(x, y, seed)
    if fam in ("ph-grid", "ph_grid", "nh-grid", "nh_grid"):
        x = int(take("X"))
        y = int(take("Y", 32))
        done()
        sign = "positive" if fam.startswith("ph") else "negative"
        return gen_hard_grid(x, y, seed, sign)
    if fam in ("s-rand", "s_rand"):
        n = int(take("n"))
        m = int(take("m", 4 * n))
        done()
        return gen_sprand(n, m, seed)
    if fam in ("d-rand", "d_rand"):
        n = int(take("n"))
        m = int(take("m", n * n // 4))
        done()
        return gen_sprand(n, m, seed)
    if fam in ("p-rand", "p_rand"):
        n = int(take("n"))
        m = int(take("m", 4 * n))
        P = int(take("P"))
        done()
        return gen_sprand(n, m, seed, P=P)
    if fam in ("pd2s-rand", "pd2s_rand"):
        n = int(take("n"))
        m = int(take("m", 10**7))
        P = int(take("P", 10**6))
        done()
        return gen_sprand(n, m, seed, P=P)
    if fam in ("ps-rand", "ps_rand"):
        n = int(take("n"))
        m = int(take("m", 10**7))
        P = int(take("P", 10**6))
        done()
        return gen_sprand(n, m, seed, P=P, artificial_source=True)
    if fam in ("pc-rand", "pc_rand"):
        n = int(take("n"))
        m = int(take("m", 10**7))
        P = int(take("P", 10**6))
        done()
        return gen_sprand(n, m, seed, P=P, unit_cycle=True)
    if fam in ("fp-acyc", "fp_acyc"):
        n = int(take("n"))
        m = int(take("m", 4 * n))
        done()
        return gen_spacyc(n, m, seed, L=0, U=10000, path_length=1)
    if fam in ("fn-acyc", "fn_acyc"):
        n = int(take("n"))
        m = int(take("m", 4 * n))
        done()
        return gen_spacyc(n, m, seed, L=-10000, U=0, path_length=-1)
    if fam in ("p2n-acyc", "p2n_acyc"):
        n = int(take("n"))
        m = int(take("m", 4 * n))
        f = float(take("f"))
        done()
        L, U = p2n_range(f)
        return gen_spacyc(n, m, seed, L=L, U=U, random_path=True)
    if fam == "sqnc":
        x = int(take("X"))
        done()
        return gen_sqnc(x, x, seed)
    if fam == "rand05":
        n = int(take("n"))
        m = int(take("m"))
        L = int(take("L"))
        U = int(take("U", 32000))
        done()
        return gen_rand05(n, m, L, U, seed)
    raise ValueError(f"unknown family {family!r}")


FAMILY_NAMES = (
    "star", "bad-gor", "s-grid", "w-grid", "l-grid", "ph-grid", "nh-grid",
    "s-rand", "d-rand", "p-rand", "pd2s-rand", "ps-rand", "pc-rand",
    "fp-acyc", "fn-acyc", "p2n-acyc", "sqnc", "rand05",
)
