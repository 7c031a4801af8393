"""Deterministic generators for the graph families and explicit orientations.

Every generator documents its vertex numbering, since orientation bit
vectors and search witnesses are only reproducible against a fixed edge
indexing.
"""

from __future__ import annotations

import random
from itertools import combinations

from .core import Graph, Orientation
from .transforms import chord_partition, two_tree_trace

__all__ = [
    "complete",
    "star",
    "cycle",
    "path",
    "fan",
    "join_k2_empty",
    "complete_bipartite_2",
    "h_st",
    "d_st",
    "h_st_is_white",
    "mobius_ladder",
    "lex_ladder",
    "lex_ladder_orientation",
    "min2conn_h",
    "min2conn_h_orientation",
    "snake",
    "snake_orientation",
    "enumerate_mops",
    "trigon_lozenge_g",
    "mop_doubling_m",
    "trigon_lozenge_h",
    "two_tree_random",
    "two_tree_strong_orientation",
    "hypercube_q3",
]

FAMILY_NAMES = (
    "complete",
    "star",
    "cycle",
    "path",
    "fan",
    "join_k2_empty",
    "complete_bipartite_2",
    "h_st",
    "mobius_ladder",
    "lex_ladder",
    "min2conn_h",
    "snake",
    "trigon_lozenge_g",
    "two_tree_random",
)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _orientation_from_arcs(g: Graph, arcs: set[tuple[int, int]]) -> Orientation:
    bits = []
    for a, b in g.edges:
        if (a, b) in arcs:
            bits.append(0)
        elif (b, a) in arcs:
            bits.append(1)
        else:
            raise ValueError(f"construction left edge ({a}, {b}) unoriented")
    return Orientation(g, bits)


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """K_{1,n-1} with the hub at vertex 0."""
    _require(n >= 2, f"star needs n >= 2, got {n}")
    return Graph(n, [(0, v) for v in range(1, n)])


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def fan(n: int) -> Graph:
    """Join of K_1 (the hub, vertex 0) and the path 1-2-...-(n-1)."""
    _require(n >= 3, f"fan needs n >= 3, got {n}")
    edges = [(0, v) for v in range(1, n)]
    edges += [(i, i + 1) for i in range(1, n - 1)]
    return Graph(n, edges)


def join_k2_empty(n: int) -> Graph:
    """Join of K_2 (vertices 0, 1) and n - 2 independent vertices."""
    _require(n >= 3, f"join_k2_empty needs n >= 3, got {n}")
    edges = [(0, 1)]
    edges += [(0, v) for v in range(2, n)]
    edges += [(1, v) for v in range(2, n)]
    return Graph(n, edges)


def complete_bipartite_2(n: int) -> Graph:
    """K_{2,n-2} with the size-2 part at vertices {0, 1}."""
    _require(n >= 4, f"complete_bipartite_2 needs n >= 4, got {n}")
    edges = [(0, v) for v in range(2, n)]
    edges += [(1, v) for v in range(2, n)]
    return Graph(n, edges)


# ----------------------------------------------------------------------
# The (2t-1)-regular blocks-around-a-circle family and its orientation.
# ----------------------------------------------------------------------

def _h_st_block_edges(s: int, t: int):
    """Yield (i, a, b) with a in block i, b in block i+1 (blocks 1..2s)."""
    for i in range(1, 2 * s + 1):
        j = i + 1 if i < 2 * s else 1
        lo = (i - 1) * t
        lo_j = (j - 1) * t
        for p in range(t):
            for q in range(t):
                if i % 2 == 0 and p == q:
                    continue  # even joins drop the index-aligned matching
                yield i, lo + p, lo_j + q


def h_st(s: int, t: int) -> Graph:
    """2s blocks of t vertices around a circle; block i occupies vertices
    (i-1)*t .. i*t - 1.  Consecutive blocks are completely joined, with the
    index-aligned perfect matching removed between even-odd pairs."""
    _require(s >= 2 and t >= 2, f"h_st needs s, t >= 2, got s={s}, t={t}")
    edges = [(min(a, b), max(a, b)) for _, a, b in _h_st_block_edges(s, t)]
    return Graph(2 * s * t, edges)


def d_st(s: int, t: int) -> Orientation:
    """Orientation of h_st(s, t) sending every edge clockwise (block i to i+1)."""
    g = h_st(s, t)
    arcs = {(a, b) for _, a, b in _h_st_block_edges(s, t)}
    return _orientation_from_arcs(g, arcs)


def h_st_is_white(v: int, t: int) -> bool:
    """White vertices live in odd blocks (block 1 first)."""
    return (v // t) % 2 == 0


def mobius_ladder(n: int) -> Graph:
    """Cycle 0..n-1 plus the n/2 rungs i -- i + n/2."""
    _require(n >= 6 and n % 2 == 0, f"mobius_ladder needs even n >= 6, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, i + n // 2) for i in range(n // 2)]
    return Graph(n, edges)


def hypercube_q3() -> Graph:
    """The 3-cube on vertices 0..7 (binary labels, edges flip one bit)."""
    return Graph(8, [(u, u ^ (1 << k)) for u in range(8) for k in range(3) if u < u ^ (1 << k)])


# ----------------------------------------------------------------------
# Lexicographic ladder P_n o (2K_1) and the near-ratio-1 orientation.
# ----------------------------------------------------------------------

def lex_ladder(n: int) -> Graph:
    """Two paths u_1..u_n (even vertices 2i-2) and v_1..v_n (odd vertices
    2i-1) plus the cross edges u_i v_{i+1} and v_i u_{i+1}."""
    _require(n >= 3, f"lex_ladder needs n >= 3, got {n}")
    u = [2 * i for i in range(n)]
    v = [2 * i + 1 for i in range(n)]
    edges = []
    for i in range(n - 1):
        edges += [(u[i], u[i + 1]), (v[i], v[i + 1])]
        edges += [(u[i], v[i + 1]), (v[i], u[i + 1])]
    return Graph(2 * n, edges)


def lex_ladder_orientation(n: int) -> Orientation:
    """Both paths run from index n down to 1; cross edges run upward."""
    g = lex_ladder(n)
    u = [2 * i for i in range(n)]
    v = [2 * i + 1 for i in range(n)]
    arcs = set()
    for i in range(n - 1):
        arcs |= {(u[i + 1], u[i]), (v[i + 1], v[i])}
        arcs |= {(u[i], v[i + 1]), (v[i], u[i + 1])}
    return _orientation_from_arcs(g, arcs)


# ----------------------------------------------------------------------
# The minimally 2-connected family with ratio tending to 9/16.
# ----------------------------------------------------------------------

def min2conn_h(n_param: int) -> Graph:
    """Order 4n+1: path v_1..v_2n (vertices 0..2n-1) with each edge
    subdivided through w_i (vertex 2n+i), end caps w_0 and w_2n, and the
    skip edges v_i v_{i+2}."""
    _require(n_param >= 1, f"min2conn_h needs n >= 1, got {n_param}")
    n2 = 2 * n_param
    v = list(range(n2))
    w = [n2 + j for j in range(n2 + 1)]
    edges = []
    for i in range(1, n2):  # v_i w_i v_{i+1}
        edges += [(v[i - 1], w[i]), (w[i], v[i])]
    edges += [(w[0], v[0]), (w[0], v[1])]
    edges += [(w[n2], v[n2 - 2]), (w[n2], v[n2 - 1])]
    edges += [(v[i - 1], v[i + 1]) for i in range(1, n2 - 1)]
    return Graph(4 * n_param + 1, edges)


def min2conn_h_orientation(n_param: int) -> Orientation:
    """Subdivided path forward, end caps backward, skip chains downward."""
    g = min2conn_h(n_param)
    n2 = 2 * n_param
    v = list(range(n2))
    w = [n2 + j for j in range(n2 + 1)]
    arcs = set()
    for i in range(1, n2):
        arcs |= {(v[i - 1], w[i]), (w[i], v[i])}
    arcs |= {(v[1], w[0]), (w[0], v[0])}
    arcs |= {(v[n2 - 1], w[n2]), (w[n2], v[n2 - 2])}
    for i in range(1, n2 - 1):  # both parity chains: v_{i+2} -> v_i
        arcs.add((v[i + 1], v[i - 1]))
    return _orientation_from_arcs(g, arcs)


# ----------------------------------------------------------------------
# The path square ("snake"), the asymptotically extremal MOP.
# ----------------------------------------------------------------------

def snake(n_param: int) -> Graph:
    """Square of the path of order 2n: vertices 0..2n-1 in path order."""
    _require(n_param >= 2, f"snake needs n >= 2, got {n_param}")
    n2 = 2 * n_param
    edges = [(i, i + 1) for i in range(n2 - 1)]
    edges += [(i, i + 2) for i in range(n2 - 2)]
    return Graph(n2, edges)


def snake_orientation(n_param: int) -> Orientation:
    """Path forward, both chord chains backward."""
    g = snake(n_param)
    n2 = 2 * n_param
    arcs = {(i, i + 1) for i in range(n2 - 1)}
    arcs |= {(i + 2, i) for i in range(n2 - 2)}
    return _orientation_from_arcs(g, arcs)


# ----------------------------------------------------------------------
# Every triangulation of a labeled convex polygon.
# ----------------------------------------------------------------------

def _polygon_triangulations(i: int, j: int):
    """Diagonal sets triangulating the convex sub-polygon i..j."""
    if j - i < 2:
        yield []
        return
    for k in range(i + 1, j):
        extra = []
        if k - i >= 2:
            extra.append((i, k))
        if j - k >= 2:
            extra.append((k, j))
        for left in _polygon_triangulations(i, k):
            for right in _polygon_triangulations(k, j):
                yield left + right + extra


def enumerate_mops(n: int, canonical: bool = False):
    """Yield every triangulation of the labeled convex n-gon 0..n-1.

    Catalan(n-2) graphs; isomorphic duplicates are not removed by default,
    which leaves min/max aggregation unaffected.  With ``canonical`` (n <= 9)
    one representative per isomorphism class is yielded instead.
    """
    _require(3 <= n <= 12, f"enumerate_mops supports 3 <= n <= 12, got {n}")
    if canonical:
        _require(n <= 9, f"canonical dedup supported for n <= 9, got {n}")
    boundary = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    seen: list[Graph] = []
    for diags in _polygon_triangulations(0, n - 1):
        g = Graph(n, boundary + diags)
        if canonical:
            from .iso import is_isomorphic

            if any(is_isomorphic(g, h) for h in seen):
                continue
            seen.append(g)
        yield g


# ----------------------------------------------------------------------
# Trigon / lozenge gadget recursion (the conjectured-extremal MOP family).
#
# A trigon is a red triangle; a lozenge is a K_4 - e whose perfect matching
# is red.  Red outer edges are tracked as ordered pairs (heavy, light): a
# lozenge glued on (x, y) hangs p adjacent to both and q adjacent to p and
# x, so the heavy endpoint x gains two neighbours and the light one gains
# one.  The degree-5 balance of the construction dictates which endpoint is
# heavy at each gluing.
# ----------------------------------------------------------------------

class _MopBuilder:
    def __init__(self, n: int, edges: list[tuple[int, int]]):
        self.n = n
        self.edges = edges

    def new_vertex(self) -> int:
        v = self.n
        self.n += 1
        return v

    def add_edge(self, a: int, b: int) -> None:
        self.edges.append((min(a, b), max(a, b)))

    def glue_lozenge(self, heavy: int, light: int) -> tuple[int, int]:
        """Returns the far red edge as (next heavy, next light)."""
        p = self.new_vertex()
        q = self.new_vertex()
        self.add_edge(p, heavy)
        self.add_edge(p, light)
        self.add_edge(q, heavy)
        self.add_edge(p, q)
        return p, q

    def glue_trigon_round(self, heavy: int, light: int) -> list[tuple[int, int]]:
        c = self.new_vertex()
        self.add_edge(c, heavy)
        self.add_edge(c, light)
        red_a = self.glue_lozenge(c, heavy)  # old heavy ends up light here
        red_b = self.glue_lozenge(light, c)
        return [red_a, red_b]


def _build_trigon_lozenge(i: int) -> tuple[_MopBuilder, list[tuple[int, int]]]:
    _require(i >= 0, f"trigon_lozenge_g needs i >= 0, got {i}")
    b = _MopBuilder(3, [(0, 1), (1, 2), (0, 2)])
    red = []
    for heavy, light in ((0, 1), (1, 2), (2, 0)):
        red.append(b.glue_lozenge(heavy, light))
    for _ in range(i):
        red = [e for hl in red for e in b.glue_trigon_round(*hl)]
    return b, red


def trigon_lozenge_g(i: int) -> Graph:
    """The i-th graph of the gadget recursion (order 9 at i = 0)."""
    b, _ = _build_trigon_lozenge(i)
    return Graph(b.n, b.edges)


def mop_doubling_m(f: Graph) -> Graph:
    """Double a MOP by hanging a fresh vertex on every outer edge; exactly
    half of the result's vertices have degree 2."""
    outer, _ = chord_partition(f)
    b = _MopBuilder(f.n, list(f.edges))
    for a, c in outer:
        w = b.new_vertex()
        b.add_edge(a, w)
        b.add_edge(c, w)
    return Graph(b.n, b.edges)


def trigon_lozenge_h(i: int, f: Graph) -> Graph:
    """Glue a copy of mop_doubling_m(f) onto every red outer edge of G_i."""
    m = mop_doubling_m(f)
    outer_m, _ = chord_partition(m)
    red_m = min(outer_m)  # deterministic red edge of the doubled MOP
    b, red = _build_trigon_lozenge(i)
    for heavy, light in red:
        mapping = {red_m[0]: heavy, red_m[1]: light}
        for v in range(m.n):
            if v not in mapping:
                mapping[v] = b.new_vertex()
        for a, c in m.edges:
            if (a, c) == red_m:
                continue  # identified with the red outer edge
            b.add_edge(mapping[a], mapping[c])
    return Graph(b.n, b.edges)


# ----------------------------------------------------------------------
# 2-trees.
# ----------------------------------------------------------------------

def two_tree_random(n: int, seed: int) -> Graph:
    """Random 2-tree: start from a triangle, glue each new vertex onto a
    uniformly random existing edge (seeded)."""
    _require(n >= 3, f"two_tree_random needs n >= 3, got {n}")
    rng = random.Random(seed)
    edges = [(0, 1), (0, 2), (1, 2)]
    for v in range(3, n):
        a, b = edges[rng.randrange(len(edges))]
        edges += [(a, v), (b, v)]
    return Graph(n, edges)


def two_tree_strong_orientation(g: Graph) -> Orientation:
    """Inductive strong orientation: each glued vertex closes a directed
    3-cycle with its support edge, giving K(D) >= n^2 - 3."""
    _require(g.n >= 3, f"two_tree_strong_orientation needs n >= 3, got {g.n}")
    trace = two_tree_trace(g)
    if trace is None:
        raise ValueError("not a 2-tree")
    (a, b), additions = trace
    arcs = {(a, b)}
    for v, x, y in additions:
        if (x, y) in arcs:
            arcs |= {(y, v), (v, x)}
        elif (y, x) in arcs:
            arcs |= {(x, v), (v, y)}
        else:
            raise AssertionError("support edge missing from partial orientation")
    return _orientation_from_arcs(g, arcs)
