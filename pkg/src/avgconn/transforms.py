"""Graph transforms, orientation lift/projection, and structural recognizers.

The maximal-outerplanar recognizer works by combinatorial reduction: peel
degree-2 vertices with adjacent neighbours down to a triangle, then replay
the peeling in reverse while maintaining the outer boundary cycle.  A
re-insertion whose support edge is not currently on the boundary disproves
outerplanarity (this is what separates maximal outerplanar graphs from
general 2-trees).  The replay also recovers the boundary and the inner
faces, which the weak dual and chord machinery reuse.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, Orientation, is_2_connected

__all__ = [
    "InflationResult",
    "SubdivisionResult",
    "inflation",
    "subdivision",
    "lift_orientation",
    "project_orientation",
    "weak_dual",
    "chord_partition",
    "chord_cycle_sets",
    "is_minimally_2_connected",
    "is_maximal_outerplanar",
    "is_2_tree",
    "mop_structure",
    "two_tree_trace",
]


@dataclass(frozen=True)
class InflationResult:
    """Inflation of a cubic graph with its vertex-to-corner correspondence.

    Vertex v of the base becomes the triangle on corners 3v, 3v+1, 3v+2;
    corner(v, x) is the corner of v's triangle that attaches toward
    neighbour x (neighbours taken in ascending order).
    """

    graph: Graph
    base: Graph
    corner: dict[tuple[int, int], int]

    def corner_map_json(self) -> list[list[int]]:
        return [[v, x, c] for (v, x), c in sorted(self.corner.items())]


@dataclass(frozen=True)
class SubdivisionResult:
    """Subdivision with the map from base edge index to its new mid-vertex."""

    graph: Graph
    base: Graph
    edge_vertex: dict[int, int]

    def edge_map_json(self) -> list[list[int]]:
        return [[i, w] for i, w in sorted(self.edge_vertex.items())]


def inflation(g: Graph) -> InflationResult:
    """Replace every vertex of a cubic graph by a triangle (wye-delta)."""
    if any(g.degree(v) != 3 for v in range(g.n)):
        bad = next(v for v in range(g.n) if g.degree(v) != 3)
        raise ValueError(
            f"inflation needs a cubic graph; vertex {bad} has degree {g.degree(bad)}"
        )
    corner: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, int]] = []
    for v in range(g.n):
        for k, x in enumerate(g.adjacency[v]):
            corner[(v, x)] = 3 * v + k
        edges += [(3 * v, 3 * v + 1), (3 * v, 3 * v + 2), (3 * v + 1, 3 * v + 2)]
    for a, b in g.edges:
        ca, cb = corner[(a, b)], corner[(b, a)]
        edges.append((min(ca, cb), max(ca, cb)))
    return InflationResult(graph=Graph(3 * g.n, edges), base=g, corner=corner)


def subdivision(g: Graph) -> SubdivisionResult:
    """Replace every edge by a path of length 2 through a fresh vertex."""
    edges = []
    edge_vertex = {}
    for i, (a, b) in enumerate(g.edges):
        w = g.n + i
        edge_vertex[i] = w
        edges += [(a, w), (b, w)]
    return SubdivisionResult(graph=Graph(g.n + g.m, edges), base=g, edge_vertex=edge_vertex)


def lift_orientation(d: Orientation, inf: InflationResult | None = None) -> Orientation:
    """Lift an orientation of a cubic graph to its inflation.

    Connecting edges copy the base arcs; every triangle becomes a directed
    3-cycle following ascending corner order (either cyclic sense gives the
    same counts, so one is fixed for determinism).
    """
    g = d.graph
    if inf is None:
        inf = inflation(g)
    elif inf.base != g:
        raise ValueError("inflation was built from a different base graph")
    arcs = set()
    for v in range(g.n):
        c = (3 * v, 3 * v + 1, 3 * v + 2)
        arcs |= {(c[0], c[1]), (c[1], c[2]), (c[2], c[0])}
    for (a, b), bit in zip(g.edges, d.bits):
        u, w = (b, a) if bit else (a, b)
        arcs.add((inf.corner[(u, w)], inf.corner[(w, u)]))
    bits = [
        0 if (a, b) in arcs else 1 for a, b in inf.graph.edges
    ]
    return Orientation(inf.graph, bits)


def project_orientation(f: Orientation, inf: InflationResult) -> Orientation:
    """Project an orientation of the inflation back onto the base graph."""
    if f.graph != inf.graph:
        raise ValueError("orientation does not orient this inflation")
    arcs = set(f.arcs())
    bits = []
    for a, b in inf.base.edges:
        ca, cb = inf.corner[(a, b)], inf.corner[(b, a)]
        bits.append(0 if (ca, cb) in arcs else 1)
    return Orientation(inf.base, bits)


# ----------------------------------------------------------------------
# Maximal outerplanar structure.
# ----------------------------------------------------------------------

def mop_structure(g: Graph):
    """Boundary cycle and inner faces of a MOP, or None if g is not one.

    Returns (boundary, faces): boundary is the outer cycle as a vertex list,
    faces the n - 2 triangles (base triangle first, then in re-insertion
    order).
    """
    n = g.n
    if n < 3 or g.m != 2 * n - 3:
        return None
    adj = [set(a) for a in g.adjacency]
    alive = n
    trace: list[tuple[int, int, int]] = []
    removed = [False] * n
    while alive > 3:
        pick = -1
        for v in range(n):
            if not removed[v] and len(adj[v]) == 2:
                x, y = sorted(adj[v])
                if y in adj[x]:
                    pick = v
                    break
        if pick < 0:
            return None
        x, y = sorted(adj[pick])
        trace.append((pick, x, y))
        adj[x].discard(pick)
        adj[y].discard(pick)
        adj[pick].clear()
        removed[pick] = True
        alive -= 1
    tri = [v for v in range(n) if not removed[v]]
    a, b, c = tri
    if not (b in adj[a] and c in adj[a] and c in adj[b]):
        return None
    boundary = [a, b, c]
    faces = [(a, b, c)]
    for v, x, y in reversed(trace):
        placed = False
        for idx in range(len(boundary)):
            p, q = boundary[idx], boundary[(idx + 1) % len(boundary)]
            if (p == x and q == y) or (p == y and q == x):
                boundary.insert(idx + 1, v)
                placed = True
                break
        if not placed:
            return None
        faces.append((v, x, y))
    return boundary, faces


def is_maximal_outerplanar(g: Graph) -> bool:
    return mop_structure(g) is not None


def weak_dual(g: Graph) -> tuple[Graph, list[tuple[int, int, int]]]:
    """Adjacency tree of the inner faces of a MOP, plus the face list."""
    s = mop_structure(g)
    if s is None:
        raise ValueError("weak dual needs a maximal outerplanar graph")
    _, faces = s
    edge_faces: dict[tuple[int, int], list[int]] = {}
    for fi, (a, b, c) in enumerate(faces):
        for e in ((a, b), (a, c), (b, c)):
            edge_faces.setdefault((min(e), max(e)), []).append(fi)
    dual_edges = [
        (min(fs), max(fs)) for fs in edge_faces.values() if len(fs) == 2
    ]
    return Graph(len(faces), dual_edges), faces


def chord_partition(g: Graph) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """(outer edges, chords) of a MOP; outer edges form the boundary cycle."""
    s = mop_structure(g)
    if s is None:
        raise ValueError("chord partition needs a maximal outerplanar graph")
    boundary, _ = s
    k = len(boundary)
    outer = {
        (min(boundary[i], boundary[(i + 1) % k]), max(boundary[i], boundary[(i + 1) % k]))
        for i in range(k)
    }
    outer_edges = [e for e in g.edges if e in outer]
    chords = [e for e in g.edges if e not in outer]
    return outer_edges, chords


def chord_cycle_sets(g: Graph) -> tuple[set[int], set[int]]:
    """(vertices lying on an all-chord 4-cycle, vertices of degree 2)."""
    _, chords = chord_partition(g)
    nbr: dict[int, set[int]] = {}
    for a, b in chords:
        nbr.setdefault(a, set()).add(b)
        nbr.setdefault(b, set()).add(a)
    verts = sorted(nbr)
    a_set: set[int] = set()
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            common = sorted(nbr[u] & nbr[v])
            for j, p in enumerate(common):
                for q in common[j + 1:]:
                    a_set |= {u, v, p, q}
    b2 = {v for v in range(g.n) if g.degree(v) == 2}
    return a_set, b2


def is_minimally_2_connected(g: Graph) -> bool:
    """2-connected and every edge deletion breaks 2-connectivity."""
    if not is_2_connected(g):
        return False
    return all(not is_2_connected(g.without_edge(a, b)) for a, b in g.edges)


def two_tree_trace(g: Graph):
    """Construction order of a 2-tree, or None.

    Returns (base_edge, additions) where additions list (v, x, y) in the
    order the vertices can be glued back onto edge (x, y).
    """
    n = g.n
    if n < 2 or g.m != 2 * n - 3:
        return None
    adj = [set(a) for a in g.adjacency]
    removed = [False] * n
    alive = n
    removals: list[tuple[int, int, int]] = []
    while alive > 2:
        pick = -1
        for v in range(n):
            if not removed[v] and len(adj[v]) == 2:
                x, y = sorted(adj[v])
                if y in adj[x]:
                    pick = v
                    break
        if pick < 0:
            return None
        x, y = sorted(adj[pick])
        removals.append((pick, x, y))
        adj[x].discard(pick)
        adj[y].discard(pick)
        adj[pick].clear()
        removed[pick] = True
        alive -= 1
    rest = [v for v in range(n) if not removed[v]]
    a, b = rest
    if b not in adj[a]:
        return None
    return (a, b), list(reversed(removals))


def is_2_tree(g: Graph) -> bool:
    return two_tree_trace(g) is not None
