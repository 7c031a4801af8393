"""Exact pairwise and average connectivity for graphs and digraphs.

All averages are exact fractions; the distinction between the vertex version
(kappa, internally disjoint paths) and the edge version (lambda, edge
disjoint paths) runs through the whole module.  Graph averages are over
unordered pairs, digraph averages over ordered pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _flow
from .core import Digraph, Graph, Orientation, fraction_json, to_digraph

__all__ = [
    "ConnectivityReport",
    "PotentialReport",
    "kappa_pair",
    "kappa_pair_digraph",
    "theta",
    "lambda_pair",
    "lambda_pair_digraph",
    "kappa_matrix_graph",
    "kappa_matrix_digraph",
    "report_graph",
    "report_digraph",
    "total_connectivity",
    "potential_graph",
    "potential_digraph",
    "is_full_pair",
    "count_full_pairs",
    "is_saturated",
    "is_strong",
    "has_source_to_sink_arc",
]


def _graph_arc_arrays(g: Graph):
    """Each undirected edge becomes two antiparallel arcs."""
    au = np.empty(2 * g.m, np.int32)
    av = np.empty(2 * g.m, np.int32)
    for i, (a, b) in enumerate(g.edges):
        au[2 * i], av[2 * i] = a, b
        au[2 * i + 1], av[2 * i + 1] = b, a
    return au, av


def _digraph_arc_arrays(d: Digraph):
    au = np.empty(d.m, np.int32)
    av = np.empty(d.m, np.int32)
    for i, (u, v) in enumerate(d.arcs):
        au[i], av[i] = u, v
    return au, av


def edge_arrays(g: Graph):
    """Edge endpoint arrays in edge-index order (shared with the search)."""
    eu = np.empty(g.m, np.int32)
    ev = np.empty(g.m, np.int32)
    for i, (a, b) in enumerate(g.edges):
        eu[i], ev[i] = a, b
    return eu, ev


def _check_pair(n: int, u: int, v: int) -> None:
    if u == v:
        raise ValueError(f"connectivity undefined for u == v == {u}")
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"vertex pair ({u}, {v}) out of range 0..{n - 1}")


def kappa_pair(g: Graph, u: int, v: int) -> int:
    """Maximum number of internally disjoint u--v paths; 0 when separated."""
    _check_pair(g.n, u, v)
    au, av = _graph_arc_arrays(g)
    return int(_flow.kappa_pair_arcs(g.n, au, av, u, v))


def kappa_pair_digraph(d: Digraph, u: int, v: int) -> int:
    _check_pair(d.n, u, v)
    au, av = _digraph_arc_arrays(d)
    return int(_flow.kappa_pair_arcs(d.n, au, av, u, v))


def theta(d: Digraph, u: int, v: int) -> int:
    """kappa(u, v) + kappa(v, u)."""
    _check_pair(d.n, u, v)
    au, av = _digraph_arc_arrays(d)
    return int(_flow.kappa_pair_arcs(d.n, au, av, u, v)) + int(
        _flow.kappa_pair_arcs(d.n, au, av, v, u)
    )


def lambda_pair(g: Graph, u: int, v: int) -> int:
    """Maximum number of edge-disjoint u--v paths."""
    _check_pair(g.n, u, v)
    au, av = _graph_arc_arrays(g)
    return int(_flow.lambda_pair_arcs(g.n, au, av, u, v))


def lambda_pair_digraph(d: Digraph, u: int, v: int) -> int:
    _check_pair(d.n, u, v)
    au, av = _digraph_arc_arrays(d)
    return int(_flow.lambda_pair_arcs(d.n, au, av, u, v))


def kappa_matrix_graph(g: Graph) -> np.ndarray:
    au, av = _graph_arc_arrays(g)
    return np.asarray(_flow.kappa_matrix(g.n, au, av))


def kappa_matrix_digraph(d: Digraph) -> np.ndarray:
    au, av = _digraph_arc_arrays(d)
    return np.asarray(_flow.kappa_matrix(d.n, au, av))


def lambda_matrix_graph(g: Graph) -> np.ndarray:
    au, av = _graph_arc_arrays(g)
    return np.asarray(_flow.lambda_matrix(g.n, au, av))


def lambda_matrix_digraph(d: Digraph) -> np.ndarray:
    au, av = _digraph_arc_arrays(d)
    return np.asarray(_flow.lambda_matrix(d.n, au, av))


@dataclass(frozen=True)
class ConnectivityReport:
    """All-pairs connectivity table with its exact average."""

    n: int
    pairs: tuple[tuple[int, int, int], ...]
    total: int
    average: Fraction
    directed: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "pairs": [[u, v, k] for u, v, k in self.pairs],
            "total": self.total,
            "average": fraction_json(self.average),
        }


@dataclass(frozen=True)
class PotentialReport:
    """Degree-based upper bound on total connectivity, with per-pair caps."""

    n: int
    value: int
    per_pair_caps: tuple[tuple[int, int, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "value": self.value,
            "per_pair_caps": [[u, v, c] for u, v, c in self.per_pair_caps],
        }


def report_graph(g: Graph, objective: str = "vertex") -> ConnectivityReport:
    if g.n < 2:
        raise ValueError(f"average connectivity needs n >= 2, got n={g.n}")
    mat = kappa_matrix_graph(g) if objective == "vertex" else lambda_matrix_graph(g)
    pairs = tuple(
        (u, v, int(mat[u, v])) for u in range(g.n) for v in range(u + 1, g.n)
    )
    total = sum(k for _, _, k in pairs)
    return ConnectivityReport(
        n=g.n,
        pairs=pairs,
        total=total,
        average=Fraction(total, g.n * (g.n - 1) // 2),
        directed=False,
    )


def report_digraph(d: Digraph, objective: str = "vertex") -> ConnectivityReport:
    if d.n < 2:
        raise ValueError(f"average connectivity needs n >= 2, got n={d.n}")
    mat = kappa_matrix_digraph(d) if objective == "vertex" else lambda_matrix_digraph(d)
    pairs = tuple(
        (u, v, int(mat[u, v])) for u in range(d.n) for v in range(d.n) if u != v
    )
    total = sum(k for _, _, k in pairs)
    return ConnectivityReport(
        n=d.n,
        pairs=pairs,
        total=total,
        average=Fraction(total, d.n * (d.n - 1)),
        directed=True,
    )


def total_connectivity(x: Graph | Digraph | Orientation, objective: str = "vertex") -> int:
    """Total connectivity K; the fast path for orientations avoids tables."""
    if isinstance(x, Orientation):
        eu, ev = edge_arrays(x.graph)
        return int(
            _flow.orientation_total(
                x.graph.n, eu, ev, np.int64(x.bits_int()), objective == "vertex"
            )
        )
    if isinstance(x, Digraph):
        mat = kappa_matrix_digraph(x) if objective == "vertex" else lambda_matrix_digraph(x)
        return int(mat.sum())
    mat = kappa_matrix_graph(x) if objective == "vertex" else lambda_matrix_graph(x)
    return int(mat.sum()) // 2


def potential_graph(g: Graph) -> PotentialReport:
    if g.n < 2:
        raise ValueError(f"potential needs n >= 2, got n={g.n}")
    deg = [g.degree(v) for v in range(g.n)]
    caps = tuple(
        (u, v, min(deg[u], deg[v]))
        for u in range(g.n)
        for v in range(u + 1, g.n)
    )
    return PotentialReport(n=g.n, value=sum(c for _, _, c in caps), per_pair_caps=caps)


def potential_digraph(d: Digraph) -> PotentialReport:
    if d.n < 2:
        raise ValueError(f"potential needs n >= 2, got n={d.n}")
    od = [len(d.out_adj[v]) for v in range(d.n)]
    idg = [len(d.in_adj[v]) for v in range(d.n)]
    caps = tuple(
        (u, v, min(od[u], idg[v]) + min(od[v], idg[u]))
        for u in range(d.n)
        for v in range(u + 1, d.n)
    )
    return PotentialReport(n=d.n, value=sum(c for _, _, c in caps), per_pair_caps=caps)


def is_full_pair(o: Orientation, u: int, v: int) -> bool:
    """Full: theta equals the smaller base-graph degree of the pair."""
    g = o.graph
    _check_pair(g.n, u, v)
    return theta(to_digraph(o), u, v) == min(g.degree(u), g.degree(v))


def count_full_pairs(o: Orientation) -> int:
    g = o.graph
    mat = kappa_matrix_digraph(to_digraph(o))
    return sum(
        1
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if mat[u, v] + mat[v, u] == min(g.degree(u), g.degree(v))
    )


def is_saturated(o: Orientation) -> bool:
    """Every pair full, i.e. K(D) = P(G)."""
    return total_connectivity(o) == potential_graph(o.graph).value


def is_strong(d: Digraph) -> bool:
    """Strongly connected: every vertex reaches and is reached by vertex 0."""
    if d.n < 1:
        raise ValueError("strongness needs n >= 1")
    if d.n == 1:
        return True
    for adj in (d.out_adj, d.in_adj):
        seen = [False] * d.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        if count != d.n:
            return False
    return True


def has_source_to_sink_arc(d: Digraph) -> bool:
    """True when some arc (u, v) has u of in-degree 0 and v of out-degree 0."""
    return any(
        len(d.in_adj[u]) == 0 and len(d.out_adj[v]) == 0 for u, v in d.arcs
    )
