"""Independent brute-force oracles, kept deliberately flow-free.

The Menger oracle enumerates every simple path between the endpoints and
then maximizes an internally-disjoint packing by exhaustive backtracking
over internal-vertex sets.  The edge oracle takes the dual route instead:
the smallest edge set whose removal separates the endpoints, found by
exhausting subsets in increasing size.  Neither shares code with the
max-flow kernels, so agreement is a meaningful check.
"""

from __future__ import annotations

from itertools import combinations

from .core import Digraph, Graph

__all__ = [
    "brute_force_kappa",
    "brute_force_kappa_digraph",
    "brute_force_lambda",
    "brute_force_lambda_digraph",
]


def _internal_masks(n: int, out_adj, u: int, v: int) -> list[int]:
    """Bitmasks of internal-vertex sets realizable by a simple u->v path.

    Two paths with the same internal set are interchangeable in any packing,
    so the set suffices.
    """
    masks: set[int] = set()

    def walk(x: int, mask: int) -> None:
        for y in out_adj[x]:
            if y == v:
                masks.add(mask)
            elif y != u and not (mask >> y) & 1:
                walk(y, mask | (1 << y))

    walk(u, 0)
    return sorted(masks, key=lambda m: (bin(m).count("1"), m))


def _max_packing(masks: list[int]) -> int:
    best = 0
    k = len(masks)

    def pack(i: int, used: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if count + (k - i) <= best:
            return
        for j in range(i, k):
            if masks[j] & used == 0:
                pack(j + 1, used | masks[j], count + 1)

    pack(0, 0, 0)
    return best


def brute_force_kappa(g: Graph, u: int, v: int) -> int:
    if u == v:
        raise ValueError("kappa undefined for u == v")
    return _max_packing(_internal_masks(g.n, g.adjacency, u, v))


def brute_force_kappa_digraph(d: Digraph, u: int, v: int) -> int:
    if u == v:
        raise ValueError("kappa undefined for u == v")
    return _max_packing(_internal_masks(d.n, d.out_adj, u, v))


def _reaches(n: int, arcs, u: int, v: int) -> bool:
    out = [[] for _ in range(n)]
    for a, b in arcs:
        out[a].append(b)
    seen = [False] * n
    seen[u] = True
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            return True
        for y in out[x]:
            if not seen[y]:
                seen[y] = True
                stack.append(y)
    return False


def _min_edge_cut(n: int, arcs: list[tuple[int, int]], undirected: bool, u: int, v: int) -> int:
    """Smallest number of edges whose removal leaves no u -> v path."""
    if u == v:
        raise ValueError("lambda undefined for u == v")
    edges = sorted(set(arcs))
    full = edges + [(b, a) for a, b in edges] if undirected else edges

    def separated(removed: frozenset) -> bool:
        if undirected:
            kept = [e for e in full if (min(e), max(e)) not in removed]
        else:
            kept = [e for e in full if e not in removed]
        return not _reaches(n, kept, u, v)

    for k in range(len(edges) + 1):
        for subset in combinations(edges, k):
            if separated(frozenset(subset)):
                return k
    return len(edges)


def brute_force_lambda(g: Graph, u: int, v: int) -> int:
    """Edge version of Menger by minimum-cut exhaustion (undirected)."""
    return _min_edge_cut(g.n, list(g.edges), True, u, v)


def brute_force_lambda_digraph(d: Digraph, u: int, v: int) -> int:
    return _min_edge_cut(d.n, list(d.arcs), False, u, v)
