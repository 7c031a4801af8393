"""Brute-force graph isomorphism for desk-scale instances.

Backtracking over degree/neighbourhood-signature classes; intended for the
small orders (n <= ~12) where uniqueness-up-to-isomorphism claims are
checked.
"""

from __future__ import annotations

from .core import Graph

__all__ = ["is_isomorphic"]


def _signatures(g: Graph) -> list[tuple]:
    deg = [g.degree(v) for v in range(g.n)]
    return [
        (deg[v], tuple(sorted(deg[w] for w in g.adjacency[v])))
        for v in range(g.n)
    ]


def _bfs_order(g: Graph) -> list[int]:
    # Mapping connected chunks first makes the consistency check prune early.
    seen = [False] * g.n
    order = []
    verts = sorted(range(g.n), key=lambda v: -g.degree(v))
    for root in verts:
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    sig_g, sig_h = _signatures(g), _signatures(h)
    if sorted(sig_g) != sorted(sig_h):
        return False
    n = g.n
    order = _bfs_order(g)
    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or sig_h[w] != sig_g[v]:
                continue
            ok = True
            for x in order[:i]:
                if g.has_edge(v, x) != h.has_edge(w, mapping[x]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return extend(0)
