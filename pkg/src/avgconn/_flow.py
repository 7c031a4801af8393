"""Unit-capacity max-flow kernels behind every connectivity computation.

Menger values are computed as max flow on the vertex-split network: vertex w
becomes w_in -> w_out with capacity 1 (nodes w and n + w), and an arc (a, b)
becomes a_out -> b_in with capacity 1.  Flow from u_out to v_in then counts
internally disjoint directed u--v paths; a direct arc contributes exactly 1.
Edge-connectivity values use the same machinery without the splitting.

Residual arcs are stored in pairs: slot 2k is the forward arc of pair k and
slot 2k + 1 its reverse, so ``slot ^ 1`` is always the partner.  Everything
operates on flat numpy arrays so the hot loops JIT-compile under numba; the
same code runs un-jitted (slowly) when numba is absent.

Orientation bit vectors appear here in two integer forms: ``mask`` has edge
i at bit i, while rank ``r`` has edge i at bit (m - 1 - i).  Ascending r
enumerates bit vectors in lexicographic order, which is what witness
tie-breaking needs.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba present in the supported env
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


@njit(cache=True, nogil=True)
def _maxflow(first, nxt, to, cap, s, t, q, pred, seen, stamp):
    """Augment unit flow s -> t until exhaustion; returns (flow, new stamp)."""
    flow = 0
    while True:
        stamp += 1
        head = 0
        tail = 0
        q[tail] = s
        tail += 1
        seen[s] = stamp
        found = False
        while head < tail and not found:
            u = q[head]
            head += 1
            a = first[u]
            while a != -1:
                if cap[a] > 0:
                    w = to[a]
                    if seen[w] != stamp:
                        seen[w] = stamp
                        pred[w] = a
                        if w == t:
                            found = True
                            break
                        q[tail] = w
                        tail += 1
                a = nxt[a]
        if not found:
            return flow, stamp
        w = t
        while w != s:
            a = pred[w]
            cap[a] -= 1
            cap[a ^ 1] += 1
            w = to[a ^ 1]
        flow += 1


@njit(cache=True, nogil=True)
def _build_adj(num_nodes, pf, pt):
    npairs = pf.shape[0]
    first = np.full(num_nodes, -1, np.int32)
    nxt = np.empty(2 * npairs, np.int32)
    to = np.empty(2 * npairs, np.int32)
    for k in range(npairs):
        a = 2 * k
        to[a] = pt[k]
        nxt[a] = first[pf[k]]
        first[pf[k]] = a
        a = 2 * k + 1
        to[a] = pf[k]
        nxt[a] = first[pt[k]]
        first[pt[k]] = a
    return first, nxt, to


@njit(cache=True, nogil=True)
def _split_pairs(n, au, av):
    """Arc-pair endpoints of the vertex-split network for explicit arcs."""
    m = au.shape[0]
    pf = np.empty(n + m, np.int32)
    pt = np.empty(n + m, np.int32)
    for w in range(n):
        pf[w] = w
        pt[w] = n + w
    for i in range(m):
        pf[n + i] = n + au[i]
        pt[n + i] = av[i]
    return pf, pt


@njit(cache=True, nogil=True)
def kappa_matrix(n, au, av):
    """kappa(u, v) for all ordered pairs of the digraph with arcs (au, av)."""
    m = au.shape[0]
    pf, pt = _split_pairs(n, au, av)
    first, nxt, to = _build_adj(2 * n, pf, pt)
    npairs = n + m
    cap = np.zeros(2 * npairs, np.uint8)
    q = np.empty(2 * n, np.int32)
    pred = np.empty(2 * n, np.int32)
    seen = np.zeros(2 * n, np.int64)
    stamp = 0
    out = np.zeros((n, n), np.int32)
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            for k in range(npairs):
                cap[2 * k] = 1
                cap[2 * k + 1] = 0
            f, stamp = _maxflow(first, nxt, to, cap, n + u, v, q, pred, seen, stamp)
            out[u, v] = f
    return out


@njit(cache=True, nogil=True)
def kappa_pair_arcs(n, au, av, u, v):
    """kappa(u, v) for a single ordered pair of the digraph (au, av)."""
    m = au.shape[0]
    pf, pt = _split_pairs(n, au, av)
    first, nxt, to = _build_adj(2 * n, pf, pt)
    cap = np.empty(2 * (n + m), np.uint8)
    for k in range(n + m):
        cap[2 * k] = 1
        cap[2 * k + 1] = 0
    q = np.empty(2 * n, np.int32)
    pred = np.empty(2 * n, np.int32)
    seen = np.zeros(2 * n, np.int64)
    f, _ = _maxflow(first, nxt, to, cap, n + u, v, q, pred, seen, 0)
    return f


@njit(cache=True, nogil=True)
def lambda_pair_arcs(n, au, av, u, v):
    """lambda(u, v) for a single ordered pair (no vertex splitting)."""
    m = au.shape[0]
    first, nxt, to = _build_adj(n, au, av)
    cap = np.empty(2 * m, np.uint8)
    for k in range(m):
        cap[2 * k] = 1
        cap[2 * k + 1] = 0
    q = np.empty(n, np.int32)
    pred = np.empty(n, np.int32)
    seen = np.zeros(n, np.int64)
    f, _ = _maxflow(first, nxt, to, cap, u, v, q, pred, seen, 0)
    return f


@njit(cache=True, nogil=True)
def lambda_matrix(n, au, av):
    """lambda(u, v) for all ordered pairs (edge version: no vertex splitting)."""
    m = au.shape[0]
    first, nxt, to = _build_adj(n, au, av)
    cap = np.zeros(2 * m, np.uint8)
    q = np.empty(n, np.int32)
    pred = np.empty(n, np.int32)
    seen = np.zeros(n, np.int64)
    stamp = 0
    out = np.zeros((n, n), np.int32)
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            for k in range(m):
                cap[2 * k] = 1
                cap[2 * k + 1] = 0
            f, stamp = _maxflow(first, nxt, to, cap, u, v, q, pred, seen, stamp)
            out[u, v] = f
    return out


@njit(cache=True, nogil=True)
def _orientation_network(n, eu, ev, split):
    """Static network holding both directions of every edge.

    Pair layout: [internal pairs if split] then pairs (base + 2i, base + 2i + 1)
    for edge i = (a, b): first a->b, then b->a.  Which of the two is active
    depends on the orientation and is set per evaluation.
    """
    m = eu.shape[0]
    base = n if split else 0
    npairs = base + 2 * m
    pf = np.empty(npairs, np.int32)
    pt = np.empty(npairs, np.int32)
    if split:
        for w in range(n):
            pf[w] = w
            pt[w] = n + w
        for i in range(m):
            pf[base + 2 * i] = n + eu[i]
            pt[base + 2 * i] = ev[i]
            pf[base + 2 * i + 1] = n + ev[i]
            pt[base + 2 * i + 1] = eu[i]
    else:
        for i in range(m):
            pf[base + 2 * i] = eu[i]
            pt[base + 2 * i] = ev[i]
            pf[base + 2 * i + 1] = ev[i]
            pt[base + 2 * i + 1] = eu[i]
    num_nodes = 2 * n if split else n
    first, nxt, to = _build_adj(num_nodes, pf, pt)
    return num_nodes, npairs, first, nxt, to


@njit(cache=True, nogil=True)
def _total_for_mask(n, m, split, mask, npairs, first, nxt, to, cap, q, pred, seen, stamp):
    base = n if split else 0
    total = 0
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            if split:
                for k in range(n):
                    cap[2 * k] = 1
                    cap[2 * k + 1] = 0
            for i in range(m):
                fwd = base + 2 * i
                if (mask >> i) & 1 == 0:
                    cap[2 * fwd] = 1
                    cap[2 * fwd + 2] = 0
                else:
                    cap[2 * fwd] = 0
                    cap[2 * fwd + 2] = 1
                cap[2 * fwd + 1] = 0
                cap[2 * fwd + 3] = 0
            s = n + u if split else u
            f, stamp = _maxflow(first, nxt, to, cap, s, v, q, pred, seen, stamp)
            total += f
    return total, stamp


@njit(cache=True, nogil=True)
def orientation_total(n, eu, ev, mask, split):
    """Total connectivity K(D) of the orientation encoded by mask bits."""
    m = eu.shape[0]
    num_nodes, npairs, first, nxt, to = _orientation_network(n, eu, ev, split)
    cap = np.zeros(2 * npairs, np.uint8)
    q = np.empty(num_nodes, np.int32)
    pred = np.empty(num_nodes, np.int32)
    seen = np.zeros(num_nodes, np.int64)
    total, _ = _total_for_mask(
        n, m, split, mask, npairs, first, nxt, to, cap, q, pred, seen, 0
    )
    return total


@njit(cache=True, nogil=True)
def scan_range(n, eu, ev, r_lo, r_hi, split):
    """Evaluate orientations with lexicographic ranks r in [r_lo, r_hi).

    Rank r encodes edge i at bit (m - 1 - i), so ascending r is ascending
    lexicographic order of bit vectors.  Returns (best total, smallest rank
    attaining it, number of ranks attaining it, evaluations).
    """
    m = eu.shape[0]
    num_nodes, npairs, first, nxt, to = _orientation_network(n, eu, ev, split)
    cap = np.zeros(2 * npairs, np.uint8)
    q = np.empty(num_nodes, np.int32)
    pred = np.empty(num_nodes, np.int32)
    seen = np.zeros(num_nodes, np.int64)
    stamp = 0
    best = np.int64(-1)
    best_r = np.int64(0)
    ties = np.int64(0)
    for r in range(r_lo, r_hi):
        mask = np.int64(0)
        for i in range(m):
            if (r >> (m - 1 - i)) & 1:
                mask |= np.int64(1) << i
        total, stamp = _total_for_mask(
            n, m, split, mask, npairs, first, nxt, to, cap, q, pred, seen, stamp
        )
        if total > best:
            best = total
            best_r = r
            ties = 1
        elif total == best:
            ties += 1
    return best, best_r, ties, np.int64(r_hi - r_lo)


@njit(cache=True, nogil=True)
def potential_bound(od_opt, id_opt, capmin):
    """Optimistic pair-potential sum for a partial orientation."""
    n = od_opt.shape[0]
    total = 0
    for u in range(n):
        for v in range(u + 1, n):
            p = min(od_opt[u], id_opt[v]) + min(od_opt[v], id_opt[u])
            c = capmin[u, v]
            total += p if p < c else c
    return total


def mask_to_rank(mask: int, m: int) -> int:
    r = 0
    for i in range(m):
        if (mask >> i) & 1:
            r |= 1 << (m - 1 - i)
    return r


def rank_to_mask(r: int, m: int) -> int:
    return mask_to_rank(r, m)  # the bit reversal is an involution


def warmup() -> None:
    """Force JIT compilation of the hot kernels on a toy instance."""
    eu = np.array([0, 0, 1], dtype=np.int32)
    ev = np.array([1, 2, 2], dtype=np.int32)
    kappa_matrix(3, eu, ev)
    lambda_matrix(3, eu, ev)
    kappa_pair_arcs(3, eu, ev, 0, 2)
    lambda_pair_arcs(3, eu, ev, 0, 2)
    orientation_total(3, eu, ev, 2, True)
    scan_range(3, eu, ev, 0, 4, True)
    potential_bound(
        np.array([1, 1, 1], dtype=np.int64),
        np.array([1, 1, 1], dtype=np.int64),
        np.full((3, 3), 2, dtype=np.int64),
    )
