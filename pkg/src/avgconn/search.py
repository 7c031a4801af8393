"""Search for orientations maximizing total (hence average) connectivity.

Three methods: exhaustive enumeration over half the orientation space (an
orientation and its reversal have the same total, so bit 0 is pinned to 0),
branch-and-bound with the degree-potential pruning bound, and seeded
first-improvement hill climbing for instances beyond certified reach.

The objective during search is always the integer total K(D); the average
is derived afterwards.  "vertex" sums kappa over ordered pairs, "edge" sums
lambda.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _flow
from .connectivity import edge_arrays, is_strong
from .core import (
    Graph,
    Orientation,
    bits_to_hex,
    fraction_json,
    is_2_edge_connected,
    is_connected,
    to_digraph,
    to_graph6,
)

__all__ = [
    "SearchResult",
    "SearchCapExceeded",
    "search_exhaustive",
    "search_branch_and_bound",
    "search_local",
    "strong_orientation",
    "check_optimality_necessary_conditions",
    "verify_witness",
]

EXHAUSTIVE_EDGE_CAP = 20
BNB_EDGE_CAP = 30


class SearchCapExceeded(RuntimeError):
    """Instance exceeds the configured edge cap for the chosen method."""


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an orientation search.

    ``optimum_count`` (exhaustive only) counts optimal orientations over the
    full orientation space, i.e. both members of every reversal pair.
    ``witness_strong`` records whether the witness is strongly connected;
    it gathers evidence on an open question and is never asserted.
    """

    method: str
    objective: str
    best_total: int
    best_average: Fraction
    witness: Orientation
    optimum_count: int | None
    nodes_explored: int
    certified: bool
    witness_strong: bool

    def to_json_dict(self) -> dict:
        return {
            "method": self.method,
            "objective": self.objective,
            "best_total": self.best_total,
            "best_average": fraction_json(self.best_average),
            "witness": {
                "n": self.witness.graph.n,
                "graph6": to_graph6(self.witness.graph),
                "bits_hex": bits_to_hex(self.witness.bits),
            },
            "optimum_count": self.optimum_count,
            "nodes_explored": self.nodes_explored,
            "certified": self.certified,
            "witness_strong": self.witness_strong,
        }


def _check_searchable(g: Graph) -> None:
    if g.n < 2:
        raise ValueError(f"orientation search needs n >= 2, got n={g.n}")


def _result(method, objective, g, total, bits, count, nodes, certified) -> SearchResult:
    witness = Orientation(g, bits)
    return SearchResult(
        method=method,
        objective=objective,
        best_total=int(total),
        best_average=Fraction(int(total), g.n * (g.n - 1)),
        witness=witness,
        optimum_count=count,
        nodes_explored=int(nodes),
        certified=certified,
        witness_strong=is_strong(to_digraph(witness)),
    )


def _partition(hi: int, threads: int) -> list[tuple[int, int]]:
    # Top bits split the rank space; block count is independent of how many
    # workers actually run, so merges are reproducible for any thread count.
    blocks = 1
    while blocks < threads * 8:
        blocks *= 2
    blocks = min(blocks, hi) or 1
    step = hi // blocks
    extra = hi % blocks
    ranges = []
    lo = 0
    for b in range(blocks):
        size = step + (1 if b < extra else 0)
        ranges.append((lo, lo + size))
        lo += size
    return ranges


def search_exhaustive(
    g: Graph,
    objective: str = "vertex",
    max_edges: int = EXHAUSTIVE_EDGE_CAP,
    threads: int = 1,
) -> SearchResult:
    """Certified optimum over all orientations by direct enumeration."""
    _check_searchable(g)
    if g.m > max_edges:
        raise SearchCapExceeded(
            f"m={g.m} exceeds exhaustive cap {max_edges}; "
            "use search_branch_and_bound or search_local"
        )
    split = objective == "vertex"
    eu, ev = edge_arrays(g)
    if g.m == 0:
        return _result("exhaustive", objective, g, 0, (), 1, 1, True)
    half = 1 << (g.m - 1)
    ranges = _partition(half, threads)

    def run(r):
        return _flow.scan_range(g.n, eu, ev, r[0], r[1], split)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            outs = list(ex.map(run, ranges))
    else:
        outs = [run(r) for r in ranges]
    best, best_r, ties, evals = -1, 0, 0, 0
    for b, r, t, e in outs:
        if b > best:
            best, best_r, ties = b, r, t
        elif b == best:
            ties += t
        evals += e
    mask = _flow.rank_to_mask(int(best_r), g.m)
    bits = tuple((mask >> i) & 1 for i in range(g.m))
    return _result("exhaustive", objective, g, best, bits, 2 * int(ties), evals, True)


def _bnb_edge_order(g: Graph) -> list[int]:
    """Static assignment order keeping vertices' incident edges contiguous,
    so degree-based pruning bites early.  Edge 0 always comes first (its bit
    is pinned to 0 for reversal symmetry)."""
    m = g.m
    if m == 0:
        return []
    order = [0]
    placed = [False] * m
    placed[0] = True
    covered = [0] * g.n
    a0, b0 = g.edges[0]
    covered[a0] += 1
    covered[b0] += 1
    for _ in range(m - 1):
        best_i, best_key = -1, None
        for i in range(m):
            if placed[i]:
                continue
            a, b = g.edges[i]
            key = (-(covered[a] + covered[b]), i)
            if best_key is None or key < best_key:
                best_i, best_key = i, key
        order.append(best_i)
        placed[best_i] = True
        a, b = g.edges[best_i]
        covered[a] += 1
        covered[b] += 1
    return order


def search_branch_and_bound(
    g: Graph,
    objective: str = "vertex",
    max_edges: int = BNB_EDGE_CAP,
    threads: int = 1,
) -> SearchResult:
    """Certified optimum with potential-based pruning.

    At a partial assignment every unoriented edge optimistically counts
    toward both the in- and out-degree of its endpoints; a subtree is pruned
    when that optimistic potential cannot beat the incumbent.
    """
    _check_searchable(g)
    if g.m > max_edges:
        raise SearchCapExceeded(
            f"m={g.m} exceeds branch-and-bound cap {max_edges}; use search_local"
        )
    split = objective == "vertex"
    eu, ev = edge_arrays(g)
    n, m = g.n, g.m
    if m == 0:
        return _result("branch_and_bound", objective, g, 0, (), None, 1, True)

    deg = [g.degree(v) for v in range(n)]
    capmin = np.empty((n, n), np.int64)
    for u in range(n):
        for v in range(n):
            capmin[u, v] = min(deg[u], deg[v])
    od_opt = np.array(deg, np.int64)
    id_opt = np.array(deg, np.int64)

    # Incumbent: a strong orientation when one exists, else all-zero bits.
    if is_2_edge_connected(g):
        seed_o = strong_orientation(g)
        if seed_o.bits[0] == 1:
            seed_o = seed_o.reverse()
    else:
        seed_o = Orientation(g, [0] * m)
    inc_mask = seed_o.bits_int()
    inc_total = int(_flow.orientation_total(n, eu, ev, np.int64(inc_mask), split))

    order = _bnb_edge_order(g)
    nodes = 1  # the incumbent evaluation
    state = {"best": inc_total, "best_mask": inc_mask, "nodes": nodes}

    def descend(depth: int, mask: int) -> None:
        state["nodes"] += 1
        if depth == m:
            total = int(_flow.orientation_total(n, eu, ev, np.int64(mask), split))
            if total > state["best"]:
                state["best"] = total
                state["best_mask"] = mask
            return
        bound = int(_flow.potential_bound(od_opt, id_opt, capmin))
        if bound <= state["best"]:
            return
        i = order[depth]
        a, b = g.edges[i]
        # bit 0: arc a->b costs id_opt[a] and od_opt[b]; bit 1 the mirror.
        choices = (0, 1) if depth > 0 else (0,)
        for bit in choices:
            hi, lo = (a, b) if bit == 0 else (b, a)
            id_opt[hi] -= 1
            od_opt[lo] -= 1
            descend(depth + 1, mask | (bit << i))
            id_opt[hi] += 1
            od_opt[lo] += 1

    descend(0, 0)
    best = state["best"]
    mask = state["best_mask"]
    bits = tuple((mask >> i) & 1 for i in range(m))
    return _result(
        "branch_and_bound", objective, g, best, bits, None, state["nodes"], True
    )


def search_local(
    g: Graph,
    objective: str = "vertex",
    seed: int = 0,
    restarts: int = 4,
    max_plateau: int = 50,
) -> SearchResult:
    """First-improvement hill climbing over single arc reversals.

    Not certified.  Restart 0 starts from a strong orientation when the graph
    is 2-edge-connected; every other start is uniformly random.  Fully
    deterministic for a fixed (seed, restarts) pair.
    """
    _check_searchable(g)
    split = objective == "vertex"
    eu, ev = edge_arrays(g)
    n, m = g.n, g.m
    if m == 0:
        return _result("local_search", objective, g, 0, (), None, 1, False)

    strong_start = None
    if is_2_edge_connected(g):
        strong_start = strong_orientation(g).bits_int()

    def evaluate(mask: int) -> int:
        return int(_flow.orientation_total(n, eu, ev, np.int64(mask), split))

    best_total = -1
    best_mask = 0
    evals = 0
    for r in range(restarts):
        rng = random.Random(seed * 1_000_003 + r)
        if r == 0 and strong_start is not None:
            mask = strong_start
        else:
            mask = rng.getrandbits(m)
        current = evaluate(mask)
        evals += 1
        plateau = 0
        while True:
            edge_order = list(range(m))
            rng.shuffle(edge_order)
            moved = False
            sideways = -1
            for i in edge_order:
                cand = mask ^ (1 << i)
                total = evaluate(cand)
                evals += 1
                if total > current:
                    mask, current = cand, total
                    moved = True
                    plateau = 0
                    break
                if total == current and sideways < 0:
                    sideways = i
            if not moved:
                if sideways >= 0 and plateau < max_plateau:
                    mask ^= 1 << sideways
                    plateau += 1
                else:
                    break
        if current > best_total:
            best_total, best_mask = current, mask
    if (best_mask >> 0) & 1:
        best_mask = best_mask ^ ((1 << m) - 1)  # canonical half-space form
    bits = tuple((best_mask >> i) & 1 for i in range(m))
    return _result("local_search", objective, g, best_total, bits, None, evals, False)


def partial_potential_bound(g: Graph, assignment: dict[int, int]) -> int:
    """Optimistic potential of a partial orientation (edge index -> bit).

    Unassigned edges count toward both optimistic degrees of their
    endpoints; per-pair sums are capped by the base-graph degree minimum.
    Dominates the true optimum of every completion.
    """
    deg = [g.degree(v) for v in range(g.n)]
    od_opt = np.array(deg, np.int64)
    id_opt = np.array(deg, np.int64)
    for i, bit in assignment.items():
        a, b = g.edges[i]
        hi, lo = (a, b) if bit == 0 else (b, a)
        id_opt[hi] -= 1
        od_opt[lo] -= 1
    capmin = np.empty((g.n, g.n), np.int64)
    for u in range(g.n):
        for v in range(g.n):
            capmin[u, v] = min(deg[u], deg[v])
    return int(_flow.potential_bound(od_opt, id_opt, capmin))


def strong_orientation(g: Graph) -> Orientation:
    """Robbins orientation: DFS tree arcs down, back arcs up; deterministic."""
    if not is_connected(g):
        raise ValueError("strong orientation needs a connected graph")
    if not is_2_edge_connected(g):
        raise ValueError("strong orientation impossible: graph has a bridge")
    n = g.n
    disc = [-1] * n
    parent = [-1] * n
    arcs: dict[tuple[int, int], int] = {}
    timer = 0
    stack = [(0, 0)]
    disc[0] = timer
    timer += 1
    while stack:
        u, i = stack[-1]
        if i < len(g.adjacency[u]):
            stack[-1] = (u, i + 1)
            w = g.adjacency[u][i]
            if disc[w] == -1:
                parent[w] = u
                disc[w] = timer
                timer += 1
                arcs[(min(u, w), max(u, w))] = 0 if u < w else 1  # tree: u -> w
                stack.append((w, 0))
            elif w != parent[u] and disc[w] < disc[u]:
                arcs[(min(u, w), max(u, w))] = 0 if u < w else 1  # back: u -> w
        else:
            stack.pop()
    bits = [arcs[e] for e in g.edges]
    o = Orientation(g, bits)
    assert is_strong(to_digraph(o)), "DFS orientation of a bridgeless graph must be strong"
    return o


def check_optimality_necessary_conditions(g: Graph, o: Orientation) -> list[dict]:
    """Violated necessary conditions for optimality (empty list = none found).

    A source-to-sink arc certifies non-optimality: reversing it cannot lose
    any connectivity and strictly gains some.
    """
    if o.graph != g:
        raise ValueError("orientation does not orient the given graph")
    if g.n < 3 or not is_connected(g):
        raise ValueError("optimality conditions need a connected graph, n >= 3")
    d = to_digraph(o)
    return [
        {"kind": "source_to_sink_arc", "arc": [u, v]}
        for u, v in d.arcs
        if len(d.in_adj[u]) == 0 and len(d.out_adj[v]) == 0
    ]


def verify_witness(result: SearchResult) -> bool:
    """Recompute the witness total; supports the CLI --certify flag."""
    eu, ev = edge_arrays(result.witness.graph)
    total = int(
        _flow.orientation_total(
            result.witness.graph.n,
            eu,
            ev,
            np.int64(result.witness.bits_int()),
            result.objective == "vertex",
        )
    )
    return total == result.best_total
