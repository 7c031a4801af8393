"""The reproduction suite: every headline number the toolkit must certify.

Each criterion is a standalone callable returning a CriterionResult; the CLI
``repro`` subcommand and the test suite both run them.  Exact-rational
checks have tolerance zero.  Statements whose sharp instances live beyond
desk scale are replaced by finite monotone-trend checks (criterion 12).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from . import _flow
from .bounds import eval_bound
from .connectivity import (
    count_full_pairs,
    edge_arrays,
    has_source_to_sink_arc,
    is_strong,
    kappa_matrix_digraph,
    kappa_matrix_graph,
    kappa_pair,
    kappa_pair_digraph,
    lambda_matrix_digraph,
    lambda_matrix_graph,
    potential_digraph,
    potential_graph,
    report_digraph,
    report_graph,
    total_connectivity,
)
from .core import Graph, Orientation, to_digraph
from .families import (
    complete,
    complete_bipartite_2,
    cycle,
    d_st,
    enumerate_mops,
    fan,
    h_st,
    h_st_is_white,
    join_k2_empty,
    min2conn_h,
    min2conn_h_orientation,
    mobius_ladder,
    mop_doubling_m,
    snake,
    snake_orientation,
    star,
    trigon_lozenge_g,
    trigon_lozenge_h,
    two_tree_random,
    two_tree_strong_orientation,
)
from .iso import is_isomorphic
from .oracles import brute_force_kappa, brute_force_kappa_digraph
from .search import search_branch_and_bound, search_exhaustive
from .transforms import (
    inflation,
    is_maximal_outerplanar,
    is_minimally_2_connected,
    chord_cycle_sets,
    lift_orientation,
    project_orientation,
    subdivision,
)

__all__ = ["CriterionResult", "CRITERIA", "run_acceptance", "table1_rows"]


@dataclass(frozen=True)
class CriterionResult:
    name: str
    passed: bool
    detail: str


def _outcome(name: str, failures: list[str], detail: str) -> CriterionResult:
    if failures:
        return CriterionResult(name, False, "; ".join(failures))
    return CriterionResult(name, True, detail)


TABLE1_MINIMA = {
    3: Fraction(1),
    4: Fraction(13, 12),
    5: Fraction(23, 20),
    6: Fraction(7, 6),
    7: Fraction(25, 21),
    8: Fraction(67, 56),
    9: Fraction(29, 24),
}


def table1_rows(max_order: int, threads: int = 1, canonical: bool = False, orders=None) -> list[dict]:
    """Minimum certified max-average over all polygon triangulations per order."""
    if not 3 <= max_order <= 9:
        raise ValueError(f"table supports orders 3..9, got {max_order}")
    rows = []
    for n in orders if orders is not None else range(3, max_order + 1):
        best: Fraction | None = None
        argmin: list[Graph] = []
        count = 0
        for g in enumerate_mops(n, canonical=canonical):
            count += 1
            r = search_exhaustive(g, threads=threads)
            if best is None or r.best_average < best:
                best, argmin = r.best_average, [g]
            elif r.best_average == best:
                argmin.append(g)
        classes: list[Graph] = []
        for g in argmin:
            if not any(is_isomorphic(g, h) for h in classes):
                classes.append(g)
        fan_n = fan(n)
        fan_attains = any(is_isomorphic(g, fan_n) for g in classes)
        rows.append(
            {
                "n": n,
                "min": best,
                "triangulations": count,
                "argmin_labeled": len(argmin),
                "argmin_classes": classes,
                "fan_attains": fan_attains,
                "fan_unique": fan_attains and len(classes) == 1,
            }
        )
    return rows


def criterion_1_mop_minima(extended: bool = False) -> CriterionResult:
    """Minimum certified value over all triangulations per order, fan uniqueness."""
    failures = []
    rows = table1_rows(8)
    if extended:
        # order 9 runs over one representative per isomorphism class
        rows += table1_rows(9, canonical=True, orders=(9,))
    for row in rows:
        n = row["n"]
        if row["min"] != TABLE1_MINIMA[n]:
            failures.append(f"n={n}: min {row['min']} != {TABLE1_MINIMA[n]}")
        if n <= 8 and not row["fan_unique"]:
            failures.append(f"n={n}: fan not the unique minimizer")
        if n == 9:
            if not row["fan_attains"] or len(row["argmin_classes"]) != 2:
                failures.append(
                    f"n=9: expected the fan plus exactly one other class, "
                    f"got {len(row['argmin_classes'])} classes"
                )
    detail = ", ".join(f"n={r['n']}:{r['min']}" for r in rows)
    return _outcome("mop-minima-table", failures, detail)


def criterion_2_k4() -> CriterionResult:
    """K_4: value 4/3, total 16; every optimum strong with no source-to-sink arc."""
    failures = []
    g = complete(4)
    r = search_exhaustive(g)
    if r.best_total != 16 or r.best_average != Fraction(4, 3):
        failures.append(f"got total {r.best_total}, average {r.best_average}")
    eu, ev = edge_arrays(g)
    optima = [
        mask
        for mask in range(1 << 6)
        if int(_flow.orientation_total(4, eu, ev, np.int64(mask), True)) == 16
    ]
    if len(optima) != r.optimum_count:
        failures.append(f"optimum count {r.optimum_count} != enumerated {len(optima)}")
    for mask in optima:
        d = to_digraph(Orientation.from_bits_int(g, mask))
        if has_source_to_sink_arc(d):
            failures.append(f"optimum {mask:06b} has a source-to-sink arc")
        if not is_strong(d):
            failures.append(f"optimum {mask:06b} is not strong")
    return _outcome(
        "k4-exhaustive", failures, f"K_max=16, {len(optima)} optima, all strong"
    )


@lru_cache(maxsize=1)
def _ik4():
    return inflation(complete(4))


@lru_cache(maxsize=1)
def _ik4_search():
    return search_branch_and_bound(_ik4().graph)


def criterion_3_inflation_chain() -> CriterionResult:
    """Certified value 13/11 on the inflated K_4; lifted witness attains it."""
    failures = []
    inf = _ik4()
    r = _ik4_search()
    formula = eval_bound("inflation_formula", n=4, kbm=Fraction(4, 3))
    if r.best_average != Fraction(13, 11):
        failures.append(f"certified {r.best_average} != 13/11")
    if formula != Fraction(13, 11):
        failures.append(f"formula value {formula} != 13/11")
    base = search_exhaustive(complete(4))
    if not base.witness_strong:
        failures.append("K_4 witness not strong; lift premise broken")
    lifted = lift_orientation(base.witness, inf)
    lifted_total = total_connectivity(lifted)
    if lifted_total != r.best_total:
        failures.append(f"lifted witness total {lifted_total} != {r.best_total}")
    fp = count_full_pairs(lifted)
    if fp != 24:
        failures.append(f"lifted witness has {fp} full pairs, expected 24")
    return _outcome(
        "inflation-chain",
        failures,
        f"certified 13/11 in {r.nodes_explored} nodes; lift attains it with 24 full pairs",
    )


def criterion_4_odd_regular_sharpness() -> CriterionResult:
    """Cubic sharp families attain (r-1)/2 + n/(4(n-1))."""
    failures = []
    for n, make, method in (
        (6, mobius_ladder, search_exhaustive),
        (8, mobius_ladder, search_branch_and_bound),
    ):
        r = method(make(n))
        bound = eval_bound("odd_regular_upper", r=3, n=n)
        if r.best_average != bound:
            failures.append(f"mobius_ladder({n}): {r.best_average} != bound {bound}")
    r8 = search_exhaustive(mobius_ladder(8))
    if r8.best_average != eval_bound("odd_regular_upper", r=3, n=8):
        failures.append("mobius_ladder(8): exhaustive disagrees with bound")
    d = to_digraph(d_st(2, 2))
    rep = report_digraph(d)
    if rep.average != Fraction(9, 7):
        failures.append(f"d_st(2,2) average {rep.average} != 9/7")
    q3 = search_exhaustive(h_st(2, 2))
    if q3.best_total != rep.total:
        failures.append(
            f"search on h_st(2,2) found {q3.best_total}, construction gives {rep.total}"
        )
    return _outcome(
        "odd-regular-sharpness",
        failures,
        "ladders 13/10 and 9/7 tight; circular construction optimal on the cube",
    )


def criterion_5_hst_pattern() -> CriterionResult:
    """In d_st: white->black has kappa t, the other colour patterns t-1."""
    failures = []
    for s, t in ((2, 2), (2, 3), (3, 2)):
        d = to_digraph(d_st(s, t))
        mat = kappa_matrix_digraph(d)
        for u in range(d.n):
            for v in range(d.n):
                if u == v:
                    continue
                want = t if h_st_is_white(u, t) and not h_st_is_white(v, t) else t - 1
                if mat[u, v] != want:
                    failures.append(
                        f"(s,t)=({s},{t}) pair ({u},{v}): kappa {mat[u, v]} != {want}"
                    )
    return _outcome("hst-pattern", failures, "colour pattern holds for all pairs")


def criterion_6_min2conn_family() -> CriterionResult:
    """Order-(4n+1) family: exact totals, strong orientation, recognizer."""
    failures = []
    for n in (2, 3, 4):
        g = min2conn_h(n)
        o = min2conn_h_orientation(n)
        want_g = 2 * comb(4 * n + 1, 2) + 2 * n - 1
        want_d = 2 * comb(4 * n + 1, 2) + comb(2 * n, 2)
        kg = report_graph(g).total
        kd = report_digraph(to_digraph(o)).total
        if kg != want_g:
            failures.append(f"n={n}: K(H)={kg} != {want_g}")
        if kd != want_d:
            failures.append(f"n={n}: K(D)={kd} != {want_d}")
        if not is_strong(to_digraph(o)):
            failures.append(f"n={n}: orientation not strong")
        if not is_minimally_2_connected(g):
            failures.append(f"n={n}: not recognized minimally 2-connected")
    return _outcome(
        "min2conn-family", failures, "totals, strongness and recognition hold for n=2,3,4"
    )


def criterion_7_subdivision_identities() -> CriterionResult:
    """Subdivision total identity (equality iff 2-connected) and its max analogue."""
    failures = []
    for g, name in ((complete(4), "K4"), (cycle(5), "C5"), (complete_bipartite_2(5), "K23")):
        s = subdivision(g).graph
        lhs = report_graph(s).total
        rhs = eval_bound("subdivision_identity", n=g.n, m=g.m, K=report_graph(g).total)
        if lhs != rhs:
            failures.append(f"{name}: K(S)={lhs} != identity {rhs}")
    bowtie = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    s = subdivision(bowtie).graph
    lhs = report_graph(s).total
    rhs = eval_bound("subdivision_identity", n=5, m=6, K=report_graph(bowtie).total)
    if not lhs < rhs:
        failures.append(f"bowtie: expected strict inequality, got {lhs} vs {rhs}")
    k4 = complete(4)
    sk4 = subdivision(k4).graph
    max_s = search_exhaustive(sk4).best_total
    max_base = search_exhaustive(k4).best_total
    rhs = eval_bound("subdivision_identity", n=4, m=6, K=max_base)
    if max_s != rhs:
        failures.append(f"K_max(S(K4))={max_s} != {rhs}")
    return _outcome(
        "subdivision-identities",
        failures,
        "equality for 2-connected bases, strict at a cut vertex, max version tight on K4",
    )


def criterion_8_star_formula() -> CriterionResult:
    """Certified star values match the closed form for n = 4..10."""
    failures = []
    for n in range(4, 11):
        r = search_exhaustive(star(n))
        want = eval_bound("star_formula", n=n)
        if r.best_average != want:
            failures.append(f"n={n}: {r.best_average} != {want}")
    return _outcome("star-formula", failures, "floor/ceiling formula certified for n=4..10")


def criterion_9_snake() -> CriterionResult:
    """Path-square orientation values, certified optimal at small orders."""
    failures = []
    for n in range(2, 7):
        o = snake_orientation(n)
        avg = report_digraph(to_digraph(o)).average
        want = eval_bound("snake_value", n=n)
        if avg != want:
            failures.append(f"n={n}: construction {avg} != {want}")
    for n in (2, 3, 4):
        o = snake_orientation(n)
        r = search_exhaustive(o.graph)
        if r.best_total != total_connectivity(o):
            failures.append(
                f"n={n}: construction total {total_connectivity(o)} "
                f"not optimal ({r.best_total})"
            )
    return _outcome(
        "snake-values", failures, "construction matches formula (n=2..6), optimal for n=2,3,4"
    )


def criterion_10_two_trees() -> CriterionResult:
    """Inductive strong orientation floor and the sharp join family."""
    failures = []
    for seed in range(50):
        n = 3 + seed % 8
        g = two_tree_random(n, seed)
        o = two_tree_strong_orientation(g)
        k = total_connectivity(o)
        if k < n * n - 3:
            failures.append(f"seed {seed}: K={k} < {n * n - 3}")
        if not is_strong(to_digraph(o)):
            failures.append(f"seed {seed}: not strong")
    for n in range(4, 8):
        r = search_exhaustive(join_k2_empty(n))
        want = n * (n - 1) + n - 3
        if r.best_total != want:
            failures.append(f"join n={n}: K_max={r.best_total} != {want}")
    return _outcome(
        "two-tree-floor", failures, "50 seeded 2-trees hold the floor; join family sharp n=4..7"
    )


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(
        n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    )


def criterion_11_property_suites() -> CriterionResult:
    """Randomized invariants at fixed seeds (>= 1000 cases per suite)."""
    failures = []

    # (a,b,c) potential chain, theta vs 2*kappa, directed lambda splitting.
    rng = random.Random(110)
    cases = 0
    while cases < 1000:
        n = rng.randint(2, 9)
        g = _random_graph(rng, n, rng.choice((0.3, 0.5, 0.8)))
        if g.m == 0:
            continue
        cases += 1
        bits = rng.getrandbits(g.m)
        o = Orientation.from_bits_int(g, bits)
        d = to_digraph(o)
        kd = total_connectivity(o)
        pd = potential_digraph(d).value
        pg = potential_graph(g).value
        if not kd <= pd <= pg:
            failures.append(f"potential chain broken on case {cases}")
            break
        kmd = kappa_matrix_digraph(d)
        kmg = kappa_matrix_graph(g)
        lmd = lambda_matrix_digraph(d)
        lmg = lambda_matrix_graph(g)
        for u in range(n):
            for v in range(u + 1, n):
                if kmd[u, v] + kmd[v, u] > 2 * kmg[u, v]:
                    failures.append(f"theta > 2 kappa on case {cases} pair ({u},{v})")
                if lmd[u, v] + lmd[v, u] > lmg[u, v]:
                    failures.append(f"lambda split broken on case {cases} pair ({u},{v})")
        if failures:
            break

    # (d) every triangle of an inflated cubic graph has a bad vertex.
    k33 = Graph(6, [(a, b) for a in range(3) for b in range(3, 6)])
    for base, seed in ((complete(4), 311), (k33, 312)):
        inf = inflation(base)
        eu, ev = edge_arrays(inf.graph)
        rng = random.Random(seed)
        for _ in range(500):
            bits = rng.getrandbits(inf.graph.m)
            o = Orientation.from_bits_int(inf.graph, bits)
            mat = kappa_matrix_digraph(to_digraph(o))
            for v in range(base.n):
                corners = (3 * v, 3 * v + 1, 3 * v + 2)
                outside = [w for w in range(inf.graph.n) if w not in corners]
                if not any(
                    all(mat[c, w] + mat[w, c] <= 2 for w in outside) for c in corners
                ):
                    failures.append(f"triangle {v} with no bad vertex (seed {seed})")
            if failures:
                break
        if failures:
            break

    # (e) projection full-pair inequality on the inflated K_4.
    if not failures:
        inf = _ik4()
        rng = random.Random(313)
        for case in range(1000):
            bits = rng.getrandbits(inf.graph.m)
            f = Orientation.from_bits_int(inf.graph, bits)
            c_lift = count_full_pairs(f)
            c_base = count_full_pairs(project_orientation(f, inf))
            if c_lift > 4 * c_base + 2 * inf.base.n:
                failures.append(f"full-pair projection bound broken on case {case}")
                break

    # (f) chord/degree-2 inequality on every generated MOP; induced-forest
    # structure on every recognized minimally 2-connected graph.
    if not failures:
        mops = [g for n in range(3, 9) for g in enumerate_mops(n)]
        mops += [snake(n) for n in range(2, 7)]
        mops += [fan(n) for n in range(3, 10)]
        mops += [trigon_lozenge_g(0), trigon_lozenge_g(1)]
        mops += [mop_doubling_m(fan(5)), trigon_lozenge_h(0, complete(3))]
        for g in mops:
            if not is_maximal_outerplanar(g):
                failures.append(f"generator output not recognized as MOP (n={g.n})")
                break
            a_set, b2 = chord_cycle_sets(g)
            if len(b2) < Fraction(len(a_set), 2) + 2:
                failures.append(f"chord 4-cycle inequality broken (n={g.n})")
                break
    if not failures:
        m2c = [min2conn_h(n) for n in (1, 2, 3, 4)]
        m2c += [subdivision(g).graph for g in (complete(4), cycle(5), complete_bipartite_2(5), fan(4))]
        m2c += [cycle(n) for n in range(3, 9)]
        for g in m2c:
            if not is_minimally_2_connected(g):
                failures.append(f"corpus graph not minimally 2-connected (n={g.n})")
                break
            high = [v for v in range(g.n) if g.degree(v) > 2]
            hset = set(high)
            sub_edges = [(a, b) for a, b in g.edges if a in hset and b in hset]
            sub = Graph(g.n, sub_edges)  # only vertices in `high` carry edges
            comp, forest = _forest_components(sub, high)
            if not forest or (high and comp < 2):
                failures.append(f"induced high-degree subgraph not a small forest (n={g.n})")
                break

    # (g) Menger oracle agreement.
    if not failures:
        rng = random.Random(314)
        pair_cases = 0
        while pair_cases < 1000:
            n = rng.randint(2, 8)
            g = _random_graph(rng, n, rng.choice((0.3, 0.5, 0.8)))
            for u in range(n):
                for v in range(u + 1, n):
                    if kappa_pair(g, u, v) != brute_force_kappa(g, u, v):
                        failures.append(f"Menger oracle disagrees on pair ({u},{v})")
                        break
                if failures:
                    break
            pair_cases += n * (n - 1) // 2
            if failures:
                break
            if g.m:
                o = Orientation.from_bits_int(g, rng.getrandbits(g.m))
                d = to_digraph(o)
                for u in range(n):
                    for v in range(n):
                        if u != v and kappa_pair_digraph(d, u, v) != brute_force_kappa_digraph(d, u, v):
                            failures.append(f"directed oracle disagrees on ({u},{v})")
                            break
                    if failures:
                        break
                pair_cases += n * (n - 1)
            if failures:
                break

    return _outcome(
        "property-suites",
        failures,
        "potential chain, theta/lambda caps, bad vertices, projection bound, "
        "MOP/min2conn structure, Menger oracle: all hold",
    )


def _forest_components(sub: Graph, alive: list[int]) -> tuple[int, bool]:
    """(component count over `alive`, acyclicity) for the induced subgraph."""
    seen: set[int] = set()
    comp = 0
    forest = True
    for root in alive:
        if root in seen:
            continue
        comp += 1
        stack = [(root, -1)]
        seen.add(root)
        while stack:
            u, parent = stack.pop()
            for w in sub.adjacency[u]:
                if w == parent:
                    continue
                if w in seen:
                    forest = False
                else:
                    seen.add(w)
                    stack.append((w, u))
    return comp, forest


def criterion_12_finite_trends() -> CriterionResult:
    """Desk-scale stand-ins for the asymptotic statements."""
    failures = []

    # Repeated inflation drives the certified value down toward 1.
    v0 = search_exhaustive(complete(4)).best_average
    v1 = _ik4_search().best_average
    v2 = eval_bound("inflation_formula", n=12, kbm=v1)
    if not (v0 > v1 > v2 > 1):
        failures.append(f"inflation chain not decreasing toward 1: {v0}, {v1}, {v2}")

    # Subdivided inflation chain: ratio decreasing toward 25/54.  The first
    # two K_max values are certified; deeper ones use the lift identity,
    # whose premise (a strong optimal orientation) is verified.
    if not failures:
        k4 = complete(4)
        sk4 = subdivision(k4).graph
        r0 = Fraction(search_exhaustive(sk4).best_total, 2 * report_graph(sk4).total)
        g1 = _ik4().graph
        r_g1 = _ik4_search()
        if not r_g1.witness_strong:
            failures.append("inflated K_4 witness not strong; identity premise broken")
        n1, m1 = g1.n, g1.m
        big_n1 = comb(n1 + m1, 2) - comb(n1, 2)
        k_s_g1 = 2 * big_n1 + report_graph(g1).total
        kmax_s_g1 = 2 * big_n1 + r_g1.best_total
        r1 = Fraction(kmax_s_g1, 2 * k_s_g1)
        g2 = inflation(g1).graph
        kmax_g2 = eval_bound("inflation_formula", n=n1, kbm=r_g1.best_average) * (
            g2.n * (g2.n - 1)
        )
        n2, m2 = g2.n, g2.m
        big_n2 = comb(n2 + m2, 2) - comb(n2, 2)
        r2 = Fraction(
            2 * big_n2 + kmax_g2, 2 * (2 * big_n2 + report_graph(g2).total)
        )
        lim = Fraction(25, 54)
        if not (r0 > r1 > r2 > lim):
            failures.append(f"subdivision ratio not decreasing toward 25/54: {r0}, {r1}, {r2}")

    # Minimally 2-connected family: ratio increasing toward 9/16.
    if not failures:
        ratios = []
        for n in (2, 3, 4):
            kd = report_digraph(to_digraph(min2conn_h_orientation(n))).total
            kh = report_graph(min2conn_h(n)).total
            ratios.append(Fraction(kd, 2 * kh))
        if not (ratios[0] < ratios[1] < ratios[2] < Fraction(9, 16)):
            failures.append(f"min2conn ratios not increasing toward 9/16: {ratios}")

    # Path squares: construction value increasing toward 3/2.
    if not failures:
        vals = [eval_bound("snake_value", n=n) for n in range(2, 7)]
        if not all(a < b for a, b in zip(vals, vals[1:])):
            failures.append(f"snake values not increasing: {vals}")
        if not all(v < Fraction(3, 2) for v in vals):
            failures.append("snake value reached 3/2 at finite order")

    # Conjectured floor 19/18 consistent with the certified minima.
    if not failures:
        for row in table1_rows(7):
            if row["n"] >= 4 and row["min"] < Fraction(19, 18):
                failures.append(f"certified minimum at n={row['n']} below 19/18")

    return _outcome(
        "finite-trends",
        failures,
        "inflation chain toward 1, ratio chains toward 25/54 and 9/16, "
        "snake toward 3/2, conjectured floor consistent",
    )


CRITERIA: tuple[tuple[str, object], ...] = (
    ("1", criterion_1_mop_minima),
    ("2", criterion_2_k4),
    ("3", criterion_3_inflation_chain),
    ("4", criterion_4_odd_regular_sharpness),
    ("5", criterion_5_hst_pattern),
    ("6", criterion_6_min2conn_family),
    ("7", criterion_7_subdivision_identities),
    ("8", criterion_8_star_formula),
    ("9", criterion_9_snake),
    ("10", criterion_10_two_trees),
    ("11", criterion_11_property_suites),
    ("12", criterion_12_finite_trends),
)


def run_acceptance(extended: bool = False, keys=None, echo=None):
    """Run the criteria, echo one pass/fail line each, return the results."""
    results = []
    for key, fn in CRITERIA:
        if keys is not None and key not in keys:
            continue
        res = fn(extended) if key == "1" else fn()
        results.append(res)
        if echo is not None:
            status = "PASS" if res.passed else "FAIL"
            echo(f"{status} criterion-{key} [{res.name}] {res.detail}")
    return results
