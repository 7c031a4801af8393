"""Cross-module invariants: degree caps, structural consequences, ratio
chains on the recognized corpora."""

import random
from fractions import Fraction

from avgconn.bounds import eval_bound
from avgconn.connectivity import (
    is_full_pair,
    kappa_matrix_digraph,
    kappa_matrix_graph,
    lambda_matrix_digraph,
    lambda_matrix_graph,
    report_graph,
)
from avgconn.core import Orientation, in_out_degrees, to_digraph
from avgconn.families import (
    complete,
    complete_bipartite_2,
    cycle,
    min2conn_h,
    mobius_ladder,
)
from avgconn.search import search_exhaustive
from avgconn.transforms import inflation, is_minimally_2_connected, subdivision
from conftest import random_graph


def test_theta_at_most_twice_kappa():
    rng = random.Random(51)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 8), 0.5)
        if g.m == 0:
            continue
        d = to_digraph(Orientation.from_bits_int(g, rng.getrandbits(g.m)))
        km_d = kappa_matrix_digraph(d)
        km_g = kappa_matrix_graph(g)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                assert km_d[u, v] + km_d[v, u] <= 2 * km_g[u, v]


def test_directed_lambda_splits_undirected():
    rng = random.Random(52)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 8), 0.5)
        if g.m == 0:
            continue
        d = to_digraph(Orientation.from_bits_int(g, rng.getrandbits(g.m)))
        lm_d = lambda_matrix_digraph(d)
        lm_g = lambda_matrix_graph(g)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                assert lm_d[u, v] + lm_d[v, u] <= lm_g[u, v]


def test_full_pair_forces_balanced_degrees_in_regular_graphs():
    # In an oriented r-regular graph a full pair has od(u) = id(v).
    rng = random.Random(53)
    for g in (complete(4), mobius_ladder(6), mobius_ladder(8)):
        for _ in range(25):
            o = Orientation.from_bits_int(g, rng.getrandbits(g.m))
            d = to_digraph(o)
            iod = in_out_degrees(d)
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    if is_full_pair(o, u, v):
                        assert iod[v][0] == iod[u][1]
                        assert iod[u][0] == iod[v][1]


def test_every_triangle_has_a_bad_vertex():
    rng = random.Random(54)
    inf = inflation(complete(4))
    g = inf.graph
    for _ in range(30):
        o = Orientation.from_bits_int(g, rng.getrandbits(g.m))
        mat = kappa_matrix_digraph(to_digraph(o))
        for v in range(4):
            corners = (3 * v, 3 * v + 1, 3 * v + 2)
            outside = [w for w in range(g.n) if w not in corners]
            assert any(
                all(mat[c, w] + mat[w, c] <= 2 for w in outside) for c in corners
            )


def test_induced_high_degree_forest_on_min2conn_corpus():
    corpus = [min2conn_h(n) for n in (1, 2, 3)]
    corpus += [subdivision(g).graph for g in (complete(4), cycle(5), complete_bipartite_2(5))]
    corpus += [cycle(n) for n in (3, 5, 7)]
    for g in corpus:
        assert is_minimally_2_connected(g)
        high = {v for v in range(g.n) if g.degree(v) > 2}
        sub_edges = [(a, b) for a, b in g.edges if a in high and b in high]
        # acyclicity via union-find; component count over `high`
        parent = {v: v for v in high}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for a, b in sub_edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                acyclic = False
                break
            parent[ra] = rb
        assert acyclic
        if high:
            components = len({find(v) for v in high})
            assert components >= 2


def test_min2conn_value_and_ratio_chain():
    # Certified values sit in [1, closed-form upper] and the ratio to the
    # undirected average stays inside the open interval (4/9, 5/8).
    corpus = [
        complete_bipartite_2(5),  # the order-5 member of the capped family
        cycle(6),
        min2conn_h(1),
        subdivision(complete(4)).graph,
    ]
    for g in corpus:
        assert is_minimally_2_connected(g)
        r = search_exhaustive(g)
        upper = eval_bound("min2conn_upper", n=g.n)
        assert 1 <= r.best_average <= upper
        ratio = r.best_average / report_graph(g).average
        assert Fraction(4, 9) < ratio < Fraction(5, 8)


def test_uniformly_three_connected_inflation():
    # Inflating a 3-connected cubic graph keeps every pair at kappa 3.
    inf = inflation(complete(4))
    mat = kappa_matrix_graph(inf.graph)
    n = inf.graph.n
    assert all(mat[u, v] == 3 for u in range(n) for v in range(n) if u != v)


def test_report_average_denominators():
    g = complete(4)
    rep = report_graph(g)
    assert rep.average == Fraction(rep.total, 6)
