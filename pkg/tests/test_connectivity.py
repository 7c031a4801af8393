import random
from fractions import Fraction

import pytest

from avgconn.connectivity import (
    count_full_pairs,
    has_source_to_sink_arc,
    is_full_pair,
    is_saturated,
    is_strong,
    kappa_pair,
    kappa_pair_digraph,
    lambda_pair,
    lambda_pair_digraph,
    potential_digraph,
    potential_graph,
    report_digraph,
    report_graph,
    theta,
    total_connectivity,
)
from avgconn.core import Digraph, Graph, Orientation, orient, reverse, to_digraph
from avgconn.families import (
    complete,
    cycle,
    enumerate_mops,
    lex_ladder,
    min2conn_h,
    mobius_ladder,
    path,
    snake,
    snake_orientation,
    star,
    two_tree_random,
)
from avgconn.oracles import brute_force_kappa, brute_force_kappa_digraph
from conftest import random_graph

directed_triangle = Digraph(3, [(0, 1), (1, 2), (2, 0)])


class TestKappaPair:
    def test_complete(self):
        k4 = complete(4)
        assert all(kappa_pair(k4, u, v) == 3 for u in range(4) for v in range(u + 1, 4))

    def test_path_endpoints(self):
        assert kappa_pair(path(3), 0, 2) == 1

    def test_lex_ladder_inner_pair(self):
        assert kappa_pair(lex_ladder(4), 2, 3) == 4  # the second rung pair

    def test_disconnected_is_zero(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert kappa_pair(g, 0, 2) == 0

    def test_same_vertex_rejected(self):
        with pytest.raises(ValueError):
            kappa_pair(complete(3), 1, 1)

    def test_menger_oracle_spot(self):
        rng = random.Random(21)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 7), 0.5)
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    assert kappa_pair(g, u, v) == brute_force_kappa(g, u, v)


class TestDigraphKappa:
    def test_directed_triangle(self):
        for u in range(3):
            for v in range(3):
                if u != v:
                    assert kappa_pair_digraph(directed_triangle, u, v) == 1
                    assert theta(directed_triangle, u, v) == 2

    def test_single_arc(self):
        d = Digraph(2, [(0, 1)])
        assert kappa_pair_digraph(d, 0, 1) == 1
        assert kappa_pair_digraph(d, 1, 0) == 0

    def test_snake_theta_pattern(self):
        n = 4
        o = snake_orientation(n)
        d = to_digraph(o)
        g = o.graph
        deg2 = {v for v in range(g.n) if g.degree(v) == 2}
        low = 0
        for u in range(g.n):
            for v in range(u + 1, g.n):
                t = theta(d, u, v)
                if u in deg2 or v in deg2:
                    assert t == 2
                    low += 1
                else:
                    assert t == 3
        assert low == 4 * n - 3

    def test_directed_oracle_spot(self):
        rng = random.Random(22)
        for _ in range(30):
            g = random_graph(rng, rng.randint(2, 7), 0.6)
            if g.m == 0:
                continue
            d = to_digraph(Orientation.from_bits_int(g, rng.getrandbits(g.m)))
            for u in range(g.n):
                for v in range(g.n):
                    if u != v:
                        assert kappa_pair_digraph(d, u, v) == brute_force_kappa_digraph(d, u, v)


class TestLambda:
    def test_cycle(self):
        c5 = cycle(5)
        assert all(lambda_pair(c5, u, v) == 2 for u in range(5) for v in range(u + 1, 5))

    def test_tree(self):
        t = star(5)
        assert all(lambda_pair(t, u, v) == 1 for u in range(5) for v in range(u + 1, 5))

    def test_cubic_lambda_equals_kappa(self):
        for g in (complete(4), mobius_ladder(6), mobius_ladder(8)):
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    assert lambda_pair(g, u, v) == kappa_pair(g, u, v)

    def test_digraph_lambda(self):
        assert lambda_pair_digraph(directed_triangle, 0, 1) == 1

    def test_min_cut_oracle_agreement(self):
        from avgconn.oracles import brute_force_lambda, brute_force_lambda_digraph

        rng = random.Random(26)
        for _ in range(25):
            g = random_graph(rng, rng.randint(2, 6), 0.55)
            if g.m > 10:
                continue
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    assert lambda_pair(g, u, v) == brute_force_lambda(g, u, v)
            if g.m:
                d = to_digraph(Orientation.from_bits_int(g, rng.getrandbits(g.m)))
                for u in range(g.n):
                    for v in range(g.n):
                        if u != v:
                            assert lambda_pair_digraph(d, u, v) == brute_force_lambda_digraph(d, u, v)


class TestReports:
    def test_mop_order6_average(self):
        for g in list(enumerate_mops(6))[::3]:
            assert report_graph(g).average == Fraction(11, 5)

    def test_tree_average_is_one(self):
        assert report_graph(path(6)).average == 1
        assert report_graph(star(7)).average == 1

    def test_min2conn_h9_total(self):
        assert report_graph(min2conn_h(2)).total == 75

    def test_two_tree_average_formula(self):
        for n in range(3, 13):
            g = two_tree_random(n, seed=n)
            want = 2 + Fraction(2 * n - 6, n * (n - 1))
            assert report_graph(g).average == want

    def test_report_requires_two_vertices(self):
        with pytest.raises(ValueError):
            report_graph(Graph(1, []))
        with pytest.raises(ValueError):
            report_digraph(Digraph(1, []))

    def test_digraph_report(self):
        rep = report_digraph(directed_triangle)
        assert rep.total == 6 and rep.average == 1

    def test_reverse_preserves_total(self):
        rng = random.Random(23)
        for _ in range(25):
            g = random_graph(rng, rng.randint(2, 8), 0.5)
            if g.m == 0:
                continue
            d = to_digraph(Orientation.from_bits_int(g, rng.getrandbits(g.m)))
            assert report_digraph(reverse(d)).total == report_digraph(d).total

    def test_json_shape(self):
        rep = report_graph(complete(3))
        js = rep.to_json_dict()
        assert js == {
            "n": 3,
            "pairs": [[0, 1, 2], [0, 2, 2], [1, 2, 2]],
            "total": 6,
            "average": {"num": 2, "den": 1},
        }


class TestPotential:
    def test_star_potential(self):
        assert potential_graph(star(4)).value == 6

    def test_regular_potential(self):
        g = mobius_ladder(8)
        assert potential_graph(g).value == 3 * 28

    def test_directed_triangle_potential(self):
        assert potential_digraph(directed_triangle).value == 6

    def test_chain_on_random_orientations(self):
        rng = random.Random(24)
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 9), 0.5)
            if g.m == 0:
                continue
            o = Orientation.from_bits_int(g, rng.getrandbits(g.m))
            d = to_digraph(o)
            assert (
                total_connectivity(o)
                <= potential_digraph(d).value
                <= potential_graph(g).value
            )


class TestFullPairs:
    def test_full_pair_definition(self):
        o = orient(complete(3), (0, 1, 0))
        assert is_full_pair(o, 0, 1)
        assert count_full_pairs(o) == 3
        assert is_saturated(o)

    def test_odd_regular_never_saturated(self):
        rng = random.Random(25)
        for g in (complete(4), mobius_ladder(6)):
            for _ in range(40):
                o = Orientation.from_bits_int(g, rng.getrandbits(g.m))
                assert not is_saturated(o)


class TestStrongness:
    def test_directed_triangle_strong(self):
        assert is_strong(directed_triangle)
        assert not has_source_to_sink_arc(directed_triangle)

    def test_single_arc(self):
        d = Digraph(2, [(0, 1)])
        assert not is_strong(d)
        assert has_source_to_sink_arc(d)

    def test_snake_orientation_strong(self):
        assert is_strong(to_digraph(snake_orientation(3)))
