import random

import pytest

from avgconn.core import (
    Digraph,
    Graph,
    Orientation,
    ParseError,
    bits_from_hex,
    bits_to_hex,
    degree_sequence,
    from_edge_list,
    from_graph6,
    in_out_degrees,
    is_2_connected,
    is_2_edge_connected,
    is_connected,
    orient,
    parse_arc_list_text,
    parse_edge_list_text,
    reverse,
    to_digraph,
    to_edge_list_text,
    to_graph6,
)


def triangle():
    return from_edge_list(3, [(0, 1), (1, 2), (0, 2)])


class TestFromEdgeList:
    def test_triangle(self):
        g = triangle()
        assert g.n == 3 and g.m == 3
        assert g.edges == ((0, 1), (0, 2), (1, 2))

    def test_sorts_and_canonicalizes(self):
        g = from_edge_list(4, [(3, 1), (2, 0)])
        assert g.edges == ((0, 2), (1, 3))
        assert g.adjacency == ((2,), (3,), (0,), (1,))

    def test_duplicate_edge_rejected(self):
        with pytest.raises(ValueError, match=r"duplicate.*\(1, 0\)"):
            from_edge_list(2, [(0, 1), (1, 0)])

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match=r"self-loop.*\(0, 0\)"):
            from_edge_list(4, [(0, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match=r"out of range.*\(0, 5\)"):
            from_edge_list(3, [(0, 5)])

    def test_idempotent_reparse(self):
        g = from_edge_list(5, [(4, 0), (1, 3), (0, 2)])
        assert from_edge_list(g.n, g.edges) == g


class TestGraph6:
    def test_bw_is_k3(self):
        # Frozen from an independent hand encoding: n=3 -> 'B'; the three
        # upper-triangle bits 111 pad to 111000 = 56 -> chr(56+63) = 'w'.
        assert from_graph6("Bw") == triangle()
        assert to_graph6(triangle()) == "Bw"

    def test_dqc_parses_and_roundtrips(self):
        g = from_graph6("DQc")
        assert g.n == 5
        assert from_graph6(to_graph6(g)) == g

    def test_empty_rejected(self):
        with pytest.raises(ParseError, match="offset 0"):
            from_graph6("")

    def test_bad_byte_offset(self):
        with pytest.raises(ParseError, match="offset 1"):
            from_graph6('B"')

    def test_truncated_body(self):
        with pytest.raises(ParseError):
            from_graph6("D")

    def test_nonzero_padding_rejected(self):
        # K_2 is 'A_' (bit 1 then zero padding); 'A' + chr(63+1) sets a pad bit.
        assert to_graph6(from_edge_list(2, [(0, 1)])) == "A_"
        with pytest.raises(ParseError, match="padding"):
            from_graph6("A" + chr(63 + 1))

    def test_header_accepted(self):
        assert from_graph6(">>graph6<<Bw") == triangle()

    def test_roundtrip_randomized(self):
        rng = random.Random(7)
        for _ in range(120):
            n = rng.randint(0, 12)
            edges = [
                (a, b)
                for a in range(n)
                for b in range(a + 1, n)
                if rng.random() < 0.4
            ]
            g = Graph(n, edges)
            assert from_graph6(to_graph6(g)) == g

    def test_reference_codec_agreement(self):
        networkx = pytest.importorskip("networkx")
        rng = random.Random(11)
        for _ in range(40):
            n = rng.randint(1, 11)
            g = Graph(
                n,
                [
                    (a, b)
                    for a in range(n)
                    for b in range(a + 1, n)
                    if rng.random() < 0.5
                ],
            )
            gx = networkx.from_graph6_bytes(to_graph6(g).encode())
            assert sorted(gx.edges()) == list(g.edges)
            assert networkx.to_graph6_bytes(gx, header=False).strip().decode() == to_graph6(g)


class TestEdgeListText:
    def test_roundtrip(self):
        g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
        assert parse_edge_list_text(to_edge_list_text(g)) == g

    def test_header_mismatch(self):
        with pytest.raises(ParseError, match="m=2"):
            parse_edge_list_text("3 2\n0 1\n")

    def test_arc_list(self):
        d = parse_arc_list_text("3 3\n0 1\n1 2\n2 0\n")
        assert d.arcs == ((0, 1), (1, 2), (2, 0))


class TestOrientation:
    def test_bit_semantics(self):
        # Edge order is lexicographic: (0,1), (0,2), (1,2).
        o = orient(triangle(), (0, 0, 0))
        assert set(to_digraph(o).arcs) == {(0, 1), (0, 2), (1, 2)}
        assert not _is_directed_cycle(to_digraph(o))

    def test_directed_triangle_bits(self):
        o = orient(triangle(), (0, 1, 0))
        d = to_digraph(o)
        assert set(d.arcs) == {(0, 1), (1, 2), (2, 0)}
        assert _is_directed_cycle(d)

    def test_flip_reverses_exactly_one_arc(self):
        rng = random.Random(3)
        for _ in range(60):
            n = rng.randint(2, 8)
            edges = [
                (a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.5
            ]
            g = Graph(n, edges)
            if g.m == 0:
                continue
            bits = [rng.randint(0, 1) for _ in range(g.m)]
            o = orient(g, bits)
            i = rng.randrange(g.m)
            before = set(to_digraph(o).arcs)
            after = set(to_digraph(o.flip(i)).arcs)
            gained = after - before
            lost = before - after
            assert len(gained) == 1 and len(lost) == 1
            (u, v) = gained.pop()
            assert (v, u) == lost.pop()

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="length"):
            orient(triangle(), (0, 1))

    def test_reverse_involution(self):
        d = to_digraph(orient(triangle(), (0, 1, 0)))
        assert reverse(reverse(d)) == d
        assert set(reverse(d).arcs) == {(1, 0), (2, 1), (0, 2)}

    def test_hex_roundtrip(self):
        rng = random.Random(9)
        for m in (0, 1, 7, 8, 9, 16, 21):
            bits = tuple(rng.randint(0, 1) for _ in range(m))
            assert bits_from_hex(bits_to_hex(bits), m) == bits

    def test_hex_bad_padding(self):
        with pytest.raises(ParseError, match="padding"):
            bits_from_hex("ff", 3)


def _is_directed_cycle(d: Digraph) -> bool:
    return all(io == (1, 1) for io in in_out_degrees(d))


class TestPredicates:
    def test_p4(self):
        p4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
        assert is_connected(p4)
        assert not is_2_edge_connected(p4)
        assert not is_2_connected(p4)

    def test_c5(self):
        c5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
        assert is_2_connected(c5)
        assert is_2_edge_connected(c5)

    def test_disjoint_triangles(self):
        g = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not is_connected(g)
        assert not is_2_edge_connected(g)

    def test_cut_vertex(self):
        bowtie = from_edge_list(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
        assert is_2_edge_connected(bowtie)
        assert not is_2_connected(bowtie)

    def test_degree_sequence(self):
        star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
        assert degree_sequence(star) == [1, 1, 1, 3]
        g = from_edge_list(5, [(0, 1), (2, 3)])
        assert sum(degree_sequence(g)) == 2 * g.m

    def test_in_out_degrees(self):
        d = to_digraph(orient(triangle(), (0, 1, 0)))
        assert in_out_degrees(d) == [(1, 1), (1, 1), (1, 1)]
        assert sum(od for _, od in in_out_degrees(d)) == d.m


class TestDigraph:
    def test_duplicate_arc_rejected(self):
        with pytest.raises(ValueError, match="duplicate arc"):
            Digraph(2, [(0, 1), (0, 1)])

    def test_antiparallel_allowed(self):
        d = Digraph(2, [(0, 1), (1, 0)])
        assert d.m == 2
