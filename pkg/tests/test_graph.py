from __future__ import annotations

import itertools

import networkx as nx
import pytest
from conftest import graphs
from hypothesis import given
from hypothesis import strategies as st

import oracles
from stardom.graph import (
    Graph,
    GraphFamily,
    GraphFormatError,
    bipartition,
    complete,
    complete_bipartite,
    complete_bipartite_parts,
    cycle,
    encode_graph6,
    enumerate_connected,
    format_edge_list,
    generate,
    induced_subgraph,
    is_complete,
    is_connected,
    is_cycle,
    parse_edge_list,
    parse_graph6,
    path,
    read_graph6_lines,
    star,
)


class TestGraph6:
    def test_triangle(self):
        assert parse_graph6("Bw") == complete(3)

    def test_path(self):
        g = parse_graph6("Bg")
        assert g.edges() == [(0, 1), (1, 2)]

    def test_single_vertex(self):
        assert parse_graph6("@") == Graph(1, (0,))
        assert encode_graph6(complete(1)) == "@"

    def test_encode_matches_format_definition(self):
        for g in (complete(3), path(3), cycle(5), complete_bipartite(2, 3), star(6)):
            assert encode_graph6(g) == oracles.graph6_bits(oracles.to_nx(g))

    def test_c5_record_length(self):
        rec = encode_graph6(cycle(5))
        assert len(rec) == 3  # one size byte plus ceil(10/6) data bytes
        assert parse_graph6(rec) == cycle(5)

    def test_header_is_tolerated(self):
        assert parse_graph6(">>graph6<<Bw") == complete(3)

    @pytest.mark.parametrize("record, offset", [
        ("B!", 1),        # byte below 63
        ("Bw~", 2),       # trailing garbage
        ("C", 1),         # truncated
        ("Bx", 1),        # padding bits set
        ("~?", 0),        # multi-byte order
    ])
    def test_errors_carry_offsets(self, record, offset):
        with pytest.raises(GraphFormatError) as info:
            parse_graph6(record)
        assert info.value.offset == offset

    def test_order_above_single_byte_rejected(self):
        with pytest.raises(ValueError):
            encode_graph6(complete(63))

    def test_stream_errors_name_the_line(self):
        with pytest.raises(GraphFormatError, match="line 3"):
            list(read_graph6_lines(["Bw", "", "B!"]))

    @given(graphs(min_n=1, max_n=12, connected=False))
    def test_round_trip(self, g):
        assert parse_graph6(encode_graph6(g)) == g
        rec = encode_graph6(g)
        assert encode_graph6(parse_graph6(rec)) == rec


class TestGraphInvariants:
    @given(graphs(connected=False))
    def test_symmetric_and_loopless(self, g):
        for i in range(g.n):
            assert not g.has_edge(i, i)
            for j in range(g.n):
                assert g.has_edge(i, j) == g.has_edge(j, i)

    def test_asymmetric_rejected(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0))

    def test_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(1, 1)])

    def test_edge_list_round_trip(self):
        g = complete_bipartite(2, 3)
        assert parse_edge_list(format_edge_list(g)) == g
        with pytest.raises(GraphFormatError, match="line 2"):
            parse_edge_list("3\n0 x\n")


class TestFamilies:
    def test_complete(self):
        g = generate(GraphFamily.parse("K:4"))
        assert (g.num_edges, g.min_degree, is_connected(g)) == (6, 3, True)

    def test_complete_bipartite(self):
        g = generate(GraphFamily.parse("K:2,3"))
        assert g.num_edges == 6 and g.min_degree == 2 and bipartition(g) is not None

    def test_star(self):
        g = generate(GraphFamily.parse("S:5"))
        assert g.num_edges == 4 and g.min_degree == 1
        assert g == complete_bipartite(1, 4)

    def test_cycle_needs_three(self):
        with pytest.raises(ValueError):
            generate(GraphFamily.parse("C:2"))

    @pytest.mark.parametrize("n", range(3, 9))
    def test_cycle_two_regular(self, n):
        g = cycle(n)
        assert g.is_regular() and g.degree(0) == 2 and is_cycle(g)

    def test_bad_spec(self):
        with pytest.raises(ValueError):
            GraphFamily.parse("Q:3")

    @given(graphs(min_n=1, max_n=7))
    def test_structural_recognisers_agree_with_isomorphism(self, g):
        fam = oracles.family_of(oracles.to_nx(g))
        assert is_complete(g) == (fam[0] == "K")
        parts = complete_bipartite_parts(g)
        if fam[0] == "Krs":
            assert parts == fam[1:]
        elif fam != ("K", 2):
            assert parts is None
        G = oracles.to_nx(g)
        assert is_cycle(g) == (g.n >= 3 and nx.is_isomorphic(G, nx.cycle_graph(g.n)))


class TestInducedAndConnectivity:
    def test_consecutive_cycle_vertices_give_path(self):
        h, mapping = induced_subgraph(cycle(5), [0, 1, 2])
        assert h == path(3) and mapping == (0, 1, 2)

    def test_non_adjacent_pair(self):
        h, _ = induced_subgraph(cycle(5), [0, 2])
        assert h.num_edges == 0 and not is_connected(h)

    def test_three_vertices_of_k4(self):
        for s in itertools.combinations(range(4), 3):
            assert induced_subgraph(complete(4), s)[0] == complete(3)

    def test_empty_or_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            induced_subgraph(cycle(5), [])
        with pytest.raises(ValueError):
            induced_subgraph(cycle(5), [0, 7])

    @given(graphs(connected=False))
    def test_whole_vertex_set_is_identity(self, g):
        assert induced_subgraph(g, range(g.n))[0] == g

    @given(graphs(connected=False))
    def test_connectivity_matches_networkx(self, g):
        assert is_connected(g) == nx.is_connected(oracles.to_nx(g))


class TestEnumeration:
    # counts from the subset-enumeration oracle (oracles.count_connected_labelled)
    @pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)])
    def test_counts(self, n, count):
        assert sum(1 for _ in enumerate_connected(n)) == count

    def test_counts_match_oracle(self):
        assert [oracles.count_connected_labelled(n) for n in range(1, 5)] == [1, 1, 4, 38]

    def test_distinct_and_connected(self):
        seen = [encode_graph6(g) for g in enumerate_connected(5)]
        assert len(set(seen)) == len(seen)
        assert all(is_connected(parse_graph6(s)) for s in seen)

    def test_order_is_lexicographic_in_bits(self):
        codes = []
        for g in enumerate_connected(4):
            codes.append([int(g.has_edge(i, j)) for j in range(4) for i in range(j)])
        assert codes == sorted(codes)

    @given(st.integers(1, 6))
    def test_shards_partition_the_stream(self, m):
        full = [encode_graph6(g) for g in enumerate_connected(4)]
        parts = [[encode_graph6(g) for g in enumerate_connected(4, (k, m))] for k in range(m)]
        assert sorted(itertools.chain.from_iterable(parts)) == sorted(full)
        assert parts[0] == full[::m]

    def test_beyond_seven_unsupported(self):
        with pytest.raises(ValueError):
            next(enumerate_connected(8))
