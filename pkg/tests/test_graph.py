"""Core graph type: construction validation, neighborhood identities,
private neighbors, and Roman assignments."""

import pytest
from hypothesis import given, strategies as st

from lexdom import (
    DomainError,
    Graph,
    GraphFormatError,
    RomanAssignment,
    assignment_from_masks,
    bits,
    build_graph,
    mask_from,
)
from lexdom.graph import MAX_VERTICES


def random_graph_strategy(max_n=9):
    @st.composite
    def graphs(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        return build_graph(n, chosen)

    return graphs()


class TestConstruction:
    def test_small_path(self):
        g = build_graph(3, [(0, 1), (1, 2)])
        assert g.n == 3
        assert sorted(g.edges()) == [(0, 1), (1, 2)]
        assert g.edge_count == 2

    def test_rejects_loop(self):
        with pytest.raises(GraphFormatError):
            build_graph(2, [(0, 0)])

    def test_rejects_out_of_range_endpoint(self):
        with pytest.raises(GraphFormatError):
            build_graph(2, [(0, 2)])

    def test_rejects_negative_order(self):
        with pytest.raises(DomainError):
            build_graph(-1, [])

    def test_rejects_order_above_cap(self):
        with pytest.raises(DomainError):
            build_graph(MAX_VERTICES + 1, [])

    def test_duplicate_edges_collapse(self):
        g = build_graph(2, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count == 1

    def test_adjacency_rows_validated(self):
        # asymmetric rows must be rejected by the Graph invariant
        with pytest.raises(DomainError):
            Graph(2, (0b10, 0b00))
        with pytest.raises(DomainError):
            Graph(1, (0b1,))  # loop bit

    @given(random_graph_strategy())
    def test_symmetry_and_loop_freeness(self, g):
        for v in range(g.n):
            assert not g.adj[v] >> v & 1
            for u in bits(g.adj[v]):
                assert g.adj[u] >> v & 1


class TestNeighborhoods:
    @given(random_graph_strategy())
    def test_closed_neighborhood_size(self, g):
        for v in range(g.n):
            assert g.closed_neighborhood(v).bit_count() == g.degree(v) + 1

    def test_degree_extremes(self):
        g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
        assert g.degree_extremes() == (1, 3)

    def test_isolated_vertices(self):
        g = build_graph(3, [(0, 1)])
        assert g.isolated_vertices() == [2]
        assert g.has_isolated_vertex()
        assert not build_graph(2, [(0, 1)]).has_isolated_vertex()

    def test_connectivity(self):
        assert build_graph(3, [(0, 1), (1, 2)]).is_connected()
        assert not build_graph(3, [(0, 1)]).is_connected()
        assert build_graph(1, []).is_connected()

    def test_covers(self):
        g = build_graph(3, [(0, 1), (1, 2)])
        assert g.open_cover(mask_from([1])) == mask_from([0, 2])
        assert g.closed_cover(mask_from([1])) == mask_from([0, 1, 2])


class TestPrivateNeighbors:
    @given(random_graph_strategy(max_n=7), st.integers(min_value=0, max_value=127))
    def test_epn_definition(self, g, raw):
        smask = raw & g.full_mask
        for v in bits(smask):
            ep = g.epn(v, smask)
            assert ep & smask == 0
            for u in bits(ep):
                assert (g.adj[u] & smask) == 1 << v

    def test_epn_example(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        s = mask_from([1, 2])
        assert g.epn(1, s) == mask_from([0])
        assert g.epn(2, s) == mask_from([3])


class TestRomanAssignment:
    def test_weight_partition(self):
        f = RomanAssignment((0, 1, 2, 0))
        assert f.weight == 3
        assert f.v0 == mask_from([0, 3])
        assert f.v1 == mask_from([1])
        assert f.v2 == mask_from([2])
        assert f.restricted_weight(mask_from([2, 3])) == 2

    def test_from_masks(self):
        f = assignment_from_masks(3, mask_from([0]), mask_from([2]))
        assert f.weights == (1, 0, 2)

    def test_rejects_overlap(self):
        with pytest.raises(DomainError):
            assignment_from_masks(2, 0b01, 0b01)

    def test_rejects_bad_weight(self):
        with pytest.raises(DomainError):
            RomanAssignment((0, 3))


def test_mask_helpers():
    assert mask_from([0, 2, 5]) == 0b100101
    assert list(bits(0b100101)) == [0, 2, 5]
    assert list(bits(0)) == []
