import networkx as nx
import pytest
from hypothesis import HealthCheck, given, settings

from app.models.digraph import Digraph
from app.services.cut_service import (
    naive_min_cut,
    naive_strong_articulation_points,
    naive_strong_bridges,
    small_edge_cut,
    strong_articulation_points,
    strong_bridges,
    unit_max_flow,
)
from app.services.dominator_service import immediate_dominators
from app.services.errors import GraphInputError, PreconditionError
from app.services.graph_service import strongly_connected_components

from strategies import digraphs, strong_digraphs


def _nx(g: Digraph) -> nx.DiGraph:
    ref = nx.DiGraph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.live_pairs(), capacity=1)
    return ref


def test_immediate_dominators_diamond() -> None:
    # 0 → 1 → 3, 0 → 2 → 3, 3 → 4
    succ = [[1, 2], [3], [3], [4], []]
    pred = [[], [0], [0], [1, 2], [3]]
    assert immediate_dominators(succ, pred, 0) == [0, 0, 0, 0, 3]


def test_immediate_dominators_unreachable() -> None:
    assert immediate_dominators([[1], [], []], [[], [0], []], 0) == [0, 0, -1]


@settings(max_examples=150, deadline=None)
@given(digraphs(max_n=12))
def test_immediate_dominators_match_networkx(g: Digraph) -> None:
    succ = [list(g.successors(v)) for v in range(g.n)]
    pred = [list(g.predecessors(v)) for v in range(g.n)]
    ours = immediate_dominators(succ, pred, 0)
    ref = nx.immediate_dominators(_nx(g), 0)
    assert ours[0] == 0
    for v in range(1, g.n):
        assert ours[v] == ref.get(v, -1)


def test_strong_bridges_twin_cycles(fix_a: Digraph) -> None:
    # (0,1) (1,2) (2,3) (3,4) (4,5) (5,0); the chords (2,0) and (5,3) are bypassable
    assert strong_bridges(fix_a) == [0, 1, 3, 4, 6, 7]
    assert naive_strong_bridges(fix_a) == [0, 1, 3, 4, 6, 7]


def test_strong_bridges_bi_clique(fix_b: Digraph) -> None:
    assert strong_bridges(fix_b) == []


def test_strong_bridges_single_cycle() -> None:
    g = Digraph.from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert strong_bridges(g) == [0, 1, 2, 3]


def test_strong_bridges_needs_strong_connectivity() -> None:
    with pytest.raises(PreconditionError):
        strong_bridges(Digraph.from_edge_list(2, [(0, 1)]))


def test_articulation_points(fix_b: Digraph, fix_c: Digraph) -> None:
    assert strong_articulation_points(fix_c) == [2]
    assert strong_articulation_points(fix_b) == []


def test_articulation_point_at_the_root() -> None:
    # 0 is the hub of two bidirected triangles
    pairs = [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0), (0, 3), (3, 0), (3, 4), (4, 3), (0, 4), (4, 0)]
    assert strong_articulation_points(Digraph.from_edge_list(5, pairs)) == [0]


def test_articulation_points_need_three_vertices() -> None:
    with pytest.raises(PreconditionError):
        strong_articulation_points(Digraph.from_edge_list(2, [(0, 1), (1, 0)]))


@settings(max_examples=300, deadline=None)
@given(strong_digraphs(max_n=14))
def test_strong_bridges_match_naive(g: Digraph) -> None:
    assert strong_bridges(g) == naive_strong_bridges(g)


@settings(max_examples=300, deadline=None)
@given(strong_digraphs(min_n=3, max_n=14))
def test_articulation_points_match_naive(g: Digraph) -> None:
    assert strong_articulation_points(g) == naive_strong_articulation_points(g)


def test_small_edge_cut_clique_pair(fix_d: Digraph) -> None:
    cut = small_edge_cut(fix_d, 3)
    assert cut is not None
    assert sorted(cut.edges) == [24, 26]
    assert cut.side_source == [0, 1, 2, 3]


def test_small_edge_cut_bi_clique(fix_b: Digraph) -> None:
    assert small_edge_cut(fix_b, 3) is None
    assert len(small_edge_cut(fix_b, 4)) == 3


def test_small_edge_cut_for_k2_is_a_bridge(fix_a: Digraph) -> None:
    cut = small_edge_cut(fix_a, 2)
    assert cut.edges == [0]
    assert cut.side_source == [0]


def test_small_edge_cut_rejects_k1(fix_b: Digraph) -> None:
    with pytest.raises(GraphInputError):
        small_edge_cut(fix_b, 1)


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(strong_digraphs(max_n=12))
def test_small_edge_cut_iff_low_connectivity(debug_checks, g: Digraph) -> None:
    connectivity = nx.edge_connectivity(_nx(g))
    for k in (2, 3, 4):
        cut = small_edge_cut(g, k)
        assert (cut is None) == (connectivity >= k)
        assert naive_min_cut(g, k).capped == (connectivity >= k)
        if cut is not None:
            assert len(cut) <= k - 1
            probe = g.copy()
            for e in cut.edges:
                probe.delete_edge(e)
            assert strongly_connected_components(probe).count > 1


def test_naive_min_cut_bi_clique(fix_b: Digraph) -> None:
    result = naive_min_cut(fix_b, 4)
    assert result.value == 3
    assert not result.capped
    assert len(result.cut) == 3


@settings(max_examples=200, deadline=None)
@given(digraphs(min_n=2, max_n=10))
def test_unit_max_flow_matches_networkx(g: Digraph) -> None:
    ref = _nx(g)
    for t in range(1, g.n):
        value, side = unit_max_flow(g, 0, t, 5)
        assert value == min(5, nx.maximum_flow_value(ref, 0, t))
        if side is not None:
            assert 0 in side and t not in side


def test_naive_min_cut_clique_pair(fix_d: Digraph) -> None:
    result = naive_min_cut(fix_d, 3)
    assert result.value == 2
    assert sorted(result.cut.edges) in ([24, 26], [25, 27])
