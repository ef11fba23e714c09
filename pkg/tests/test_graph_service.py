import networkx as nx
import pytest
from hypothesis import given, settings

from app.models.digraph import Digraph
from app.models.search_models import ResidualOverlay
from app.services.errors import GraphInputError, InvariantViolation, PreconditionError
from app.services.graph_service import (
    bounded_dfs,
    crossing_edges,
    heavy_path,
    induced_subgraph,
    reachable,
    strongly_connected_components,
)

from strategies import digraphs


def test_from_edge_list_counts_edges(fix_a: Digraph) -> None:
    assert (fix_a.n, fix_a.m) == (6, 8)
    assert fix_a.endpoints(6) == (2, 3)


def test_from_edge_list_rejects_out_of_range() -> None:
    with pytest.raises(GraphInputError):
        Digraph.from_edge_list(3, [(0, 1), (1, 3)])


def test_reverse_view_swaps_endpoints_and_shares_deletions(fix_a: Digraph) -> None:
    r = fix_a.reverse_view()
    assert r.live_pairs() == [(b, a) for a, b in fix_a.live_pairs()]
    assert r.reverse_view().live_pairs() == fix_a.live_pairs()
    fix_a.delete_edge(0)
    assert r.m == 7 and not r.is_alive(0)


def test_scc_twin_cycles(fix_a: Digraph) -> None:
    assert strongly_connected_components(fix_a).components == [[0, 1, 2, 3, 4, 5]]
    fix_a.delete_edge(6)
    scc = strongly_connected_components(fix_a)
    assert sorted(scc.components) == [[0, 1, 2], [3, 4, 5]]


def test_induced_subgraph_keeps_inner_edges(fix_a: Digraph) -> None:
    sub, members = induced_subgraph(fix_a, {3, 4, 5})
    assert members == [3, 4, 5]
    assert sub.live_pairs() == [(0, 1), (1, 2), (2, 0)]


def test_crossing_edges(fix_a: Digraph) -> None:
    assert crossing_edges(fix_a, {3, 4, 5}) == [6, 7]


@settings(max_examples=200, deadline=None)
@given(digraphs(max_n=15))
def test_scc_matches_networkx(g: Digraph) -> None:
    ours = strongly_connected_components(g)
    ref = nx.DiGraph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.live_pairs())
    assert sorted(ours.components) == sorted(sorted(c) for c in nx.strongly_connected_components(ref))
    # components come in a topological order of the condensation
    for a, b in g.live_pairs():
        assert ours.component_of[a] <= ours.component_of[b]


def test_bounded_dfs_zero_budget(fix_b: Digraph) -> None:
    run = bounded_dfs(fix_b, None, 0, 0)
    assert run.visit_order == [0]
    assert run.edges_scanned == 0
    assert run.stopped_early


def test_bounded_dfs_stops_at_budget(fix_b: Digraph) -> None:
    run = bounded_dfs(fix_b, None, 0, 5)
    assert run.edges_scanned == 5
    assert run.stopped_early


def test_bounded_dfs_weights(fix_a: Digraph) -> None:
    run = bounded_dfs(fix_a, None, 5, 8)
    assert run.edges_scanned == 8
    assert not run.stopped_early
    assert run.weight[5] == 8
    assert run.visit_order == [5, 3, 4, 0, 1, 2]


def test_heavy_path_leaves_the_cycle(fix_a: Digraph) -> None:
    run = bounded_dfs(fix_a, None, 5, 7)
    path = heavy_path(run, 3)
    assert path == [5, 0]
    assert all(run.weight[v] >= 3 for v in path)


def test_heavy_path_rejects_branching() -> None:
    # star: both leaves carry weight 1 under the root
    g = Digraph.from_edge_list(3, [(0, 1), (0, 2), (1, 0), (2, 0)])
    run = bounded_dfs(g, None, 0, 10)
    with pytest.raises(InvariantViolation):
        heavy_path(run, 1)


def test_overlay_reverses_edges(fix_a: Digraph) -> None:
    overlay = ResidualOverlay(base=fix_a, reversed=frozenset({7}))
    run = bounded_dfs(fix_a, overlay, 5, 100)
    assert sorted(run.visit_order) == [3, 4, 5]

    g = Digraph.from_edge_list(2, [(1, 0)])
    flipped = bounded_dfs(g, ResidualOverlay(base=g, reversed=frozenset({0})), 0, 5)
    assert flipped.visit_order == [0, 1]
    assert flipped.parent_edge[1] == 0


def test_overlay_from_another_graph_is_refused(fix_a: Digraph, fix_b: Digraph) -> None:
    with pytest.raises(PreconditionError):
        bounded_dfs(fix_a, ResidualOverlay(base=fix_b), 0, 3)


@settings(max_examples=200, deadline=None)
@given(digraphs(max_n=12))
def test_heavy_vertices_form_a_path_above_half_budget(g: Digraph) -> None:
    for u in range(g.n):
        for budget in (3, 7, 11):
            run = bounded_dfs(g, None, u, budget)
            threshold = run.edges_scanned // 2 + 1
            path = heavy_path(run, threshold)
            assert all(run.weight[v] >= threshold for v in path)
            for a, b in zip(path, path[1:]):
                assert run.parent[b] == a


@settings(max_examples=100, deadline=None)
@given(digraphs(max_n=12))
def test_unbounded_dfs_reaches_everything_reachable(g: Digraph) -> None:
    for u in range(g.n):
        run = bounded_dfs(g, None, u, g.m + 1)
        assert sorted(run.visit_order) == reachable(g, u)
        assert not run.stopped_early
