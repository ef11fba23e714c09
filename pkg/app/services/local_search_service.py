##############################################################################
# File: local_search_service.py — budget-bounded local searches
# Given a start vertex u and a budget Δ, find a small set S ∋ u that is cut
# off from the rest of the graph by
#   - at most one edge          (one_edge_out / one_edge_in)
#   - at most one vertex x ≠ u  (one_vertex_out / one_vertex_in)
#   - at most k-1 edges         (k_edge_out / k_edge_in)
# Every search costs O(Δ) edge scans (O((2k)^(k+1)·Δ) for the k version),
# independent of the graph size.
#
# The "in" variants run the same search on the reverse view; vertex sets and
# edge ids are shared with the original graph, so the results are reported
# against the original orientation without translation.
##############################################################################
import logging
from typing import List, Optional

from app.models.digraph import Digraph, EdgeId, VertexId
from app.models.search_models import (
    BlockState,
    DfsRun,
    IsolatedComponent,
    LocalSearchParams,
    Orientation,
    ResidualOverlay,
    SearchStats,
)
from app.services.errors import InvariantViolation, PreconditionError
from app.services.graph_service import DfsCursor, bounded_dfs, heavy_edges, heavy_path

logger = logging.getLogger(__name__)


# 🔁 1. Residual overlays
def empty_overlay(g: Digraph) -> ResidualOverlay:
    return ResidualOverlay(base=g, reversed=frozenset())


def apply_path_reversal(overlay: ResidualOverlay, path: List[EdgeId]) -> ResidualOverlay:
    """Toggle the orientation of every edge on ``path``."""
    for e in path:
        if not overlay.base.is_alive(e):
            raise PreconditionError(f"edge {e} on a reversal path is dead")
    return ResidualOverlay(base=overlay.base, reversed=overlay.reversed.symmetric_difference(path))


# 🧮 2. Result assembly
def _component(
    g: Digraph,
    vertices,
    orientation: Orientation,
    max_boundary: int,
    separating_vertex: Optional[VertexId] = None,
) -> IsolatedComponent:
    """Recompute the boundary on ``g`` (already oriented for the search) and check it."""
    inside = frozenset(vertices)
    boundary = tuple(
        sorted(e for v in inside for e in g.out_edges(v) if g.head(e) not in inside)
    )
    if len(boundary) > max_boundary:
        raise InvariantViolation(
            f"{orientation}-component of size {len(inside)} has {len(boundary)} boundary edges, "
            f"at most {max_boundary} allowed"
        )
    return IsolatedComponent(
        vertices=inside,
        boundary=boundary,
        orientation=orientation,
        separating_vertex=separating_vertex,
    )


def _count(stats: Optional[SearchStats], scanned: int) -> None:
    if stats is not None:
        stats.searches += 1
        stats.edges_scanned += scanned


def _oriented(g: Digraph, orientation: Orientation) -> Digraph:
    return g if orientation == "out" else g.reverse_view()


# 🔗 3. One edge out / in
def _one_edge(
    g: Digraph, u: VertexId, delta: int, orientation: Orientation, stats: Optional[SearchStats]
) -> Optional[IsolatedComponent]:
    params = LocalSearchParams(delta=delta)
    h = _oriented(g, orientation)

    # F1: can u reach 2Δ+1 edges at all?
    first = bounded_dfs(h, None, u, 2 * params.delta + 1)
    if first.edges_scanned < first.budget:
        _count(stats, first.edges_scanned)
        return _component(h, first.visit_order, orientation, max_boundary=0)

    # F2 on G' = G with the heavy path (w(y) ≥ Δ) reversed
    path = heavy_path(first, params.delta)
    overlay = apply_path_reversal(empty_overlay(h), heavy_edges(first, path))
    second = bounded_dfs(h, overlay, u, params.delta + 1)
    _count(stats, first.edges_scanned + second.edges_scanned)
    if second.edges_scanned > params.delta:
        return None
    return _component(h, second.visit_order, orientation, max_boundary=1)


def one_edge_out(
    g: Digraph, u: VertexId, delta: int, stats: Optional[SearchStats] = None
) -> Optional[IsolatedComponent]:
    return _one_edge(g, u, delta, "out", stats)


def one_edge_in(
    g: Digraph, u: VertexId, delta: int, stats: Optional[SearchStats] = None
) -> Optional[IsolatedComponent]:
    return _one_edge(g, u, delta, "in", stats)


# 🚧 4. One vertex out / in
def _blocked_traversal(h: Digraph, first: DfsRun, delta: int):
    """F2: traversal from the root that may not enter blocked vertices.

    Reaching a blocked vertex v unblocks T[u, v] minus v; vertices that were
    reached earlier and become unblocked are visited at that point.
    Returns (visited, reached-and-still-blocked vertex or None, edges scanned).
    """
    u = first.root
    state = BlockState(tree=first, path=heavy_path(first, delta + 1))
    budget = delta + 1
    visited = {u}
    reached_blocked = set()
    stack = [[u, iter(h.out_edges(u))]]
    scanned = 0
    while stack and scanned < budget:
        frame = stack[-1]
        e = next(frame[1], None)
        if e is None:
            stack.pop()
            continue
        scanned += 1
        w = h.head(e)
        if w in visited:
            continue
        if state.is_blocked(w):
            reached_blocked.add(w)
            for freed in state.unblock_above(w):
                if freed in reached_blocked:
                    reached_blocked.discard(freed)
                    visited.add(freed)
                    stack.append([freed, iter(h.out_edges(freed))])
            continue
        visited.add(w)
        stack.append([w, iter(h.out_edges(w))])
    still = [v for v in reached_blocked if state.is_blocked(v)]
    if len(still) > 1:
        raise InvariantViolation(f"traversal ended with {len(still)} blocked vertices reached")
    return visited, (still[0] if still else None), scanned


def _one_vertex(
    g: Digraph, u: VertexId, delta: int, orientation: Orientation, stats: Optional[SearchStats]
) -> Optional[IsolatedComponent]:
    params = LocalSearchParams(delta=delta)
    h = _oriented(g, orientation)

    first = bounded_dfs(h, None, u, 2 * params.delta + 1)
    if first.edges_scanned < first.budget:
        _count(stats, first.edges_scanned)
        return _component(h, first.visit_order, orientation, max_boundary=0)

    visited, blocked_vertex, scanned = _blocked_traversal(h, first, params.delta)
    _count(stats, first.edges_scanned + scanned)
    if scanned > params.delta:
        return None

    members = set(visited)
    if blocked_vertex is not None:
        members.add(blocked_vertex)
    component = _component(h, members, orientation, max_boundary=h.m)
    tails = {h.tail(e) for e in component.boundary}
    if len(tails) > 1 or u in tails:
        raise InvariantViolation(
            f"vertex component of {u} has boundary edges leaving from {sorted(tails)}"
        )
    component.separating_vertex = tails.pop() if tails else None
    return component


def one_vertex_out(
    g: Digraph, u: VertexId, delta: int, stats: Optional[SearchStats] = None
) -> Optional[IsolatedComponent]:
    return _one_vertex(g, u, delta, "out", stats)


def one_vertex_in(
    g: Digraph, u: VertexId, delta: int, stats: Optional[SearchStats] = None
) -> Optional[IsolatedComponent]:
    return _one_vertex(g, u, delta, "in", stats)


# 🧵 5. (k-1) edges out / in
def _k_edge_search(
    h: Digraph,
    u: VertexId,
    params: LocalSearchParams,
    overlay: ResidualOverlay,
    depth: int,
    stats: SearchStats,
) -> Optional[List[VertexId]]:
    cursor = DfsCursor(h, u, overlay)
    try:
        for _ in range(2 * params.k_prime + 1):
            added = cursor.extend(params.delta + 1)
            if added <= params.delta:
                return cursor.visit_order
            if depth <= params.k_prime:
                # reverse the tree path down to the NCA of the chunk and search again
                branch = apply_path_reversal(overlay, cursor.path_to_turning_vertex())
                found = _k_edge_search(h, u, params, branch, depth + 1, stats)
                if found is not None:
                    return found
        return None
    finally:
        stats.edges_scanned += cursor.edges_scanned


def _k_edge(
    g: Digraph,
    u: VertexId,
    delta: int,
    k: int,
    orientation: Orientation,
    stats: Optional[SearchStats],
) -> Optional[IsolatedComponent]:
    params = LocalSearchParams(delta=delta, k=k)
    h = _oriented(g, orientation)
    local = SearchStats()
    found = _k_edge_search(h, u, params, empty_overlay(h), 1, local)
    _count(stats, local.edges_scanned)
    if found is None:
        return None
    return _component(h, found, orientation, max_boundary=params.k_prime)


def k_edge_out(
    g: Digraph, u: VertexId, delta: int, k: int, stats: Optional[SearchStats] = None
) -> Optional[IsolatedComponent]:
    return _k_edge(g, u, delta, k, "out", stats)


def k_edge_in(
    g: Digraph, u: VertexId, delta: int, k: int, stats: Optional[SearchStats] = None
) -> Optional[IsolatedComponent]:
    return _k_edge(g, u, delta, k, "in", stats)
