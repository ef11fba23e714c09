##############################################################################
# File: cut_service.py — the global-step primitives of the solvers
# - strong bridges and strong articulation points from dominator trees of
#   the flow graphs G_s and G^R_s
# - small directed edge cuts (< k edges) by capped unit-capacity max-flow
# - naive deletion / all-pairs-flow versions, kept as reference oracles
##############################################################################
import logging
from collections import deque
from typing import List, Optional, Set, Tuple

from app.models.digraph import Digraph, EdgeId, VertexId
from app.models.search_models import EdgeCut, MinCutResult
from app.services.config import settings
from app.services.dominator_service import immediate_dominators
from app.services.errors import GraphInputError, InvariantViolation, PreconditionError
from app.services.graph_service import (
    induced_subgraph,
    is_strongly_connected,
    leaving_edges,
    strongly_connected_components,
)

logger = logging.getLogger(__name__)

ROOT: VertexId = 0


def _require_strongly_connected(g: Digraph, what: str) -> None:
    if not is_strongly_connected(g):
        raise PreconditionError(f"{what} requires a strongly connected graph, got {g!r}")


# 🌉 1. Strong bridges
def _flow_graph_bridges(g: Digraph, live: List[EdgeId], reverse: bool) -> List[EdgeId]:
    """Bridges of the flow graph rooted at ROOT (of G^R when ``reverse``).

    Each edge gets a midpoint vertex; the edge is a bridge of the flow graph
    exactly when its midpoint immediately dominates the edge's far end.
    """
    n = g.n
    size = n + len(live)
    succ: List[List[int]] = [[] for _ in range(size)]
    pred: List[List[int]] = [[] for _ in range(size)]
    far: List[VertexId] = []
    for i, e in enumerate(live):
        a, b = g.endpoints(e)
        if reverse:
            a, b = b, a
        mid = n + i
        succ[a].append(mid)
        succ[mid].append(b)
        pred[mid].append(a)
        pred[b].append(mid)
        far.append(b)
    idom = immediate_dominators(succ, pred, ROOT)
    return [e for i, e in enumerate(live) if idom[far[i]] == n + i]


def strong_bridges(g: Digraph) -> List[EdgeId]:
    _require_strongly_connected(g, "strong_bridges")
    if g.n <= 1:
        return []
    live = g.edge_ids()
    found = set(_flow_graph_bridges(g, live, reverse=False))
    found.update(_flow_graph_bridges(g, live, reverse=True))
    return sorted(found)


# 📍 2. Strong articulation points
def strong_articulation_points(g: Digraph) -> List[VertexId]:
    _require_strongly_connected(g, "strong_articulation_points")
    if g.n < 3:
        raise PreconditionError("strong_articulation_points requires n >= 3")
    succ = [list(g.successors(v)) for v in range(g.n)]
    pred = [list(g.predecessors(v)) for v in range(g.n)]
    points: Set[VertexId] = set()
    for idom in (immediate_dominators(succ, pred, ROOT), immediate_dominators(pred, succ, ROOT)):
        points.update(d for v, d in enumerate(idom) if v != ROOT and d != ROOT)
    rest, _ = induced_subgraph(g, range(1, g.n))
    if not is_strongly_connected(rest):
        points.add(ROOT)
    return sorted(points)


# ✂️ 3. Small edge cuts
def _augmenting_flow(g: Digraph, s: VertexId, t: VertexId, cap: int) -> Tuple[int, Optional[Set[VertexId]]]:
    """Unit-capacity max-flow by DFS augmentation, stopped at ``cap``.

    Returns the flow value and, when it is below ``cap``, the residual
    source side (a minimum s-t cut).
    """
    used: Set[EdgeId] = set()
    value = 0
    while value < cap:
        via = {s: (-1, 0)}
        stack = [s]
        while stack and t not in via:
            v = stack.pop()
            for e in g.out_edges(v):
                w = g.head(e)
                if e not in used and w not in via:
                    via[w] = (e, 1)
                    stack.append(w)
            for e in g.in_edges(v):
                w = g.tail(e)
                if e in used and w not in via:
                    via[w] = (e, -1)
                    stack.append(w)
        if t not in via:
            return value, set(via)
        w = t
        while w != s:
            e, direction = via[w]
            if direction > 0:
                used.add(e)
                w = g.tail(e)
            else:
                used.discard(e)
                w = g.head(e)
        value += 1
    return value, None


def _bridge_cut(g: Digraph, bridge: EdgeId) -> EdgeCut:
    start = g.tail(bridge)
    side = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for e in g.out_edges(v):
            w = g.head(e)
            if e != bridge and w not in side:
                side.add(w)
                todo.append(w)
    return EdgeCut(edges=[bridge], side_source=sorted(side))


def _check_cut(g: Digraph, cut: EdgeCut) -> None:
    before = strongly_connected_components(g).count
    probe = g.copy()
    for e in cut.edges:
        probe.delete_edge(e)
    if strongly_connected_components(probe).count <= before:
        raise InvariantViolation(f"deleting cut {cut.edges} does not split the graph")


def small_edge_cut(g: Digraph, k: int) -> Optional[EdgeCut]:
    """Some directed edge cut with at most k-1 edges, or None."""
    if k < 2:
        raise GraphInputError(f"k must be >= 2, got {k}")
    _require_strongly_connected(g, "small_edge_cut")
    if g.n <= 1:
        return None
    cut: Optional[EdgeCut] = None
    if k == 2:
        bridges = strong_bridges(g)
        if bridges:
            cut = _bridge_cut(g, bridges[0])
    else:
        for v in range(1, g.n):
            for s, t in ((ROOT, v), (v, ROOT)):
                value, side = _augmenting_flow(g, s, t, k)
                if value < k:
                    cut = EdgeCut(edges=leaving_edges(g, side), side_source=sorted(side))
                    break
            if cut is not None:
                break
    if cut is not None and settings.DEBUG_CHECKS:
        _check_cut(g, cut)
    return cut


# 🐢 4. Reference oracles
def _scc_count(g: Digraph) -> int:
    return strongly_connected_components(g).count


def naive_strong_bridges(g: Digraph) -> List[EdgeId]:
    """Delete each live edge in turn and recount SCCs."""
    probe = g.copy()
    base = _scc_count(probe)
    bridges = []
    for e in probe.edge_ids():
        probe.delete_edge(e)
        if _scc_count(probe) > base:
            bridges.append(e)
        probe.restore_edge(e)
    return bridges


def naive_strong_articulation_points(g: Digraph) -> List[VertexId]:
    base = _scc_count(g)
    points = []
    for v in range(g.n):
        rest, _ = induced_subgraph(g, (w for w in range(g.n) if w != v))
        if _scc_count(rest) > base:
            points.append(v)
    return points


def unit_max_flow(g: Digraph, s: VertexId, t: VertexId, cap: int) -> Tuple[int, Optional[List[VertexId]]]:
    """Edmonds–Karp on unit capacities, stopped at ``cap``.

    Returns (value, source side of a minimum cut) or (cap, None).
    """
    flow: Set[EdgeId] = set()
    for value in range(cap):
        parent = {s: None}
        queue = deque([s])
        while queue and t not in parent:
            v = queue.popleft()
            for e in g.out_edges(v):
                if e not in flow and g.head(e) not in parent:
                    parent[g.head(e)] = (e, True)
                    queue.append(g.head(e))
            for e in g.in_edges(v):
                if e in flow and g.tail(e) not in parent:
                    parent[g.tail(e)] = (e, False)
                    queue.append(g.tail(e))
        if t not in parent:
            return value, sorted(parent)
        v = t
        while v != s:
            e, forward = parent[v]
            if forward:
                flow.add(e)
                v = g.tail(e)
            else:
                flow.discard(e)
                v = g.head(e)
    return cap, None


def naive_min_cut(g: Digraph, cap: int) -> MinCutResult:
    """Global directed edge connectivity, capped at ``cap``, with a witness cut."""
    best = MinCutResult(value=cap, cap=cap)
    for v in range(1, g.n):
        for s, t in ((ROOT, v), (v, ROOT)):
            value, side = unit_max_flow(g, s, t, best.value)
            if side is not None and value < best.value:
                best = MinCutResult(
                    value=value,
                    cap=cap,
                    cut=EdgeCut(edges=leaving_edges(g, side), side_source=side),
                )
                if value == 0:
                    return best
    return best
