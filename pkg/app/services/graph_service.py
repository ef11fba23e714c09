##############################################################################
# File: graph_service.py — the traversal substrate every algorithm runs on
# - strongly connected components (iterative Tarjan)
# - induced subgraphs and reverse views
# - budget-bounded DFS with per-vertex charges and subtree weights w(v)
# - heavy-path extraction from a bounded DFS
#
# The bounded DFS is resumable (DfsCursor) so that the k-edge search can grow
# one tree chunk by chunk; bounded_dfs() is the one-shot wrapper.
##############################################################################
import logging
from typing import Dict, Iterable, List, Optional, Tuple

from app.models.digraph import Digraph, EdgeId, VertexId
from app.models.search_models import DfsRun, ResidualOverlay, SccDecomposition
from app.services.errors import InvariantViolation, PreconditionError

logger = logging.getLogger(__name__)


# 🧭 1. Strongly connected components
def strongly_connected_components(g: Digraph) -> SccDecomposition:
    n = g.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: List[VertexId] = []
    found: List[List[VertexId]] = []
    counter = 0

    for s in range(n):
        if index[s] >= 0:
            continue
        index[s] = low[s] = counter
        counter += 1
        stack.append(s)
        on_stack[s] = True
        work = [(s, g.successors(s))]
        while work:
            v, it = work[-1]
            descended = False
            for w in it:
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, g.successors(w)))
                    descended = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            work.pop()
            if work:
                p = work[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                found.append(sorted(comp))

    # Tarjan emits sinks first; flip to a topological order of the condensation
    found.reverse()
    component_of = [0] * n
    for i, comp in enumerate(found):
        for v in comp:
            component_of[v] = i
    return SccDecomposition(component_of=component_of, components=found)


def is_strongly_connected(g: Digraph) -> bool:
    return g.n <= 1 or strongly_connected_components(g).count == 1


# ✂️ 2. Views and subgraphs
def reverse_view(g: Digraph) -> Digraph:
    return g.reverse_view()


def induced_subgraph(g: Digraph, vertices: Iterable[VertexId]) -> Tuple[Digraph, List[VertexId]]:
    """G[S] with vertices renumbered 0..|S|-1 in increasing original id.

    Edge ids of the result follow the original edge-id order. The second
    element maps new vertex ids back to ids of ``g``.
    """
    members = sorted(set(vertices))
    local = {v: i for i, v in enumerate(members)}
    eids: List[EdgeId] = []
    for v in members:
        for e in g.out_edges(v):
            if g.head(e) in local:
                eids.append(e)
    eids.sort()
    sub = Digraph(len(members))
    for e in eids:
        sub.add_edge(local[g.tail(e)], local[g.head(e)])
    return sub, members


def crossing_edges(g: Digraph, vertices: Iterable[VertexId]) -> List[EdgeId]:
    """Live edges with exactly one endpoint in the set, in edge-id order."""
    inside = set(vertices)
    out: set = set()
    for v in inside:
        for e in g.out_edges(v):
            if g.head(e) not in inside:
                out.add(e)
        for e in g.in_edges(v):
            if g.tail(e) not in inside:
                out.add(e)
    return sorted(out)


def leaving_edges(g: Digraph, vertices: Iterable[VertexId]) -> List[EdgeId]:
    inside = set(vertices)
    return sorted(
        e for v in inside for e in g.out_edges(v) if g.head(e) not in inside
    )


# 🌲 3. Budget-bounded DFS
class DfsCursor:
    """A DFS from ``u`` that can be extended by a given number of scanned edges.

    Out-edges are examined in adjacency (insertion) order. Under an overlay an
    edge in ``overlay.reversed`` is traversed head→tail: it is skipped in its
    tail's list and offered from its head, after the head's own out-edges.
    Every examined edge is charged to the vertex it is scanned from.
    """

    def __init__(self, g: Digraph, u: VertexId, overlay: Optional[ResidualOverlay] = None):
        if overlay is not None and overlay.base is not g:
            raise PreconditionError("overlay belongs to a different graph")
        self.g = g
        self.root = u
        self._reversed = overlay.reversed if overlay is not None else frozenset()
        self.parent_edge: Dict[VertexId, EdgeId] = {}
        self.parent: Dict[VertexId, VertexId] = {}
        self.charge: Dict[VertexId, int] = {u: 0}
        self.visit_order: List[VertexId] = [u]
        # frame: [vertex, position in raw out list, position in raw in list]
        self.stack: List[List[int]] = [[u, 0, 0]]
        self.edges_scanned = 0
        self.low_water = 1

    def _advance(self, frame: List[int]) -> Optional[Tuple[EdgeId, VertexId]]:
        g, rev = self.g, self._reversed
        flags, tails, heads = g.alive_flags, g.tails, g.heads
        v = frame[0]
        out = g.raw_out(v)
        while frame[1] < len(out):
            e = out[frame[1]]
            frame[1] += 1
            if flags[e] and tails[e] == v and e not in rev:
                return e, heads[e]
        if rev:
            inn = g.raw_in(v)
            while frame[2] < len(inn):
                e = inn[frame[2]]
                frame[2] += 1
                if flags[e] and heads[e] == v and e in rev:
                    return e, tails[e]
        return None

    def has_pending_edges(self) -> bool:
        return any(self._advance(list(frame)) is not None for frame in reversed(self.stack))

    def extend(self, budget: int) -> int:
        """Scan up to ``budget`` more edges; returns how many were scanned."""
        g, rev = self.g, self._reversed
        flags, tails, heads = g.alive_flags, g.tails, g.heads
        charge, parent, parent_edge, order = self.charge, self.parent, self.parent_edge, self.visit_order
        scanned = 0
        stack = self.stack
        low_water = len(stack)
        while scanned < budget and stack:
            frame = stack[-1]
            v = frame[0]
            out = g.raw_out(v)
            e = -1
            # inlined _advance
            i = frame[1]
            while i < len(out):
                c = out[i]
                i += 1
                if flags[c] and tails[c] == v and c not in rev:
                    e, w = c, heads[c]
                    break
            frame[1] = i
            if e < 0 and rev:
                inn = g.raw_in(v)
                j = frame[2]
                while j < len(inn):
                    c = inn[j]
                    j += 1
                    if flags[c] and heads[c] == v and c in rev:
                        e, w = c, tails[c]
                        break
                frame[2] = j
            if e < 0:
                stack.pop()
                if len(stack) < low_water:
                    low_water = len(stack)
                continue
            scanned += 1
            charge[v] += 1
            if w not in charge:
                charge[w] = 0
                parent[w] = v
                parent_edge[w] = e
                order.append(w)
                stack.append([w, 0, 0])
        self.low_water = low_water
        self.edges_scanned += scanned
        return scanned

    @property
    def turning_vertex(self) -> VertexId:
        """Shallowest vertex the last extension retracted to (NCA of what it visited)."""
        if self.low_water < 1:
            raise PreconditionError("DFS finished; no turning vertex")
        return self.stack[self.low_water - 1][0]

    def path_to_turning_vertex(self) -> List[EdgeId]:
        return [self.parent_edge[frame[0]] for frame in self.stack[1:self.low_water]]

    def snapshot(self, budget: int) -> DfsRun:
        weight = dict(self.charge)
        for v in reversed(self.visit_order):
            if v != self.root:
                weight[self.parent[v]] += weight[v]
        stopped = self.edges_scanned >= budget and self.has_pending_edges()
        return DfsRun(
            root=self.root,
            parent_edge=dict(self.parent_edge),
            parent=dict(self.parent),
            visit_order=list(self.visit_order),
            charge=dict(self.charge),
            weight=weight,
            edges_scanned=self.edges_scanned,
            stopped_early=stopped,
            budget=budget,
        )


def bounded_dfs(
    g: Digraph,
    overlay: Optional[ResidualOverlay],
    u: VertexId,
    budget: int,
) -> DfsRun:
    if budget < 0:
        raise PreconditionError(f"budget must be >= 0, got {budget}")
    cursor = DfsCursor(g, u, overlay)
    cursor.extend(budget)
    return cursor.snapshot(budget)


def reachable(g: Digraph, u: VertexId) -> List[VertexId]:
    seen = {u}
    todo = [u]
    while todo:
        v = todo.pop()
        for w in g.successors(v):
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return sorted(seen)


# 🪨 4. Heavy path
def heavy_path(run: DfsRun, threshold: int) -> List[VertexId]:
    """Root-anchored tree path of the vertices whose weight is ≥ threshold.

    Raises InvariantViolation when the qualifying vertices branch.
    """
    weight = run.weight
    if weight[run.root] < threshold:
        return []
    child_of: Dict[VertexId, VertexId] = {}
    count = 1
    for v in run.visit_order:
        if v == run.root or weight[v] < threshold:
            continue
        count += 1
        p = run.parent[v]
        if p in child_of:
            raise InvariantViolation(
                f"vertices {child_of[p]} and {v} both have weight >= {threshold} "
                f"under {p}; heavy vertices do not form a path"
            )
        child_of[p] = v
    path = [run.root]
    while path[-1] in child_of:
        path.append(child_of[path[-1]])
    if len(path) != count:
        raise InvariantViolation("heavy vertices are not anchored at the DFS root")
    return path


def heavy_edges(run: DfsRun, path: List[VertexId]) -> List[EdgeId]:
    return [run.parent_edge[v] for v in path[1:]]
