##############################################################################
# File: decomposition_service.py — maximal 2ECS / 2VCS / kECS decomposition
# - max_2ecs:            local 1-edge searches + one strong bridge per SCC
# - max_2vcs:            local 1-vertex searches + split() at articulation points
# - max_kecs:            local (k-1)-edge searches + one small cut per SCC
# - max_kecs_undirected: bidirect the edges, Δ = ⌈m/√n⌉, then max_kecs
#
# Each call works on its own copy of the input. Recursion is driven by an
# explicit task stack; every task owns a strongly connected subgraph with
# vertices renumbered 0..n-1 and an ``origin`` list mapping them back to
# input ids. Δ and the loop guard are fixed once from the input size m₀.
##############################################################################
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Set

from app.models.digraph import Digraph, VertexId
from app.models.schemas import ComponentReport, Mode, ReportStats
from app.models.search_models import (
    IsolatedComponent,
    LocalSearchParams,
    SearchStats,
    SeparationWitness,
    SplitMap,
    WorkList,
)
from app.services.config import settings
from app.services.cut_service import small_edge_cut, strong_articulation_points, strong_bridges
from app.services.errors import GraphInputError, InvariantViolation
from app.services.graph_service import (
    crossing_edges,
    induced_subgraph,
    strongly_connected_components,
)
from app.services.local_search_service import (
    k_edge_in,
    k_edge_out,
    one_edge_in,
    one_edge_out,
    one_vertex_in,
    one_vertex_out,
)

logger = logging.getLogger(__name__)

Search = Callable[[Digraph, VertexId], Optional[IsolatedComponent]]
Separator = Callable[[Digraph], Optional[SeparationWitness]]


# 🧾 1. Per-call state
@dataclass
class _Task:
    graph: Digraph
    origin: List[VertexId]
    seeds: List[VertexId]
    depth: int = 1


@dataclass
class _Run:
    mode: Mode
    k: int
    delta: int
    guard: int
    m0: int
    default_delta: bool
    min_size: int
    stats: SearchStats = field(default_factory=SearchStats)
    found: List[List[VertexId]] = field(default_factory=list)

    @property
    def depth_bound(self) -> float:
        factor = settings.DEPTH_FACTOR * (self.k if self.mode.startswith("kecs") else 1)
        return factor * math.sqrt(max(self.m0, 1))

    def enter(self, task: _Task) -> None:
        self.stats.recursion_depth = max(self.stats.recursion_depth, task.depth)
        logger.debug("%s task depth=%d n=%d m=%d", self.mode, task.depth, task.graph.n, task.graph.m)
        if settings.DEBUG_CHECKS and self.default_delta and task.depth > self.depth_bound:
            raise InvariantViolation(
                f"{self.mode} recursion depth {task.depth} exceeds {self.depth_bound:.1f}"
            )

    def report(self, origin: List[VertexId], members: Iterable[VertexId]) -> None:
        mapped = [origin[v] for v in members]
        if len(set(mapped)) != len(mapped):
            raise InvariantViolation(f"component maps to repeated input vertices: {sorted(mapped)}")
        if len(mapped) >= self.min_size:
            self.found.append(mapped)

    def check_shrink(self, child: Digraph, m_start: int, small_bound: int) -> None:
        """After the local phase, a separated child is small or lost more than Δ edges."""
        if not settings.DEBUG_CHECKS:
            return
        limit = max(m_start - self.delta, small_bound)
        if child.m > limit:
            raise InvariantViolation(
                f"{self.mode} child keeps {child.m} of {m_start} edges, limit {limit} with delta={self.delta}"
            )

    def note_split(self, g: Digraph, origin: List[VertexId]) -> None:
        """Count one split; live copies in ``g`` stay within 2m - n over its live originals."""
        self.stats.auxiliary_vertices += 1
        if not settings.DEBUG_CHECKS:
            return
        live = [v for v in range(g.n) if _degree(g, v) > 0]
        originals = len({origin[v] for v in live})
        copies = len(live) - originals
        if copies > 2 * g.m - originals:
            raise InvariantViolation(
                f"{copies} live auxiliary vertices exceed 2m-n = {2 * g.m - originals}"
            )


def _default_delta(m0: int) -> int:
    return max(1, math.isqrt(m0))


def _check_delta(delta: Optional[int]) -> None:
    if delta is not None and delta < 1:
        raise GraphInputError(f"delta must be >= 1, got {delta}")


def _scc_children(
    g: Digraph, origin: List[VertexId], touched: Set[VertexId], depth: int = 1
) -> List[_Task]:
    """One task per SCC of ``g``; edges between SCCs are dropped and their endpoints seed the tasks."""
    scc = strongly_connected_components(g)
    seeds = set(touched)
    for e in g.edge_ids():
        a, b = g.endpoints(e)
        if scc.component_of[a] != scc.component_of[b]:
            seeds.add(a)
            seeds.add(b)
    tasks = []
    for comp in scc.components:
        sub, members = induced_subgraph(g, comp)
        tasks.append(
            _Task(
                graph=sub,
                origin=[origin[v] for v in members],
                seeds=[i for i, v in enumerate(members) if v in seeds],
                depth=depth,
            )
        )
    return tasks


def _isolate(g: Digraph, inside: Iterable[VertexId], work: WorkList, settled: Set[VertexId]) -> int:
    """Cut ``inside`` loose. Its members are settled: a later search from them stays inside."""
    inside = set(inside)
    settled.update(inside)
    removed = 0
    for e in crossing_edges(g, inside):
        g.delete_edge(e)
        a, b = g.endpoints(e)
        work.push(a)
        work.push(b)
        removed += 1
    return removed


def _build_report(run: _Run, n: int, m: int) -> ComponentReport:
    stats = ReportStats(
        mode=run.mode,
        algorithm="fast",
        n=n,
        m=m,
        k=run.k,
        delta=run.delta,
        guard=run.guard,
        recursion_depth=run.stats.recursion_depth,
        searches=run.stats.searches,
        edges_scanned=run.stats.edges_scanned,
        components=len(run.found),
        auxiliary_vertices=run.stats.auxiliary_vertices,
    )
    logger.info(
        "%s: %d components, depth=%d searches=%d scanned=%d",
        run.mode, stats.components, stats.recursion_depth, stats.searches, stats.edges_scanned,
    )
    return ComponentReport(mode=run.mode, components=run.found, stats=stats)


# 🔗 2. Edge-connectivity driver (2ECS and kECS share it)
def _edge_task(
    task: _Task,
    run: _Run,
    search_out: Search,
    search_in: Search,
    separate: Separator,
    small_bound: int,
) -> List[_Task]:
    g = task.graph
    run.enter(task)
    run.stats.edges_scanned += g.m
    first_cut = separate(g)
    if first_cut is None:
        run.report(task.origin, range(g.n))
        return []

    m_start = g.m
    work = WorkList.of(task.seeds)
    settled: Set[VertexId] = set()
    while work and g.m > run.guard:
        u = work.pop()
        if u in settled:
            continue
        comp = search_out(g, u) or search_in(g, u)
        if comp is None:
            continue
        removed = _isolate(g, comp.vertices, work, settled)
        logger.debug("isolated %s-component of %d vertices at %d (%d edges cut)",
                     comp.orientation, len(comp.vertices), u, removed)

    seeds = work.pending | settled
    if g.m == m_start:
        # nothing was cut: g is still one SCC and first_cut still applies
        parts = [(_Task(g, task.origin, sorted(seeds), task.depth), first_cut)]
    else:
        parts = []
        for part in _scc_children(g, task.origin, seeds):
            run.stats.edges_scanned += part.graph.m
            parts.append((part, separate(part.graph)))

    children: List[_Task] = []
    for part, cut in parts:
        h = part.graph
        if cut is None:
            run.report(part.origin, range(h.n))
            continue
        ends = set(part.seeds)
        for e in cut.edges:
            h.delete_edge(e)
            ends.update(h.endpoints(e))
        logger.debug("removed %s %s from a part with %d vertices", cut.kind, cut.edges, h.n)
        for child in _scc_children(h, part.origin, ends, task.depth + 1):
            run.check_shrink(child.graph, m_start, small_bound)
            children.append(child)
    return children


def _solve_edges(
    g: Digraph,
    run: _Run,
    search_out: Search,
    search_in: Search,
    separate: Separator,
    small_bound: int,
) -> None:
    work = g.copy()
    stack = _scc_children(work, list(range(work.n)), set(range(work.n)))
    while stack:
        task = stack.pop()
        stack.extend(_edge_task(task, run, search_out, search_in, separate, small_bound))


def _first_bridge(h: Digraph) -> Optional[SeparationWitness]:
    bridges = strong_bridges(h)
    return SeparationWitness("bridge", bridges[0]) if bridges else None


def max_2ecs(g: Digraph, include_singletons: bool = False, delta: Optional[int] = None) -> ComponentReport:
    """Maximal 2-edge-connected subgraphs of ``g``."""
    _check_delta(delta)
    d = delta or _default_delta(g.m)
    run = _Run(
        mode="2ecs",
        k=2,
        delta=d,
        guard=2 * d,
        m0=g.m,
        default_delta=delta is None,
        min_size=1 if include_singletons else 2,
    )
    _solve_edges(
        g,
        run,
        lambda h, u: one_edge_out(h, u, d, run.stats),
        lambda h, u: one_edge_in(h, u, d, run.stats),
        _first_bridge,
        small_bound=2 * d,
    )
    return _build_report(run, g.n, g.m)


def _kecs_run(g: Digraph, k: int, d: int, run: _Run) -> None:
    def separate(h: Digraph) -> Optional[SeparationWitness]:
        cut = small_edge_cut(h, k)
        return SeparationWitness("cut", cut) if cut is not None else None

    _solve_edges(
        g,
        run,
        lambda h, u: k_edge_out(h, u, d, k, run.stats),
        lambda h, u: k_edge_in(h, u, d, k, run.stats),
        separate,
        small_bound=max(run.guard, LocalSearchParams(delta=d, k=k).chunk_budget),
    )


def max_kecs(
    g: Digraph, k: int, include_singletons: bool = False, delta: Optional[int] = None
) -> ComponentReport:
    """Maximal k-edge-connected subgraphs of ``g`` (k ≥ 2)."""
    if k < 2:
        raise GraphInputError(f"k must be >= 2, got {k}")
    _check_delta(delta)
    d = delta or _default_delta(g.m)
    run = _Run(
        mode="kecs",
        k=k,
        delta=d,
        guard=2 * k * d,
        m0=g.m,
        default_delta=delta is None,
        min_size=1 if include_singletons else 2,
    )
    _kecs_run(g, k, d, run)
    return _build_report(run, g.n, g.m)


def max_kecs_undirected(
    edges: Iterable[tuple],
    n: int,
    k: int,
    include_singletons: bool = False,
    delta: Optional[int] = None,
) -> ComponentReport:
    """Undirected maximal k-edge-connected subgraphs via the bidirected digraph."""
    if k < 2:
        raise GraphInputError(f"k must be >= 2, got {k}")
    _check_delta(delta)
    pairs = []
    for index, (a, b) in enumerate(edges):
        if not (0 <= a < n and 0 <= b < n):
            raise GraphInputError(f"edge {index} ({a}, {b}) has an endpoint outside [0, {n})", line=index)
        if a != b:
            pairs.append((a, b))
    g = Digraph(n)
    for a, b in pairs:
        g.add_edge(a, b)
        g.add_edge(b, a)
    d = delta or (max(1, math.ceil(len(pairs) / math.sqrt(n))) if n > 0 else 1)
    run = _Run(
        mode="kecs-undirected",
        k=k,
        delta=d,
        guard=2 * k * d,
        m0=g.m,
        default_delta=False,
        min_size=1 if include_singletons else 2,
    )
    _kecs_run(g, k, d, run)
    return _build_report(run, n, len(pairs))


# 🪓 3. Splitting a vertex
def split(g: Digraph, smap: SplitMap, x: VertexId, n_set: Iterable[VertexId]) -> VertexId:
    """Move every edge between ``x`` and ``n_set`` onto a new copy x' of ``x``."""
    near = set(n_set)
    before = g.m
    degree_before = _degree(g, x)
    x2 = g.add_vertex()
    smap.origin.append(smap.origin[x])
    smap.auxiliary += 1
    for e in list(g.out_edges(x)):
        if g.head(e) in near:
            g.reanchor_tail(e, x2)
    for e in list(g.in_edges(x)):
        if g.tail(e) in near:
            g.reanchor_head(e, x2)
    if g.m != before or _degree(g, x) + _degree(g, x2) != degree_before:
        raise InvariantViolation(f"split of {x} changed the edge count")
    return x2


def _degree(g: Digraph, v: VertexId) -> int:
    return sum(1 for _ in g.out_edges(v)) + sum(1 for _ in g.in_edges(v))


def _neighbours(g: Digraph, x: VertexId) -> Set[VertexId]:
    return set(g.successors(x)) | set(g.predecessors(x))


# 🧩 4. Vertex-connectivity driver
def _lowest_origin_piece(h: Digraph, v: VertexId, origin: List[VertexId]) -> List[VertexId]:
    """SCC of H∖v adjacent to ``v`` holding the smallest input id; vertex ids are those of ``h``.

    A piece with no neighbour of ``v`` would make the split a no-op.
    """
    near = _neighbours(h, v)
    sub, members = induced_subgraph(h, (w for w in range(h.n) if w != v))
    pieces = [[members[i] for i in comp] for comp in strongly_connected_components(sub).components]
    adjacent = [piece for piece in pieces if near.intersection(piece)]
    return min(adjacent, key=lambda piece: min(origin[w] for w in piece))


def _vertex_task(task: _Task, run: _Run) -> List[_Task]:
    g = task.graph
    run.enter(task)
    if g.n < 3:
        return []
    run.stats.edges_scanned += g.m
    if not strong_articulation_points(g):
        run.report(task.origin, range(g.n))
        return []

    smap = SplitMap(origin=task.origin)
    work = WorkList.of(task.seeds)
    settled: Set[VertexId] = set()
    while work and g.m > run.guard:
        u = work.pop()
        if u in settled:
            continue
        comp = one_vertex_out(g, u, run.delta, run.stats) or one_vertex_in(g, u, run.delta, run.stats)
        if comp is None:
            continue
        inside = set(comp.vertices)
        x = comp.separating_vertex
        if x is not None:
            inside.discard(x)
            x2 = split(g, smap, x, _neighbours(g, x) & inside)
            run.note_split(g, smap.origin)
            inside.add(x2)
            work.push(x)
            work.push(x2)
        removed = _isolate(g, inside, work, settled)
        logger.debug("isolated %s-component of %d vertices at %d (separator %s, %d edges cut)",
                     comp.orientation, len(comp.vertices), u, x, removed)

    children: List[_Task] = []
    for part in _scc_children(g, smap.origin, work.pending | settled):
        h = part.graph
        if h.n < 3:
            continue
        run.stats.edges_scanned += h.m
        points = strong_articulation_points(h)
        if not points:
            run.report(part.origin, range(h.n))
            continue
        witness = SeparationWitness("articulation-point", points[0])
        v = witness.item
        piece = _lowest_origin_piece(h, v, part.origin)
        hmap = SplitMap(origin=part.origin)
        v2 = split(h, hmap, v, piece)
        run.note_split(h, hmap.origin)
        logger.debug("split articulation point %d away from %d vertices", v, len(piece))
        for child in _scc_children(h, hmap.origin, set(part.seeds) | {v, v2}, task.depth + 1):
            if child.graph.n >= 3:
                children.append(child)
    return children


def max_2vcs(g: Digraph, delta: Optional[int] = None) -> ComponentReport:
    """Maximal 2-vertex-connected subgraphs (≥ 3 vertices, may share one vertex)."""
    _check_delta(delta)
    d = delta or _default_delta(g.m)
    run = _Run(
        mode="2vcs",
        k=2,
        delta=d,
        guard=2 * d,
        m0=g.m,
        default_delta=delta is None,
        min_size=3,
    )
    work = g.copy()
    stack = [t for t in _scc_children(work, list(range(work.n)), set(range(work.n))) if t.graph.n >= 3]
    while stack:
        stack.extend(_vertex_task(stack.pop(), run))
    return _build_report(run, g.n, g.m)
