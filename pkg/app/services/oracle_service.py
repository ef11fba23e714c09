##############################################################################
# File: oracle_service.py — slow, definitional answers for cross-checking
# - baseline_2ecs / baseline_2vcs / baseline_kecs: the simple fixpoint
#   decompositions (remove one bridge / articulation point / small cut per
#   SCC, refine by SCCs, repeat), O(mn) and worse
# - pairwise_edge_connectivity and exhaustive enumerate_isolated_components
# - verify_report / compare_reports / shrink_counterexample for the harness
#
# Nothing here calls the local searches or the solvers; only graph primitives,
# the naive cut routines and unit max-flow.
##############################################################################
import logging
from itertools import combinations
from typing import Callable, FrozenSet, List, Literal, Optional, Set

from app.models.digraph import Digraph, EdgeId, VertexId
from app.models.schemas import ComponentReport, Mode, OracleReport, ReportStats
from app.models.search_models import Orientation
from app.services.config import settings
from app.services.cut_service import naive_min_cut, unit_max_flow
from app.services.errors import GraphInputError, InvariantViolation, OracleDivergence, PreconditionError
from app.services.graph_service import induced_subgraph, strongly_connected_components

logger = logging.getLogger(__name__)


class _Tally:
    def __init__(self):
        self.scanned = 0
        self.rounds = 0

    def sccs(self, g: Digraph):
        self.scanned += g.m
        return strongly_connected_components(g)


def _oracle_report(
    mode: Mode, found: List[List[VertexId]], g: Digraph, k: int, tally: _Tally
) -> OracleReport:
    stats = ReportStats(
        mode=mode,
        algorithm="baseline",
        n=g.n,
        m=g.m,
        k=k,
        recursion_depth=tally.rounds,
        edges_scanned=tally.scanned,
        components=len(found),
    )
    logger.info("baseline %s: %d components, scanned=%d", mode, len(found), tally.scanned)
    return OracleReport(mode=mode, components=found, stats=stats)


# 🐢 1. Baseline decompositions
def _first_bridge(h: Digraph, tally: _Tally) -> Optional[EdgeId]:
    """Lowest-id edge whose deletion splits the strongly connected ``h``."""
    for e in h.edge_ids():
        h.delete_edge(e)
        split = tally.sccs(h).count > 1
        h.restore_edge(e)
        if split:
            return e
    return None


def baseline_2ecs(g: Digraph, include_singletons: bool = False) -> OracleReport:
    tally = _Tally()
    found: List[List[VertexId]] = []
    stack = list(tally.sccs(g).components)
    while stack:
        part = stack.pop()
        tally.rounds += 1
        h, members = induced_subgraph(g, part)
        bridge = _first_bridge(h, tally) if h.n > 1 else None
        if bridge is None:
            if len(part) >= (1 if include_singletons else 2):
                found.append(list(part))
            continue
        h.delete_edge(bridge)
        stack.extend([members[v] for v in comp] for comp in tally.sccs(h).components)
    return _oracle_report("2ecs", found, g, 2, tally)


def _first_articulation_point(h: Digraph, tally: _Tally) -> Optional[VertexId]:
    for v in range(h.n):
        rest, _ = induced_subgraph(h, (w for w in range(h.n) if w != v))
        if tally.sccs(rest).count > 1:
            return v
    return None


def baseline_2vcs(g: Digraph) -> OracleReport:
    tally = _Tally()
    found: Set[FrozenSet[VertexId]] = set()
    stack = [c for c in tally.sccs(g).components if len(c) >= 3]
    while stack:
        part = stack.pop()
        tally.rounds += 1
        h, members = induced_subgraph(g, part)
        x = _first_articulation_point(h, tally)
        if x is None:
            found.add(frozenset(part))
            continue
        rest, rest_members = induced_subgraph(h, (w for w in range(h.n) if w != x))
        for piece in tally.sccs(rest).components:
            # every 2VCS through this part lies inside one SCC of H∖x plus x
            candidate = [members[rest_members[i]] for i in piece] + [members[x]]
            sub, sub_members = induced_subgraph(g, candidate)
            for comp in tally.sccs(sub).components:
                if len(comp) >= 3:
                    stack.append([sub_members[i] for i in comp])
    return _oracle_report("2vcs", [sorted(s) for s in found], g, 2, tally)


def baseline_kecs(
    g: Digraph, k: int, include_singletons: bool = False, mode: Mode = "kecs"
) -> OracleReport:
    if k < 2:
        raise GraphInputError(f"k must be >= 2, got {k}")
    tally = _Tally()
    found: List[List[VertexId]] = []
    stack = list(tally.sccs(g).components)
    while stack:
        part = stack.pop()
        tally.rounds += 1
        h, members = induced_subgraph(g, part)
        result = naive_min_cut(h, k)
        tally.scanned += h.m * max(h.n - 1, 0)
        if result.capped or result.cut is None:
            if len(part) >= (1 if include_singletons else 2):
                found.append(list(part))
            continue
        for e in result.cut.edges:
            h.delete_edge(e)
        stack.extend([members[v] for v in comp] for comp in tally.sccs(h).components)
    return _oracle_report(mode, found, g, k, tally)


# 🔬 2. Definitional checks
def pairwise_edge_connectivity(g: Digraph, u: VertexId, v: VertexId, cap: int) -> int:
    """min(λ(u, v), λ(v, u)), capped at ``cap``."""
    if u == v:
        raise PreconditionError("pairwise connectivity needs two distinct vertices")
    forward, _ = unit_max_flow(g, u, v, cap)
    if forward == 0:
        return 0
    backward, _ = unit_max_flow(g, v, u, cap)
    return min(forward, backward)


def enumerate_isolated_components(
    g: Digraph,
    u: VertexId,
    k: int,
    orientation: Orientation,
    kind: Literal["edge", "vertex"] = "edge",
) -> List[FrozenSet[VertexId]]:
    """Every minimal set S ∋ u cut off by at most k-1 edges (or by one vertex x ≠ u).

    Exhaustive over subsets, so refused beyond settings.ENUMERATION_MAX_N vertices.
    """
    if g.n > settings.ENUMERATION_MAX_N:
        raise PreconditionError(
            f"enumeration over {g.n} vertices refused (limit {settings.ENUMERATION_MAX_N})"
        )
    h = g if orientation == "out" else g.reverse_view()
    arcs = h.live_pairs()
    others = [v for v in range(h.n) if v != u]

    def valid(inside: Set[VertexId]) -> bool:
        leaving = [(a, b) for a, b in arcs if a in inside and b not in inside]
        if kind == "edge":
            return len(leaving) <= k - 1
        tails = {a for a, _ in leaving}
        return u not in tails and len(tails) <= 1

    accepted: List[FrozenSet[VertexId]] = []
    for size in range(len(others) + 1):
        for extra in combinations(others, size):
            inside = frozenset((u,) + extra)
            if any(smaller < inside for smaller in accepted):
                continue
            if valid(set(inside)):
                accepted.append(inside)
    return sorted(accepted, key=lambda s: (len(s), sorted(s)))


def _is_strong(h: Digraph) -> bool:
    return h.n <= 1 or strongly_connected_components(h).count == 1


def verify_report(g: Digraph, report: ComponentReport, k: int = 2) -> None:
    """Check every reported component against its definition."""
    sets = [set(c) for c in report.components]
    for comp in sets:
        h, _ = induced_subgraph(g, comp)
        if not _is_strong(h):
            raise InvariantViolation(f"component {sorted(comp)} is not strongly connected")
        if report.mode == "2vcs":
            if len(comp) < 3:
                raise InvariantViolation(f"2vcs component {sorted(comp)} has fewer than 3 vertices")
            if _first_articulation_point(h, _Tally()) is not None:
                raise InvariantViolation(f"2vcs component {sorted(comp)} has an articulation point")
        elif h.n > 1:
            need = 2 if report.mode == "2ecs" else k
            if not naive_min_cut(h, need).capped:
                raise InvariantViolation(f"component {sorted(comp)} is not {need}-edge-connected")
    allowed = 1 if report.mode == "2vcs" else 0
    for a, b in combinations(sets, 2):
        if len(a & b) > allowed:
            raise InvariantViolation(
                f"components {sorted(a)} and {sorted(b)} share {len(a & b)} vertices"
            )


# ⚖️ 3. Divergence handling
def compare_reports(fast: ComponentReport, oracle: ComponentReport) -> None:
    mine, theirs = fast.as_sets(), oracle.as_sets()
    if mine == theirs:
        return
    only_fast = sorted(sorted(c) for c in mine - theirs)
    only_oracle = sorted(sorted(c) for c in theirs - mine)
    raise OracleDivergence(
        f"{fast.mode}: fast-only {only_fast}, oracle-only {only_oracle}"
    )


def _without_vertex(g: Digraph, v: VertexId) -> Digraph:
    pairs = [
        (a - (a > v), b - (b > v)) for a, b in g.live_pairs() if v not in (a, b)
    ]
    return Digraph.from_edge_list(g.n - 1, pairs)


def shrink_counterexample(g: Digraph, diverges: Callable[[Digraph], bool]) -> Digraph:
    """Greedily drop edges, then vertices, while ``diverges`` keeps returning True."""
    current = Digraph.from_edge_list(g.n, g.live_pairs())
    progress = True
    while progress:
        progress = False
        pairs = current.live_pairs()
        i = 0
        while i < len(pairs):
            candidate = Digraph.from_edge_list(current.n, pairs[:i] + pairs[i + 1:])
            if diverges(candidate):
                current, pairs, progress = candidate, pairs[:i] + pairs[i + 1:], True
            else:
                i += 1
        v = current.n - 1
        while v >= 0:
            candidate = _without_vertex(current, v)
            if diverges(candidate):
                current, progress = candidate, True
            v -= 1
    logger.warning("counterexample shrunk to n=%d m=%d", current.n, current.m)
    return current
