##############################################################################
# File: solve_service.py — one entry point for the CLI, the API and the bench
# graph + mode + algorithm → ComponentReport, plus the fast-vs-baseline
# cross-check that shrinks a counterexample on divergence.
##############################################################################
import logging
from typing import Optional, Tuple, Union

from app.models.digraph import Digraph, UndirectedGraph
from app.models.schemas import Algorithm, ComponentReport, Mode
from app.services.decomposition_service import max_2ecs, max_2vcs, max_kecs, max_kecs_undirected
from app.services.errors import GraphInputError, OracleDivergence
from app.services.oracle_service import (
    baseline_2ecs,
    baseline_2vcs,
    baseline_kecs,
    compare_reports,
    shrink_counterexample,
)

logger = logging.getLogger(__name__)

Graph = Union[Digraph, UndirectedGraph]


def _check_shape(graph: Graph, mode: Mode) -> None:
    undirected = isinstance(graph, UndirectedGraph)
    if undirected != (mode == "kecs-undirected"):
        kind = "undirected" if undirected else "directed"
        raise GraphInputError(f"mode {mode} does not accept a {kind} graph")


def solve(
    graph: Graph,
    mode: Mode,
    k: int = 2,
    algorithm: Algorithm = "fast",
    delta: Optional[int] = None,
    include_singletons: bool = False,
) -> ComponentReport:
    _check_shape(graph, mode)
    if mode in ("kecs", "kecs-undirected") and k < 2:
        raise GraphInputError(f"k must be >= 2, got {k}")
    logger.debug("solve mode=%s k=%d algorithm=%s graph=%r", mode, k, algorithm, graph)

    if algorithm == "fast":
        if mode == "2ecs":
            return max_2ecs(graph, include_singletons=include_singletons, delta=delta)
        if mode == "2vcs":
            return max_2vcs(graph, delta=delta)
        if mode == "kecs":
            return max_kecs(graph, k, include_singletons=include_singletons, delta=delta)
        return max_kecs_undirected(
            graph.edges, graph.n, k, include_singletons=include_singletons, delta=delta
        )

    if mode == "2ecs":
        return baseline_2ecs(graph, include_singletons=include_singletons)
    if mode == "2vcs":
        return baseline_2vcs(graph)
    if mode == "kecs":
        return baseline_kecs(graph, k, include_singletons=include_singletons)
    return baseline_kecs(
        graph.bidirected(), k, include_singletons=include_singletons, mode="kecs-undirected"
    )


def _as_undirected(g: Digraph) -> UndirectedGraph:
    return UndirectedGraph(g.n, g.live_pairs())


def _as_digraph(graph: Graph) -> Digraph:
    if isinstance(graph, UndirectedGraph):
        return Digraph.from_edge_list(graph.n, graph.edges)
    return graph


def cross_check(
    graph: Graph,
    mode: Mode,
    k: int = 2,
    delta: Optional[int] = None,
    include_singletons: bool = False,
) -> Tuple[ComponentReport, ComponentReport]:
    """Run fast and baseline; on disagreement raise OracleDivergence with a shrunk graph."""
    fast = solve(graph, mode, k, "fast", delta, include_singletons)
    oracle = solve(graph, mode, k, "baseline", delta, include_singletons)
    try:
        compare_reports(fast, oracle)
    except OracleDivergence as exc:
        undirected = isinstance(graph, UndirectedGraph)

        def diverges(candidate: Digraph) -> bool:
            probe = _as_undirected(candidate) if undirected else candidate
            mine = solve(probe, mode, k, "fast", delta, include_singletons)
            theirs = solve(probe, mode, k, "baseline", delta, include_singletons)
            return mine.as_sets() != theirs.as_sets()

        smallest = shrink_counterexample(_as_digraph(graph), diverges)
        logger.warning("fast and baseline %s disagree: %s", mode, exc)
        raise OracleDivergence(str(exc), counterexample=smallest) from exc
    return fast, oracle
