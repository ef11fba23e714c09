##############################################################################
# File: bench_service.py — scaling probes and corpus cross-checks
# Runs (family, size, seed, mode) cells, times fast and baseline solvers,
# cross-checks them on small graphs and writes one CSV row per solver run.
# fitted_slopes() turns the rows into log-log exponents of edges scanned vs m.
##############################################################################
import logging
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np
import pandas as pd

from app.models.digraph import UndirectedGraph
from app.models.schemas import Algorithm, BenchRecord, ComponentReport, Mode
from app.services.config import settings
from app.services.errors import GraphInputError, OracleDivergence
from app.services.solve_service import cross_check, solve
from app.utils.generators import generate
from app.utils.graph_parser import write_graph

logger = logging.getLogger(__name__)

Cell = Tuple[str, int, int, Mode]


# 🧪 1. Family sizing: one knob n per family
def family_params(family: str, n: int) -> Dict[str, int]:
    if family == "cycle-chain":
        return {"cycles": max(1, n // 4), "length": 4}
    if family == "planted-cliques":
        return {"count": max(1, n // 5), "size": 5, "bridges": 2}
    if family == "random-digraph":
        return {"n": n, "m": min(3 * n, n * (n - 1))}
    if family in ("bidirected", "random-undirected"):
        return {"n": n, "m": min(2 * n, n * (n - 1) // 2)}
    raise GraphInputError(f"unknown family {family!r}")


def _fits(graph, mode: Mode) -> bool:
    return isinstance(graph, UndirectedGraph) == (mode == "kecs-undirected")


def depth_bound(mode: Mode, m: int, k: int) -> Optional[float]:
    if mode == "kecs-undirected":
        return None
    factor = settings.DEPTH_FACTOR * (k if mode == "kecs" else 1)
    return factor * math.sqrt(max(m, 1))


def _record(
    family: str, seed: int, mode: Mode, algorithm: Algorithm, k: int,
    report: ComponentReport, wall: float, verified: Optional[bool],
) -> BenchRecord:
    s = report.stats
    return BenchRecord(
        generator=family,
        seed=seed,
        n=s.n,
        m=s.m,
        k=k,
        mode=mode,
        algorithm=algorithm,
        wall_time=wall,
        edges_scanned=s.edges_scanned,
        recursion_depth=s.recursion_depth,
        components=s.components,
        depth_bound=depth_bound(mode, s.m, k) if algorithm == "fast" else None,
        verified=verified,
    )


def _dump_counterexample(exc: OracleDivergence, cell: Cell, out_dir: str) -> None:
    if exc.counterexample is None:
        return
    family, n, seed, mode = cell
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"counterexample-{mode}-{family}-{n}-{seed}.txt")
    graph = exc.counterexample
    if mode == "kecs-undirected":
        graph = UndirectedGraph(graph.n, graph.live_pairs())
    with open(path, "w", encoding="utf-8") as f:
        f.write(write_graph(graph))
    logger.warning("counterexample written to %s", path)


# ⏱️ 2. One cell
def _run_cell(cell: Cell, k: int, out_dir: str) -> List[BenchRecord]:
    family, n, seed, mode = cell
    graph = generate(family, seed=seed, **family_params(family, n))
    if not _fits(graph, mode):
        return []

    start = time.perf_counter()
    fast = solve(graph, mode, k, "fast")
    fast_wall = time.perf_counter() - start

    m = graph.m
    if m > settings.BASELINE_MAX_M:
        logger.warning("baseline skipped for %s n=%d: m=%d > %d", family, n, m, settings.BASELINE_MAX_M)
        return [_record(family, seed, mode, "fast", k, fast, fast_wall, None)]

    start = time.perf_counter()
    baseline = solve(graph, mode, k, "baseline")
    base_wall = time.perf_counter() - start

    verified = None
    if graph.n <= settings.ORACLE_MAX_N:
        try:
            if fast.as_sets() != baseline.as_sets():
                cross_check(graph, mode, k)  # raises with a shrunk counterexample
        except OracleDivergence as exc:
            _dump_counterexample(exc, cell, out_dir)
            raise
        verified = True

    logger.info("cell %s n=%d seed=%d %s: fast %.3fs, baseline %.3fs", family, n, seed, mode, fast_wall, base_wall)
    return [
        _record(family, seed, mode, "fast", k, fast, fast_wall, verified),
        _record(family, seed, mode, "baseline", k, baseline, base_wall, verified),
    ]


# 📊 3. The sweep
def run_benchmark(
    modes: Iterable[Mode],
    families: Iterable[str],
    sizes: Iterable[int],
    seeds: Iterable[int],
    k: int = 3,
    out: Optional[str] = None,
    threads: Optional[int] = None,
) -> List[BenchRecord]:
    cells: List[Cell] = [
        (family, n, seed, mode)
        for family in families
        for n in sizes
        for seed in seeds
        for mode in modes
    ]
    out_dir = os.path.dirname(out) if out else settings.BENCH_DIR
    workers = max(1, threads or settings.KCONN_THREADS)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        batches = list(pool.map(lambda cell: _run_cell(cell, k, out_dir or "."), cells))
    records = [r for batch in batches for r in batch]

    if out:
        frame = pd.DataFrame([r.model_dump() for r in records])
        frame.to_csv(out, index=False)
        slopes = fitted_slopes(records)
        summary = pd.DataFrame(
            [{"mode": mode, "algorithm": algo, "slope": slope} for (mode, algo), slope in sorted(slopes.items())]
        )
        summary.to_csv(_slopes_path(out), index=False)
        logger.info("wrote %d rows to %s", len(records), out)
    return records


def _slopes_path(out: str) -> str:
    stem, ext = os.path.splitext(out)
    return f"{stem}-slopes{ext or '.csv'}"


def fitted_slopes(records: Iterable[BenchRecord]) -> Dict[Tuple[str, str], float]:
    """Least-squares slope of log(edges scanned) against log(m), per (mode, algorithm)."""
    groups: Dict[Tuple[str, str], List[Tuple[float, float]]] = {}
    for r in records:
        if r.m > 0 and r.edges_scanned > 0:
            groups.setdefault((r.mode, r.algorithm), []).append((math.log(r.m), math.log(r.edges_scanned)))
    slopes: Dict[Tuple[str, str], float] = {}
    for key, points in groups.items():
        xs = np.array([p[0] for p in points])
        ys = np.array([p[1] for p in points])
        if np.unique(xs).size < 2:
            continue
        slope, _ = np.polyfit(xs, ys, 1)
        slopes[key] = float(slope)
    return slopes
