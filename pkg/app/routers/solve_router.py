#######################################################################
# file: solve_router.py — decomposition over HTTP
# - POST /solve          JSON body (SolveRequest) → ComponentReport
# - POST /solve/upload   graph file upload + query parameters → ComponentReport
# Input problems come back as 400, broken runtime invariants as 500.
#######################################################################
import logging
from typing import Optional

from fastapi import APIRouter, File, HTTPException, Query, UploadFile

from app.models.digraph import Digraph, UndirectedGraph
from app.models.schemas import Algorithm, ComponentReport, Mode, SolveRequest
from app.services.errors import GraphInputError, KconnError
from app.services.solve_service import solve
from app.utils.graph_parser import parse_graph

logger = logging.getLogger(__name__)

router = APIRouter()


def _run(graph, mode: Mode, k: int, algorithm: Algorithm, delta: Optional[int], include_singletons: bool):
    try:
        return solve(graph, mode, k, algorithm, delta, include_singletons)
    except GraphInputError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    except KconnError as exc:
        logger.error("solve failed: %s", exc)
        raise HTTPException(status_code=500, detail=str(exc))


# 1️⃣ JSON body
@router.post("", response_model=ComponentReport)
def solve_json(request: SolveRequest):
    try:
        if request.directed:
            graph = Digraph.from_edge_list(request.n, request.edges)
        else:
            for a, b in request.edges:
                if not (0 <= a < request.n and 0 <= b < request.n):
                    raise GraphInputError(f"edge ({a}, {b}) has an endpoint outside [0, {request.n})")
            graph = UndirectedGraph(request.n, [(a, b) for a, b in request.edges if a != b])
    except GraphInputError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return _run(graph, request.mode, request.k, request.algorithm, request.delta, request.include_singletons)


# 2️⃣ File upload
@router.post("/upload", response_model=ComponentReport)
async def solve_upload(
    file: UploadFile = File(...),
    mode: Mode = Query("2ecs"),
    k: int = Query(2, ge=2),
    delta: Optional[int] = Query(None, ge=1),
    algorithm: Algorithm = Query("fast"),
    include_singletons: bool = Query(False),
):
    raw = await file.read()
    try:
        graph = parse_graph(raw.decode("utf-8"))
    except UnicodeDecodeError:
        raise HTTPException(status_code=400, detail="graph file must be UTF-8 text")
    except GraphInputError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return _run(graph, mode, k, algorithm, delta, include_singletons)
