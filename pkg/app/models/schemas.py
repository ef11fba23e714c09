##############################################################################
# File: schemas.py — API / report contracts (pydantic)
# What the solvers return, what the CLI emits, what the API accepts,
# and what the benchmark harness records.
##############################################################################
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

Mode = Literal["2ecs", "2vcs", "kecs", "kecs-undirected"]
Algorithm = Literal["fast", "baseline"]


class ReportStats(BaseModel):
    mode: Mode
    algorithm: Algorithm = "fast"
    n: int
    m: int
    k: int = 2
    delta: Optional[int] = None
    guard: Optional[int] = None
    recursion_depth: int = 0
    searches: int = 0
    edges_scanned: int = 0
    components: int = 0
    auxiliary_vertices: int = 0


class ComponentReport(BaseModel):
    mode: Mode
    components: List[List[int]] = Field(default_factory=list)
    stats: ReportStats
    provenance: Literal["fast", "oracle"] = "fast"

    @field_validator("components")
    @classmethod
    def _canonical(cls, value: List[List[int]]) -> List[List[int]]:
        # sorted members; components ordered by minimum member
        return sorted((sorted(c) for c in value), key=lambda c: (c[0] if c else -1, c))

    def as_sets(self) -> frozenset:
        return frozenset(frozenset(c) for c in self.components)


class OracleReport(ComponentReport):
    provenance: Literal["fast", "oracle"] = "oracle"


class SolveRequest(BaseModel):
    n: int = Field(ge=0)
    edges: List[Tuple[int, int]] = Field(default_factory=list)
    directed: bool = True
    mode: Mode = "2ecs"
    k: int = Field(default=2, ge=2)
    delta: Optional[int] = Field(default=None, ge=1)
    algorithm: Algorithm = "fast"
    include_singletons: bool = False


class BenchRecord(BaseModel):
    generator: str
    seed: int
    n: int
    m: int
    k: int
    mode: Mode
    algorithm: Algorithm
    wall_time: float
    edges_scanned: int
    recursion_depth: int
    components: int
    depth_bound: Optional[float] = None
    verified: Optional[bool] = None
