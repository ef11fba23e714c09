##############################################################################
# File: search_models.py — value types produced and consumed by the algorithms
# DFS runs, residual overlays, isolated components, cuts, SCC partitions,
# work lists and split bookkeeping. No algorithms live here.
##############################################################################
from collections import deque
from dataclasses import dataclass, field
from typing import Deque, Dict, FrozenSet, Iterable, List, Literal, Optional, Set, Tuple, Union

from app.models.digraph import Digraph, EdgeId, VertexId
from app.services.errors import GraphInputError

Orientation = Literal["out", "in"]

# sorted, duplicate-free vertex ids of one graph
VertexSet = List[VertexId]


@dataclass
class SccDecomposition:
    """Components listed in a topological order of the condensation."""

    component_of: List[int]
    components: List[VertexSet]

    @property
    def count(self) -> int:
        return len(self.components)


@dataclass
class DfsRun:
    root: VertexId
    parent_edge: Dict[VertexId, EdgeId]
    parent: Dict[VertexId, VertexId]
    visit_order: List[VertexId]
    charge: Dict[VertexId, int]
    weight: Dict[VertexId, int]
    edges_scanned: int
    stopped_early: bool
    budget: int

    @property
    def vertices(self) -> Set[VertexId]:
        return set(self.visit_order)


@dataclass(frozen=True)
class ResidualOverlay:
    base: Digraph = field(compare=False, repr=False)
    reversed: FrozenSet[EdgeId] = frozenset()


@dataclass
class LocalSearchParams:
    delta: int
    k: int = 2

    def __post_init__(self):
        if self.delta < 1:
            raise GraphInputError(f"delta must be >= 1, got {self.delta}")
        if self.k < 2:
            raise GraphInputError(f"k must be >= 2, got {self.k}")

    @property
    def k_prime(self) -> int:
        return self.k - 1

    @property
    def chunk_budget(self) -> int:
        """ℓ(k', Δ) = (2k'+1)(Δ+1)."""
        return (2 * self.k_prime + 1) * (self.delta + 1)


@dataclass
class IsolatedComponent:
    vertices: FrozenSet[VertexId]
    boundary: Tuple[EdgeId, ...]
    orientation: Orientation
    separating_vertex: Optional[VertexId] = None

    @property
    def members(self) -> List[VertexId]:
        return sorted(self.vertices)


@dataclass
class BlockState:
    """Blocked vertices of a heavy path, addressed by their depth along it."""

    tree: DfsRun
    path: List[VertexId]
    frontier: int = 1  # path[frontier:] are blocked; path[0] is the root and never blocked
    position: Dict[VertexId, int] = field(default_factory=dict)

    def __post_init__(self):
        self.position = {v: i for i, v in enumerate(self.path)}

    def is_blocked(self, v: VertexId) -> bool:
        pos = self.position.get(v)
        return pos is not None and pos >= 1 and pos >= self.frontier

    def unblock_above(self, v: VertexId) -> List[VertexId]:
        """Unblock T[root, v] minus v; returns the vertices that changed state."""
        pos = self.position[v]
        if pos <= self.frontier:
            return []
        freed = self.path[max(self.frontier, 1):pos]
        self.frontier = pos
        return freed


@dataclass
class EdgeCut:
    edges: List[EdgeId]
    side_source: VertexSet

    def __len__(self) -> int:
        return len(self.edges)


@dataclass
class SeparationWitness:
    """What the global step removes: a strong bridge, a strong articulation point or a small cut."""

    kind: Literal["bridge", "articulation-point", "cut"]
    item: Union[EdgeId, VertexId, EdgeCut]

    @property
    def edges(self) -> List[EdgeId]:
        if self.kind == "bridge":
            return [self.item]
        if self.kind == "cut":
            return list(self.item.edges)
        return []


@dataclass
class MinCutResult:
    """Global directed edge connectivity capped at ``cap``."""

    value: int
    cap: int
    cut: Optional[EdgeCut] = None

    @property
    def capped(self) -> bool:
        return self.value >= self.cap


@dataclass
class SearchStats:
    searches: int = 0
    edges_scanned: int = 0
    recursion_depth: int = 0
    auxiliary_vertices: int = 0

    def merge(self, other: "SearchStats") -> None:
        self.searches += other.searches
        self.edges_scanned += other.edges_scanned
        self.recursion_depth = max(self.recursion_depth, other.recursion_depth)
        self.auxiliary_vertices += other.auxiliary_vertices


@dataclass
class WorkList:
    """FIFO of vertices; a vertex is pending at most once."""

    queue: Deque[VertexId] = field(default_factory=deque)
    pending: Set[VertexId] = field(default_factory=set)

    @classmethod
    def of(cls, vertices: Iterable[VertexId]) -> "WorkList":
        wl = cls()
        for v in vertices:
            wl.push(v)
        return wl

    def push(self, v: VertexId) -> None:
        if v not in self.pending:
            self.pending.add(v)
            self.queue.append(v)

    def pop(self) -> VertexId:
        v = self.queue.popleft()
        self.pending.discard(v)
        return v

    def __len__(self) -> int:
        return len(self.queue)

    def __bool__(self) -> bool:
        return bool(self.queue)


@dataclass
class SplitMap:
    """origin[v] is the original vertex that ``v`` stands for."""

    origin: List[VertexId]
    auxiliary: int = 0

    @classmethod
    def identity(cls, n: int) -> "SplitMap":
        return cls(origin=list(range(n)))
