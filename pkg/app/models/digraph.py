##############################################################################
# File: digraph.py — indexed directed multigraph
# Edges are identified by their insertion index (EdgeId) for their whole life:
# deletion is a tombstone, re-anchoring (split) rewrites an endpoint in place.
#
# Adjacency lists may hold stale entries after re-anchoring; every iterator
# filters on liveness *and* on the endpoint actually matching the vertex,
# so stale entries are invisible.
##############################################################################
from typing import Iterable, Iterator, List, Sequence, Tuple

from app.services.errors import GraphInputError

VertexId = int
EdgeId = int


class _Liveness:
    """Tombstone flags plus live count, shared between a graph and its reverse view."""

    __slots__ = ("flags", "count")

    def __init__(self):
        self.flags: List[bool] = []
        self.count: int = 0


class Digraph:
    __slots__ = ("_tails", "_heads", "_out", "_in", "_live")

    def __init__(self, n: int = 0):
        self._tails: List[VertexId] = []
        self._heads: List[VertexId] = []
        self._out: List[List[EdgeId]] = [[] for _ in range(n)]
        self._in: List[List[EdgeId]] = [[] for _ in range(n)]
        self._live = _Liveness()

    # 🧱 1. Construction
    @classmethod
    def from_edge_list(cls, n: int, pairs: Iterable[Tuple[int, int]]) -> "Digraph":
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        g = cls(n)
        for index, (tail, head) in enumerate(pairs):
            if not (0 <= tail < n and 0 <= head < n):
                raise GraphInputError(
                    f"edge {index} ({tail}, {head}) has an endpoint outside [0, {n})",
                    line=index,
                )
            if tail == head:
                continue
            g.add_edge(tail, head)
        return g

    def add_vertex(self) -> VertexId:
        self._out.append([])
        self._in.append([])
        return len(self._out) - 1

    def add_edge(self, tail: VertexId, head: VertexId) -> EdgeId:
        e = len(self._tails)
        self._tails.append(tail)
        self._heads.append(head)
        self._live.flags.append(True)
        self._live.count += 1
        self._out[tail].append(e)
        self._in[head].append(e)
        return e

    def copy(self) -> "Digraph":
        g = Digraph.__new__(Digraph)
        g._tails = list(self._tails)
        g._heads = list(self._heads)
        g._out = [list(a) for a in self._out]
        g._in = [list(a) for a in self._in]
        g._live = _Liveness()
        g._live.flags = list(self._live.flags)
        g._live.count = self._live.count
        return g

    # 🔁 2. Views
    def reverse_view(self) -> "Digraph":
        """Same edges and ids with tails/heads swapped; shares storage with ``self``."""
        r = Digraph.__new__(Digraph)
        r._tails = self._heads
        r._heads = self._tails
        r._out = self._in
        r._in = self._out
        r._live = self._live
        return r

    # 📏 3. Size and edge access
    @property
    def n(self) -> int:
        return len(self._out)

    @property
    def m(self) -> int:
        return self._live.count

    @property
    def edges(self) -> List[Tuple[VertexId, VertexId]]:
        return list(zip(self._tails, self._heads))

    def tail(self, e: EdgeId) -> VertexId:
        return self._tails[e]

    def head(self, e: EdgeId) -> VertexId:
        return self._heads[e]

    def endpoints(self, e: EdgeId) -> Tuple[VertexId, VertexId]:
        return self._tails[e], self._heads[e]

    def is_alive(self, e: EdgeId) -> bool:
        return self._live.flags[e]

    def edge_ids(self) -> List[EdgeId]:
        flags = self._live.flags
        return [e for e in range(len(flags)) if flags[e]]

    def live_pairs(self) -> List[Tuple[VertexId, VertexId]]:
        return [(self._tails[e], self._heads[e]) for e in self.edge_ids()]

    # 🔎 4. Adjacency
    def out_edges(self, v: VertexId) -> List[EdgeId]:
        flags, tails = self._live.flags, self._tails
        return [e for e in self._out[v] if flags[e] and tails[e] == v]

    def in_edges(self, v: VertexId) -> List[EdgeId]:
        flags, heads = self._live.flags, self._heads
        return [e for e in self._in[v] if flags[e] and heads[e] == v]

    def successors(self, v: VertexId) -> Iterator[VertexId]:
        heads = self._heads
        for e in self.out_edges(v):
            yield heads[e]

    def predecessors(self, v: VertexId) -> Iterator[VertexId]:
        tails = self._tails
        for e in self.in_edges(v):
            yield tails[e]

    def raw_out(self, v: VertexId) -> Sequence[EdgeId]:
        """Unfiltered out list (may contain dead or stale ids); for hot loops."""
        return self._out[v]

    def raw_in(self, v: VertexId) -> Sequence[EdgeId]:
        return self._in[v]

    @property
    def tails(self) -> Sequence[VertexId]:
        return self._tails

    @property
    def heads(self) -> Sequence[VertexId]:
        return self._heads

    @property
    def alive_flags(self) -> Sequence[bool]:
        return self._live.flags

    # ✂️ 5. Mutation (solver-owned copies only)
    def delete_edge(self, e: EdgeId) -> None:
        if self._live.flags[e]:
            self._live.flags[e] = False
            self._live.count -= 1

    def restore_edge(self, e: EdgeId) -> None:
        if not self._live.flags[e]:
            self._live.flags[e] = True
            self._live.count += 1

    def reanchor_tail(self, e: EdgeId, v: VertexId) -> None:
        self._tails[e] = v
        self._out[v].append(e)

    def reanchor_head(self, e: EdgeId, v: VertexId) -> None:
        self._heads[e] = v
        self._in[v].append(e)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


class UndirectedGraph:
    """Undirected multigraph as an edge list; solved through its bidirected digraph."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()):
        self.n = n
        self.edges: List[Tuple[VertexId, VertexId]] = [tuple(e) for e in edges]

    @property
    def m(self) -> int:
        return len(self.edges)

    def bidirected(self) -> Digraph:
        pairs = []
        for a, b in self.edges:
            pairs.append((a, b))
            pairs.append((b, a))
        return Digraph.from_edge_list(self.n, pairs)

    def __eq__(self, other) -> bool:
        return isinstance(other, UndirectedGraph) and (self.n, self.edges) == (other.n, other.edges)

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, m={self.m})"
