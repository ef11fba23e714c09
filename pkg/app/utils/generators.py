##############################################################################
# File: generators.py — reproducible graph families for tests and benchmarks
# - cycle-chain(cycles, length):         directed cycles linked both ways at their ends;
#                                        every cycle edge is a strong bridge
# - planted-cliques(count, size, bridges): bidirected cliques chained by
#                                        `bridges` bidirected links; for k ≤ size-1 and
#                                        bridges < k the cliques are the kECS answer
# - random-digraph(n, m):                m distinct arcs, no loops
# - bidirected(n, m):                    m distinct vertex pairs, both directions
# - random-undirected(n, m):             m distinct undirected pairs ("u" graphs)
# Randomness comes from numpy's default_rng(seed) only.
##############################################################################
from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple, Union

import numpy as np

from app.models.digraph import Digraph, UndirectedGraph
from app.services.errors import GraphInputError

Pair = Tuple[int, int]


def _need(condition: bool, message: str) -> None:
    if not condition:
        raise GraphInputError(message)


def _bi_clique(members: List[int]) -> List[Pair]:
    pairs: List[Pair] = []
    for a, b in combinations(members, 2):
        pairs.append((a, b))
        pairs.append((b, a))
    return pairs


def cycle_chain(cycles: int, length: int, seed: Optional[int] = None) -> Digraph:
    _need(cycles >= 1 and length >= 2, "cycle-chain needs cycles >= 1 and length >= 2")
    pairs: List[Pair] = []
    for c in range(cycles):
        first = c * length
        pairs.extend((first + j, first + (j + 1) % length) for j in range(length))
    for c in range(cycles - 1):
        last, nxt_first = c * length + length - 1, (c + 1) * length
        pairs.append((last, nxt_first))
        pairs.append((nxt_first + length - 1, c * length))
    return Digraph.from_edge_list(cycles * length, pairs)


def planted_cliques(count: int, size: int, bridges: int, seed: Optional[int] = None) -> Digraph:
    _need(count >= 1 and size >= 2, "planted-cliques needs count >= 1 and size >= 2")
    _need(0 <= bridges <= size, "planted-cliques needs 0 <= bridges <= size")
    rng = np.random.default_rng(seed) if seed is not None else None
    blocks = [list(range(i * size, (i + 1) * size)) for i in range(count)]
    pairs: List[Pair] = []
    for block in blocks:
        pairs.extend(_bi_clique(block))
    for left, right in zip(blocks, blocks[1:]):
        if rng is None:
            ends = [(left[(size - 1 + j) % size], right[j]) for j in range(bridges)]
        else:
            picks_a = rng.choice(size, bridges, replace=False)
            picks_b = rng.choice(size, bridges, replace=False)
            ends = [(left[int(a)], right[int(b)]) for a, b in zip(picks_a, picks_b)]
        for a, b in ends:
            pairs.append((a, b))
            pairs.append((b, a))
    return Digraph.from_edge_list(count * size, pairs)


def _distinct_arcs(n: int, m: int, rng: np.random.Generator) -> List[Pair]:
    _need(n >= 0 and m >= 0, "n and m must be non-negative")
    _need(m <= n * (n - 1), f"at most {n * (n - 1)} arcs fit on {n} vertices, asked for {m}")
    pairs = []
    for index in rng.choice(n * (n - 1), m, replace=False) if m else []:
        a, r = divmod(int(index), n - 1)
        pairs.append((a, r + (r >= a)))
    return pairs


def _distinct_pairs(n: int, m: int, rng: np.random.Generator) -> List[Pair]:
    _need(n >= 0 and m >= 0, "n and m must be non-negative")
    everything = list(combinations(range(n), 2))
    _need(m <= len(everything), f"at most {len(everything)} pairs fit on {n} vertices, asked for {m}")
    return [everything[int(i)] for i in rng.choice(len(everything), m, replace=False)] if m else []


def random_digraph(n: int, m: int, seed: Optional[int] = None) -> Digraph:
    return Digraph.from_edge_list(n, _distinct_arcs(n, m, np.random.default_rng(seed)))


def bidirected(n: int, m: int, seed: Optional[int] = None) -> Digraph:
    pairs: List[Pair] = []
    for a, b in _distinct_pairs(n, m, np.random.default_rng(seed)):
        pairs.append((a, b))
        pairs.append((b, a))
    return Digraph.from_edge_list(n, pairs)


def random_undirected(n: int, m: int, seed: Optional[int] = None) -> UndirectedGraph:
    return UndirectedGraph(n, _distinct_pairs(n, m, np.random.default_rng(seed)))


FAMILIES: Dict[str, Callable[..., Union[Digraph, UndirectedGraph]]] = {
    "cycle-chain": cycle_chain,
    "planted-cliques": planted_cliques,
    "random-digraph": random_digraph,
    "bidirected": bidirected,
    "random-undirected": random_undirected,
}


def generate(family: str, seed: Optional[int] = None, **params) -> Union[Digraph, UndirectedGraph]:
    builder = FAMILIES.get(family)
    if builder is None:
        raise GraphInputError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    try:
        return builder(seed=seed, **params)
    except TypeError as exc:
        raise GraphInputError(f"bad parameters for {family}: {exc}") from None
