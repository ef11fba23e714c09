##############################################################################
# File: dominator_service.py — immediate dominators of a flow graph
# Lengauer–Tarjan ("simple" version: path compression, no balancing),
# array based and iterative so deep flow graphs do not hit the recursion limit.
##############################################################################
from typing import List, Sequence


def immediate_dominators(
    succ: Sequence[Sequence[int]],
    pred: Sequence[Sequence[int]],
    root: int,
) -> List[int]:
    """idom[v] for every vertex; idom[root] == root, -1 when v is unreachable."""
    n = len(succ)

    # 1️⃣ DFS numbering from the root
    dfnum = [-1] * n
    vertex: List[int] = []
    parent: List[int] = []
    dfnum[root] = 0
    vertex.append(root)
    parent.append(-1)
    work = [(root, iter(succ[root]))]
    while work:
        v, it = work[-1]
        for w in it:
            if dfnum[w] < 0:
                dfnum[w] = len(vertex)
                vertex.append(w)
                parent.append(dfnum[v])
                work.append((w, iter(succ[w])))
                break
        else:
            work.pop()

    size = len(vertex)
    semi = list(range(size))
    label = list(range(size))
    ancestor = [-1] * size
    idom = [0] * size
    bucket: List[List[int]] = [[] for _ in range(size)]

    def _eval(v: int) -> int:
        if ancestor[v] < 0:
            return v
        # compress the ancestor chain of v
        chain = []
        while ancestor[ancestor[v]] >= 0:
            chain.append(v)
            v = ancestor[v]
        for x in reversed(chain):
            a = ancestor[x]
            if semi[label[a]] < semi[label[x]]:
                label[x] = label[a]
            ancestor[x] = ancestor[a]
        return label[chain[0]] if chain else label[v]

    # 2️⃣ Semidominators, in reverse DFS order
    for i in range(size - 1, 0, -1):
        for p in pred[vertex[i]]:
            j = dfnum[p]
            if j < 0:
                continue
            u = _eval(j)
            if semi[u] < semi[i]:
                semi[i] = semi[u]
        bucket[semi[i]].append(i)
        par = parent[i]
        ancestor[i] = par
        for v in bucket[par]:
            u = _eval(v)
            idom[v] = u if semi[u] < semi[v] else par
        bucket[par].clear()

    # 3️⃣ Fix up deferred immediate dominators
    for i in range(1, size):
        if idom[i] != semi[i]:
            idom[i] = idom[idom[i]]

    result = [-1] * n
    result[root] = root
    for i in range(1, size):
        result[vertex[i]] = vertex[idom[i]]
    return result
