##############################################################################
# File: graph_parser.py — the graph file format
#   first line:   n m d|u
#   then m lines: tail head        (0-based ids, whitespace separated)
# '#' starts a comment anywhere on a line; blank lines are ignored.
# Edge ids follow line order. Self-loops are accepted and dropped.
##############################################################################
from typing import List, Tuple, Union

from app.models.digraph import Digraph, UndirectedGraph
from app.services.errors import GraphInputError


def _content_lines(text: str) -> List[Tuple[int, List[str]]]:
    rows = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            rows.append((number, body))
    return rows


def _int(token: str, number: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphInputError(f"{what} must be an integer, got {token!r}", line=number) from None


def parse_graph(text: str) -> Union[Digraph, UndirectedGraph]:
    rows = _content_lines(text)
    if not rows:
        raise GraphInputError("empty graph file: expected a header 'n m d|u'")

    number, header = rows[0]
    if len(header) != 3 or header[2] not in ("d", "u"):
        raise GraphInputError(f"header must be 'n m d|u', got {' '.join(header)!r}", line=number)
    n = _int(header[0], number, "vertex count")
    m = _int(header[1], number, "edge count")
    if n < 0 or m < 0:
        raise GraphInputError("vertex and edge counts must be non-negative", line=number)

    pairs: List[Tuple[int, int]] = []
    for number, fields in rows[1:]:
        if len(fields) != 2:
            raise GraphInputError(f"expected 'tail head', got {' '.join(fields)!r}", line=number)
        tail = _int(fields[0], number, "tail")
        head = _int(fields[1], number, "head")
        if not (0 <= tail < n and 0 <= head < n):
            raise GraphInputError(f"vertex id outside [0, {n}) in edge ({tail}, {head})", line=number)
        pairs.append((tail, head))

    if len(pairs) != m:
        raise GraphInputError(f"header declares {m} edges but the file lists {len(pairs)}")

    if header[2] == "u":
        return UndirectedGraph(n, [(a, b) for a, b in pairs if a != b])
    return Digraph.from_edge_list(n, pairs)


def read_graph(path: str) -> Union[Digraph, UndirectedGraph]:
    with open(path, "r", encoding="utf-8") as f:
        return parse_graph(f.read())


def write_graph(graph: Union[Digraph, UndirectedGraph]) -> str:
    """Inverse of parse_graph (live edges only)."""
    if isinstance(graph, UndirectedGraph):
        pairs, flag = graph.edges, "u"
    else:
        pairs, flag = graph.live_pairs(), "d"
    lines = [f"{graph.n} {len(pairs)} {flag}"]
    lines.extend(f"{a} {b}" for a, b in pairs)
    return "\n".join(lines) + "\n"
