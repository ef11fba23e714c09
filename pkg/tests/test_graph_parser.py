import pytest

from app.models.digraph import Digraph, UndirectedGraph
from app.services.errors import GraphInputError
from app.utils.graph_parser import parse_graph, read_graph, write_graph

TWIN_CYCLES = """\
# twin cycles
6 8 d
0 1
1 2
2 0
3 4
4 5
5 3
2 3   # link
5 0
"""


def test_parse_directed(fix_a: Digraph) -> None:
    g = parse_graph(TWIN_CYCLES)
    assert isinstance(g, Digraph)
    assert g.live_pairs() == fix_a.live_pairs()


def test_parse_undirected_drops_loops() -> None:
    g = parse_graph("3 3 u\n0 1\n1 1\n1 2\n")
    assert isinstance(g, UndirectedGraph)
    assert g == UndirectedGraph(3, [(0, 1), (1, 2)])


def test_parse_directed_drops_loops() -> None:
    g = parse_graph("2 2 d\n0 0\n0 1\n")
    assert g.live_pairs() == [(0, 1)]


def test_parse_empty_graph() -> None:
    g = parse_graph("0 0 d\n")
    assert (g.n, g.m) == (0, 0)


@pytest.mark.parametrize(
    "text, line",
    [
        ("", None),
        ("3 1\n0 1\n", 1),
        ("3 1 x\n0 1\n", 1),
        ("three 1 d\n0 1\n", 1),
        ("-1 0 d\n", 1),
        ("3 1 d\n0 1 2\n", 2),
        ("3 1 d\n\n0 a\n", 3),
        ("3 1 d\n0 3\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text: str, line) -> None:
    with pytest.raises(GraphInputError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert info.value.exit_code == 1


def test_parse_rejects_edge_count_mismatch() -> None:
    with pytest.raises(GraphInputError, match="declares 3 edges"):
        parse_graph("3 3 d\n0 1\n1 2\n")


def test_write_then_read(tmp_path, fix_a: Digraph) -> None:
    fix_a.delete_edge(6)
    path = tmp_path / "g.txt"
    path.write_text(write_graph(fix_a), encoding="utf-8")
    back = read_graph(str(path))
    assert back.n == 6
    assert back.live_pairs() == fix_a.live_pairs()


def test_write_undirected() -> None:
    assert write_graph(UndirectedGraph(3, [(0, 1), (2, 1)])) == "3 2 u\n0 1\n2 1\n"
