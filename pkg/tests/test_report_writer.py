import json

from app.models.schemas import ComponentReport, ReportStats
from app.utils.report_writer import emit_report


def _report(components) -> ComponentReport:
    stats = ReportStats(mode="2ecs", n=5, m=9, delta=3, guard=6, components=len(components))
    return ComponentReport(mode="2ecs", components=components, stats=stats)


def test_text_lines_are_canonical() -> None:
    assert emit_report(_report([[4, 3], [2, 0, 1]])) == b"0 1 2\n3 4\n"


def test_text_without_components_is_empty() -> None:
    assert emit_report(_report([])) == b""


def test_text_with_stats() -> None:
    lines = emit_report(_report([[0, 1]]), include_stats=True).decode().splitlines()
    assert lines[0] == "0 1"
    assert "# delta=3" in lines
    assert "# mode=2ecs" in lines
    assert all(line.startswith("# ") for line in lines[1:])


def test_json_carries_stats_and_provenance() -> None:
    payload = json.loads(emit_report(_report([[1, 0]]), fmt="json"))
    assert payload["components"] == [[0, 1]]
    assert payload["provenance"] == "fast"
    assert payload["stats"]["guard"] == 6
