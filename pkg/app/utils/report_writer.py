"""Component report emission: one line per component, or JSON with stats."""
import json
from typing import Literal

from app.models.schemas import ComponentReport

Format = Literal["text", "json"]


def emit_report(report: ComponentReport, fmt: Format = "text", include_stats: bool = False) -> bytes:
    if fmt == "json":
        payload = report.model_dump(mode="json")
        return (json.dumps(payload, sort_keys=True) + "\n").encode("utf-8")

    lines = [" ".join(str(v) for v in comp) for comp in report.components]
    if include_stats:
        stats = report.stats.model_dump(mode="json")
        lines.extend(f"# {key}={stats[key]}" for key in sorted(stats))
    return "".join(line + "\n" for line in lines).encode("utf-8")
