"""
Rendering of command results as text tables, JSON, CSV or markdown.

Every command builds a Report (rows plus the formulas they come from);
rendering is deterministic so repeated runs give byte-identical output.
"""

import json
from typing import Any, Dict, List, Optional

import pandas as pd
from pydantic import BaseModel, Field

from src.category_o.config import OUTPUT_SCHEMA_VERSION


class Report(BaseModel):
    """Output of one command, independent of the output format."""
    command: str
    title: str
    type_label: str
    rank: int
    columns: List[str] = Field(description="Column order for text, CSV and markdown output")
    rows: List[Dict[str, Any]] = Field(default_factory=list)
    formulas: Dict[str, str] = Field(default_factory=dict, description="Statement behind each column or family")
    metadata: Dict[str, Any] = Field(default_factory=dict)
    plain: Optional[str] = Field(default=None, description="Replaces the text table when set")


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value) or "e"
    return str(value)


def _flat_rows(report: Report) -> List[List[str]]:
    return [[_cell(row.get(column)) for column in report.columns] for row in report.rows]


def render_json(report: Report) -> str:
    document = {
        "schema": OUTPUT_SCHEMA_VERSION,
        "command": report.command,
        "type": report.type_label,
        "rank": report.rank,
        "formulas": report.formulas,
        "metadata": report.metadata,
        "rows": report.rows,
    }
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_csv(report: Report) -> str:
    frame = pd.DataFrame(_flat_rows(report), columns=report.columns)
    return frame.to_csv(index=False, lineterminator="\n")


def render_markdown(report: Report) -> str:
    lines = [f"# {report.title}", ""]
    for key, value in report.metadata.items():
        lines.append(f"- **{key}**: {_cell(value)}")
    if report.metadata:
        lines.append("")
    lines.append("| " + " | ".join(report.columns) + " |")
    lines.append("|" + "|".join("---" for _ in report.columns) + "|")
    for row in _flat_rows(report):
        lines.append("| " + " | ".join(v.replace("|", "\\|") for v in row) + " |")
    if report.formulas:
        lines += ["", "## Formulas", ""]
        lines += [f"- `{key}`: {value}" for key, value in report.formulas.items()]
    return "\n".join(lines) + "\n"


def render_table(report: Report) -> str:
    if report.plain is not None:
        return report.plain + "\n"
    rows = _flat_rows(report)
    widths = [
        max([len(column)] + [len(row[k]) for row in rows])
        for k, column in enumerate(report.columns)
    ]
    lines = [report.title, ""]
    lines.append("  ".join(column.ljust(widths[k]) for k, column in enumerate(report.columns)).rstrip())
    lines.append("  ".join("-" * width for width in widths))
    for row in rows:
        lines.append("  ".join(value.ljust(widths[k]) for k, value in enumerate(row)).rstrip())
    if report.metadata:
        lines.append("")
        lines += [f"{key}: {_cell(value)}" for key, value in report.metadata.items()]
    return "\n".join(lines) + "\n"


RENDERERS = {
    "table": render_table,
    "json": render_json,
    "csv": render_csv,
    "markdown": render_markdown,
}


def render(report: Report, output_format: str) -> str:
    return RENDERERS[output_format](report)
