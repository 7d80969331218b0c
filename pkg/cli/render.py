"""
Rendering of command results as table, JSON or CSV.

Numbers are written in scientific notation with a fixed number of
significant digits, trailing zeros of the mantissa dropped
(``1.60200e-19`` -> ``1.602e-19``). Formatting never depends on the locale,
so identical invocations give byte-identical output.
"""

import csv
import io
import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from bohr import __version__


class Report(BaseModel):
    """Rows produced by one subcommand, plus what is needed to render them."""

    command: str
    constants: str
    columns: List[str]
    rows: List[Dict[str, Any]]
    csv_columns: Optional[List[str]] = None
    meta: Dict[str, Any] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)
    status: int = 0


def format_number(value, precision):
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, int):
        return str(value)
    if not isinstance(value, float):
        return str(value)
    text = f"{value:.{precision - 1}e}"
    mantissa, exponent = text.split("e")
    if "." in mantissa:
        mantissa = mantissa.rstrip("0")
        if mantissa.endswith("."):
            mantissa += "0"
    return f"{mantissa}e{exponent}"


def round_number(value, precision):
    if isinstance(value, float):
        return float(f"{value:.{precision - 1}e}")
    if isinstance(value, dict):
        return {key: round_number(v, precision) for key, v in value.items()}
    return value


def render_table(report, precision):
    cells = [[format_number(row[col], precision) for col in report.columns] for row in report.rows]
    widths = [max([len(col)] + [len(line[i]) for line in cells]) for i, col in enumerate(report.columns)]

    def join(parts):
        return "  ".join(part.ljust(width) for part, width in zip(parts, widths)).rstrip()

    lines = [join(report.columns), join(["-" * w for w in widths])]
    lines.extend(join(line) for line in cells)
    if report.notes:
        lines.append("")
        lines.extend(report.notes)
    return "\n".join(lines) + "\n"


def render_csv(report, precision):
    columns = report.csv_columns or report.columns
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in report.rows:
        writer.writerow([format_number(row[col], precision) for col in columns])
    return buffer.getvalue()


def render_json(report, precision):
    document = {
        "meta": {
            "command": report.command,
            "constants": report.constants,
            "precision": precision,
            "version": __version__,
            **round_number(report.meta, precision),
        },
        "data": [{col: round_number(row[col], precision) for col in report.columns} for row in report.rows],
    }
    return json.dumps(document, indent=2) + "\n"


RENDERERS = {
    "table": render_table,
    "json": render_json,
    "csv": render_csv,
}


def render(report, options):
    return RENDERERS[options.format](report, options.precision)
