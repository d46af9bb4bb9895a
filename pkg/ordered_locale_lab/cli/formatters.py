"""Formatters for workbench reports.

JSON is the canonical output. The ascii format prints Rich tables (plain text
in NO_COLOR mode) for locale reports and character pictures for grids.
"""

import json
import os

from rich.table import Table

from ordered_locale_lab.spacetime import DomainReport, GridSpacetime, render_ascii

_STATUS_STYLE = {
    "holds": "green",
    "covered": "green",
    "violated": "red",
    "not_covered": "red",
    "unknown": "yellow",
}


def is_plain_mode() -> bool:
    """Check if plain text mode is enabled (NO_COLOR env var)."""
    return os.getenv("NO_COLOR") is not None


def dump_json(data: dict) -> str:
    """Serialize a report; key order is insertion order so output is byte-stable."""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _styled(status: str) -> str:
    style = _STATUS_STYLE.get(status)
    return f"[{style}]{status}[/{style}]" if style else status


def _witness(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, list):
        return " ".join(_witness(v) if isinstance(v, list) else str(v) for v in value)
    return str(value)


def _plain_rows(title: str, header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = [title, "=" * len(title)]
    lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def format_table(title: str, header: list[str], rows: list[list[str]], status_column: int | None = None) -> str | Table:
    """Rows as a Rich table, or as aligned plain text in NO_COLOR mode.

    Args:
        title: Table title
        header: Column names
        rows: Cell strings
        status_column: Column whose values are coloured by status
    """
    if is_plain_mode():
        return _plain_rows(title, header, rows)
    table = Table(title=title)
    for i, name in enumerate(header):
        table.add_column(name, style="cyan" if i == 0 else None)
    for row in rows:
        cells = list(row)
        if status_column is not None:
            cells[status_column] = _styled(cells[status_column])
        table.add_row(*cells)
    return table


def format_axioms(data: dict) -> str | Table:
    rows = [
        [a["symbol"], a["status"], a["method"], _witness(a["witness"]), a["detail"]]
        for a in data["axioms"]
    ]
    return format_table(
        f"Axioms of {data['input']}", ["Axiom", "Status", "Method", "Witness", "Detail"], rows, status_column=1
    )


def format_cover(data: dict) -> str | Table:
    verdict = data["verdict"]
    rows = [
        ["outcome", verdict.get("outcome") or ("covered" if verdict.get("covered") else "not_covered")],
        ["reason", verdict.get("reason", "")],
        ["witness", _witness(verdict.get("witness"))],
    ]
    if "certificates" in verdict:
        rows.append(["certificates", str(len(verdict["certificates"]))])
    rows.extend([f"bound {k}", str(v)] for k, v in data["bounds"].items())
    return format_table(f"Coverage on {data['input']} ({data['semantics']})", ["Field", "Value"], rows, status_column=None)


def format_rows(title: str, pairs: dict) -> str | Table:
    """Key/value report, one row per entry."""
    return format_table(title, ["Field", "Value"], [[k, _witness(v)] for k, v in pairs.items()])


def format_gt(data: dict) -> str | Table:
    rows = [
        [r["axiom"], r["status"], str(r["instances"]), str(r["unknown"]), _witness(r["witness"])]
        for r in data["axioms"]
    ]
    return format_table(
        f"Topology axioms of {data['input']} ({data['topology']})",
        ["Axiom", "Status", "Instances", "Unknown", "Witness"],
        rows,
        status_column=1,
    )


def format_domain_report(G: GridSpacetime, report: DomainReport, mismatches: list[str] | None = None) -> str:
    """Grid picture followed by domain sizes, strict pairs and anomalies, as plain text."""
    lines = [f"{G.name}  {G.width}x{G.height}  slopes {G.up_slope}/{G.down_slope}", ""]
    lines.append(render_ascii(G, report.region, report).rstrip("\n"))
    lines.append("")
    for name, cells in report.domains.items():
        size = report.unavailable.get(name, "unavailable") if cells is None else str(len(cells))
        lines.append(f"{name:<15} {size}")
    for entry in report.strict_pairs:
        lines.append(f"strict  {entry.left} < {entry.right}  at {entry.to_dict()['witness']}")
    for entry in report.violations:
        lines.append(f"VIOLATED  {entry.left} <= {entry.right}  at {entry.to_dict()['witness']}")
    if report.undecided:
        lines.append(f"undecided {len(report.undecided)} cells")
    for problem in mismatches or []:
        lines.append(f"MISMATCH  {problem}")
    return "\n".join(lines) + "\n"
