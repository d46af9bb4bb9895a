"""ASCII and SVG pictures of a grid, its regions and a domain report.

Time runs upwards in both: the last row is printed first.
"""

from collections.abc import Iterable

from ordered_locale_lab.spacetime.domains import DomainReport
from ordered_locale_lab.spacetime.grid import Cell, GridSpacetime, cell_label

CELL = 24
_FILL = {"hole": "#333333", "region": "#4a78c2", "cell": "#ffffff"}


def render_ascii(
    G: GridSpacetime, region: Iterable[Cell] = (), report: DomainReport | None = None
) -> str:
    """One character per cell: '#' hole, 'A' region, digit = domains holding the cell, '.' otherwise."""
    A = frozenset(region)
    lines = []
    for t in reversed(range(G.height)):
        row = []
        for x in range(G.width):
            cell = (x, t)
            if cell in G.holes:
                row.append("#")
            elif cell in A:
                row.append("A")
            elif report is not None and report.count(cell):
                row.append(str(report.count(cell)))
            else:
                row.append(".")
        lines.append("".join(row))
    return "\n".join(lines) + "\n"


def _centre(G: GridSpacetime, cell: Cell) -> tuple[float, float]:
    x, t = cell
    return (x + 0.5) * CELL, (G.height - 1 - t + 0.5) * CELL


def _cone_lines(G: GridSpacetime, cell: Cell) -> list[str]:
    """Dashed past-cone edges from the centre of cell down to row 0."""
    cx, cy = _centre(G, cell)
    drop = cell[1]
    bottom = (G.height - 0.5) * CELL
    lines = []
    for sign in (-1, 1):
        ex = cx + sign * drop * CELL / G.down_slope
        lines.append(
            f'<line x1="{cx:.1f}" y1="{cy:.1f}" x2="{ex:.1f}" y2="{bottom:.1f}" '
            'stroke="#c23b22" stroke-width="1.5" stroke-dasharray="4 3"/>'
        )
    return lines


def render_svg(
    G: GridSpacetime,
    region: Iterable[Cell] = (),
    target: Iterable[Cell] = (),
    report: DomainReport | None = None,
) -> str:
    """SVG with holes, the region, domain shading and the past cones of target cells."""
    A = frozenset(region)
    U = sorted(frozenset(target), key=lambda c: (c[1], c[0]))
    width, height = G.width * CELL, G.height * CELL
    available = 0 if report is None else sum(1 for d in report.domains.values() if d is not None)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{G.name}</title>",
    ]
    for t in range(G.height):
        for x in range(G.width):
            cell = (x, t)
            left, top = x * CELL, (G.height - 1 - t) * CELL
            if cell in G.holes:
                fill, opacity = _FILL["hole"], 1.0
            elif cell in A:
                fill, opacity = _FILL["region"], 1.0
            elif report is not None and available and report.count(cell):
                fill, opacity = _FILL["region"], 0.15 + 0.6 * report.count(cell) / available
            else:
                fill, opacity = _FILL["cell"], 1.0
            parts.append(
                f'<rect x="{left}" y="{top}" width="{CELL}" height="{CELL}" fill="{fill}" '
                f'fill-opacity="{opacity:.2f}" stroke="#999999" stroke-width="0.5">'
                f"<title>{cell_label(cell)}</title></rect>"
            )
    for cell in U:
        left, top = cell[0] * CELL, (G.height - 1 - cell[1]) * CELL
        parts.append(
            f'<rect x="{left + 2}" y="{top + 2}" width="{CELL - 4}" height="{CELL - 4}" '
            'fill="none" stroke="#c23b22" stroke-width="2"/>'
        )
        parts.extend(_cone_lines(G, cell))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
