"""Named grid scenarios with their expected domain reports.

Each scenario fixes a grid, a region A whose domains are compared and a
target U used by chain-cover checks. The expected fragment lists domain sizes,
the expected inclusions that are strict (with their first witness) and, for
TWO_SLOPES, whether the locale is parallel ordered.

Notes on what the discrete models show:

- POINT_REMOVED: one missing cell leaves other predecessors, so nothing changes.
- CONE_CUT: removing all immediate predecessors of (2,2) makes the singleton
  chain there past inextendible; only the inext columns lose the cell.
- CURVE_REMOVED_FROM_A: a one-cell-wide column missing from A lets chains
  through, and the localic column agrees with the chain columns.
- REGION_REMOVED: the removed block traps (2,3) the same way, so the notch
  appears in the inext columns only.
"""

import re
from collections.abc import Callable
from dataclasses import dataclass, field

from ordered_locale_lab.errors import SpaceDefinitionError
from ordered_locale_lab.spacetime.domains import DomainReport
from ordered_locale_lab.spacetime.grid import Cell, GridSpacetime, build_grid, cell_label

MAX_SCENARIO_SLOPE = 8


@dataclass(frozen=True)
class Scenario:
    name: str
    grid: GridSpacetime
    region: frozenset[Cell]
    target: frozenset[Cell]
    expected: dict = field(default_factory=dict)

    def regions(self) -> dict[str, frozenset[Cell]]:
        return {"A": self.region, "U": self.target}

    def mismatches(self, report: DomainReport, parallel: str | None = None) -> list[str]:
        """Differences between a domain report and the expected fragment; empty when it matches."""
        found = []
        sizes = {name: len(cells) for name, cells in report.domains.items() if cells is not None}
        if sizes != self.expected.get("sizes", sizes):
            found.append(f"domain sizes {sizes} != {self.expected['sizes']}")
        strict = [[i.left, i.right, cell_label(i.witness)] for i in report.strict_pairs]
        if strict != self.expected.get("strict", strict):
            found.append(f"strict pairs {strict} != {self.expected['strict']}")
        if "parallel" in self.expected and parallel != self.expected["parallel"]:
            found.append(f"parallel {parallel} != {self.expected['parallel']}")
        return found


def _sizes(total: int, **overrides: int) -> dict[str, int]:
    sizes = dict.fromkeys(("inext_causal", "inext_chron", "bounded_causal", "bounded_chron", "localic"), total)
    sizes.update(overrides)
    return sizes


def minkowski_plain() -> Scenario:
    G = build_grid(5, 3, name="MINKOWSKI_PLAIN")
    return Scenario(G.name, G, G.row(0), G.row(2), {"sizes": _sizes(15), "strict": []})


def point_removed() -> Scenario:
    G = build_grid(5, 3, holes=[(2, 1)], name="POINT_REMOVED")
    return Scenario(G.name, G, G.row(0), frozenset({(2, 2)}), {"sizes": _sizes(14), "strict": []})


def cone_cut() -> Scenario:
    G = build_grid(5, 3, holes=[(1, 1), (2, 1), (3, 1)], name="CONE_CUT")
    return Scenario(
        G.name,
        G,
        G.row(0),
        frozenset({(2, 2)}),
        {
            "sizes": _sizes(12, inext_causal=11, inext_chron=11),
            "strict": [["inext_causal", "bounded_causal", "(2,2)"]],
        },
    )


def curve_removed_from_a() -> Scenario:
    G = build_grid(5, 3, name="CURVE_REMOVED_FROM_A")
    region = frozenset(c for c in G.cells if c[1] <= 1 and c[0] != 2)
    return Scenario(G.name, G, region, G.row(2), {"sizes": _sizes(10), "strict": []})


def region_removed() -> Scenario:
    holes = [(x, t) for x in range(1, 4) for t in range(1, 3)]
    G = build_grid(5, 4, holes=holes, name="REGION_REMOVED")
    return Scenario(
        G.name,
        G,
        G.row(0),
        frozenset({(2, 3)}),
        {
            "sizes": _sizes(14, inext_causal=13, inext_chron=13),
            "strict": [["inext_causal", "bounded_causal", "(2,3)"]],
        },
    )


def two_slopes(up: int = 1, down: int = 2) -> Scenario:
    """A hole-free grid tall enough for the two cones to differ on some pair of cells.

    Raises:
        SpaceDefinitionError: If a slope is outside 1..MAX_SCENARIO_SLOPE
    """
    for slope in (up, down):
        if not 1 <= slope <= MAX_SCENARIO_SLOPE:
            raise SpaceDefinitionError(f"Scenario slopes must lie in 1..{MAX_SCENARIO_SLOPE}, got {slope}")
    height = max(4, max(up, down) + 1)
    G = build_grid(5, height, up_slope=up, down_slope=down, name=f"TWO_SLOPES({up},{down})")
    total = len(G.cells)
    sizes = _sizes(total) if up == down else {k: v for k, v in _sizes(total).items() if k != "localic"}
    return Scenario(
        G.name,
        G,
        G.row(0),
        G.row(height - 1),
        {"sizes": sizes, "strict": [], "parallel": "holds" if up == down else "violated"},
    )


SCENARIOS: dict[str, Callable[[], Scenario]] = {
    "MINKOWSKI_PLAIN": minkowski_plain,
    "POINT_REMOVED": point_removed,
    "CONE_CUT": cone_cut,
    "CURVE_REMOVED_FROM_A": curve_removed_from_a,
    "REGION_REMOVED": region_removed,
    "TWO_SLOPES": two_slopes,
}

_TWO_SLOPES = re.compile(r"^TWO_SLOPES\(\s*(\d+)\s*,\s*(\d+)\s*\)$")


def is_scenario_name(name: str) -> bool:
    key = name.strip().upper().replace("-", "_")
    return key in SCENARIOS or _TWO_SLOPES.match(key) is not None


def scenario(name: str) -> Scenario:
    """Look up a scenario; TWO_SLOPES(a,b) takes its slopes from the name.

    Raises:
        SpaceDefinitionError: For unknown names

    Example:
        >>> scenario("TWO_SLOPES(1,2)").expected["parallel"]
        'violated'
    """
    key = name.strip().upper().replace("-", "_")
    match = _TWO_SLOPES.match(key)
    if match:
        return two_slopes(int(match.group(1)), int(match.group(2)))
    if key not in SCENARIOS:
        raise SpaceDefinitionError(f"Unknown scenario '{name}' (known: {', '.join(SCENARIOS)}, TWO_SLOPES(a,b))")
    return SCENARIOS[key]()
