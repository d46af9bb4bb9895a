"""Discrete 1+1 spacetimes: rectangular grids of cells with light cones and holes.

A cell (x, t) causally precedes (x', t') when t' ≥ t and |x - x'|·slope ≤ t' - t.
With one slope the grid is a discrete Minkowski strip and its Egli–Milner locale
is parallel ordered. With different up and down slopes the future cones open
with the up slope and the past cones with the down slope; the cone monads they
generate still define an ordered locale, but it is no longer parallel ordered.
"""

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

from ordered_locale_lab.config import get_settings
from ordered_locale_lab.errors import CapacityError, SpaceDefinitionError
from ordered_locale_lab.locales import (
    Axiom,
    AxiomReport,
    OrderedLocale,
    check_axioms,
    egli_milner_locale,
    point_cone_locale,
)
from ordered_locale_lab.monitoring import get_logger
from ordered_locale_lab.space import FiniteSpace, space_from_relation
from ordered_locale_lab.space.bitmask import Mask, bits, mask_of

log = get_logger(__name__)

Cell = tuple[int, int]


def cell_label(cell: Cell) -> str:
    return f"({cell[0]},{cell[1]})"


def cell_order(cell: Cell) -> tuple[int, int]:
    """Sort key: earlier rows first, then left to right."""
    return (cell[1], cell[0])


def sort_cells(cells: Iterable[Cell]) -> list[Cell]:
    return sorted(cells, key=cell_order)


def within_cone(lower: Cell, upper: Cell, slope: int) -> bool:
    """upper lies in the closed future cone of lower for the given slope."""
    dt = upper[1] - lower[1]
    return dt >= 0 and abs(upper[0] - lower[0]) * slope <= dt


@dataclass(frozen=True)
class GridSpacetime:
    """A width × height grid with removed cells.

    Attributes:
        width: Cells per row (x = 0 .. width-1)
        height: Rows (t = 0 .. height-1, t = 0 earliest)
        up_slope: Slope of future cones and of chain links
        down_slope: Slope of past cones
        holes: Removed cells
        name: Display name
    """

    width: int
    height: int
    up_slope: int = 1
    down_slope: int = 1
    holes: frozenset[Cell] = field(default_factory=frozenset)
    name: str = "GRID"

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise SpaceDefinitionError(f"Grid dimensions must be positive, got {self.width}×{self.height}")
        if self.up_slope < 1 or self.down_slope < 1:
            raise SpaceDefinitionError(
                f"Cone slopes must be positive integers, got {self.up_slope} and {self.down_slope}"
            )
        outside = [h for h in self.holes if not self.in_bounds(h)]
        if outside:
            raise SpaceDefinitionError(f"Holes outside the {self.width}×{self.height} grid: {sort_cells(outside)}")
        if len(self.holes) == self.width * self.height:
            raise SpaceDefinitionError(f"Grid '{self.name}' has every cell removed")

    # -- cells ------------------------------------------------------------

    def in_bounds(self, cell: Cell) -> bool:
        x, t = cell
        return 0 <= x < self.width and 0 <= t < self.height

    def exists(self, cell: Cell) -> bool:
        return self.in_bounds(cell) and cell not in self.holes

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        """Remaining cells, row by row from t = 0."""
        return tuple(
            (x, t) for t in range(self.height) for x in range(self.width) if (x, t) not in self.holes
        )

    @cached_property
    def index(self) -> dict[Cell, int]:
        return {c: i for i, c in enumerate(self.cells)}

    @property
    def equal_slopes(self) -> bool:
        return self.up_slope == self.down_slope

    def region(self, cells: Iterable[Cell]) -> frozenset[Cell]:
        """Validated set of existing cells.

        Raises:
            SpaceDefinitionError: If a cell is a hole or out of bounds
        """
        region = frozenset((int(x), int(t)) for x, t in cells)
        missing = [c for c in region if not self.exists(c)]
        if missing:
            raise SpaceDefinitionError(f"Cells {sort_cells(missing)} are not cells of '{self.name}'")
        return region

    def row(self, t: int) -> frozenset[Cell]:
        return frozenset(c for c in self.cells if c[1] == t)

    def format(self, cells: Iterable[Cell]) -> str:
        return "{" + ",".join(cell_label(c) for c in sort_cells(cells)) + "}"

    # -- cones ------------------------------------------------------------

    def precedes(self, lower: Cell, upper: Cell) -> bool:
        """The point order of the derived space (future cone, up slope)."""
        return within_cone(lower, upper, self.up_slope)

    def past(self, cell: Cell) -> frozenset[Cell]:
        """Closed causal past of a cell (down slope), holes excluded."""
        return frozenset(c for c in self.cells if within_cone(c, cell, self.down_slope))

    def future(self, cell: Cell) -> frozenset[Cell]:
        """Closed causal future of a cell (up slope), holes excluded."""
        return frozenset(c for c in self.cells if within_cone(cell, c, self.up_slope))

    def past_of(self, region: Iterable[Cell]) -> frozenset[Cell]:
        result: set[Cell] = set()
        for cell in region:
            result |= self.past(cell)
        return frozenset(result)

    def immediate_predecessors(self, cell: Cell) -> list[Cell]:
        """Existing cells one row earlier that can reach cell in one link, left to right."""
        x, t = cell
        reach = 1 // self.up_slope
        return [(x + dx, t - 1) for dx in range(-reach, reach + 1) if self.exists((x + dx, t - 1))]

    def immediate_successors(self, cell: Cell) -> list[Cell]:
        x, t = cell
        reach = 1 // self.up_slope
        return [(x + dx, t + 1) for dx in range(-reach, reach + 1) if self.exists((x + dx, t + 1))]

    # -- frame-level view -------------------------------------------------

    @property
    def tabulable(self) -> bool:
        """Small enough to become a FiniteSpace."""
        return len(self.cells) <= get_settings().max_points

    def mask(self, cells: Iterable[Cell]) -> Mask:
        return mask_of(self.index[c] for c in cells)

    def cells_of(self, mask: Mask) -> frozenset[Cell]:
        return frozenset(self.cells[i] for i in bits(mask))

    @cached_property
    def space(self) -> FiniteSpace:
        """Discrete space on the cells ordered by the future cones.

        Raises:
            CapacityError: Above the configured point capacity
        """
        if not self.tabulable:
            raise CapacityError(
                f"Grid '{self.name}' has {len(self.cells)} cells; "
                f"frame-level operations need at most {get_settings().max_points}"
            )
        cells = self.cells
        return space_from_relation(
            self.name, [cell_label(c) for c in cells], lambda i, j: self.precedes(cells[i], cells[j])
        )

    @cached_property
    def locale(self) -> OrderedLocale:
        """Egli–Milner locale for equal slopes, the monad pair of the point cones otherwise."""
        space = self.space
        if self.equal_slopes:
            return egli_milner_locale(space)
        cells = self.cells
        up = tuple(self.mask(self.future(c)) for c in cells)
        down = tuple(self.mask(self.past(c)) for c in cells)
        return point_cone_locale(space, up, down, name=self.name)

    def rectangles(self) -> tuple[Mask, ...]:
        """Order-convex basis: products of x- and t-intervals intersected with the cells."""
        found: dict[Mask, None] = {}
        for x0 in range(self.width):
            for x1 in range(x0, self.width):
                for t0 in range(self.height):
                    for t1 in range(t0, self.height):
                        mask = self.mask(
                            (x, t) for x in range(x0, x1 + 1) for t in range(t0, t1 + 1) if self.exists((x, t))
                        )
                        if mask:
                            found.setdefault(mask)
        return tuple(found)

    def parallel_report(self, workers: int | None = None) -> AxiomReport:
        """Whether the grid's ordered locale is parallel ordered."""
        (report,) = check_axioms(self.locale, [Axiom.PARALLEL], workers=workers)
        log.debug("grid_parallel_checked", grid=self.name, status=report.status.value, method=report.method)
        return report


def build_grid(
    width: int,
    height: int,
    up_slope: int = 1,
    down_slope: int | None = None,
    holes: Iterable[Cell] = (),
    name: str | None = None,
) -> GridSpacetime:
    """Build a grid spacetime.

    Args:
        width: Cells per row
        height: Number of rows
        up_slope: Future-cone slope
        down_slope: Past-cone slope (default: up_slope)
        holes: Cells to remove
        name: Display name (default GRID(w,h))

    Raises:
        SpaceDefinitionError: Non-positive sizes or slopes, holes out of bounds

    Example:
        >>> G = build_grid(3, 2)
        >>> len(G.cells), G.precedes((0, 0), (1, 1))
        (6, True)
    """
    grid = GridSpacetime(
        width=width,
        height=height,
        up_slope=up_slope,
        down_slope=up_slope if down_slope is None else down_slope,
        holes=frozenset((int(x), int(t)) for x, t in holes),
        name=name or f"GRID({width},{height})",
    )
    log.debug(
        "grid_built",
        grid=grid.name,
        cells=len(grid.cells),
        holes=len(grid.holes),
        slopes=[grid.up_slope, grid.down_slope],
    )
    return grid
