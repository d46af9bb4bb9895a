"""Pydantic model for the grid JSON format.

    {"kind": "grid", "width": w, "height": h, "up_slope": a, "down_slope": b,
     "holes": [[x, t]], "regions": {"A": [[x, t]], "U": [[x, t]]}}
"""

from typing import Literal

from pydantic import BaseModel, Field, model_validator

from ordered_locale_lab.spacetime.grid import Cell, GridSpacetime, build_grid, sort_cells


class GridDocument(BaseModel):
    """A grid spacetime with its named regions."""

    kind: Literal["grid"] = "grid"
    name: str | None = None
    width: int = Field(..., ge=1)
    height: int = Field(..., ge=1)
    up_slope: int = Field(default=1, ge=1)
    down_slope: int | None = Field(default=None, ge=1)
    holes: list[tuple[int, int]] = Field(default_factory=list)
    regions: dict[str, list[tuple[int, int]]] = Field(default_factory=dict)

    @model_validator(mode="after")
    def cells_in_bounds(self) -> "GridDocument":
        def inside(cell: tuple[int, int]) -> bool:
            return 0 <= cell[0] < self.width and 0 <= cell[1] < self.height

        for x, t in self.holes:
            if not inside((x, t)):
                raise ValueError(f"hole ({x},{t}) lies outside the {self.width}×{self.height} grid")
        holes = set(self.holes)
        for name, cells in self.regions.items():
            for cell in cells:
                if not inside(cell) or cell in holes:
                    raise ValueError(f"region {name} cell ({cell[0]},{cell[1]}) is not a cell of the grid")
        return self

    def to_grid(self) -> GridSpacetime:
        return build_grid(self.width, self.height, self.up_slope, self.down_slope, self.holes, self.name)

    def region(self, name: str) -> frozenset[Cell]:
        """Cells of a named region; a missing name is empty."""
        return frozenset(self.regions.get(name, []))

    @classmethod
    def from_grid(cls, G: GridSpacetime, regions: dict[str, frozenset[Cell]] | None = None) -> "GridDocument":
        return cls(
            name=G.name,
            width=G.width,
            height=G.height,
            up_slope=G.up_slope,
            down_slope=G.down_slope,
            holes=sort_cells(G.holes),
            regions={name: sort_cells(cells) for name, cells in (regions or {}).items()},
        )
