"""Resolve CLI inputs: JSON files, named locales and grid scenarios.

A JSON file holds either a space document or a grid document ("kind": "grid").
Names of library locales (CHAIN3, VEE, STAR, LVFAIL, EQUALITY3, UPPER3) and of
grid scenarios, including TWO_SLOPES(a,b), are accepted wherever a file is.
"""

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from ordered_locale_lab.errors import SpaceDefinitionError
from ordered_locale_lab.locales import LOCALES, OrderedLocale, egli_milner_locale
from ordered_locale_lab.space import SpaceDocument
from ordered_locale_lab.space.bitmask import Mask
from ordered_locale_lab.spacetime import Cell, GridDocument, GridSpacetime, Scenario, is_scenario_name, scenario


@dataclass
class LoadedInput:
    """What a CLI input resolved to.

    Attributes:
        name: Display name
        grid: The grid when the input is a grid document or scenario
        regions: Named regions carried by the input (A and U for grids)
        scenario: The library scenario, if the input named one
    """

    name: str
    grid: GridSpacetime | None = None
    regions: dict[str, frozenset[Cell]] = field(default_factory=dict)
    scenario: Scenario | None = None
    _locale: OrderedLocale | None = None

    @cached_property
    def locale(self) -> OrderedLocale:
        """The ordered locale; for grids this needs the grid to fit the frame capacity."""
        if self._locale is not None:
            return self._locale
        return self.grid.locale

    def mask(self, text: str) -> Mask:
        """Parse a region option into an open of the locale.

        Point labels are separated by commas ("a,b", "{a,b}"); grid cells are
        written x:t ("2:0,1:0") or given by a region name of the input.
        """
        if self.grid is not None:
            return self.grid.mask(self.cells(text))
        labels = _split(text)
        space = self.locale.space
        return space.region(labels).members

    def cells(self, text: str) -> frozenset[Cell]:
        """Parse a grid region option into cells."""
        if self.grid is None:
            raise SpaceDefinitionError(f"'{self.name}' is not a grid; regions are point labels")
        key = text.strip()
        if key in self.regions:
            return self.regions[key]
        cells = []
        for item in _split(key):
            x, sep, t = item.partition(":")
            if not sep or not x.strip().lstrip("-").isdigit() or not t.strip().lstrip("-").isdigit():
                raise SpaceDefinitionError(f"Grid cells are written x:t, got '{item}'")
            cells.append((int(x), int(t)))
        return self.grid.region(cells)


def _split(text: str) -> list[str]:
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    return [part.strip() for part in body.split(",") if part.strip()]


def load_input(source: str) -> LoadedInput:
    """Resolve a file path or library name.

    Raises:
        SpaceDefinitionError: If source is neither an existing file nor a known name
        ValidationError: If the JSON document is malformed
        json.JSONDecodeError: If the file is not JSON
    """
    path = Path(source)
    if path.is_file():
        data = json.loads(path.read_text(encoding="utf-8"))
        if isinstance(data, dict) and data.get("kind") == "grid":
            doc = GridDocument.model_validate(data)
            grid = doc.to_grid()
            return LoadedInput(name=grid.name, grid=grid, regions={k: doc.region(k) for k in doc.regions})
        space = SpaceDocument.model_validate(data).to_space()
        return LoadedInput(name=space.name, _locale=egli_milner_locale(space))
    key = source.strip().upper()
    if key in LOCALES:
        L = LOCALES[key]()
        return LoadedInput(name=L.name, _locale=L)
    if is_scenario_name(source):
        sc = scenario(source)
        return LoadedInput(name=sc.name, grid=sc.grid, regions=sc.regions(), scenario=sc)
    raise SpaceDefinitionError(f"No such file or library name: '{source}'")
