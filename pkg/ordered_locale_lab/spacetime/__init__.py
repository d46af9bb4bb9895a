"""Discrete spacetimes: grids, chains and domains of dependence."""

from ordered_locale_lab.spacetime.chains import (
    Chain,
    ChainCoverVerdict,
    ChainMode,
    chain_cover_minus,
    chains_through,
    escaping_cells,
    past_inextendible,
    validate_chain,
)
from ordered_locale_lab.spacetime.domains import (
    DOMAINS,
    EXPECTED_INCLUSIONS,
    DomainReport,
    Inclusion,
    LocalicDomain,
    chain_domain,
    domains_all,
    localic_domain,
)
from ordered_locale_lab.spacetime.grid import Cell, GridSpacetime, build_grid, cell_label, sort_cells
from ordered_locale_lab.spacetime.render import render_ascii, render_svg
from ordered_locale_lab.spacetime.scenarios import SCENARIOS, Scenario, is_scenario_name, scenario
from ordered_locale_lab.spacetime.schema import GridDocument

__all__ = [
    "Cell",
    "Chain",
    "ChainCoverVerdict",
    "ChainMode",
    "DOMAINS",
    "DomainReport",
    "EXPECTED_INCLUSIONS",
    "GridDocument",
    "GridSpacetime",
    "Inclusion",
    "LocalicDomain",
    "SCENARIOS",
    "Scenario",
    "build_grid",
    "cell_label",
    "chain_cover_minus",
    "chain_domain",
    "chains_through",
    "domains_all",
    "escaping_cells",
    "is_scenario_name",
    "localic_domain",
    "past_inextendible",
    "render_ascii",
    "render_svg",
    "scenario",
    "sort_cells",
    "validate_chain",
]
