"""Chains: the discrete stand-in for causal and timelike curves on a grid.

A chain is a strictly time-increasing sequence of cells. Consecutive cells are
causally related (|Δx|·slope ≤ Δt) or, for chronological chains, strictly
inside the cone (|Δx|·slope < Δt). Every link is traced by a walk that climbs
one row per step through existing cells, so holes block chains, and a chain
meets a region when its trace does. Unit links of slope 1 are lightlike, so a
chronological chain that moves sideways does it with links spanning several
rows.

A chain is past inextendible when its earliest cell has no existing immediate
predecessor: it sits on row 0 or all cells it could come from are holes.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum

import networkx as nx

from ordered_locale_lab.errors import PathError, SpaceDefinitionError
from ordered_locale_lab.monitoring import get_logger
from ordered_locale_lab.spacetime.grid import Cell, GridSpacetime, cell_label, cell_order

log = get_logger(__name__)


class ChainMode(str, Enum):
    CAUSAL = "causal"
    CHRON = "chron"


@dataclass(frozen=True)
class Chain:
    """Cells of a chain from earliest to latest.

    Attributes:
        cells: The chain's cells; consecutive cells are related in the chain's mode
        mode: causal or chron
        route: The traced walk, one cell per row from start to end
    """

    cells: tuple[Cell, ...]
    mode: ChainMode
    route: tuple[Cell, ...]

    @property
    def start(self) -> Cell:
        return self.cells[0]

    @property
    def end(self) -> Cell:
        return self.cells[-1]

    def meets(self, region: Iterable[Cell]) -> bool:
        return not set(self.route).isdisjoint(region)

    def labels(self) -> list[str]:
        return [cell_label(c) for c in self.cells]

    def format(self) -> str:
        return "(" + ",".join(self.labels()) + ")"


def related(G: GridSpacetime, lower: Cell, upper: Cell, mode: ChainMode) -> bool:
    """upper is strictly later than lower and inside its future cone (open cone for chron)."""
    dt = upper[1] - lower[1]
    spread = abs(upper[0] - lower[0]) * G.up_slope
    if dt < 1:
        return False
    return spread < dt if mode is ChainMode.CHRON else spread <= dt


def trace(G: GridSpacetime, lower: Cell, upper: Cell, avoid: frozenset[Cell] = frozenset()) -> tuple[Cell, ...] | None:
    """Leftmost one-row-per-step walk from lower to upper through existing cells outside avoid.

    Returns:
        The walk including both ends, or None when holes or avoid cut every walk
    """
    for cell in (lower, upper):
        if not G.exists(cell) or cell in avoid:
            return None
    if upper[1] < lower[1]:
        return None
    layers = {upper[1]: {upper}}
    for t in range(upper[1] - 1, lower[1] - 1, -1):
        layers[t] = {p for c in layers[t + 1] for p in G.immediate_predecessors(c) if p not in avoid}
    if lower not in layers[lower[1]]:
        return None
    walk = [lower]
    for t in range(lower[1] + 1, upper[1] + 1):
        walk.append(next(c for c in G.immediate_successors(walk[-1]) if c in layers[t]))
    return tuple(walk)


def _link_name(mode: ChainMode) -> str:
    return "chronological" if mode is ChainMode.CHRON else "causal"


def validate_chain(G: GridSpacetime, cells: Iterable[Cell], mode: ChainMode | str) -> Chain:
    """Check a cell sequence against the chain rules and trace it.

    Raises:
        PathError: At the first link breaking the rules (index of the upper cell)
        SpaceDefinitionError: If a cell is not a cell of G
    """
    mode = ChainMode(mode)
    seq = tuple(cells)
    if not seq:
        raise PathError("A chain needs at least one cell")
    G.region(seq)
    route = [seq[0]]
    for i in range(1, len(seq)):
        lower, upper = seq[i - 1], seq[i]
        if not related(G, lower, upper, mode):
            raise PathError(f"{cell_label(lower)} → {cell_label(upper)} is not a {_link_name(mode)} link", i)
        walk = trace(G, lower, upper)
        if walk is None:
            raise PathError(f"Holes block every walk from {cell_label(lower)} to {cell_label(upper)}", i)
        route.extend(walk[1:])
    return Chain(cells=seq, mode=mode, route=tuple(route))


def past_inextendible(G: GridSpacetime, cell: Cell) -> bool:
    return not G.immediate_predecessors(cell)


def _walk_graph(G: GridSpacetime, avoid: frozenset[Cell] = frozenset()) -> nx.DiGraph:
    """One-row steps between existing cells outside avoid."""
    graph = nx.DiGraph()
    for cell in G.cells:
        if cell in avoid:
            continue
        graph.add_node(cell)
        for nxt in G.immediate_successors(cell):
            if nxt not in avoid:
                graph.add_edge(cell, nxt)
    return graph


def _links_into(G: GridSpacetime, graph: nx.DiGraph, cell: Cell, mode: ChainMode) -> list[Cell]:
    """Cells linked to cell by a link no traced intermediate cell splits, left to right, latest first."""
    before = nx.ancestors(graph, cell)
    options = []
    for p in before:
        if not related(G, p, cell, mode):
            continue
        after = nx.descendants(graph, p)
        if not any(m in after and related(G, p, m, mode) and related(G, m, cell, mode) for m in before):
            options.append(p)
    return sorted(options, key=lambda c: (c[0], -c[1]))


def _route(G: GridSpacetime, cells: list[Cell]) -> tuple[Cell, ...]:
    route = [cells[0]]
    for lower, upper in zip(cells, cells[1:]):
        route.extend(trace(G, lower, upper)[1:])
    return tuple(route)


def chains_through(
    G: GridSpacetime, cell: Cell, mode: ChainMode | str = ChainMode.CAUSAL, inextendible: bool = True
) -> Iterator[Chain]:
    """Chains ending at cell, explored into the past depth first.

    Only the finest chains are listed: no link can be split by a cell on its
    trace. Causal chains then climb one row per link.

    Args:
        G: Grid
        cell: Latest cell of every chain
        mode: causal or chron
        inextendible: Only yield chains whose earliest cell is past
            inextendible; otherwise every chain ending at cell, shortest suffix first

    Raises:
        SpaceDefinitionError: If cell is not a cell of G
    """
    mode = ChainMode(mode)
    if not G.exists(cell):
        raise SpaceDefinitionError(f"{cell_label(cell)} is not a cell of '{G.name}'")
    graph = _walk_graph(G)
    stack: list[list[Cell]] = [[cell]]
    while stack:
        cells = stack.pop()
        if not inextendible or past_inextendible(G, cells[0]):
            yield Chain(cells=tuple(cells), mode=mode, route=_route(G, cells))
        # reversed so the leftmost predecessor is explored first
        for pred in reversed(_links_into(G, graph, cells[0], mode)):
            stack.append([pred, *cells])


def _bad_starts(G: GridSpacetime, region: frozenset[Cell], inextendible: bool) -> list[Cell]:
    """Starts of chains that escape region: outside it, with a past missing it."""
    if inextendible:
        return [c for c in G.cells if c not in region and past_inextendible(G, c)]
    return [c for c in G.cells if c not in region and G.past(c).isdisjoint(region)]


def _escapes(G: GridSpacetime, graph: nx.DiGraph, start: Cell, mode: ChainMode) -> list[Cell]:
    """Ends of chains from start whose trace stays in graph.

    Links compose, so one link from start reaches every end; a walk to a cell
    strictly inside the cone of start makes that link chronological.
    """
    reached = sorted(nx.descendants(graph, start), key=cell_order)
    return [start] + [c for c in reached if related(G, start, c, mode)]


def escaping_cells(G: GridSpacetime, region: frozenset[Cell], mode: ChainMode, inextendible: bool) -> frozenset[Cell]:
    """Cells reached by some chain that avoids region from a bad start."""
    graph = _walk_graph(G, region)
    escaped: set[Cell] = set()
    for start in _bad_starts(G, region, inextendible):
        escaped.update(_escapes(G, graph, start, mode))
    return frozenset(escaped)


@dataclass(frozen=True)
class ChainCoverVerdict:
    """Result of chain_cover_minus.

    Attributes:
        covered: Every chain ending in U meets A or starts with a past meeting A
        witness: A chain ending in U that does neither (when not covered by chains)
        reason: Why the verdict was reached
    """

    covered: bool
    mode: ChainMode
    witness: Chain | None = None
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "covered": self.covered,
            "mode": self.mode.value,
            "witness": None if self.witness is None else self.witness.labels(),
            "route": None if self.witness is None else [cell_label(c) for c in self.witness.route],
            "reason": self.reason,
        }


def chain_cover_minus(
    G: GridSpacetime,
    region: Iterable[Cell],
    target: Iterable[Cell],
    mode: ChainMode | str = ChainMode.CAUSAL,
    inextendible: bool = False,
) -> ChainCoverVerdict:
    """Does region cover target from below with chains?

    region covers target when it lies in the causal past of target and every
    chain ending in target either meets region or starts at a cell whose causal
    past meets region (with inextendible=True: every past-inextendible chain
    ending in target meets region).

    Returns:
        ChainCoverVerdict; the witness is the escaping chain with the shortest
        trace, ties broken by its trace in row-major order

    Example:
        >>> G = build_grid(5, 3)
        >>> chain_cover_minus(G, G.row(0), G.row(2)).covered
        True
    """
    mode = ChainMode(mode)
    A = G.region(region)
    U = G.region(target)
    if not A <= G.past_of(U):
        outside = [c for c in G.cells if c in A - G.past_of(U)]
        return ChainCoverVerdict(
            covered=False, mode=mode, reason=f"{cell_label(outside[0])} is not in the past of the target"
        )
    graph = _walk_graph(G, A)
    escaping = []
    for start in _bad_starts(G, A, inextendible):
        for end in _escapes(G, graph, start, mode):
            if end not in U:
                continue
            walk = trace(G, start, end, avoid=A)
            if mode is ChainMode.CAUSAL:
                cells = walk
            else:
                cells = (start,) if start == end else (start, end)
            escaping.append(Chain(cells=cells, mode=mode, route=walk))
    if not escaping:
        verdict = ChainCoverVerdict(covered=True, mode=mode, reason="every chain is caught")
    else:
        witness = min(
            escaping,
            key=lambda ch: (len(ch.route), [cell_order(c) for c in ch.route], [cell_order(c) for c in ch.cells]),
        )
        verdict = ChainCoverVerdict(covered=False, mode=mode, witness=witness, reason="a chain escapes the region")
    log.debug(
        "chain_cover_decided",
        grid=G.name,
        mode=mode.value,
        inextendible=inextendible,
        covered=verdict.covered,
        witness=None if verdict.witness is None else verdict.witness.format(),
    )
    return verdict
