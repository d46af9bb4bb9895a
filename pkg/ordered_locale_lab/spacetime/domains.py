"""Five domains of dependence on a grid and how they nest.

- inext_causal / inext_chron: cells every past-inextendible chain through
  which meets A
- bounded_causal / bounded_chron: cells covered by A with chains, so every
  chain ending there meets A or starts with a causal past meeting A
- localic: cells x with A ∧ ⇓{x} ∈ Cov⁻({x}) in the grid's ordered locale,
  searched over the rectangle basis

Chain domains come from reachability (the complement of the cells an escaping
chain reaches) and work on grids of any size. The localic column needs the
grid as a finite space with parallel cones.
"""

from collections.abc import Iterable
from dataclasses import dataclass, field

from ordered_locale_lab.coverage import CoverageConfig, CoverageEngine, Outcome
from ordered_locale_lab.errors import CapacityError, OrderedLocaleError
from ordered_locale_lab.monitoring import get_logger
from ordered_locale_lab.spacetime.chains import ChainMode, escaping_cells
from ordered_locale_lab.spacetime.grid import Cell, GridSpacetime, cell_label, sort_cells
from ordered_locale_lab.workers import chunked, parallel_map

log = get_logger(__name__)

DOMAINS = ("inext_causal", "inext_chron", "bounded_causal", "bounded_chron", "localic")

# (smaller, larger) pairs that always hold
EXPECTED_INCLUSIONS = (
    ("inext_causal", "inext_chron"),
    ("inext_causal", "bounded_causal"),
    ("bounded_causal", "bounded_chron"),
    ("bounded_chron", "localic"),
)

_CHAIN_DOMAINS = {
    "inext_causal": (ChainMode.CAUSAL, True),
    "inext_chron": (ChainMode.CHRON, True),
    "bounded_causal": (ChainMode.CAUSAL, False),
    "bounded_chron": (ChainMode.CHRON, False),
}


def chain_domain(G: GridSpacetime, region: Iterable[Cell], mode: ChainMode | str, inextendible: bool) -> frozenset[Cell]:
    """Cells no escaping chain reaches."""
    A = G.region(region)
    return frozenset(G.cells) - escaping_cells(G, A, ChainMode(mode), inextendible)


def _localic_unavailable(G: GridSpacetime) -> str | None:
    if not G.tabulable:
        return f"{len(G.cells)} cells exceed the frame capacity"
    if not G.equal_slopes:
        return "cones are not parallel (slopes differ)"
    return None


@dataclass
class LocalicDomain:
    """Localic column with the cells left undecided by the search bounds."""

    cells: frozenset[Cell]
    undecided: list[Cell] = field(default_factory=list)
    bounds: dict = field(default_factory=dict)


def localic_domain(
    G: GridSpacetime,
    region: Iterable[Cell],
    cfg: CoverageConfig | None = None,
    workers: int | None = None,
) -> LocalicDomain:
    """Cells x with A ∧ ⇓{x} ∈ Cov⁻({x}).

    Args:
        G: Grid with at most the capacity of cells and equal slopes
        region: The region A
        cfg: Coverage bounds; the basis defaults to the grid's rectangles
        workers: Threads sharing the per-cell decisions

    Raises:
        CapacityError: If the grid is too large or its cones are not parallel
    """
    reason = _localic_unavailable(G)
    if reason is not None:
        raise CapacityError(f"Localic domain unavailable on '{G.name}': {reason}")
    A = G.mask(G.region(region))
    L = G.locale
    basis = "rectangles" if cfg is None or cfg.basis is None else "custom"
    if cfg is None:
        cfg = CoverageConfig(basis=G.rectangles(), keep_certificates=False)
    elif cfg.basis is None:
        cfg = cfg.model_copy(update={"basis": G.rectangles()})
    workers = workers or 1
    bounds = CoverageEngine(L, cfg, workers=1).resolved.bounds()

    def decide(cells: list[Cell]) -> list[Outcome]:
        # engines cache mutable search state, so each chunk gets its own
        engine = CoverageEngine(L, cfg, workers=1)
        out = []
        for cell in cells:
            point = 1 << G.index[cell]
            out.append(engine.cov_minus(A & L.cone_down(point), point).outcome)
        return out

    cells = list(G.cells)
    outcomes = [o for part in parallel_map(decide, chunked(cells, workers), workers) for o in part]
    covered = frozenset(c for c, o in zip(cells, outcomes) if o is Outcome.COVERED)
    undecided = [c for c, o in zip(cells, outcomes) if o is Outcome.UNKNOWN]
    if undecided:
        log.warning("localic_domain_partial", grid=G.name, undecided=len(undecided))
    return LocalicDomain(cells=covered, undecided=undecided, bounds={"basis": basis, **bounds})


@dataclass(frozen=True)
class Inclusion:
    """One entry of the inclusion matrix: left ⊆ right?

    Attributes:
        holds: left ⊆ right cellwise
        strict: holds and right has a cell left lacks
        witness: First cell of right − left when strict, of left − right when not holding
        expected: The pair always nests
    """

    left: str
    right: str
    holds: bool
    strict: bool
    witness: Cell | None = None
    expected: bool = False

    def to_dict(self) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "holds": self.holds,
            "strict": self.strict,
            "witness": None if self.witness is None else cell_label(self.witness),
            "expected": self.expected,
        }


def _inclusion(left: str, right: str, small: frozenset[Cell], large: frozenset[Cell]) -> Inclusion:
    expected = (left, right) in EXPECTED_INCLUSIONS
    extra = sort_cells(small - large)
    if extra:
        return Inclusion(left, right, holds=False, strict=False, witness=extra[0], expected=expected)
    gained = sort_cells(large - small)
    return Inclusion(
        left, right, holds=True, strict=bool(gained), witness=gained[0] if gained else None, expected=expected
    )


@dataclass
class DomainReport:
    """The five domains of one region and their inclusion matrix.

    Attributes:
        grid: Grid name
        region: The region A
        domains: Domain name → cells, or None when unavailable
        unavailable: Domain name → reason
        inclusions: Every ordered pair of available, distinct domains
        undecided: Localic cells left Unknown by the bounds (excluded from the column)
        bounds: Coverage bounds used for the localic column
    """

    grid: str
    region: frozenset[Cell]
    domains: dict[str, frozenset[Cell] | None]
    unavailable: dict[str, str] = field(default_factory=dict)
    inclusions: list[Inclusion] = field(default_factory=list)
    undecided: list[Cell] = field(default_factory=list)
    bounds: dict = field(default_factory=dict)

    @property
    def violations(self) -> list[Inclusion]:
        """Expected inclusions that fail."""
        return [i for i in self.inclusions if i.expected and not i.holds]

    @property
    def strict_pairs(self) -> list[Inclusion]:
        """Expected inclusions that hold strictly."""
        return [i for i in self.inclusions if i.expected and i.strict]

    def inclusion(self, left: str, right: str) -> Inclusion:
        for entry in self.inclusions:
            if entry.left == left and entry.right == right:
                return entry
        raise KeyError(f"No inclusion entry {left} ⊆ {right}")

    def count(self, cell: Cell) -> int:
        """Number of available domains holding cell."""
        return sum(1 for cells in self.domains.values() if cells is not None and cell in cells)

    def to_dict(self) -> dict:
        return {
            "grid": self.grid,
            "region": [cell_label(c) for c in sort_cells(self.region)],
            "domains": {
                name: None if cells is None else [cell_label(c) for c in sort_cells(cells)]
                for name, cells in self.domains.items()
            },
            "unavailable": self.unavailable,
            "inclusions": [i.to_dict() for i in self.inclusions],
            "violations": [i.to_dict() for i in self.violations],
            "undecided": [cell_label(c) for c in self.undecided],
            "bounds": self.bounds,
        }


def domains_all(
    G: GridSpacetime,
    region: Iterable[Cell],
    selection: Iterable[str] | None = None,
    cfg: CoverageConfig | None = None,
    workers: int | None = None,
) -> DomainReport:
    """Compute the selected domains of A and compare them pairwise.

    Args:
        G: Grid
        region: The region A
        selection: Domain names (default all five, reported in DOMAINS order)
        cfg: Coverage bounds for the localic column
        workers: Threads for the localic column

    Returns:
        DomainReport; the localic column is None (with a reason) on grids that
        exceed the frame capacity or have unequal slopes

    Raises:
        SpaceDefinitionError: If region has cells that are not cells of G
        ValueError: For unknown domain names
    """
    A = G.region(region)
    wanted = list(DOMAINS) if selection is None else list(dict.fromkeys(selection))
    unknown = [name for name in wanted if name not in DOMAINS]
    if unknown:
        raise ValueError(f"Unknown domain {unknown[0]!r} (expected one of {', '.join(DOMAINS)})")
    report = DomainReport(grid=G.name, region=A, domains={})
    for name in DOMAINS:
        if name not in wanted:
            continue
        if name in _CHAIN_DOMAINS:
            mode, inextendible = _CHAIN_DOMAINS[name]
            report.domains[name] = chain_domain(G, A, mode, inextendible)
            continue
        reason = _localic_unavailable(G)
        if reason is not None:
            report.domains[name] = None
            report.unavailable[name] = reason
            continue
        try:
            localic = localic_domain(G, A, cfg, workers)
        except OrderedLocaleError as exc:
            report.domains[name] = None
            report.unavailable[name] = str(exc)
            continue
        report.domains[name] = localic.cells
        report.undecided = localic.undecided
        report.bounds = localic.bounds

    available = [(n, cells) for n, cells in report.domains.items() if cells is not None]
    for left, small in available:
        for right, large in available:
            if left != right:
                report.inclusions.append(_inclusion(left, right, small, large))

    for entry in report.violations:
        log.warning(
            "domain_inclusion_violated",
            grid=G.name,
            left=entry.left,
            right=entry.right,
            witness=cell_label(entry.witness) if entry.witness else None,
        )
    log.info(
        "domains_computed",
        grid=G.name,
        region=len(A),
        sizes={n: None if c is None else len(c) for n, c in report.domains.items()},
        strict=[f"{i.left}⊊{i.right}" for i in report.strict_pairs],
    )
    return report
