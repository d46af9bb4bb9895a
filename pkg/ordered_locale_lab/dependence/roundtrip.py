"""Does a causal site come back unchanged from the ordered locale of its monads?

A coverage's L± form a monad pair, so they define an ordered locale whose own
Cov⊴ can be recomputed and compared with the coverage. Whether the two always
agree is not known; these functions collect evidence, including an exhaustive
search over explicit tables on tiny frames.
"""

from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import product

from ordered_locale_lab.config import get_settings
from ordered_locale_lab.coverage import CoverageConfig, Outcome
from ordered_locale_lab.coverage.properties import DIRECTIONS
from ordered_locale_lab.dependence.abstract import (
    AbstractCoverage,
    ExplicitTable,
    FromOrderedLocale,
    check_causal_site_axioms,
)
from ordered_locale_lab.dependence.influence import influence
from ordered_locale_lab.errors import BudgetExceededError, CapacityError, MonadLawError
from ordered_locale_lab.locales.ordered_locale import from_monad_pair
from ordered_locale_lab.monitoring import get_logger
from ordered_locale_lab.space.bitmask import Mask, is_subset
from ordered_locale_lab.space.finite_space import FiniteSpace, build_space

log = get_logger(__name__)

MAX_RECORDED = 20

# Frames above this many opens make the explicit-table search explode.
MAX_SEARCH_OPENS = 5


@dataclass
class RoundtripReport:
    """Comparison of a coverage with Cov⊴ of the locale built from its L±.

    Attributes:
        coverage: Name of the original coverage
        relation: "equal", "original_contained" (original ⊊ rebuilt),
            "rebuilt_contained", "incomparable" or "not_a_monad_pair"
        compared: (direction, A, U) entries decided on both sides
        unknown: Entries skipped because either side was Unknown
        only_original: Count of memberships lost by the roundtrip
        only_rebuilt: Count of memberships gained by the roundtrip
        differences: First differing entries
        detail: Monad-law message when the rebuild failed
    """

    coverage: str
    relation: str = "equal"
    compared: int = 0
    unknown: int = 0
    only_original: int = 0
    only_rebuilt: int = 0
    differences: list[dict] = field(default_factory=list)
    detail: str = ""

    @property
    def equal(self) -> bool:
        return self.relation == "equal"

    def to_dict(self) -> dict:
        return {
            "coverage": self.coverage,
            "relation": self.relation,
            "compared": self.compared,
            "unknown": self.unknown,
            "only_original": self.only_original,
            "only_rebuilt": self.only_rebuilt,
            "differences": self.differences,
            "detail": self.detail,
        }


def _relation(only_original: int, only_rebuilt: int) -> str:
    if only_original and only_rebuilt:
        return "incomparable"
    if only_rebuilt:
        return "original_contained"
    if only_original:
        return "rebuilt_contained"
    return "equal"


def roundtrip_experiment(
    coverage: AbstractCoverage, cfg: CoverageConfig | None = None, workers: int | None = None
) -> RoundtripReport:
    """Rebuild an ordered locale from L± and diff its coverage against the original.

    Args:
        coverage: Explicit or fully decided coverage
        cfg: Bounds for recomputing Cov⊴ on the rebuilt locale
        workers: Thread count for the coverage engine

    Returns:
        RoundtripReport; Unknown entries on either side are excluded and counted
    """
    report = RoundtripReport(coverage=coverage.name)
    try:
        rebuilt = _rebuild(coverage, cfg, workers)
    except MonadLawError as exc:
        report.relation = "not_a_monad_pair"
        report.detail = str(exc)
        log.warning("roundtrip_rebuild_failed", coverage=coverage.name, law=exc.law)
        return report
    return _compare(coverage, rebuilt, report)


def _rebuild(
    coverage: AbstractCoverage,
    cfg: CoverageConfig | None,
    workers: int | None,
    cache: dict | None = None,
) -> FromOrderedLocale:
    L = influence(coverage)
    key = (tuple(L.plus.items()), tuple(L.minus.items()))
    if cache is not None and key in cache:
        return cache[key]
    locale = from_monad_pair(coverage.space, up=L.plus, down=L.minus, name=f"{coverage.name}-rebuilt")
    rebuilt = FromOrderedLocale(locale, cfg, workers)
    if cache is not None:
        cache[key] = rebuilt
    return rebuilt


def _compare(original: AbstractCoverage, rebuilt: AbstractCoverage, report: RoundtripReport) -> RoundtripReport:
    for direction in DIRECTIONS:
        before = original.table(direction)
        after = rebuilt.table(direction)
        for (a, u), outcome in before.items():
            again = after[(a, u)]
            if Outcome.UNKNOWN in (outcome, again):
                report.unknown += 1
                continue
            report.compared += 1
            if outcome is again:
                continue
            if outcome is Outcome.COVERED:
                report.only_original += 1
            else:
                report.only_rebuilt += 1
            if len(report.differences) < MAX_RECORDED:
                report.differences.append(
                    {
                        "direction": direction,
                        "region": original.format(a),
                        "target": original.format(u),
                        "original": outcome.value,
                        "rebuilt": again.value,
                    }
                )
    report.relation = _relation(report.only_original, report.only_rebuilt)
    log.debug(
        "roundtrip_compared",
        coverage=original.name,
        relation=report.relation,
        compared=report.compared,
        unknown=report.unknown,
    )
    return report


def two_point_spaces() -> list[FiniteSpace]:
    """The two-point frames up to relabelling: discrete and Sierpiński."""
    return [
        build_space("DISCRETE2", ["p", "q"]),
        build_space("SIERPINSKI2", ["p", "q"], [], [["p"]]),
    ]


def _decompositions(frame: tuple[Mask, ...]) -> dict[Mask, tuple[Mask, Mask] | None]:
    """First split U = U₁ ∨ U₂ into strictly smaller opens, or None for join-irreducibles."""
    splits: dict[Mask, tuple[Mask, Mask] | None] = {}
    for u in frame:
        smaller = [v for v in frame if v != u and is_subset(v, u)]
        splits[u] = next(((v, w) for i, v in enumerate(smaller) for w in smaller[i:] if v | w == u), None)
    return splits


def _candidate_sides(space: FiniteSpace) -> Iterator[dict[Mask, frozenset[Mask]]]:
    """One direction's tables with C1 at irreducibles and C2 imposed by construction."""
    frame = space.frame
    splits = _decompositions(frame)
    irreducible = [u for u in frame if u and splits[u] is None]
    options = []
    for u in irreducible:
        others = [a for a in frame if a != u]
        options.append(
            [
                frozenset({u, *(a for a, keep in zip(others, picks) if keep)})
                for picks in product((False, True), repeat=len(others))
            ]
        )
    for choice in product(*options):
        table: dict[Mask, frozenset[Mask]] = {0: frozenset({0})}
        table.update(zip(irreducible, choice))
        for u in frame:
            split = splits[u]
            if u and split is not None:
                left, right = split
                table[u] = frozenset(a | b for a in table[left] for b in table[right])
        yield table


@dataclass
class CounterexampleSearch:
    """Result of search_explicit_counterexample on one space.

    Attributes:
        space: Name of the searched space
        candidates: Explicit tables examined
        sites: Candidates satisfying C1-C5
        counterexample: First site whose roundtrip differs, if any
        roundtrip: Its roundtrip report
        truncated: True when the budget stopped the search
    """

    space: str
    candidates: int = 0
    sites: int = 0
    counterexample: ExplicitTable | None = None
    roundtrip: RoundtripReport | None = None
    truncated: bool = False

    @property
    def found(self) -> bool:
        return self.counterexample is not None

    def to_dict(self) -> dict:
        return {
            "space": self.space,
            "candidates": self.candidates,
            "sites": self.sites,
            "found": self.found,
            "truncated": self.truncated,
            "counterexample": None if self.counterexample is None else self.counterexample.membership_table(),
            "roundtrip": None if self.roundtrip is None else self.roundtrip.to_dict(),
        }


def search_explicit_counterexample(
    space: FiniteSpace, cfg: CoverageConfig | None = None, budget: int | None = None
) -> CounterexampleSearch:
    """Look for a causal site on a tiny frame that the roundtrip does not reproduce.

    Candidates fix Cov(∅) = {∅}, put U into Cov(U) at join-irreducible U and
    build the remaining targets from one binary split. check_causal_site_axioms
    then filters them before the roundtrip runs.

    Raises:
        CapacityError: If the frame has more than MAX_SEARCH_OPENS opens
    """
    if not space.frame_enumerable or len(space.frame) > MAX_SEARCH_OPENS:
        raise CapacityError(f"Explicit-table search needs at most {MAX_SEARCH_OPENS} opens; '{space.name}' has more")
    budget = budget or get_settings().budget
    search = CounterexampleSearch(space=space.name)
    sides = list(_candidate_sides(space))
    rebuilt: dict = {}
    try:
        for past, future in product(sides, sides):
            search.candidates += 1
            if search.candidates > budget:
                raise BudgetExceededError("candidate table", budget)
            table = ExplicitTable(space, past, future, name=f"{space.name}-table-{search.candidates}")
            if not check_causal_site_axioms(table).holds:
                continue
            search.sites += 1
            report = RoundtripReport(coverage=table.name)
            try:
                report = _compare(table, _rebuild(table, cfg, None, rebuilt), report)
            except MonadLawError as exc:
                report.relation, report.detail = "not_a_monad_pair", str(exc)
            if not report.equal:
                search.counterexample, search.roundtrip = table, report
                break
    except BudgetExceededError:
        search.truncated = True
    log.info(
        "roundtrip_search_finished",
        space=space.name,
        candidates=search.candidates,
        sites=search.sites,
        found=search.found,
        truncated=search.truncated,
    )
    return search
