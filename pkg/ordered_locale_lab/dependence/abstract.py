"""Abstract causal coverages and the causal-site axioms.

An abstract coverage is a pair of functions Cov± from opens to sets of opens.
It is a causal site when, for both signs:

- C1: U ∈ Cov(U)
- C2: Cov(⋁ᵢUᵢ) = {⋁ᵢAᵢ : Aᵢ ∈ Cov(Uᵢ)}, checked at arity 0 and 2
- C3: B ∈ Cov(A), A ∈ Cov(U) ⇒ B ∈ Cov(U)
- C4: A, B ∈ Cov(U), A ⊑ C ⊑ B ⇒ C ∈ Cov(U)
- C5: A ∈ Cov±(U) ⇒ some W ∈ Cov∓(A) has U ⊑ W
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from ordered_locale_lab.coverage import CoverageConfig, CoverageEngine, Outcome
from ordered_locale_lab.coverage.properties import DIRECTIONS, PropertyResult
from ordered_locale_lab.errors import CapacityError, SpaceDefinitionError
from ordered_locale_lab.locales.ordered_locale import OrderedLocale
from ordered_locale_lab.monitoring import get_logger
from ordered_locale_lab.space.bitmask import Mask, is_subset
from ordered_locale_lab.space.finite_space import FiniteSpace

log = get_logger(__name__)

SITE_AXIOMS = ("C1", "C2", "C3", "C4", "C5")

OPPOSITE = {"past": "future", "future": "past"}

Table = dict[tuple[Mask, Mask], Outcome]


def _check_direction(direction: str) -> None:
    if direction not in DIRECTIONS:
        raise ValueError(f"Unknown direction '{direction}' (expected past or future)")


class AbstractCoverage:
    """Three-valued membership oracle for Cov⁻ ("past") and Cov⁺ ("future").

    Subclasses implement member(); tables are built once per direction.
    """

    provenance = "abstract"

    def __init__(self, space: FiniteSpace, name: str):
        if not space.frame_enumerable:
            raise CapacityError(f"Frame of '{space.name}' is too large for an abstract coverage")
        self.space = space
        self.name = name
        self._tables: dict[str, Table] = {}

    @property
    def frame(self) -> tuple[Mask, ...]:
        return self.space.frame

    def member(self, direction: str, region: Mask, target: Mask) -> Outcome:
        raise NotImplementedError

    def _build_table(self, direction: str) -> Table:
        return {(a, u): self.member(direction, a, u) for u in self.frame for a in self.frame}

    def table(self, direction: str) -> Table:
        """Outcome for every (region, target) pair of opens."""
        _check_direction(direction)
        table = self._tables.get(direction)
        if table is None:
            table = self._build_table(direction)
            self._tables[direction] = table
        return table

    def covers(self, direction: str, target: Mask) -> list[Mask]:
        """Decided members of Cov(target), in frame order."""
        table = self.table(direction)
        return [a for a in self.frame if table[(a, target)] is Outcome.COVERED]

    def unknown_count(self) -> int:
        return sum(1 for d in DIRECTIONS for o in self.table(d).values() if o is Outcome.UNKNOWN)

    @property
    def fully_decided(self) -> bool:
        return self.unknown_count() == 0

    def format(self, mask: Mask) -> str:
        return self.space.format(mask)

    def membership_table(self) -> dict:
        """Cov± as JSON: direction → target → covering regions."""
        result = {}
        for d in DIRECTIONS:
            table = self.table(d)
            result[d] = {
                self.format(u): {
                    "covered": [self.space.labels(a) for a in self.frame if table[(a, u)] is Outcome.COVERED],
                    "unknown": [self.space.labels(a) for a in self.frame if table[(a, u)] is Outcome.UNKNOWN],
                }
                for u in self.frame
            }
        return {"coverage": self.name, "provenance": self.provenance, "tables": result}


class FromOrderedLocale(AbstractCoverage):
    """Cov⊴ of an ordered locale, decided by the bounded coverage engine."""

    provenance = "ordered-locale"

    def __init__(self, L: OrderedLocale, cfg: CoverageConfig | None = None, workers: int | None = None):
        super().__init__(L.space, L.name)
        self.locale = L
        self.engine = CoverageEngine(L, cfg or CoverageConfig(keep_certificates=False), workers)

    def member(self, direction: str, region: Mask, target: Mask) -> Outcome:
        _check_direction(direction)
        return self.engine.decide(direction, region, target).outcome

    def _build_table(self, direction: str) -> Table:
        return self.engine.table(direction)


class ExplicitTable(AbstractCoverage):
    """Coverage given outright as Cov⁻ and Cov⁺ tables; every entry is decided.

    Attributes:
        past: target → regions in Cov⁻(target); missing targets have no covers
        future: target → regions in Cov⁺(target)
    """

    provenance = "explicit"

    def __init__(
        self,
        space: FiniteSpace,
        past: Mapping[Mask, Iterable[Mask]],
        future: Mapping[Mask, Iterable[Mask]],
        name: str | None = None,
    ):
        super().__init__(space, name or f"{space.name}-explicit")
        self.past = self._normalize(past, "past")
        self.future = self._normalize(future, "future")

    def _normalize(self, entries: Mapping[Mask, Iterable[Mask]], direction: str) -> dict[Mask, frozenset[Mask]]:
        table = {}
        for target, regions in entries.items():
            regions = frozenset(regions)
            for mask in (target, *sorted(regions)):
                if not self.space.is_open(mask):
                    raise SpaceDefinitionError(
                        f"{direction} entry {self.space.format(mask)} is not an open of '{self.space.name}'"
                    )
            table[target] = regions
        return {u: table.get(u, frozenset()) for u in self.frame}

    def member(self, direction: str, region: Mask, target: Mask) -> Outcome:
        _check_direction(direction)
        entries = self.past if direction == "past" else self.future
        return Outcome.COVERED if region in entries.get(target, ()) else Outcome.NOT_COVERED

    @classmethod
    def from_coverage(cls, coverage: AbstractCoverage, name: str | None = None) -> "ExplicitTable":
        """Snapshot the decided members of another coverage; Unknown entries are dropped."""
        return cls(
            coverage.space,
            past={u: coverage.covers("past", u) for u in coverage.frame},
            future={u: coverage.covers("future", u) for u in coverage.frame},
            name=name or f"{coverage.name}-explicit",
        )

    def with_entry(self, direction: str, region: Mask, target: Mask, covered: bool) -> "ExplicitTable":
        """Copy with one membership added or removed."""
        _check_direction(direction)
        past = dict(self.past)
        future = dict(self.future)
        entries = past if direction == "past" else future
        entries[target] = entries[target] | {region} if covered else entries[target] - {region}
        return ExplicitTable(self.space, past, future, name=self.name)


@dataclass
class SiteAxiomReport:
    """C1-C5 over every open of one coverage."""

    coverage: str
    results: dict[str, PropertyResult] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(r.holds for r in self.results.values())

    @property
    def unknown(self) -> int:
        return sum(r.unknown for r in self.results.values())

    def to_dict(self) -> dict:
        return {
            "coverage": self.coverage,
            "holds": self.holds,
            "axioms": [self.results[name].to_dict() for name in SITE_AXIOMS],
        }


class _SiteChecker:
    def __init__(self, coverage: AbstractCoverage):
        self.c = coverage
        self.frame = coverage.frame
        self.tables = {d: coverage.table(d) for d in DIRECTIONS}
        self.covers = {d: {u: coverage.covers(d, u) for u in self.frame} for d in DIRECTIONS}

    def outcome(self, direction: str, region: Mask, target: Mask) -> Outcome:
        return self.tables[direction][(region, target)]

    def fmt(self, mask: Mask) -> str:
        return self.c.format(mask)

    def has_unknown(self, direction: str, target: Mask) -> bool:
        return any(self.outcome(direction, a, target) is Outcome.UNKNOWN for a in self.frame)

    def expect(self, result: PropertyResult, conclusion: Outcome | bool, **instance) -> None:
        if conclusion is Outcome.UNKNOWN:
            result.unknown += 1
            return
        result.instances += 1
        if conclusion is False or conclusion is Outcome.NOT_COVERED:
            result.violate(**instance)

    def C1(self, result: PropertyResult) -> None:
        for d in DIRECTIONS:
            for u in self.frame:
                self.expect(result, self.outcome(d, u, u), direction=d, target=self.fmt(u))

    def C2(self, result: PropertyResult) -> None:
        for d in DIRECTIONS:
            if self.has_unknown(d, 0):
                result.unknown += 1
            else:
                self.expect(result, self.covers[d][0] == [0], direction=d, targets=[])
            for i, u1 in enumerate(self.frame):
                for u2 in self.frame[i:]:
                    if any(self.has_unknown(d, u) for u in (u1, u2, u1 | u2)):
                        result.unknown += 1
                        continue
                    joins = {a1 | a2 for a1 in self.covers[d][u1] for a2 in self.covers[d][u2]}
                    direct = set(self.covers[d][u1 | u2])
                    self.expect(
                        result, joins == direct, direction=d, targets=[self.fmt(u1), self.fmt(u2)],
                        missing=[self.fmt(a) for a in sorted(direct - joins)],
                        extra=[self.fmt(a) for a in sorted(joins - direct)],
                    )

    def C3(self, result: PropertyResult) -> None:
        for d in DIRECTIONS:
            for u in self.frame:
                for a in self.frame:
                    first = self.outcome(d, a, u)
                    if first is Outcome.NOT_COVERED:
                        continue
                    for b in self.frame:
                        second = self.outcome(d, b, a)
                        if second is Outcome.NOT_COVERED:
                            continue
                        if Outcome.UNKNOWN in (first, second):
                            result.unknown += 1
                            continue
                        self.expect(
                            result, self.outcome(d, b, u), direction=d,
                            region=self.fmt(b), middle=self.fmt(a), target=self.fmt(u),
                        )

    def C4(self, result: PropertyResult) -> None:
        for d in DIRECTIONS:
            for u in self.frame:
                candidates = [a for a in self.frame if self.outcome(d, a, u) is not Outcome.NOT_COVERED]
                for a in candidates:
                    for b in candidates:
                        if a == b or not is_subset(a, b):
                            continue
                        sandwiched = [c for c in self.frame if is_subset(a, c) and is_subset(c, b)]
                        if Outcome.UNKNOWN in (self.outcome(d, a, u), self.outcome(d, b, u)):
                            result.unknown += len(sandwiched)
                            continue
                        for c in sandwiched:
                            self.expect(
                                result, self.outcome(d, c, u), direction=d,
                                lower=self.fmt(a), upper=self.fmt(b), region=self.fmt(c), target=self.fmt(u),
                            )

    def C5(self, result: PropertyResult) -> None:
        for d in DIRECTIONS:
            other = OPPOSITE[d]
            for u in self.frame:
                for a in self.frame:
                    first = self.outcome(d, a, u)
                    if first is Outcome.NOT_COVERED:
                        continue
                    if first is Outcome.UNKNOWN:
                        result.unknown += 1
                        continue
                    outcomes = [self.outcome(other, w, a) for w in self.frame if is_subset(u, w)]
                    if Outcome.COVERED in outcomes:
                        conclusion: Outcome | bool = True
                    elif Outcome.UNKNOWN in outcomes:
                        conclusion = Outcome.UNKNOWN
                    else:
                        conclusion = False
                    self.expect(result, conclusion, direction=d, region=self.fmt(a), target=self.fmt(u))


def check_causal_site_axioms(coverage: AbstractCoverage) -> SiteAxiomReport:
    """Evaluate C1-C5 exhaustively over the frame.

    Args:
        coverage: Any abstract coverage; Unknown memberships are tallied, never counted as violations

    Returns:
        SiteAxiomReport with one PropertyResult per axiom

    Example:
        >>> report = check_causal_site_axioms(FromOrderedLocale(egli_milner_locale(chain3())))
        >>> report.holds
        True
    """
    checker = _SiteChecker(coverage)
    report = SiteAxiomReport(coverage=coverage.name)
    for name in SITE_AXIOMS:
        result = PropertyResult(name)
        getattr(checker, name)(result)
        report.results[name] = result
    log.debug(
        "site_axioms_checked",
        coverage=coverage.name,
        provenance=coverage.provenance,
        failing=[n for n, r in report.results.items() if not r.holds],
        unknown=report.unknown,
    )
    return report
