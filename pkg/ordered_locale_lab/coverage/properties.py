"""Check the structural properties of causal coverage on a finite frame.

Properties (Cov = Cov⁻ or Cov⁺; d/u = ⇓/⇑):
- reflexive:     U ∈ Cov(U)
- cone:          d(U) ∈ Cov⁻(U) and u(U) ∈ Cov⁺(U)
- transitive:    B ∈ Cov(A), A ∈ Cov(U) ⇒ B ∈ Cov(U)
- pullback:      A ∈ Cov⁻(U), W ⊑ U ⇒ A ∧ d(W) ∈ Cov⁻(W), dually with u for Cov⁺
- order:         A ∈ Cov⁻(U) ⇒ A ⊴ U and B ∈ Cov⁺(U) ⇒ U ⊴ B
- empty:         Cov(∅) = {∅}
- join_weak:     Aᵢ ∈ Cov(Uᵢ) ⇒ A₁ ∨ A₂ ∈ Cov(U₁ ∨ U₂)
- join_strong:   Cov(U₁ ∨ U₂) = {A₁ ∨ A₂ : Aᵢ ∈ Cov(Uᵢ)}

Membership comes from a CoverageEngine, so an Unknown verdict anywhere in an
instance is tallied as unknown instead of counting as a violation.
"""

from dataclasses import dataclass, field

from ordered_locale_lab.coverage.config import CoverageConfig
from ordered_locale_lab.coverage.engine import CoverageEngine
from ordered_locale_lab.coverage.verdict import Outcome
from ordered_locale_lab.errors import CapacityError
from ordered_locale_lab.locales.ordered_locale import OrderedLocale
from ordered_locale_lab.monitoring import get_logger
from ordered_locale_lab.space.bitmask import is_subset

log = get_logger(__name__)

PROPERTIES = ("reflexive", "cone", "transitive", "pullback", "order", "empty", "join_weak", "join_strong")
DIRECTIONS = ("past", "future")

MAX_RECORDED = 20


@dataclass
class PropertyResult:
    name: str
    instances: int = 0
    unknown: int = 0
    violations: list[dict] = field(default_factory=list)
    violation_count: int = 0

    @property
    def holds(self) -> bool:
        return self.violation_count == 0

    def violate(self, **instance) -> None:
        self.violation_count += 1
        if len(self.violations) < MAX_RECORDED:
            self.violations.append(instance)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "instances": self.instances,
            "unknown": self.unknown,
            "violation_count": self.violation_count,
            "violations": self.violations,
        }


@dataclass
class CovPropertyReport:
    locale: str
    results: dict[str, PropertyResult] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(r.holds for r in self.results.values())

    def to_dict(self) -> dict:
        return {
            "locale": self.locale,
            "holds": self.holds,
            "properties": [self.results[name].to_dict() for name in PROPERTIES if name in self.results],
        }


class _Checker:
    def __init__(self, engine: CoverageEngine):
        self.engine = engine
        self.L = engine.locale
        self.frame = engine.locale.frame
        self.tables = {d: engine.table(d) for d in DIRECTIONS}
        self.covers = {
            d: {u: [a for a in self.frame if self.tables[d][(a, u)] is Outcome.COVERED] for u in self.frame}
            for d in DIRECTIONS
        }

    def outcome(self, direction: str, region: int, target: int) -> Outcome:
        return self.tables[direction][(region, target)]

    def fmt(self, mask: int) -> str:
        return self.L.format(mask)

    def expect(self, result: PropertyResult, conclusion: Outcome | bool, **instance) -> None:
        """Record one instance whose premises are known to hold."""
        if conclusion is Outcome.UNKNOWN:
            result.unknown += 1
            return
        result.instances += 1
        if conclusion is False or conclusion is Outcome.NOT_COVERED:
            result.violate(**instance)

    def reflexive(self, result: PropertyResult) -> None:
        for d in DIRECTIONS:
            for u in self.frame:
                self.expect(result, self.outcome(d, u, u), direction=d, target=self.fmt(u))

    def cone(self, result: PropertyResult) -> None:
        for u in self.frame:
            self.expect(result, self.outcome("past", self.L.cone_down(u), u), direction="past", target=self.fmt(u))
            self.expect(result, self.outcome("future", self.L.cone_up(u), u), direction="future", target=self.fmt(u))

    def transitive(self, result: PropertyResult) -> None:
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

    def pullback(self, result: PropertyResult) -> None:
        for d in DIRECTIONS:
            cone = self.L.cone_down if d == "past" else self.L.cone_up
            for u in self.frame:
                for a in self.frame:
                    first = self.outcome(d, a, u)
                    if first is Outcome.NOT_COVERED:
                        continue
                    for w in self.frame:
                        if not is_subset(w, u):
                            continue
                        if first is Outcome.UNKNOWN:
                            result.unknown += 1
                            continue
                        self.expect(
                            result, self.outcome(d, a & cone(w), w), direction=d,
                            region=self.fmt(a), target=self.fmt(u), sub=self.fmt(w),
                        )

    def order(self, result: PropertyResult) -> None:
        for d in DIRECTIONS:
            for u in self.frame:
                for a in self.frame:
                    first = self.outcome(d, a, u)
                    if first is Outcome.NOT_COVERED:
                        continue
                    if first is Outcome.UNKNOWN:
                        result.unknown += 1
                        continue
                    related = self.L.relates(a, u) if d == "past" else self.L.relates(u, a)
                    self.expect(result, related, direction=d, region=self.fmt(a), target=self.fmt(u))

    def empty(self, result: PropertyResult) -> None:
        for d in DIRECTIONS:
            for a in self.frame:
                o = self.outcome(d, a, 0)
                if o is Outcome.UNKNOWN:
                    result.unknown += 1
                    continue
                self.expect(result, o is Outcome.COVERED if a == 0 else o is Outcome.NOT_COVERED,
                            direction=d, region=self.fmt(a))

    def join_weak(self, result: PropertyResult) -> None:
        for d in DIRECTIONS:
            for i, u1 in enumerate(self.frame):
                for u2 in self.frame[i:]:
                    for a1 in self.covers[d][u1]:
                        for a2 in self.covers[d][u2]:
                            self.expect(
                                result, self.outcome(d, a1 | a2, u1 | u2), direction=d,
                                regions=[self.fmt(a1), self.fmt(a2)], targets=[self.fmt(u1), self.fmt(u2)],
                            )

    def join_strong(self, result: PropertyResult) -> None:
        for d in DIRECTIONS:
            for i, u1 in enumerate(self.frame):
                for u2 in self.frame[i:]:
                    involved = (u1, u2, u1 | u2)
                    if any(self.tables[d][(a, u)] is Outcome.UNKNOWN for u in involved for a in self.frame):
                        result.unknown += 1
                        continue
                    joins = {a1 | a2 for a1 in self.covers[d][u1] for a2 in self.covers[d][u2]}
                    direct = set(self.covers[d][u1 | u2])
                    self.expect(
                        result, joins == direct, direction=d, targets=[self.fmt(u1), self.fmt(u2)],
                        missing=[self.fmt(a) for a in sorted(direct - joins)],
                        extra=[self.fmt(a) for a in sorted(joins - direct)],
                    )


def verify_cov_properties(
    L: OrderedLocale, cfg: CoverageConfig | None = None, workers: int | None = None
) -> CovPropertyReport:
    """Instantiate every coverage property over all opens of L.

    Args:
        L: Locale with an enumerable frame (parallel ordered with (c-∨) for the
            properties to be theorems)
        cfg: Coverage bounds shared by every membership question (default keeps no certificates)
        workers: Thread count for the coverage engine

    Returns:
        CovPropertyReport with one PropertyResult per property

    Raises:
        CapacityError: If the frame cannot be enumerated
    """
    if not L.frame_enumerable:
        raise CapacityError(f"Frame of '{L.name}' is too large to enumerate coverage properties")
    cfg = cfg or CoverageConfig(keep_certificates=False)
    checker = _Checker(CoverageEngine(L, cfg, workers))
    report = CovPropertyReport(locale=L.name)
    for name in PROPERTIES:
        result = PropertyResult(name)
        getattr(checker, name)(result)
        report.results[name] = result
    log.info(
        "coverage_properties_checked",
        locale=L.name,
        failing=[n for n, r in report.results.items() if not r.holds],
        unknown=sum(r.unknown for r in report.results.values()),
    )
    return report
