"""Identities relating coverage, regions of influence and domains of dependence.

- d_monad:        A ⊑ D±(A), D± monotone, D±∘D± = D±
- pullback:       A ∈ Cov±(U), W ⊑ U ⇒ A ∧ L±(W) ∈ Cov±(W)
- determination:  A ∈ Cov±(U) ⇔ A ⊑ L±(U) and U ⊑ D∓(A)
- composition:    L±∘D± = L±
- d_below_l:      D± ⊑ L± pointwise
- cones:          L⁻ = ⇓ and L⁺ = ⇑ (coverages of ordered locales only)
- order_recovery: U ⊑ L⁻(V) and V ⊑ L⁺(U) ⇔ U ⊴ V (coverages of ordered locales only)

Identities that read L or D tables only count as decided on fully decided
coverages; otherwise their instances are tallied as unknown.
"""

from dataclasses import dataclass, field

from ordered_locale_lab.coverage import Outcome
from ordered_locale_lab.coverage.properties import PropertyResult
from ordered_locale_lab.dependence.abstract import AbstractCoverage, FromOrderedLocale
from ordered_locale_lab.dependence.influence import (
    DependenceResult,
    InfluenceResult,
    domain_of_dependence,
    influence,
)
from ordered_locale_lab.monitoring import get_logger
from ordered_locale_lab.space.bitmask import is_subset

log = get_logger(__name__)

LEMMAS = ("d_monad", "pullback", "determination", "composition", "d_below_l", "cones", "order_recovery")

# direction → (sign of its L, opposite sign)
SIGNS = {"past": ("minus", "plus"), "future": ("plus", "minus")}


@dataclass
class DependenceLemmaReport:
    coverage: str
    results: dict[str, PropertyResult] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(r.holds for r in self.results.values())

    def to_dict(self) -> dict:
        return {
            "coverage": self.coverage,
            "holds": self.holds,
            "lemmas": [self.results[name].to_dict() for name in LEMMAS if name in self.results],
        }


class _LemmaChecker:
    def __init__(self, coverage: AbstractCoverage, L: InfluenceResult, D: DependenceResult):
        self.c = coverage
        self.frame = coverage.frame
        self.L = L
        self.D = D
        self.decided = coverage.fully_decided

    def fmt(self, mask: int) -> str:
        return self.c.format(mask)

    def expect(self, result: PropertyResult, holds: bool | None, **instance) -> None:
        if holds is None:
            result.unknown += 1
            return
        result.instances += 1
        if not holds:
            result.violate(**instance)

    def tabled(self, result: PropertyResult, holds: bool, **instance) -> None:
        """An instance that reads L or D and so needs a fully decided coverage."""
        self.expect(result, holds if self.decided else None, **instance)

    def d_monad(self, result: PropertyResult) -> None:
        for sign in ("plus", "minus"):
            d = self.D.of(sign)
            for a in self.frame:
                self.expect(result, is_subset(a, d[a]), sign=sign, law="extensive", open=self.fmt(a))
                self.tabled(result, d[d[a]] == d[a], sign=sign, law="idempotent", open=self.fmt(a))
                for b in self.frame:
                    if is_subset(a, b):
                        self.tabled(
                            result, is_subset(d[a], d[b]), sign=sign, law="monotone",
                            opens=[self.fmt(a), self.fmt(b)],
                        )

    def pullback(self, result: PropertyResult) -> None:
        for direction in ("past", "future"):
            table = self.c.table(direction)
            influence_map = self.L.of(direction)
            for u in self.frame:
                for a in self.frame:
                    first = table[(a, u)]
                    if first is Outcome.NOT_COVERED:
                        continue
                    for w in self.frame:
                        if not is_subset(w, u):
                            continue
                        conclusion = table[(a & influence_map[w], w)]
                        if first is Outcome.UNKNOWN or conclusion is Outcome.UNKNOWN:
                            result.unknown += 1
                            continue
                        self.tabled(
                            result, conclusion is Outcome.COVERED, direction=direction,
                            region=self.fmt(a), target=self.fmt(u), sub=self.fmt(w),
                        )

    def determination(self, result: PropertyResult) -> None:
        for direction, (_, d_sign) in SIGNS.items():
            table = self.c.table(direction)
            influence_map = self.L.of(direction)
            domain = self.D.of(d_sign)
            for u in self.frame:
                for a in self.frame:
                    member = table[(a, u)]
                    if member is Outcome.UNKNOWN:
                        result.unknown += 1
                        continue
                    predicted = is_subset(a, influence_map[u]) and is_subset(u, domain[a])
                    self.tabled(
                        result, predicted == (member is Outcome.COVERED), direction=direction,
                        region=self.fmt(a), target=self.fmt(u), member=member.value,
                    )

    def composition(self, result: PropertyResult) -> None:
        for direction, (sign, _) in SIGNS.items():
            influence_map = self.L.of(direction)
            domain = self.D.of(sign)
            for u in self.frame:
                self.tabled(result, influence_map[domain[u]] == influence_map[u], sign=sign, open=self.fmt(u))

    def d_below_l(self, result: PropertyResult) -> None:
        for direction, (sign, _) in SIGNS.items():
            influence_map = self.L.of(direction)
            domain = self.D.of(sign)
            for u in self.frame:
                self.tabled(result, is_subset(domain[u], influence_map[u]), sign=sign, open=self.fmt(u))

    def cones(self, result: PropertyResult) -> None:
        locale = self.c.locale
        for u in self.frame:
            self.tabled(result, self.L.minus[u] == locale.cone_down(u), cone="down", open=self.fmt(u))
            self.tabled(result, self.L.plus[u] == locale.cone_up(u), cone="up", open=self.fmt(u))

    def order_recovery(self, result: PropertyResult) -> None:
        locale = self.c.locale
        for u in self.frame:
            for v in self.frame:
                induced = is_subset(u, self.L.minus[v]) and is_subset(v, self.L.plus[u])
                self.tabled(result, induced == locale.relates(u, v), opens=[self.fmt(u), self.fmt(v)])


def verify_dependence_lemmas(coverage: AbstractCoverage) -> DependenceLemmaReport:
    """Evaluate every identity over all opens (and pairs) of the coverage's frame.

    cones and order_recovery run only when the coverage comes from an ordered
    locale, since they compare against its order.
    """
    checker = _LemmaChecker(coverage, influence(coverage), domain_of_dependence(coverage))
    names = LEMMAS if isinstance(coverage, FromOrderedLocale) else LEMMAS[:5]
    report = DependenceLemmaReport(coverage=coverage.name)
    for name in names:
        result = PropertyResult(name)
        getattr(checker, name)(result)
        report.results[name] = result
    log.info(
        "dependence_lemmas_checked",
        coverage=coverage.name,
        failing=[n for n, r in report.results.items() if not r.holds],
        decided=checker.decided,
    )
    return report
