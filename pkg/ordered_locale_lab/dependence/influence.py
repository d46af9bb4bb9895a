"""Regions of influence L± and domains of dependence D±.

L±(U) = ⋁Cov±(U) is the largest region that can influence U; on a causal
site both are join-preserving monads. D⁺(A) = ⋁{V : A ∈ Cov⁻(V)} is the
largest region whose past is determined by A, and D⁻ is its dual. The D±
are monads too but generally do not preserve joins.

Only COVERED memberships enter a join. When Unknown entries exist the tables
are certified lower bounds and the affected opens are flagged.
"""

from dataclasses import dataclass, field

from ordered_locale_lab.coverage import Outcome
from ordered_locale_lab.dependence.abstract import AbstractCoverage
from ordered_locale_lab.monitoring import get_logger
from ordered_locale_lab.space.bitmask import Mask, is_subset, join_all
from ordered_locale_lab.space.finite_space import FiniteSpace

log = get_logger(__name__)

OpenMap = dict[Mask, Mask]


def monad_violations(space: FiniteSpace, table: OpenMap, label: str, joins: bool = True) -> list[dict]:
    """Failures of the monad laws (and join preservation) for an open → open table.

    Args:
        space: Space whose frame is the table's domain
        table: The tabulated map
        label: Name used in the returned records, e.g. "L+"
        joins: Also check binary and nullary join preservation

    Returns:
        One record per failing instance, in frame order
    """
    frame = space.frame
    found: list[dict] = []
    for u in frame:
        image = table[u]
        if not is_subset(u, image):
            found.append({"map": label, "law": "extensive", "opens": [space.format(u)]})
        if table.get(image) != image:
            found.append({"map": label, "law": "idempotent", "opens": [space.format(u)]})
    for u in frame:
        for v in frame:
            if is_subset(u, v) and not is_subset(table[u], table[v]):
                found.append({"map": label, "law": "monotone", "opens": [space.format(u), space.format(v)]})
    if joins:
        if table[0] != 0:
            found.append({"map": label, "law": "join", "opens": []})
        for i, u in enumerate(frame):
            for v in frame[i + 1 :]:
                if table[u | v] != table[u] | table[v]:
                    found.append({"map": label, "law": "join", "opens": [space.format(u), space.format(v)]})
    return found


def _serialize(space: FiniteSpace, table: OpenMap) -> dict[str, list[str]]:
    return {space.format(u): space.labels(table[u]) for u in space.frame}


@dataclass
class InfluenceResult:
    """Tabulated regions of influence.

    Attributes:
        coverage: Name of the coverage
        plus: L⁺ = ⋁Cov⁺
        minus: L⁻ = ⋁Cov⁻
        flagged: direction → targets whose covers include Unknown entries
        violations: Monad-law failures found when re-checking the tables
    """

    coverage: str
    plus: OpenMap
    minus: OpenMap
    flagged: dict[str, list[Mask]] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)

    @property
    def lawful(self) -> bool:
        return not self.violations

    @property
    def partial(self) -> bool:
        return any(self.flagged.values())

    def of(self, direction: str) -> OpenMap:
        """L⁻ for "past", L⁺ for "future"."""
        return self.minus if direction == "past" else self.plus

    def to_dict(self, space: FiniteSpace) -> dict:
        return {
            "coverage": self.coverage,
            "L_plus": _serialize(space, self.plus),
            "L_minus": _serialize(space, self.minus),
            "partial": self.partial,
            "flagged": {d: [space.format(u) for u in us] for d, us in self.flagged.items()},
            "violations": self.violations,
        }


def _flagged(coverage: AbstractCoverage, direction: str) -> list[Mask]:
    table = coverage.table(direction)
    frame = coverage.frame
    return [u for u in frame if any(table[(a, u)] is Outcome.UNKNOWN for a in frame)]


def influence(coverage: AbstractCoverage) -> InfluenceResult:
    """Tabulate L± and re-check their monad laws.

    Example:
        >>> result = influence(FromOrderedLocale(egli_milner_locale(chain3())))
        >>> result.minus[c] == L.cone_down(c)
        True
    """
    space = coverage.space
    plus = {u: join_all(coverage.covers("future", u)) for u in coverage.frame}
    minus = {u: join_all(coverage.covers("past", u)) for u in coverage.frame}
    result = InfluenceResult(
        coverage=coverage.name,
        plus=plus,
        minus=minus,
        flagged={d: _flagged(coverage, d) for d in ("past", "future")},
        violations=monad_violations(space, plus, "L+") + monad_violations(space, minus, "L-"),
    )
    log.debug(
        "influence_tabulated",
        coverage=coverage.name,
        lawful=result.lawful,
        partial=result.partial,
    )
    return result


@dataclass
class DependenceResult:
    """Tabulated domains of dependence with per-open provenance.

    Attributes:
        coverage: Name of the coverage
        plus: D⁺(A) = ⋁{V : A ∈ Cov⁻(V)}
        minus: D⁻(A) = ⋁{V : A ∈ Cov⁺(V)}
        provenance: "plus"/"minus" → A → {"covered": [V], "unknown": [V]};
            every other V was refuted
    """

    coverage: str
    plus: OpenMap
    minus: OpenMap
    provenance: dict[str, dict[Mask, dict[str, list[Mask]]]] = field(default_factory=dict)

    def flagged(self, sign: str) -> list[Mask]:
        """Opens whose domain is only a lower bound because some V was Unknown."""
        return [a for a, p in self.provenance[sign].items() if p["unknown"]]

    @property
    def partial(self) -> bool:
        return bool(self.flagged("plus") or self.flagged("minus"))

    def of(self, sign: str) -> OpenMap:
        return self.plus if sign == "plus" else self.minus

    def to_dict(self, space: FiniteSpace) -> dict:
        def prov(sign: str) -> dict:
            return {
                space.format(a): {k: [space.labels(v) for v in vs] for k, vs in p.items()}
                for a, p in self.provenance[sign].items()
            }

        return {
            "coverage": self.coverage,
            "D_plus": _serialize(space, self.plus),
            "D_minus": _serialize(space, self.minus),
            "partial": self.partial,
            "provenance": {"plus": prov("plus"), "minus": prov("minus")},
        }


def domain_of_dependence(coverage: AbstractCoverage) -> DependenceResult:
    """Tabulate D± from the membership tables.

    D⁺ reads the Cov⁻ table column by column and D⁻ the Cov⁺ table. Unknown
    memberships are excluded from the join and listed in the provenance.
    """
    frame = coverage.frame
    provenance: dict[str, dict[Mask, dict[str, list[Mask]]]] = {}
    domains: dict[str, OpenMap] = {}
    for sign, direction in (("plus", "past"), ("minus", "future")):
        table = coverage.table(direction)
        provenance[sign] = {
            a: {
                "covered": [v for v in frame if table[(a, v)] is Outcome.COVERED],
                "unknown": [v for v in frame if table[(a, v)] is Outcome.UNKNOWN],
            }
            for a in frame
        }
        domains[sign] = {a: join_all(provenance[sign][a]["covered"]) for a in frame}
    result = DependenceResult(
        coverage=coverage.name, plus=domains["plus"], minus=domains["minus"], provenance=provenance
    )
    if result.partial:
        log.warning(
            "dependence_partial",
            coverage=coverage.name,
            flagged_plus=len(result.flagged("plus")),
            flagged_minus=len(result.flagged("minus")),
        )
    log.debug("dependence_tabulated", coverage=coverage.name, partial=result.partial)
    return result
