"""Grothendieck-topology checks for causal coverage.

J⁻ assigns to each open U the sieves R on ⇓U with ⋁R ∈ Cov⁻(U). With
T = ⇓ and the multiplication ⇓⇓U = ⇓U the axioms read:

- (i)    t_{⇓U} ∈ J⁻(U)
- (ii)   S ∈ J⁻(U), W ⊑ U ⇒ {V ∧ ⇓W : V ∈ S} ∈ J⁻(W)
- (iii)  S ∈ J⁻(U), R a sieve on ⇓U with {V ∧ ⇓D : V ∈ R} ∈ J⁻(D) for every D ∈ S ⇒ R ∈ J⁻(U)
- (i′)   the pushforward of t_U along U ⊑ ⇓U is in J⁻(U)
- (i″)   ⋁R = U ⇒ the pushforward of R is in J⁻(U)

The canonical topology (⋁R = U, T the identity) is checked with the same code.
"""

from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum

from ordered_locale_lab.config import get_settings
from ordered_locale_lab.coverage import CoverageConfig, CoverageEngine, Outcome
from ordered_locale_lab.errors import BudgetExceededError, CapacityError, SieveError
from ordered_locale_lab.locales.axioms import AxiomStatus
from ordered_locale_lab.locales.ordered_locale import OrderedLocale
from ordered_locale_lab.monitoring import get_logger
from ordered_locale_lab.sites.sieve import Sieve, maximal_sieve, pullback, pushforward, sieves_on
from ordered_locale_lab.space.bitmask import Mask, is_subset
from ordered_locale_lab.space.finite_space import FiniteSpace

log = get_logger(__name__)

# Frames above this many opens make sieve enumeration impractical.
MAX_OPENS = 16


class GTAxiom(str, Enum):
    MAXIMAL = "i"
    STABILITY = "ii"
    TRANSITIVITY = "iii"
    UNIT = "i'"
    UNIT_COVERS = "i''"


@dataclass
class GTReport:
    """Outcome of one Grothendieck-topology axiom.

    Attributes:
        axiom: Axiom checked
        status: holds / violated / unknown
        witness: First failing instance as (open or sieve, ...) in enumeration order
        instances: Instances whose premises held and were decided
        unknown: Instances left open by Unknown coverage verdicts
        detail: Budget or frame notes
    """

    axiom: GTAxiom
    status: AxiomStatus = AxiomStatus.HOLDS
    witness: tuple[Mask | Sieve, ...] | None = None
    instances: int = 0
    unknown: int = 0
    detail: str = ""

    @property
    def holds(self) -> bool:
        return self.status is AxiomStatus.HOLDS

    def record(self, conclusion: Outcome | bool, witness: tuple) -> None:
        if conclusion is Outcome.UNKNOWN:
            self.unknown += 1
            return
        self.instances += 1
        if (conclusion is False or conclusion is Outcome.NOT_COVERED) and self.witness is None:
            self.witness = witness
            self.status = AxiomStatus.VIOLATED

    def finish(self) -> "GTReport":
        if self.status is AxiomStatus.HOLDS and self.unknown:
            self.status = AxiomStatus.UNKNOWN
        return self

    def to_dict(self, space: FiniteSpace) -> dict:
        def fmt(item: Mask | Sieve):
            return item.to_dict(space) if isinstance(item, Sieve) else space.labels(item)

        return {
            "axiom": self.axiom.value,
            "status": self.status.value,
            "witness": None if self.witness is None else [fmt(w) for w in self.witness],
            "instances": self.instances,
            "unknown": self.unknown,
            "detail": self.detail,
        }


Membership = Callable[[Mask, Sieve], Outcome]


def _as_outcome(value: bool) -> Outcome:
    return Outcome.COVERED if value else Outcome.NOT_COVERED


def j_minus_member(engine: CoverageEngine, target: Mask, sieve: Sieve) -> Outcome:
    """R ∈ J⁻(U) iff ⋁R ∈ Cov⁻(U); three-valued like the coverage verdict.

    Raises:
        SieveError: If the sieve does not live on ⇓U
    """
    if sieve.root != engine.locale.cone_down(target):
        raise SieveError(
            f"Sieve must live on ⇓{engine.locale.format(target)} = {engine.locale.format(engine.locale.cone_down(target))}"
        )
    return engine.cov_minus(sieve.join, target).outcome


class _GTChecker:
    """Axioms (i)-(iii) for a topology given by T and a membership oracle."""

    def __init__(self, space: FiniteSpace, cone: Callable[[Mask], Mask], member: Membership, budget: int):
        self.space = space
        self.cone = cone
        self.member = member
        self.budget = budget
        self._sieves: dict[Mask, list[Sieve]] = {}

    def sieves(self, root: Mask) -> list[Sieve]:
        found = self._sieves.get(root)
        if found is None:
            found = sieves_on(self.space, root, limit=self.budget)
            self._sieves[root] = found
        return found

    def covering(self, target: Mask) -> tuple[list[Sieve], int]:
        """Covering sieves on T(U), plus how many were Unknown."""
        covering, unknown = [], 0
        for s in self.sieves(self.cone(target)):
            outcome = self.member(target, s)
            if outcome is Outcome.COVERED:
                covering.append(s)
            elif outcome is Outcome.UNKNOWN:
                unknown += 1
        return covering, unknown

    def maximal(self, report: GTReport) -> None:
        for u in self.space.frame:
            report.record(self.member(u, maximal_sieve(self.space, self.cone(u))), (u,))

    def stability(self, report: GTReport) -> None:
        for u in self.space.frame:
            covering, unknown = self.covering(u)
            subs = [w for w in self.space.frame if is_subset(w, u)]
            report.unknown += unknown * len(subs)
            for s in covering:
                for w in subs:
                    report.record(self.member(w, pullback(s, self.cone(w))), (u, s, w))

    def transitivity(self, report: GTReport) -> None:
        for u in self.space.frame:
            covering, unknown = self.covering(u)
            candidates = self.sieves(self.cone(u))
            report.unknown += unknown * len(candidates)
            if len(covering) * len(candidates) > self.budget:
                raise BudgetExceededError("sieve pair", self.budget)
            for s in covering:
                for r in candidates:
                    local = [self.member(d, pullback(r, self.cone(d))) for d in sorted(s.members)]
                    if Outcome.NOT_COVERED in local:
                        continue
                    if Outcome.UNKNOWN in local:
                        report.unknown += 1
                        continue
                    report.record(self.member(u, r), (u, s, r))

    def run(self, axiom: GTAxiom, check: Callable[[GTReport], None]) -> GTReport:
        report = GTReport(axiom)
        try:
            check(report)
        except BudgetExceededError as exc:
            return GTReport(axiom, AxiomStatus.UNKNOWN, instances=report.instances, detail=str(exc))
        return report.finish()


def _require_small(space: FiniteSpace) -> None:
    if not space.frame_enumerable or len(space.frame) > MAX_OPENS:
        raise CapacityError(f"Sieve checks need at most {MAX_OPENS} opens; '{space.name}' has more")


def verify_down_gt_axioms(
    L: OrderedLocale, cfg: CoverageConfig | None = None, budget: int | None = None
) -> list[GTReport]:
    """Check that J⁻ is a ⇓-Grothendieck topology on L's frame.

    Args:
        L: Locale with at most MAX_OPENS opens
        cfg: Coverage bounds for the membership oracle
        budget: Cap on sieves per root and on (S, R) pairs per open

    Returns:
        Reports for (i), (ii), (iii), (i′), (i″) in that order

    Raises:
        CapacityError: If the frame has too many opens
    """
    _require_small(L.space)
    budget = budget or get_settings().budget
    engine = CoverageEngine(L, cfg or CoverageConfig(keep_certificates=False))
    space = L.space

    def member(target: Mask, sieve: Sieve) -> Outcome:
        return j_minus_member(engine, target, sieve)

    checker = _GTChecker(space, L.cone_down, member, budget)

    def unit(report: GTReport) -> None:
        for u in space.frame:
            report.record(member(u, pushforward(maximal_sieve(space, u), L.cone_down(u))), (u,))

    def unit_covers(report: GTReport) -> None:
        for u in space.frame:
            for r in checker.sieves(u):
                if r.join == u:
                    report.record(member(u, pushforward(r, L.cone_down(u))), (u, r))

    reports = [
        checker.run(GTAxiom.MAXIMAL, checker.maximal),
        checker.run(GTAxiom.STABILITY, checker.stability),
        checker.run(GTAxiom.TRANSITIVITY, checker.transitivity),
        checker.run(GTAxiom.UNIT, unit),
        checker.run(GTAxiom.UNIT_COVERS, unit_covers),
    ]
    log.info(
        "gt_axioms_checked",
        locale=L.name,
        topology="down",
        violated=[r.axiom.value for r in reports if r.status is AxiomStatus.VIOLATED],
        unknown=[r.axiom.value for r in reports if r.status is AxiomStatus.UNKNOWN],
    )
    return reports


def verify_canonical_gt_axioms(space: FiniteSpace, budget: int | None = None) -> list[GTReport]:
    """Check (i)-(iii) for the canonical topology ⋁R = U."""
    _require_small(space)
    budget = budget or get_settings().budget

    def member(target: Mask, sieve: Sieve) -> Outcome:
        return _as_outcome(sieve.join == target)

    checker = _GTChecker(space, lambda u: u, member, budget)
    return [
        checker.run(GTAxiom.MAXIMAL, checker.maximal),
        checker.run(GTAxiom.STABILITY, checker.stability),
        checker.run(GTAxiom.TRANSITIVITY, checker.transitivity),
    ]


@dataclass
class KleisliReport:
    """First failure of stability on the Kleisli preorder W ⊑ ⇓U.

    Attributes:
        target: The covered open U
        sieve: Covering sieve S on ⇓U
        source: W ⊑ ⇓U with W ⋢ U
        pulled: {V ∧ ⇓W : V ∈ S}
        checked: Instances examined
        unknown: Instances left open by Unknown verdicts
    """

    target: Mask | None = None
    sieve: Sieve | None = None
    source: Mask | None = None
    pulled: Sieve | None = None
    checked: int = 0
    unknown: int = 0

    @property
    def found(self) -> bool:
        return self.target is not None

    def to_dict(self, space: FiniteSpace) -> dict:
        if not self.found:
            return {"found": False, "checked": self.checked, "unknown": self.unknown}
        return {
            "found": True,
            "target": space.labels(self.target),
            "sieve": self.sieve.to_dict(space),
            "source": space.labels(self.source),
            "pulled": self.pulled.to_dict(space),
            "checked": self.checked,
            "unknown": self.unknown,
        }


def kleisli_counterexample(
    L: OrderedLocale, cfg: CoverageConfig | None = None, budget: int | None = None
) -> KleisliReport:
    """Search the Kleisli arrows W ⊑ ⇓U for a covering sieve whose pullback stops covering.

    A W in the past of U but disjoint from ⋁S pulls S back to a sieve with join
    ∅, which covers nothing nonempty.
    """
    _require_small(L.space)
    budget = budget or get_settings().budget
    engine = CoverageEngine(L, cfg or CoverageConfig(keep_certificates=False))
    space = L.space
    report = KleisliReport()
    for u in space.frame:
        down = L.cone_down(u)
        for s in sieves_on(space, down, limit=budget):
            if j_minus_member(engine, u, s) is not Outcome.COVERED:
                continue
            for w in space.frame:
                if not is_subset(w, down) or is_subset(w, u):
                    continue
                pulled = pullback(s, L.cone_down(w))
                report.checked += 1
                outcome = engine.cov_minus(pulled.join, w).outcome
                if outcome is Outcome.UNKNOWN:
                    report.unknown += 1
                elif outcome is Outcome.NOT_COVERED:
                    report.target, report.sieve, report.source, report.pulled = u, s, w, pulled
                    log.info("kleisli_failure_found", locale=L.name, target=L.format(u), source=L.format(w))
                    return report
    return report
