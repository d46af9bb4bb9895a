"""Paired evaluation of the biconditional lemmas about parallel orders.

Each item evaluates both sides independently (through check_axioms or direct
quantification) and reports whether they agree. A disagreement means the
checkers contradict each other, so tests use this report as an oracle.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field

from ordered_locale_lab.config import get_settings
from ordered_locale_lab.locales.axioms import Axiom, AxiomReport, AxiomStatus, check_axioms
from ordered_locale_lab.locales.ordered_locale import OrderedLocale
from ordered_locale_lab.monitoring import get_logger
from ordered_locale_lab.space.bitmask import Mask, is_subset

log = get_logger(__name__)


@dataclass(frozen=True)
class EquivalenceItem:
    """One lemma evaluated on both sides.

    Attributes:
        name: Lemma identifier
        kind: "iff" (both sides must match) or "implies" (lhs ⇒ rhs)
        lhs: Left side value, None when undecided within budget
        rhs: Right side value, None when undecided within budget
        witness: Tuple of opens explaining a false side, if any
    """

    name: str
    kind: str
    lhs: bool | None
    rhs: bool | None
    witness: tuple[Mask, ...] | None = None

    @property
    def agree(self) -> bool | None:
        if self.kind == "implies" and self.lhs is False:
            return True
        if self.lhs is None or self.rhs is None:
            return None
        if self.kind == "iff":
            return self.lhs == self.rhs
        return self.rhs


@dataclass
class EquivalenceReport:
    locale: str
    items: list[EquivalenceItem] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        """No item disagrees (undecided items do not count against it)."""
        return all(item.agree is not False for item in self.items)

    def item(self, name: str) -> EquivalenceItem:
        for item in self.items:
            if item.name == name:
                return item
        raise KeyError(name)

    def to_dict(self, L: OrderedLocale) -> dict:
        return {
            "locale": self.locale,
            "consistent": self.consistent,
            "items": [
                {
                    "name": i.name,
                    "kind": i.kind,
                    "lhs": i.lhs,
                    "rhs": i.rhs,
                    "agree": i.agree,
                    "witness": None if i.witness is None else [L.format(m) for m in i.witness],
                }
                for i in self.items
            ],
        }


def _conj(reports: Sequence[AxiomReport]) -> bool | None:
    if any(r.status is AxiomStatus.VIOLATED for r in reports):
        return False
    if any(r.status is AxiomStatus.UNKNOWN for r in reports):
        return None
    return True


def _first_witness(reports: Sequence[AxiomReport]) -> tuple[Mask, ...] | None:
    for r in reports:
        if r.status is AxiomStatus.VIOLATED:
            return r.witness
    return None


def cones_parallel_witness(L: OrderedLocale) -> tuple[Mask, Mask] | None:
    """First pair (U, V) where U ∧ ⇓V = ∅ disagrees with ⇑U ∧ V = ∅.

    Point-generated cones on a frame too large to enumerate are searched on
    singleton pairs, which decide the general case.
    """
    if L.frame_enumerable:
        candidates: Sequence[Mask] = L.frame
    elif L.point_generated:
        candidates = [1 << i for i in range(L.space.n)]
    else:
        return None
    for u in candidates:
        for v in candidates:
            if (u & L.cone_down(v) == 0) != (L.cone_up(u) & v == 0):
                return (u, v)
    return None


def _square_violation(L: OrderedLocale, opens: Sequence[Mask]) -> tuple[Mask, ...] | None:
    """First failure of the existential squares.

    (∧+): U ⊑ V ⊴ V' ⇒ ∃U' ⊑ V' with U ⊴ U'
    (∧−): U' ⊑ V' and V ⊴ V' ⇒ ∃U ⊑ V with U ⊴ U'
    """
    targets = {u: [v for v in opens if L.relates(u, v)] for u in opens}
    sources = {v: [u for u in opens if L.relates(u, v)] for v in opens}
    for v in opens:
        for vp in targets[v]:
            for u in opens:
                if is_subset(u, v) and not any(is_subset(t, vp) for t in targets[u]):
                    return (u, v, vp)
            for up in opens:
                if is_subset(up, vp) and not any(is_subset(s, v) for s in sources[up]):
                    return (up, v, vp)
    return None


def _arbitrary_opens_violation(L: OrderedLocale, opens: Sequence[Mask]) -> tuple[Mask, Mask] | None:
    for u in opens:
        for v in opens:
            left = u & L.cone_down(v)
            if not L.relates(left, v & L.cone_up(left)):
                return (u, v)
            right = L.cone_up(u) & v
            if not L.relates(u & L.cone_down(right), right):
                return (u, v)
    return None


def check_equivalences(L: OrderedLocale, budget: int | None = None, workers: int | None = None) -> EquivalenceReport:
    """Evaluate both sides of the parallel-order lemmas on L.

    Args:
        L: Ordered locale with an enumerable frame
        budget: Maximum tuples per quantified statement (default: OLAB_BUDGET)
        workers: Threads for the underlying axiom scans

    Returns:
        EquivalenceReport whose `consistent` flag is the oracle verdict
    """
    budget = budget or get_settings().budget
    reports = {r.axiom: r for r in check_axioms(L, budget=budget, workers=workers)}
    wedge = [reports[Axiom.WEDGE_PLUS], reports[Axiom.WEDGE_MINUS]]
    frobenius = [reports[Axiom.CONE_ORDER], reports[Axiom.FROBENIUS_PLUS], reports[Axiom.FROBENIUS_MINUS]]
    parallel = reports[Axiom.PARALLEL]
    parallel_value = _conj([parallel])

    report = EquivalenceReport(locale=L.name)
    report.items.append(
        EquivalenceItem(
            "wedge_iff_frobenius",
            "iff",
            _conj(wedge),
            _conj(frobenius),
            _first_witness(frobenius) or _first_witness(wedge),
        )
    )

    square_value: bool | None = None
    square_witness = None
    cone_witness = None
    cone_value: bool | None = None
    arbitrary_value: bool | None = None
    arbitrary_witness = None
    if L.frame_enumerable:
        opens = L.frame
        size = len(opens)
        if size**4 <= budget:
            square_witness = _square_violation(L, opens)
            square_value = square_witness is None
        if size**2 <= budget:
            arbitrary_witness = _arbitrary_opens_violation(L, opens)
            arbitrary_value = arbitrary_witness is None
    if L.frame_enumerable or L.point_generated:
        cone_witness = cones_parallel_witness(L)
        cone_value = cone_witness is None

    report.items.append(
        EquivalenceItem("wedge_iff_square", "iff", square_value, _conj(wedge), square_witness or _first_witness(wedge))
    )
    report.items.append(
        EquivalenceItem(
            "wedge_implies_cone_order",
            "implies",
            _conj(wedge),
            _conj([reports[Axiom.CONE_ORDER]]),
            reports[Axiom.CONE_ORDER].witness,
        )
    )
    report.items.append(EquivalenceItem("disjointness", "implies", parallel_value, cone_value, cone_witness))
    report.items.append(
        EquivalenceItem("arbitrary_opens", "implies", parallel_value, arbitrary_value, arbitrary_witness)
    )

    log.info(
        "equivalences_checked",
        locale=L.name,
        consistent=report.consistent,
        undecided=[i.name for i in report.items if i.agree is None],
    )
    return report
