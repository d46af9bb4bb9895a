"""Exhaustive checkers for the ordered-locale axioms.

Axioms checked (u = ⇑, d = ⇓, ⊴ the locale order):
- join      (∨):   U₁⊴V₁, U₂⊴V₂ ⇒ U₁∨U₂ ⊴ V₁∨V₂, and ∅ ⊴ ∅
- c-order   (c-⊴): U ⊴ V ⇔ U ⊑ d(V) and V ⊑ u(U)
- c-join    (c-∨): cones preserve binary joins and ∅
- wedge+    (∧+):  W ⊑ U, U ⊴ V ⇒ W ⊴ u(W) ∧ V
- wedge-    (∧−):  W ⊑ V, U ⊴ V ⇒ d(W) ∧ U ⊴ W
- bottom    (∅):   U ⊴ ∅ ⊴ V ⇒ U = ∅ = V
- F+:              u(U) ∧ V ⊑ u(U ∧ d(V))
- F-:              U ∧ d(V) ⊑ d(u(U) ∧ V)
- parallel:        wedge+ ∧ wedge- ∧ bottom

Family axioms are checked at arity 0 and 2; finite arities follow by induction.
Witnesses are the first violating tuple in canonical frame order. On discrete
frames with point-generated cones the pair axioms reduce to singleton pairs
("atomic" method), which keeps large grids checkable.
"""

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from enum import Enum

from ordered_locale_lab.config import get_settings
from ordered_locale_lab.locales.ordered_locale import OrderedLocale
from ordered_locale_lab.monitoring import CheckMetrics, get_logger
from ordered_locale_lab.space.bitmask import Mask, is_subset
from ordered_locale_lab.workers import chunked, parallel_map

log = get_logger(__name__)


class Axiom(str, Enum):
    """Axiom identifiers accepted by check_axioms and the CLI."""

    JOIN = "join"
    CONE_ORDER = "c-order"
    CONE_JOIN = "c-join"
    WEDGE_PLUS = "wedge+"
    WEDGE_MINUS = "wedge-"
    BOTTOM = "bottom"
    FROBENIUS_PLUS = "F+"
    FROBENIUS_MINUS = "F-"
    PARALLEL = "parallel"

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]


_SYMBOLS = {
    Axiom.JOIN: "(∨)",
    Axiom.CONE_ORDER: "(c-⊴)",
    Axiom.CONE_JOIN: "(c-∨)",
    Axiom.WEDGE_PLUS: "(∧+)",
    Axiom.WEDGE_MINUS: "(∧−)",
    Axiom.BOTTOM: "(∅)",
    Axiom.FROBENIUS_PLUS: "(F+)",
    Axiom.FROBENIUS_MINUS: "(F−)",
    Axiom.PARALLEL: "parallel",
}

ALL_AXIOMS: tuple[Axiom, ...] = tuple(Axiom)


class AxiomStatus(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class AxiomReport:
    """Result of checking one axiom.

    Attributes:
        axiom: Which axiom
        status: holds / violated / unknown
        witness: Violating tuple of opens (present iff violated)
        method: "exhaustive", "atomic" or "derived"
        detail: Human-readable note (failing instance, budget message)
    """

    axiom: Axiom
    status: AxiomStatus
    witness: tuple[Mask, ...] | None = None
    method: str = "exhaustive"
    detail: str = ""

    @property
    def holds(self) -> bool:
        return self.status is AxiomStatus.HOLDS

    def to_dict(self, L: OrderedLocale) -> dict:
        return {
            "axiom": self.axiom.value,
            "symbol": self.axiom.symbol,
            "status": self.status.value,
            "method": self.method,
            "witness": None if self.witness is None else [L.format(m) for m in self.witness],
            "detail": self.detail,
        }


# -- violation predicates ---------------------------------------------------
# Each returns True when the instance VIOLATES the axiom.


def _violates_cone_order(L: OrderedLocale, u: Mask, v: Mask) -> bool:
    formula = is_subset(u, L.cone_down(v)) and is_subset(v, L.cone_up(u))
    return L.relates(u, v) != formula


def _violates_cone_join(L: OrderedLocale, u: Mask, v: Mask) -> bool:
    return L.cone_up(u | v) != L.cone_up(u) | L.cone_up(v) or L.cone_down(u | v) != L.cone_down(
        u
    ) | L.cone_down(v)


def _violates_f_plus(L: OrderedLocale, u: Mask, v: Mask) -> bool:
    return not is_subset(L.cone_up(u) & v, L.cone_up(u & L.cone_down(v)))


def _violates_f_minus(L: OrderedLocale, u: Mask, v: Mask) -> bool:
    return not is_subset(u & L.cone_down(v), L.cone_down(L.cone_up(u) & v))


def _violates_wedge_plus(L: OrderedLocale, w: Mask, u: Mask, v: Mask) -> bool:
    return is_subset(w, u) and L.relates(u, v) and not L.relates(w, L.cone_up(w) & v)


def _violates_wedge_minus(L: OrderedLocale, w: Mask, u: Mask, v: Mask) -> bool:
    return is_subset(w, v) and L.relates(u, v) and not L.relates(L.cone_down(w) & u, w)


_PAIR_CHECKS: dict[Axiom, Callable[[OrderedLocale, Mask, Mask], bool]] = {
    Axiom.CONE_ORDER: _violates_cone_order,
    Axiom.CONE_JOIN: _violates_cone_join,
    Axiom.FROBENIUS_PLUS: _violates_f_plus,
    Axiom.FROBENIUS_MINUS: _violates_f_minus,
}

_TRIPLE_CHECKS: dict[Axiom, Callable[[OrderedLocale, Mask, Mask, Mask], bool]] = {
    Axiom.WEDGE_PLUS: _violates_wedge_plus,
    Axiom.WEDGE_MINUS: _violates_wedge_minus,
}


def _first_in_chunks(
    chunks: Sequence[Sequence], scan: Callable[[Sequence], tuple | None], workers: int
) -> tuple | None:
    """Scan chunks (possibly in parallel); the earliest chunk's witness wins."""
    results = parallel_map(scan, chunks, workers)
    for found in results:
        if found is not None:
            return found
    return None


def _check_pairs(L: OrderedLocale, axiom: Axiom, opens: Sequence[Mask], workers: int) -> tuple | None:
    predicate = _PAIR_CHECKS[axiom]

    def scan(outer: Sequence[Mask]) -> tuple | None:
        for u in outer:
            for v in opens:
                if predicate(L, u, v):
                    return (u, v)
        return None

    return _first_in_chunks(chunked(opens, workers), scan, workers)


def _check_triples(L: OrderedLocale, axiom: Axiom, opens: Sequence[Mask], workers: int) -> tuple | None:
    predicate = _TRIPLE_CHECKS[axiom]

    def scan(outer: Sequence[Mask]) -> tuple | None:
        for w in outer:
            for u in opens:
                for v in opens:
                    if predicate(L, w, u, v):
                        return (w, u, v)
        return None

    return _first_in_chunks(chunked(opens, workers), scan, workers)


def _check_join(L: OrderedLocale, opens: Sequence[Mask], workers: int) -> tuple | None:
    if not L.relates(0, 0):
        return ()
    related = [(u, v) for u in opens for v in opens if L.relates(u, v)]

    def scan(outer: Sequence[tuple[Mask, Mask]]) -> tuple | None:
        for u1, v1 in outer:
            for u2, v2 in related:
                if not L.relates(u1 | u2, v1 | v2):
                    return (u1, v1, u2, v2)
        return None

    return _first_in_chunks(chunked(related, workers), scan, workers)


def _check_bottom(L: OrderedLocale, opens: Sequence[Mask]) -> tuple | None:
    for u in opens:
        if u and L.relates(u, 0):
            return (u, 0)
    for v in opens:
        if v and L.relates(0, v):
            return (0, v)
    return None


def _cost(axiom: Axiom, size: int) -> int:
    if axiom in _TRIPLE_CHECKS:
        return size**3
    if axiom is Axiom.JOIN:
        return size**4
    return size**2


def _exhaustive(L: OrderedLocale, axiom: Axiom, workers: int, budget: int, metrics: CheckMetrics) -> AxiomReport:
    opens = L.frame
    cost = _cost(axiom, len(opens))
    if cost > budget:
        return AxiomReport(
            axiom, AxiomStatus.UNKNOWN, method="exhaustive", detail=f"needs {cost} tuples, budget {budget}"
        )
    metrics.record(axiom.value, cost)

    if axiom is Axiom.CONE_JOIN and (L.cone_up(0) != 0 or L.cone_down(0) != 0):
        return AxiomReport(axiom, AxiomStatus.VIOLATED, witness=(), detail="nullary: cones of ∅ are not ∅")
    if axiom in _PAIR_CHECKS:
        witness = _check_pairs(L, axiom, opens, workers)
    elif axiom in _TRIPLE_CHECKS:
        witness = _check_triples(L, axiom, opens, workers)
    elif axiom is Axiom.JOIN:
        witness = _check_join(L, opens, workers)
    else:
        witness = _check_bottom(L, opens)

    if witness is None:
        return AxiomReport(axiom, AxiomStatus.HOLDS)
    detail = "nullary: ∅ ⋬ ∅" if witness == () else ""
    return AxiomReport(axiom, AxiomStatus.VIOLATED, witness=witness, detail=detail)


def _atomic(L: OrderedLocale, axiom: Axiom) -> AxiomReport:
    """Decide an axiom on singleton pairs for point-generated cones on a discrete frame."""
    n = L.space.n
    singles = [1 << i for i in range(n)]

    def first_pair(predicate: Callable[[OrderedLocale, Mask, Mask], bool]) -> tuple | None:
        for u in singles:
            for v in singles:
                if predicate(L, u, v):
                    return (u, v)
        return None

    if axiom in (Axiom.JOIN, Axiom.CONE_ORDER, Axiom.CONE_JOIN, Axiom.BOTTOM):
        return AxiomReport(axiom, AxiomStatus.HOLDS, method="atomic", detail="point-generated cones")
    if axiom is Axiom.FROBENIUS_PLUS:
        found = first_pair(_violates_f_plus)
    elif axiom is Axiom.FROBENIUS_MINUS:
        found = first_pair(_violates_f_minus)
    elif axiom is Axiom.WEDGE_PLUS:
        # (∧+) ⇔ (c-⊴) + (F−); an F− failure x ∈ d(y), y ∉ u(x) yields W={x}, U=d({y}), V={y}
        pair = first_pair(_violates_f_minus)
        found = None if pair is None else (pair[0], L.cone_down(pair[1]), pair[1])
    else:
        # (∧−) ⇔ (c-⊴) + (F+); an F+ failure y ∈ u(x), x ∉ d(y) yields W={y}, U={x}, V=u({x})
        pair = first_pair(_violates_f_plus)
        found = None if pair is None else (pair[1], pair[0], L.cone_up(pair[0]))

    if found is None:
        return AxiomReport(axiom, AxiomStatus.HOLDS, method="atomic")
    return AxiomReport(axiom, AxiomStatus.VIOLATED, witness=found, method="atomic")


def _parallel(parts: dict[Axiom, AxiomReport]) -> AxiomReport:
    components = [parts[Axiom.WEDGE_PLUS], parts[Axiom.WEDGE_MINUS], parts[Axiom.BOTTOM]]
    for report in components:
        if report.status is AxiomStatus.VIOLATED:
            return AxiomReport(
                Axiom.PARALLEL,
                AxiomStatus.VIOLATED,
                witness=report.witness,
                method="derived",
                detail=f"{report.axiom.symbol} fails",
            )
    if any(r.status is AxiomStatus.UNKNOWN for r in components):
        return AxiomReport(Axiom.PARALLEL, AxiomStatus.UNKNOWN, method="derived")
    return AxiomReport(Axiom.PARALLEL, AxiomStatus.HOLDS, method="derived")


def check_axioms(
    L: OrderedLocale,
    selection: Iterable[Axiom] | None = None,
    workers: int | None = None,
    budget: int | None = None,
) -> list[AxiomReport]:
    """Check the selected axioms on L.

    Args:
        L: Ordered locale to check
        selection: Axioms to report (default: all, in declaration order)
        workers: Thread count for the tuple scans (no effect on results)
        budget: Maximum tuples per axiom (default: OLAB_BUDGET)

    Returns:
        One AxiomReport per selected axiom, in declaration order

    Example:
        >>> reports = check_axioms(egli_milner_locale(chain3()))
        >>> all(r.holds for r in reports)
        True
    """
    settings = get_settings()
    workers = workers or settings.workers
    budget = budget or settings.budget
    wanted = list(dict.fromkeys(selection)) if selection is not None else list(ALL_AXIOMS)
    needed = set(wanted)
    if Axiom.PARALLEL in needed:
        needed |= {Axiom.WEDGE_PLUS, Axiom.WEDGE_MINUS, Axiom.BOTTOM}

    metrics = CheckMetrics()
    results: dict[Axiom, AxiomReport] = {}
    for axiom in ALL_AXIOMS:
        if axiom not in needed or axiom is Axiom.PARALLEL:
            continue
        if L.frame_enumerable:
            results[axiom] = _exhaustive(L, axiom, workers, budget, metrics)
        elif L.point_generated:
            results[axiom] = _atomic(L, axiom)
        else:
            results[axiom] = AxiomReport(
                axiom, AxiomStatus.UNKNOWN, method="exhaustive", detail="frame not enumerable"
            )
    if Axiom.PARALLEL in needed:
        results[Axiom.PARALLEL] = _parallel(results)

    log.info(
        "axioms_checked",
        locale=L.name,
        violated=[a.value for a in wanted if results[a].status is AxiomStatus.VIOLATED],
        **metrics.to_dict(),
    )
    return [results[a] for a in ALL_AXIOMS if a in wanted]


def replay_violation(L: OrderedLocale, report: AxiomReport) -> bool:
    """Re-derive a reported violation from its witness through the definitions."""
    if report.witness is None:
        return False
    w = report.witness
    axiom = report.axiom
    if axiom is Axiom.PARALLEL:
        parts = (Axiom.WEDGE_PLUS, Axiom.WEDGE_MINUS) if len(w) == 3 else (Axiom.BOTTOM,)
        return any(replay_violation(L, AxiomReport(a, AxiomStatus.VIOLATED, witness=w)) for a in parts)
    if w == ():
        if axiom is Axiom.JOIN:
            return not L.relates(0, 0)
        if axiom is Axiom.CONE_JOIN:
            return L.cone_up(0) != 0 or L.cone_down(0) != 0
        return False
    if axiom in _PAIR_CHECKS:
        return _PAIR_CHECKS[axiom](L, *w)
    if axiom in _TRIPLE_CHECKS:
        return _TRIPLE_CHECKS[axiom](L, *w)
    if axiom is Axiom.JOIN:
        u1, v1, u2, v2 = w
        return L.relates(u1, v1) and L.relates(u2, v2) and not L.relates(u1 | u2, v1 | v2)
    u, v = w
    return (u != 0 and v == 0 and L.relates(u, 0)) or (u == 0 and v != 0 and L.relates(0, v))
