"""Executable checks of the path-restriction lemmas.

Lemmas checked on generated instances:
- functoriality: p|_W = (p|_V)|_W for W ⊑ V ⊑ p_⊤
- join_over_restrictions: p_n = ⋁ᵢ (p|_{Wᵢ})_n for every cover (Wᵢ) of p_⊤
- refinement_preservation: q ⋐ p with the look-ahead side condition ⇒ q|_W ⋐ p|_W
- point_preservation: on point orders with open cones, chains through p stay in p|_W
- concatenation: q ⋐ p and q' ⋐ p' ⇒ q'·q ⋐ p'·p
- transitivity: r ⋐ q ⋐ p ⇒ r ⋐ p

Instances come from exhaustive path enumeration or seeded random walks.
Violations are report content, never exceptions.
"""

import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from itertools import islice, product
from typing import Literal

from ordered_locale_lab.config import get_settings
from ordered_locale_lab.errors import RestrictionError
from ordered_locale_lab.locales.orders import EgliMilner
from ordered_locale_lab.locales.ordered_locale import OrderedLocale
from ordered_locale_lab.monitoring import get_logger
from ordered_locale_lab.paths.path import Path, concat, iter_paths, refines, step_universe
from ordered_locale_lab.paths.restriction import restrict_past
from ordered_locale_lab.space.bitmask import Mask, bits, is_subset

log = get_logger(__name__)

LEMMAS = (
    "functoriality",
    "join_over_restrictions",
    "refinement_preservation",
    "point_preservation",
    "concatenation",
    "transitivity",
)

# Per-lemma cap on stored violation tuples.
MAX_RECORDED = 20


@dataclass
class LemmaResult:
    """Outcome of one lemma over all generated instances.

    Attributes:
        name: Lemma identifier
        instances: Instances whose hypotheses held and were evaluated
        violations: Offending instances as formatted tuples (capped)
        violation_count: All offending instances, recorded or not
        skipped: Instances abandoned because a restriction raised
        side_condition_failures: Instances outside the side condition whose conclusion also fails
    """

    name: str
    instances: int = 0
    violations: list[dict] = field(default_factory=list)
    violation_count: int = 0
    skipped: int = 0
    side_condition_failures: list[dict] = field(default_factory=list)

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
            "violation_count": self.violation_count,
            "violations": self.violations,
            "skipped": self.skipped,
            "side_condition_failures": self.side_condition_failures,
        }


@dataclass
class PathLemmaReport:
    locale: str
    mode: str
    results: dict[str, LemmaResult] = field(default_factory=dict)
    truncated: bool = False

    @property
    def holds(self) -> bool:
        return all(r.holds for r in self.results.values())

    def to_dict(self) -> dict:
        return {
            "locale": self.locale,
            "mode": self.mode,
            "holds": self.holds,
            "truncated": self.truncated,
            "lemmas": [self.results[name].to_dict() for name in LEMMAS if name in self.results],
        }


def satisfies_side_condition(q: Path, p: Path) -> bool:
    """If q_m ⊑ p_n ≠ p_⊤, some q_k with k ≥ m lies in p_{n+1}."""
    for n in range(len(p) - 1):
        if p[n] == p.end:
            continue
        for m, step in enumerate(q.steps):
            if is_subset(step, p[n]) and not any(is_subset(q[k], p[n + 1]) for k in range(m, len(q))):
                return False
    return True


def _subopens(L: OrderedLocale, region: Mask, universe: Sequence[Mask]) -> list[Mask]:
    """Nonempty opens inside region: from the frame when enumerable, else from universe."""
    source = L.frame if L.frame_enumerable else universe
    found = [u for u in source if u and is_subset(u, region)]
    if region not in found:
        found.append(region)
    return found


def _random_walk(L: OrderedLocale, universe: Sequence[Mask], rng: random.Random, max_len: int) -> Path:
    steps = [rng.choice(universe)]
    for _ in range(rng.randint(0, max_len - 1)):
        options = [v for v in universe if L.relates(steps[-1], v)]
        if not options:
            break
        steps.append(rng.choice(options))
    return Path(steps=tuple(steps), locale=L)


def _fmt(L: OrderedLocale, value) -> object:
    if isinstance(value, Path):
        return value.format()
    if isinstance(value, int):
        return L.format(value)
    if isinstance(value, tuple):
        return [_fmt(L, v) for v in value]
    return value


def _restrict(p: Path, w: Mask, result: LemmaResult) -> Path | None:
    try:
        return restrict_past(p, w)
    except RestrictionError:
        result.skipped += 1
        return None


def _check_functoriality(L, paths, universe, result: LemmaResult) -> None:
    for p in paths:
        for v in _subopens(L, p.end, universe):
            pv = _restrict(p, v, result)
            if pv is None:
                continue
            for w in _subopens(L, v, universe):
                direct = _restrict(p, w, result)
                nested = _restrict(pv, w, result)
                if direct is None or nested is None:
                    continue
                result.instances += 1
                if direct != nested:
                    result.violate(p=p.format(), V=L.format(v), W=L.format(w))


def _covers(L: OrderedLocale, region: Mask, universe: Sequence[Mask]) -> Iterator[tuple[Mask, ...]]:
    """The trivial cover, then every two-element cover, then all proper subopens together."""
    yield (region,)
    subs = [u for u in _subopens(L, region, universe) if u != region]
    for i, a in enumerate(subs):
        for b in subs[i:]:
            if a | b == region:
                yield (a, b)
    if subs and L.space.is_discrete:
        singles = tuple(1 << i for i in bits(region))
        if len(singles) > 1:
            yield singles


def _check_join(L, paths, universe, result: LemmaResult) -> None:
    for p in paths:
        for cover in _covers(L, p.end, universe):
            restricted = [_restrict(p, w, result) for w in cover]
            if any(r is None for r in restricted):
                continue
            result.instances += 1
            for n in range(len(p)):
                joined = 0
                for r in restricted:
                    joined |= r[n]
                if joined != p[n]:
                    result.violate(p=p.format(), cover=_fmt(L, cover), index=n)
                    break


def _check_refinement_preservation(L, paths, universe, result: LemmaResult, budget: int) -> None:
    pairs = 0
    for p in paths:
        for q in paths:
            if pairs >= budget:
                return
            if not is_subset(q.end, p.end) or refines(q, p) is None:
                continue
            pairs += 1
            side = satisfies_side_condition(q, p)
            for w in _subopens(L, q.end, universe):
                qw, pw = _restrict(q, w, result), _restrict(p, w, result)
                if qw is None or pw is None:
                    continue
                holds = refines(qw, pw) is not None
                if side:
                    result.instances += 1
                    if not holds:
                        result.violate(q=q.format(), p=p.format(), W=L.format(w))
                elif not holds and len(result.side_condition_failures) < MAX_RECORDED:
                    result.side_condition_failures.append({"q": q.format(), "p": p.format(), "W": L.format(w)})


def _chains(L: OrderedLocale, p: Path) -> Iterator[tuple[int, ...]]:
    space = L.space
    for chain in product(*(list(bits(step)) for step in p.steps)):
        if all(space.leq(chain[i], chain[i + 1]) for i in range(len(chain) - 1)):
            yield chain


def _check_points(L, paths, universe, result: LemmaResult) -> None:
    for p in paths:
        for chain in islice(_chains(L, p), 64):
            for w in _subopens(L, p.end, universe):
                if not w >> chain[-1] & 1:
                    continue
                pw = _restrict(p, w, result)
                if pw is None:
                    continue
                result.instances += 1
                if any(not pw[n] >> x & 1 for n, x in enumerate(chain)):
                    result.violate(
                        p=p.format(), chain=[L.space.points[x] for x in chain], W=L.format(w)
                    )


def _check_concatenation(L, paths, result: LemmaResult, rng: random.Random, trials: int) -> None:
    by_start: dict[Mask, list[Path]] = {}
    for p in paths:
        by_start.setdefault(p.start, []).append(p)
    for _ in range(trials):
        p = rng.choice(paths)
        p_next = rng.choice(by_start.get(p.end, [p]))
        if p_next.start != p.end:
            continue
        fine = [q for q in paths if refines(q, p) is not None]
        if not fine:
            continue
        q = rng.choice(fine)
        fine_next = [q2 for q2 in by_start.get(q.end, []) if refines(q2, p_next) is not None]
        if not fine_next:
            continue
        q_next = rng.choice(fine_next)
        result.instances += 1
        if refines(concat(q_next, q), concat(p_next, p)) is None:
            result.violate(q=q.format(), q_next=q_next.format(), p=p.format(), p_next=p_next.format())


def _check_transitivity(L, paths, result: LemmaResult, rng: random.Random, trials: int) -> None:
    for _ in range(trials):
        r, q, p = rng.choice(paths), rng.choice(paths), rng.choice(paths)
        if refines(r, q) is None or refines(q, p) is None:
            continue
        result.instances += 1
        if refines(r, p) is None:
            result.violate(r=r.format(), q=q.format(), p=p.format())


def check_path_lemmas(
    L: OrderedLocale,
    mode: Literal["exhaustive", "sample"] = "exhaustive",
    max_len: int = 3,
    samples: int = 200,
    seed: int = 0,
    basis: Sequence[Mask] | None = None,
    budget: int | None = None,
) -> PathLemmaReport:
    """Evaluate every path lemma on generated instances.

    Args:
        L: Locale to test (restriction lemmas presume it is parallel ordered)
        mode: "exhaustive" enumerates all paths up to max_len; "sample" draws random walks
        max_len: Longest path generated
        samples: Random walks in sample mode, and random trials for the pairing lemmas
        seed: Seed for every random choice
        basis: Step universe (default: every nonempty open)
        budget: Maximum paths (and refinement pairs) considered

    Returns:
        PathLemmaReport with one LemmaResult per lemma
    """
    budget = budget or get_settings().budget
    rng = random.Random(seed)
    universe = step_universe(L, basis)
    report = PathLemmaReport(locale=L.name, mode=mode)

    if mode == "exhaustive":
        stream = iter_paths(L, universe, max_len, L.space.full)
        paths = list(islice(stream, budget))
        report.truncated = next(stream, None) is not None
    else:
        walks = {_random_walk(L, universe, rng, max_len) for _ in range(samples)}
        paths = sorted(walks, key=lambda p: (len(p), p.steps))

    results = {name: LemmaResult(name) for name in LEMMAS}
    _check_functoriality(L, paths, universe, results["functoriality"])
    _check_join(L, paths, universe, results["join_over_restrictions"])
    _check_refinement_preservation(L, paths, universe, results["refinement_preservation"], budget)
    if isinstance(L.source, EgliMilner) and not L.source.reverse and L.space.has_open_cones().holds:
        _check_points(L, paths, universe, results["point_preservation"])
    if paths:
        _check_concatenation(L, paths, results["concatenation"], rng, samples)
        _check_transitivity(L, paths, results["transitivity"], rng, samples)
    report.results = results

    log.info(
        "path_lemmas_checked",
        locale=L.name,
        mode=mode,
        paths=len(paths),
        failing=[name for name, r in results.items() if not r.holds],
        truncated=report.truncated,
    )
    return report
