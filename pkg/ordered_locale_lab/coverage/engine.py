"""Decide Cov⁻ and Cov⁺ membership.

A ∈ Cov⁻(U) when A ⊑ ⇓U and every path landing in U has a local past
refinement inside A. Target paths are explored backwards from their endpoint:
a path is summarized by a SuffixState holding its first step, its endpoint,
and for every candidate endpoint W ⊑ p_⊤ the first restricted step of p|_W
together with the ⊑-minimal restricted steps. Refinability depends on the
state alone, so each layer only keeps states not seen before. An empty layer
means every longer path repeats a known state and the verdict holds for all
lengths.

Cov⁺ is Cov⁻ of the opposite locale.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field

from ordered_locale_lab.config import get_settings
from ordered_locale_lab.coverage.config import CoverageConfig, ResolvedCoverageConfig
from ordered_locale_lab.coverage.refinement import (
    ChainSearcher,
    add_to_antichain,
    find_local_past_refinement,
    minimal_antichain,
)
from ordered_locale_lab.coverage.verdict import CoverageVerdict, LocalRefinementFamily, Outcome
from ordered_locale_lab.errors import SpaceDefinitionError
from ordered_locale_lab.locales.ordered_locale import OrderedLocale
from ordered_locale_lab.monitoring import SearchMetrics, get_logger
from ordered_locale_lab.paths.path import Path
from ordered_locale_lab.space.bitmask import Mask, is_subset
from ordered_locale_lab.workers import chunked, parallel_map

log = get_logger(__name__)

# (first restricted step, minimal restricted steps), or None once restriction fails
Entry = tuple[Mask, tuple[Mask, ...]] | None


@dataclass(frozen=True)
class SuffixState:
    front: Mask
    end: Mask
    entries: tuple[Entry, ...]


@dataclass
class _Layer:
    states: list[SuffixState]
    reps: list[tuple[int, ...]]
    multiplicity: list[int]


@dataclass
class _Exploration:
    """Layers of new suffix states for one target region, built on demand."""

    target: Mask
    endpoints: dict[Mask, tuple[Mask, ...]]
    layers: list[_Layer] = field(default_factory=list)
    seen: set[SuffixState] = field(default_factory=set)
    saturated: bool = False
    truncated: bool = False


class _DirectionSearch:
    """Cov⁻ on one locale; the engine runs a second one on the opposite locale."""

    def __init__(self, L: OrderedLocale, cfg: ResolvedCoverageConfig, workers: int):
        self.locale = L
        self.cfg = cfg
        self.workers = workers
        self.searcher = ChainSearcher(L, cfg.universe)
        self._explorations: dict[Mask, _Exploration] = {}

    def _endpoints(self, end: Mask) -> tuple[Mask, ...]:
        return tuple(w for w in self.cfg.universe if is_subset(w, end))

    def _exploration(self, target: Mask) -> _Exploration:
        found = self._explorations.get(target)
        if found is None:
            found = _Exploration(target=target, endpoints={})
            self._explorations[target] = found
        return found

    def _layer(self, ex: _Exploration, n: int) -> _Layer | None:
        """Layer of paths with n steps, or None once saturated or truncated."""
        while len(ex.layers) < n and not (ex.saturated or ex.truncated):
            self._grow(ex)
        return ex.layers[n - 1] if len(ex.layers) >= n else None

    def _grow(self, ex: _Exploration) -> None:
        universe = self.cfg.universe
        found: dict[SuffixState, tuple[tuple[int, ...], int]] = {}
        if not ex.layers:
            for i, u in enumerate(universe):
                if not is_subset(u, ex.target):
                    continue
                ends = ex.endpoints.setdefault(u, self._endpoints(u))
                state = SuffixState(front=u, end=u, entries=tuple((w, (w,)) for w in ends))
                if state not in found:
                    found[state] = ((i,), 1)
        else:
            previous = ex.layers[-1]
            for state, rep, count in zip(previous.states, previous.reps, previous.multiplicity):
                for j in self.searcher.predecessor_indices(state.front):
                    following = self._extend(state, universe[j])
                    if following in ex.seen:
                        continue
                    candidate = (j,) + rep
                    best = found.get(following)
                    if best is None:
                        found[following] = (candidate, count)
                    else:
                        found[following] = (min(best[0], candidate), best[1] + count)
        if not found:
            ex.saturated = True
            return
        if len(ex.seen) + len(found) > self.cfg.budget:
            ex.truncated = True
            return
        states = list(found)
        ex.seen.update(states)
        ex.layers.append(
            _Layer(states=states, reps=[found[s][0] for s in states], multiplicity=[found[s][1] for s in states])
        )

    def _extend(self, state: SuffixState, step: Mask) -> SuffixState:
        L = self.locale
        entries: list[Entry] = []
        for entry in state.entries:
            if entry is None:
                entries.append(None)
                continue
            first, minimal = entry
            restricted = step & L.cone_down(first)
            if not restricted or not L.relates(restricted, first):
                entries.append(None)
            else:
                entries.append((restricted, add_to_antichain(minimal, restricted)))
        return SuffixState(front=step, end=state.end, entries=tuple(entries))

    def _status(self, state: SuffixState, region: Mask, bound: int) -> bool | None:
        """True if refinable into region, False if not, None if the bound hid a chain."""
        ends = self._endpoints(state.end)
        joined = 0
        cut = False
        for w, entry in zip(ends, state.entries):
            if entry is None:
                continue
            chain = self.searcher.chain(w, minimal_antichain(entry[1] + (region,)))
            if chain is None:
                continue
            if len(chain) > bound:
                cut = True
                continue
            joined |= w
        if joined == state.end:
            return True
        return None if cut else False

    def _statuses(self, states: Sequence[SuffixState], region: Mask, bound: int) -> list[bool | None]:
        def run(chunk: Sequence[SuffixState]) -> list[bool | None]:
            return [self._status(s, region, bound) for s in chunk]

        results: list[bool | None] = []
        for part in parallel_map(run, chunked(states, self.workers), self.workers):
            results.extend(part)
        return results

    def _path(self, rep: tuple[int, ...]) -> Path:
        return Path(steps=tuple(self.cfg.universe[i] for i in rep), locale=self.locale)

    def decide(self, region: Mask, target: Mask, direction: str, cone: str) -> CoverageVerdict:
        L = self.locale
        cfg = self.cfg
        metrics = SearchMetrics()
        verdict = CoverageVerdict(
            direction=direction,
            region=region,
            target=target,
            outcome=Outcome.UNKNOWN,
            locale=L,
            bounds={**cfg.bounds(), "budget": cfg.budget},
            metrics=metrics,
        )
        if not is_subset(region, L.cone_down(target)):
            verdict.outcome = Outcome.NOT_COVERED
            verdict.saturated = True
            verdict.reason = f"{L.format(region)} ⋢ {cone}{L.format(target)}"
            return verdict

        before = (
            self.searcher.metrics.refinement_queries,
            self.searcher.metrics.refinement_cache_hits,
            self.searcher.metrics.refinement_cache_misses,
        )
        ex = self._exploration(target)
        inconclusive = False
        exhausted = False
        checked = 0
        for n in range(1, cfg.max_target_path_len + 1):
            layer = self._layer(ex, n)
            if layer is None:
                exhausted = True
                break
            checked = n
            metrics.layers = n
            metrics.states_explored += len(layer.states)
            metrics.paths_enumerated += sum(layer.multiplicity)
            statuses = self._statuses(layer.states, region, cfg.refinement_bound(n))
            failing = [rep for rep, status in zip(layer.reps, statuses) if status is False]
            if failing:
                verdict.outcome = Outcome.NOT_COVERED
                verdict.saturated = True
                verdict.witness = self._path(min(failing))
                verdict.reason = f"no local past refinement inside {L.format(region)}"
                verdict.covered_up_to = n - 1
                break
            if any(status is None for status in statuses):
                inconclusive = True
            if cfg.keep_certificates:
                verdict.certificates.extend(self._certificates(layer, region))
        else:
            # one more layer tells whether the bound was reached with states left
            exhausted = self._layer(ex, cfg.max_target_path_len + 1) is None and ex.saturated

        if verdict.outcome is not Outcome.NOT_COVERED:
            verdict.covered_up_to = checked
            if exhausted and ex.truncated:
                verdict.reason = f"state budget of {cfg.budget} exceeded at length {checked + 1}"
                metrics.truncated = True
            elif inconclusive:
                verdict.reason = "refinement length bound cut a chain"
            else:
                verdict.outcome = Outcome.COVERED
                verdict.saturated = exhausted
                verdict.reason = "saturated" if exhausted else f"checked up to length {checked}"

        after = self.searcher.metrics
        metrics.refinement_queries = after.refinement_queries - before[0]
        metrics.refinement_cache_hits = after.refinement_cache_hits - before[1]
        metrics.refinement_cache_misses = after.refinement_cache_misses - before[2]
        return verdict

    def _certificates(self, layer: _Layer, region: Mask) -> list[LocalRefinementFamily]:
        families = []
        for rep in layer.reps:
            search = find_local_past_refinement(self._path(rep), region, self.cfg, self.searcher)
            if search.family is not None:
                families.append(search.family)
        return families


class CoverageEngine:
    """Cov⁻/Cov⁺ decisions on one locale with shared caches.

    Verdicts are cached per (direction, region, target); chain searches and
    explored suffix states are shared between all questions asked of the
    same direction.

    Example:
        >>> engine = CoverageEngine(egli_milner_locale(vee()))
        >>> engine.cov_minus(x, z).witness.format()
        '({y},{z})'
    """

    def __init__(self, L: OrderedLocale, cfg: CoverageConfig | None = None, workers: int | None = None):
        self.locale = L
        self.config = cfg or CoverageConfig()
        self.workers = workers or get_settings().workers
        self.resolved = self.config.resolve(L)
        self._past = _DirectionSearch(L, self.resolved, self.workers)
        opposite = L.opposite()
        self._future = _DirectionSearch(opposite, self.config.resolve(opposite), self.workers)
        self._verdicts: dict[tuple[str, Mask, Mask], CoverageVerdict] = {}

    def _check_open(self, mask: Mask, what: str) -> None:
        if not self.locale.is_open(mask):
            raise SpaceDefinitionError(f"{what} {self.locale.format(mask)} is not an open of '{self.locale.name}'")

    def _decide(self, direction: str, region: Mask, target: Mask) -> CoverageVerdict:
        key = (direction, region, target)
        cached = self._verdicts.get(key)
        if cached is not None:
            return cached
        self._check_open(region, "Region")
        self._check_open(target, "Target")
        if direction == "past":
            verdict = self._past.decide(region, target, "past", "⇓")
        else:
            verdict = self._future.decide(region, target, "future", "⇑")
        log.debug(
            "coverage_decided",
            locale=self.locale.name,
            direction=direction,
            region=self.locale.format(region),
            target=self.locale.format(target),
            outcome=verdict.outcome.value,
            saturated=verdict.saturated,
            states=verdict.metrics.states_explored,
        )
        self._verdicts[key] = verdict
        return verdict

    def cov_minus(self, region: Mask, target: Mask) -> CoverageVerdict:
        """Is region ∈ Cov⁻(target)?

        Raises:
            SpaceDefinitionError: If region or target is not open
        """
        return self._decide("past", region, target)

    def cov_plus(self, region: Mask, target: Mask) -> CoverageVerdict:
        """Is region ∈ Cov⁺(target)? Paths in the verdict live in the opposite locale."""
        return self._decide("future", region, target)

    def decide(self, direction: str, region: Mask, target: Mask) -> CoverageVerdict:
        if direction not in ("past", "future"):
            raise ValueError(f"Unknown direction '{direction}' (expected past or future)")
        return self._decide(direction, region, target)

    def table(self, direction: str = "past") -> dict[tuple[Mask, Mask], Outcome]:
        """Outcome for every (region, target) pair of opens."""
        frame = self.locale.frame
        table = {(a, u): self.decide(direction, a, u).outcome for u in frame for a in frame}
        log.info(
            "coverage_table_built",
            locale=self.locale.name,
            direction=direction,
            pairs=len(table),
            covered=sum(1 for o in table.values() if o is Outcome.COVERED),
            unknown=sum(1 for o in table.values() if o is Outcome.UNKNOWN),
        )
        return table

    def covers(self, direction: str, target: Mask) -> list[Mask]:
        """Regions covering target, in frame order (Unknown counts as not covering)."""
        return [a for a in self.locale.frame if self.decide(direction, a, target).covered]


def cov_minus(L: OrderedLocale, region: Mask, target: Mask, cfg: CoverageConfig | None = None) -> CoverageVerdict:
    """One-off Cov⁻ decision; build a CoverageEngine to share caches across questions."""
    return CoverageEngine(L, cfg).cov_minus(region, target)


def cov_plus(L: OrderedLocale, region: Mask, target: Mask, cfg: CoverageConfig | None = None) -> CoverageVerdict:
    """One-off Cov⁺ decision."""
    return CoverageEngine(L, cfg).cov_plus(region, target)
