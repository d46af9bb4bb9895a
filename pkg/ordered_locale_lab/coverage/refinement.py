"""Search for local past refinements.

⊴ is a preorder, so a path q ending at W refines a restriction r = p|_W and
inhabits A exactly when some ⊴-chain s_1 ⊴ … ⊴ s_k = W has, for every
requirement R ∈ {r_0, …, r_N, A}, a member s_i ⊑ R. Only the ⊑-minimal
requirements matter. ChainSearcher finds the shortest such chain by
breadth-first search over (node, satisfied requirements); every useful node
satisfies a new requirement, so the shortest chain has at most one more node
than there are minimal requirements.
"""

from collections.abc import Iterable, Sequence
from threading import Lock

from ordered_locale_lab.coverage.config import ResolvedCoverageConfig
from ordered_locale_lab.coverage.interleave import canonical_interleave
from ordered_locale_lab.coverage.verdict import FamilyMember, LocalRefinementFamily, RefinementSearch
from ordered_locale_lab.errors import PathError
from ordered_locale_lab.locales.ordered_locale import OrderedLocale
from ordered_locale_lab.monitoring import SearchMetrics
from ordered_locale_lab.paths.path import Path, inhabits, make_path, refines
from ordered_locale_lab.paths.restriction import restrict_past
from ordered_locale_lab.space.bitmask import Mask, canonical_key, is_subset


def minimal_antichain(masks: Iterable[Mask]) -> tuple[Mask, ...]:
    """⊑-minimal elements of masks, deduplicated, in canonical order."""
    unique = sorted(set(masks), key=canonical_key)
    kept: list[Mask] = []
    for m in unique:
        if not any(is_subset(k, m) for k in kept):
            kept.append(m)
    return tuple(kept)


def add_to_antichain(antichain: tuple[Mask, ...], mask: Mask) -> tuple[Mask, ...]:
    if any(is_subset(a, mask) for a in antichain):
        return antichain
    return minimal_antichain([a for a in antichain if not is_subset(mask, a)] + [mask])


class ChainSearcher:
    """Shortest ⊴-chains over a step universe, cached per (endpoint, requirements).

    Attributes:
        locale: Locale supplying ⊴
        universe: Candidate chain members in canonical order
        metrics: Query and cache counters
    """

    def __init__(self, L: OrderedLocale, universe: Sequence[Mask]):
        self.locale = L
        self.universe = tuple(universe)
        self.metrics = SearchMetrics()
        self._predecessors: dict[Mask, tuple[int, ...]] = {}
        self._chains: dict[tuple[Mask, tuple[Mask, ...]], tuple[Mask, ...] | None] = {}
        self._lock = Lock()

    def predecessor_indices(self, step: Mask) -> tuple[int, ...]:
        """Universe positions j with universe[j] ⊴ step."""
        found = self._predecessors.get(step)
        if found is None:
            found = tuple(j for j, t in enumerate(self.universe) if self.locale.relates(t, step))
            self._predecessors[step] = found
        return found

    def chain(self, endpoint: Mask, requirements: tuple[Mask, ...]) -> tuple[Mask, ...] | None:
        """Shortest chain ending at endpoint with a member inside every requirement.

        Args:
            endpoint: Last chain member W (a universe element)
            requirements: Antichain of regions to meet

        Returns:
            Chain members in ⊴ order, or None if no chain exists at any length
        """
        key = (endpoint, requirements)
        with self._lock:
            self.metrics.refinement_queries += 1
            if key in self._chains:
                self.metrics.refinement_cache_hits += 1
                return self._chains[key]
            self.metrics.refinement_cache_misses += 1
        result = self._search(endpoint, requirements)
        with self._lock:
            self._chains[key] = result
        return result

    def _search(self, endpoint: Mask, requirements: tuple[Mask, ...]) -> tuple[Mask, ...] | None:
        full = (1 << len(requirements)) - 1

        def satisfied(step: Mask) -> int:
            got = 0
            for i, req in enumerate(requirements):
                if is_subset(step, req):
                    got |= 1 << i
            return got

        start = (endpoint, satisfied(endpoint))
        if start[1] == full:
            return (endpoint,)
        parents: dict[tuple[Mask, int], tuple[Mask, int] | None] = {start: None}
        frontier = [start]
        while frontier:
            following = []
            for node, got in frontier:
                for j in self.predecessor_indices(node):
                    step = self.universe[j]
                    gained = satisfied(step)
                    if not gained & ~got:
                        continue
                    state = (step, got | gained)
                    if state in parents:
                        continue
                    parents[state] = (node, got)
                    if state[1] == full:
                        return self._unwind(parents, state)
                    following.append(state)
            frontier = following
        return None

    @staticmethod
    def _unwind(parents: dict, state: tuple[Mask, int]) -> tuple[Mask, ...]:
        chain = []
        current: tuple[Mask, int] | None = state
        while current is not None:
            chain.append(current[0])
            current = parents[current]
        return tuple(chain)


def _self_family(p: Path, region: Mask) -> LocalRefinementFamily:
    member = FamilyMember(path=p, endpoint=p.end, witness=refines(p, p))
    return LocalRefinementFamily(target=p, region=region, members=(member,), method="self")


def _interleave_family(p: Path, region: Mask, bound: int) -> LocalRefinementFamily | None:
    members: dict[Mask, FamilyMember] = {}
    for k in range(-1, len(p) - 1):
        try:
            q = canonical_interleave(p, region, k)
            if q is None or len(q) > bound or q.end in members:
                continue
            restricted = restrict_past(p, q.end)
        except PathError:
            continue
        witness = refines(q, restricted)
        if witness is not None:
            members[q.end] = FamilyMember(path=q, endpoint=q.end, witness=witness)
    joined = 0
    for end in members:
        joined |= end
    if joined != p.end:
        return None
    ordered = tuple(members[end] for end in sorted(members, key=canonical_key))
    return LocalRefinementFamily(target=p, region=region, members=ordered, method="interleave")


def find_local_past_refinement(
    p: Path,
    region: Mask,
    cfg: ResolvedCoverageConfig,
    searcher: ChainSearcher | None = None,
) -> RefinementSearch:
    """Find a local past refinement of p whose members all inhabit region.

    Every qualifying endpoint W ⊑ p_⊤ is taken, so the family exists exactly
    when the qualifying endpoints join to p_⊤.

    Args:
        p: Target path
        region: The region A to inhabit
        cfg: Resolved bounds (step universe, refinement length)
        searcher: Shared chain searcher (a fresh one is made if omitted)

    Returns:
        RefinementSearch; inconclusive when the length bound hid a chain

    Example:
        >>> p = make_path(L, [b, c])
        >>> find_local_past_refinement(p, a, cfg).family.members[0].path.format()
        '({a},{b},{c})'
    """
    if inhabits(p, region):
        return RefinementSearch(_self_family(p, region))
    bound = cfg.refinement_bound(len(p))
    if cfg.use_interleave and cfg.all_opens:
        family = _interleave_family(p, region, bound)
        if family is not None:
            return RefinementSearch(family)

    L = p.locale
    searcher = searcher or ChainSearcher(L, cfg.universe)
    members = []
    joined = 0
    inconclusive = False
    for w in cfg.universe:
        if not is_subset(w, p.end):
            continue
        try:
            restricted = restrict_past(p, w)
        except PathError:
            continue
        chain = searcher.chain(w, minimal_antichain(restricted.steps + (region,)))
        if chain is None:
            continue
        if len(chain) > bound:
            inconclusive = True
            continue
        q = make_path(L, chain)
        members.append(FamilyMember(path=q, endpoint=w, witness=refines(q, restricted)))
        joined |= w
    if joined == p.end:
        return RefinementSearch(LocalRefinementFamily(target=p, region=region, members=tuple(members)))
    return RefinementSearch(None, inconclusive=inconclusive)
