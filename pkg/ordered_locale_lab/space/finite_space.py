"""Finite preordered topological spaces.

A FiniteSpace carries:
- points: ordered labels, addressed by index
- the preorder, stored as per-point successor (up) and predecessor (down) masks
- the topology, either a canonical tuple of opens or "discrete" (every subset open,
  enumerated only on demand and only below the discrete cap)

All iteration over opens follows the canonical order (cardinality, then
lexicographic indices), which fixes every "first witness" the checkers report.
"""

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from ordered_locale_lab.config import get_settings
from ordered_locale_lab.errors import CapacityError, SpaceDefinitionError
from ordered_locale_lab.monitoring import get_logger
from ordered_locale_lab.space.bitmask import (
    Mask,
    bits,
    canonical_key,
    full_mask,
    is_subset,
    mask_of,
    subsets_of,
)

log = get_logger(__name__)


@dataclass(frozen=True)
class PointSet:
    """A subset of a space's points."""

    members: Mask
    space: str


@dataclass(frozen=True)
class OpenRegion:
    """An open of a named space's topology."""

    members: Mask
    space: str


@dataclass(frozen=True)
class OpenConesVerdict:
    """Outcome of has_open_cones.

    Attributes:
        holds: True when ↑U and ↓U are open for every open U
        witness: First open (canonical order) with a non-open cone
        cone: "up" or "down", whichever failed first for the witness
    """

    holds: bool
    witness: Mask | None = None
    cone: str | None = None


@dataclass(frozen=True)
class FiniteSpace:
    """Finite point set with a preorder and a finite topology.

    Attributes:
        name: Identifier used in OpenRegion.space and reports
        points: Point labels in index order
        up_masks: up_masks[i] = {j : i ≤ j}, always containing i
        down_masks: down_masks[i] = {j : j ≤ i}, always containing i
        opens: Canonical tuple of opens, or None for the discrete topology
        discrete_cap: Largest point count whose discrete topology may be enumerated
    """

    name: str
    points: tuple[str, ...]
    up_masks: tuple[Mask, ...]
    down_masks: tuple[Mask, ...]
    opens: tuple[Mask, ...] | None = None
    discrete_cap: int = 16
    _label_index: dict[str, int] = field(init=False, repr=False, compare=False)
    _open_set: frozenset[Mask] | None = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_label_index", {p: i for i, p in enumerate(self.points)})
        object.__setattr__(
            self, "_open_set", frozenset(self.opens) if self.opens is not None else None
        )

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def full(self) -> Mask:
        return full_mask(self.n)

    @property
    def is_discrete(self) -> bool:
        return self.opens is None

    # -- labels -----------------------------------------------------------

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise SpaceDefinitionError(f"Unknown point '{label}' in space '{self.name}'") from None

    def mask(self, labels: Iterable[str]) -> Mask:
        return mask_of(self.index(label) for label in labels)

    def labels(self, mask: Mask) -> list[str]:
        return [self.points[i] for i in bits(mask)]

    def format(self, mask: Mask) -> str:
        """Canonical serialization of a subset, e.g. ``{a,b}``."""
        return "{" + ",".join(self.labels(mask)) + "}"

    def point_set(self, labels: Iterable[str]) -> PointSet:
        return PointSet(members=self.mask(labels), space=self.name)

    def region(self, labels: Iterable[str]) -> OpenRegion:
        """Validated open region from labels.

        Raises:
            SpaceDefinitionError: If the labels do not form an open
        """
        mask = self.mask(labels)
        if not self.is_open(mask):
            raise SpaceDefinitionError(f"{self.format(mask)} is not open in '{self.name}'")
        return OpenRegion(members=mask, space=self.name)

    # -- topology ---------------------------------------------------------

    def is_open(self, mask: Mask) -> bool:
        if self._open_set is None:
            return is_subset(mask, self.full)
        return mask in self._open_set

    @property
    def frame_enumerable(self) -> bool:
        return self.opens is not None or self.n <= self.discrete_cap

    @cached_property
    def frame(self) -> tuple[Mask, ...]:
        """All opens in canonical order.

        Raises:
            CapacityError: If the topology is discrete above the discrete cap
        """
        if self.opens is not None:
            return self.opens
        if self.n > self.discrete_cap:
            raise CapacityError(
                f"Discrete topology on {self.n} points exceeds enumeration cap {self.discrete_cap}"
            )
        return tuple(sorted(subsets_of(self.full), key=canonical_key))

    @cached_property
    def frame_index(self) -> dict[Mask, int]:
        return {u: i for i, u in enumerate(self.frame)}

    @cached_property
    def neighbourhoods(self) -> tuple[Mask, ...]:
        """Smallest open containing each point."""
        if self.opens is None:
            return tuple(1 << i for i in range(self.n))
        result = []
        for i in range(self.n):
            nbhd = self.full
            for u in self.opens:
                if u >> i & 1:
                    nbhd &= u
            result.append(nbhd)
        return tuple(result)

    def minimal_neighbourhood(self, point: int) -> Mask:
        return self.neighbourhoods[point]

    def interior(self, mask: Mask) -> Mask:
        """Largest open contained in mask."""
        if self.opens is None:
            return mask & self.full
        result = 0
        for i in bits(mask):
            nbhd = self.neighbourhoods[i]
            if nbhd & mask == nbhd:
                result |= nbhd
        return result

    def specialization_preorder(self) -> list[tuple[int, int]]:
        """Pairs (x, y) with x in every open containing y."""
        return [(x, y) for y in range(self.n) for x in bits(self.neighbourhoods[y])]

    # -- order ------------------------------------------------------------

    def up_set(self, mask: Mask) -> Mask:
        result = 0
        for i in bits(mask):
            result |= self.up_masks[i]
        return result

    def down_set(self, mask: Mask) -> Mask:
        result = 0
        for i in bits(mask):
            result |= self.down_masks[i]
        return result

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up_masks[x] >> y & 1)

    def egli_milner(self, u: Mask, v: Mask) -> bool:
        """U ⊴ V iff U ⊆ ↓V and V ⊆ ↑U."""
        return is_subset(u, self.down_set(v)) and is_subset(v, self.up_set(u))

    def has_open_cones(self) -> OpenConesVerdict:
        """Check that ↑U and ↓U are open for every open U (canonical order)."""
        if self.opens is None:
            return OpenConesVerdict(holds=True)
        for u in self.frame:
            if not self.is_open(self.up_set(u)):
                return OpenConesVerdict(holds=False, witness=u, cone="up")
            if not self.is_open(self.down_set(u)):
                return OpenConesVerdict(holds=False, witness=u, cone="down")
        return OpenConesVerdict(holds=True)

    def reversed(self) -> "FiniteSpace":
        """Same points and topology with the order reversed."""
        return FiniteSpace(
            name=f"{self.name}^op",
            points=self.points,
            up_masks=self.down_masks,
            down_masks=self.up_masks,
            opens=self.opens,
            discrete_cap=self.discrete_cap,
        )


def _close_topology(n: int, subbase: Iterable[Mask], limit: int) -> tuple[Mask, ...]:
    """Saturate subbase ∪ {∅, full} under binary union and intersection."""
    full = full_mask(n)
    opens: set[Mask] = {0, full}
    work = [s for s in dict.fromkeys(subbase) if s not in opens]
    opens.update(work)
    while work:
        s = work.pop()
        for t in list(opens):
            for c in (s | t, s & t):
                if c not in opens:
                    opens.add(c)
                    work.append(c)
                    if len(opens) > limit:
                        raise CapacityError(f"Topology closure exceeded {limit} opens")
    return tuple(sorted(opens, key=canonical_key))


def _masks_from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> tuple[tuple[Mask, ...], tuple[Mask, ...]]:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(pairs)
    closure = nx.transitive_closure(graph, reflexive=True)
    up = tuple(mask_of(closure.successors(i)) for i in range(n))
    down = tuple(mask_of(closure.predecessors(i)) for i in range(n))
    return up, down


def build_space(
    name: str,
    points: Sequence[str],
    order_pairs: Iterable[tuple[str, str]] = (),
    subbase: Iterable[Iterable[str]] | None = None,
) -> FiniteSpace:
    """Build a FiniteSpace from labels, generating order pairs and a subbase.

    Args:
        name: Space identifier
        points: Unique point labels
        order_pairs: Generating pairs (x, y) meaning x ≤ y; closed reflexively and transitively
        subbase: Sets generating the topology, or None for the discrete topology

    Returns:
        The constructed space

    Raises:
        SpaceDefinitionError: Duplicate labels or unknown references
        CapacityError: More points than the configured maximum, or closure too large

    Example:
        >>> chain = build_space("CHAIN3", ["a", "b", "c"], [("a", "b"), ("b", "c")])
        >>> len(chain.frame)
        8
    """
    settings = get_settings()
    labels = tuple(points)
    if len(set(labels)) != len(labels):
        dupes = sorted({p for p in labels if labels.count(p) > 1})
        raise SpaceDefinitionError(f"Duplicate point labels: {dupes}")
    if len(labels) > settings.max_points:
        raise CapacityError(f"{len(labels)} points exceed the capacity of {settings.max_points}")

    index = {p: i for i, p in enumerate(labels)}

    def resolve(label: str) -> int:
        if label not in index:
            raise SpaceDefinitionError(f"Unknown point '{label}' referenced in space '{name}'")
        return index[label]

    pairs = [(resolve(x), resolve(y)) for x, y in order_pairs]
    up, down = _masks_from_pairs(len(labels), pairs)

    opens = None
    if subbase is not None:
        sets = [mask_of(resolve(p) for p in s) for s in subbase]
        opens = _close_topology(len(labels), sets, settings.budget)

    space = FiniteSpace(
        name=name,
        points=labels,
        up_masks=up,
        down_masks=down,
        opens=opens,
        discrete_cap=settings.discrete_cap,
    )
    log.debug(
        "space_built",
        space=name,
        points=len(labels),
        opens=len(opens) if opens is not None else "discrete",
    )
    return space


def space_from_relation(
    name: str, points: Sequence[str], leq: Callable[[int, int], bool]
) -> FiniteSpace:
    """Discrete space whose order is given by a relation on indices.

    The relation must already be a preorder; grids use this with their cone test.

    Raises:
        CapacityError: More points than the configured maximum
    """
    settings = get_settings()
    n = len(points)
    if n > settings.max_points:
        raise CapacityError(f"{n} points exceed the capacity of {settings.max_points}")
    up = tuple(mask_of(j for j in range(n) if leq(i, j)) for i in range(n))
    down = tuple(mask_of(j for j in range(n) if leq(j, i)) for i in range(n))
    return FiniteSpace(
        name=name,
        points=tuple(points),
        up_masks=up,
        down_masks=down,
        opens=None,
        discrete_cap=settings.discrete_cap,
    )


def is_preorder(space: FiniteSpace) -> bool:
    """Closure-idempotence check: reflexive and transitive."""
    for i in range(space.n):
        if not space.up_masks[i] >> i & 1:
            return False
        if space.up_set(space.up_masks[i]) != space.up_masks[i]:
            return False
    return True


def topology_is_closed(space: FiniteSpace) -> bool:
    """True when the listed opens contain ∅, full and are closed under ∪, ∩."""
    if space.opens is None:
        return True
    listed = set(space.opens)
    if 0 not in listed or space.full not in listed:
        return False
    return all(u | v in listed and u & v in listed for u in listed for v in listed)


__all__ = [
    "FiniteSpace",
    "OpenRegion",
    "OpenConesVerdict",
    "PointSet",
    "build_space",
    "space_from_relation",
    "is_preorder",
    "topology_is_closed",
]
