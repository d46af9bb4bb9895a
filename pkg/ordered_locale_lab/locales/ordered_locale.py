"""Ordered locales over a finite frame.

An OrderedLocale pairs a FiniteSpace's frame of opens with an order source and
caches the localic cones ⇑U = ⋁{V : U ⊴ V} and ⇓U = ⋁{W : W ⊴ U}.

Usage:
    from ordered_locale_lab.locales import egli_milner_locale
    from ordered_locale_lab.space import chain3

    L = egli_milner_locale(chain3())
    L.cone_up(L.space.mask("a"))  # {a,b,c}
"""

from collections.abc import Callable, Mapping
from dataclasses import dataclass, field

from ordered_locale_lab.errors import CapacityError, MonadLawError
from ordered_locale_lab.locales.orders import (
    EgliMilner,
    MonadPair,
    OrderSource,
    UpperOrder,
)
from ordered_locale_lab.monitoring import get_logger
from ordered_locale_lab.space.bitmask import Mask, is_subset
from ordered_locale_lab.space.finite_space import FiniteSpace

log = get_logger(__name__)

ConeMap = Mapping[Mask, Mask] | Callable[[Mask], Mask]


@dataclass(frozen=True, eq=False)
class OrderedLocale:
    """A frame of opens with a preorder ⊴ and its localic cones.

    Attributes:
        space: FiniteSpace whose topology is the frame
        source: Where ⊴ and the cones come from
        name: Display name used in reports
    """

    space: FiniteSpace
    source: OrderSource
    name: str
    _up: dict[Mask, Mask] = field(default_factory=dict, init=False, repr=False)
    _down: dict[Mask, Mask] = field(default_factory=dict, init=False, repr=False)

    @property
    def frame(self) -> tuple[Mask, ...]:
        return self.space.frame

    @property
    def frame_enumerable(self) -> bool:
        return self.space.frame_enumerable

    @property
    def point_generated(self) -> bool:
        """Cones are unions of per-point cones on a discrete frame."""
        return self.space.is_discrete and self.source.point_generated

    def is_open(self, mask: Mask) -> bool:
        return self.space.is_open(mask)

    def relates(self, u: Mask, v: Mask) -> bool:
        """U ⊴ V."""
        return self.source.relates(self.space, u, v)

    def cone_up(self, u: Mask) -> Mask:
        """⇑U."""
        cached = self._up.get(u)
        if cached is None:
            cached = self.source.cone_up(self.space, u)
            if cached is None:
                cached = self.cone_up_by_join(u)
            self._up[u] = cached
        return cached

    def cone_down(self, u: Mask) -> Mask:
        """⇓U."""
        cached = self._down.get(u)
        if cached is None:
            cached = self.source.cone_down(self.space, u)
            if cached is None:
                cached = self.cone_down_by_join(u)
            self._down[u] = cached
        return cached

    def cone_up_by_join(self, u: Mask) -> Mask:
        """⋁{V : U ⊴ V} over the enumerated frame.

        Raises:
            CapacityError: If the frame cannot be enumerated
        """
        result = 0
        for v in self.frame:
            if self.relates(u, v):
                result |= v
        return result

    def cone_down_by_join(self, u: Mask) -> Mask:
        """⋁{W : W ⊴ U} over the enumerated frame."""
        result = 0
        for w in self.frame:
            if self.relates(w, u):
                result |= w
        return result

    def opposite(self) -> "OrderedLocale":
        """The same frame with ⊴ reversed; future notions become past notions."""
        return OrderedLocale(space=self.space, source=self.source.opposite(), name=f"{self.name}^op")

    def format(self, mask: Mask) -> str:
        return self.space.format(mask)


def egli_milner_locale(space: FiniteSpace, name: str | None = None) -> OrderedLocale:
    """Ordered locale of a space under the Egli–Milner order."""
    return OrderedLocale(space=space, source=EgliMilner(), name=name or space.name)


def upper_order_locale(space: FiniteSpace, name: str | None = None) -> OrderedLocale:
    """Ordered locale with U ⊴ V iff V ⊆ ↑U."""
    return OrderedLocale(space=space, source=UpperOrder(), name=name or f"{space.name}-upper")


def point_cone_locale(
    space: FiniteSpace,
    up_masks: tuple[Mask, ...],
    down_masks: tuple[Mask, ...],
    name: str | None = None,
) -> OrderedLocale:
    """Ordered locale on a discrete space whose cone monads are generated by per-point cones.

    Each per-point cone must contain its point and be closed under itself
    (the cone of any member lies inside); these make the induced maps monads.

    Raises:
        MonadLawError: If a point cone misses its point or is not transitive
    """
    if not space.is_discrete:
        raise MonadLawError("discrete", 0, "Point cones require a discrete frame")
    for label, masks in (("up", up_masks), ("down", down_masks)):
        for i, cone in enumerate(masks):
            if not cone >> i & 1:
                raise MonadLawError("extensive", 1 << i, f"{label} cone of {space.points[i]} misses the point")
            expanded = 0
            for j in range(space.n):
                if cone >> j & 1:
                    expanded |= masks[j]
            if expanded != cone:
                raise MonadLawError(
                    "idempotent", 1 << i, f"{label} cone of {space.points[i]} is not transitively closed"
                )
    source = MonadPair.from_points(up_masks, down_masks)
    return OrderedLocale(space=space, source=source, name=name or space.name)


def _tabulate(frame: tuple[Mask, ...], cone: ConeMap) -> dict[Mask, Mask]:
    if callable(cone):
        return {u: cone(u) for u in frame}
    missing = [u for u in frame if u not in cone]
    if missing:
        raise MonadLawError("total", missing[0], "Cone table does not cover every open")
    return {u: cone[u] for u in frame}


def _validate_monad(space: FiniteSpace, table: dict[Mask, Mask], label: str) -> None:
    frame = space.frame
    for u in frame:
        image = table[u]
        if not space.is_open(image):
            raise MonadLawError("open", u, f"{label}({space.format(u)}) = {space.format(image)} is not open")
        if not is_subset(u, image):
            raise MonadLawError("extensive", u, f"{space.format(u)} ⋢ {label}({space.format(u)})")
        if table[image] != image:
            raise MonadLawError("idempotent", u, f"{label}∘{label} differs from {label} at {space.format(u)}")
    for u in frame:
        for v in frame:
            if is_subset(u, v) and not is_subset(table[u], table[v]):
                raise MonadLawError(
                    "monotone", u, f"{label} not monotone on {space.format(u)} ⊑ {space.format(v)}"
                )


def from_monad_pair(
    space: FiniteSpace, up: ConeMap, down: ConeMap, name: str | None = None
) -> OrderedLocale:
    """Ordered locale with U ⊴ V iff U ⊑ down(V) and V ⊑ up(U).

    Args:
        space: Space whose (enumerable) frame carries the monads
        up: Future cone as a table or a function on opens
        down: Past cone as a table or a function on opens
        name: Display name

    Returns:
        OrderedLocale backed by a MonadPair source

    Raises:
        MonadLawError: Naming the failing law and open
        CapacityError: If the frame cannot be enumerated

    Example:
        >>> eq = from_monad_pair(space, lambda u: u, lambda u: u)
        >>> eq.relates(u, v) == (u == v)
        True
    """
    if not space.frame_enumerable:
        raise CapacityError(f"Frame of '{space.name}' is too large to tabulate cone monads")
    up_table = _tabulate(space.frame, up)
    down_table = _tabulate(space.frame, down)
    _validate_monad(space, up_table, "up")
    _validate_monad(space, down_table, "down")
    log.debug("monad_pair_validated", space=space.name, opens=len(space.frame))
    return OrderedLocale(
        space=space,
        source=MonadPair(up=up_table, down=down_table),
        name=name or f"{space.name}-monads",
    )


def equality_locale(space: FiniteSpace, name: str | None = None) -> OrderedLocale:
    """Identity monads: U ⊴ V iff U = V."""
    return from_monad_pair(space, lambda u: u, lambda u: u, name=name or f"{space.name}-equality")
