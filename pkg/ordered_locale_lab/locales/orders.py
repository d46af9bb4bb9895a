"""Order sources: where an ordered locale's ⊴ and its cones come from.

- EgliMilner: induced by the point order, U ⊴ V iff U ⊆ ↓V and V ⊆ ↑U
- MonadPair: explicit cone monads, U ⊴ V iff U ⊑ down(V) and V ⊑ up(U); tabulated,
  or generated point by point on a discrete frame (grids with unequal slopes)
- UpperOrder: U ⊴ V iff V ⊆ ↑U; its past cone is constant at the full set

Every source can produce its opposite (reversed order, swapped cones).
"""

from abc import ABC, abstractmethod
from collections.abc import Mapping
from dataclasses import dataclass, field

from ordered_locale_lab.space.bitmask import Mask, bits, is_subset
from ordered_locale_lab.space.finite_space import FiniteSpace


class OrderSource(ABC):
    """Abstract order source over a FiniteSpace's frame."""

    kind: str = "abstract"

    @property
    def point_generated(self) -> bool:
        """True when both cones are unions of per-point cones on a discrete frame."""
        return False

    @abstractmethod
    def relates(self, space: FiniteSpace, u: Mask, v: Mask) -> bool:
        """U ⊴ V."""

    def cone_up(self, space: FiniteSpace, u: Mask) -> Mask | None:
        """⇑U, or None when only the join formula can compute it."""
        return None

    def cone_down(self, space: FiniteSpace, u: Mask) -> Mask | None:
        return None

    @abstractmethod
    def opposite(self) -> "OrderSource":
        """Source of the reversed order."""


@dataclass(frozen=True)
class EgliMilner(OrderSource):
    """Order induced by the space's point preorder."""

    reverse: bool = False
    kind: str = field(default="egli-milner", init=False)

    @property
    def point_generated(self) -> bool:
        return True

    def relates(self, space: FiniteSpace, u: Mask, v: Mask) -> bool:
        if self.reverse:
            u, v = v, u
        return space.egli_milner(u, v)

    def cone_up(self, space: FiniteSpace, u: Mask) -> Mask:
        cone = space.down_set(u) if self.reverse else space.up_set(u)
        return space.interior(cone)

    def cone_down(self, space: FiniteSpace, u: Mask) -> Mask:
        cone = space.up_set(u) if self.reverse else space.down_set(u)
        return space.interior(cone)

    def opposite(self) -> "EgliMilner":
        return EgliMilner(reverse=not self.reverse)


@dataclass(frozen=True)
class MonadPair(OrderSource):
    """Cone monads given directly, as tables or generated point by point.

    Tabulated pairs hold ⇑ and ⇓ for every open. Point-generated pairs live on a
    discrete frame too large to tabulate: ⇑U is the union of the future cones of
    U's points and ⇓U the union of their past cones.

    Attributes:
        up: ⇑ as a mapping open → open (tabulated pairs)
        down: ⇓ as a mapping open → open (tabulated pairs)
        up_points: up_points[i] is the future cone of point i (point-generated pairs)
        down_points: down_points[i] is the past cone of point i (point-generated pairs)
    """

    up: Mapping[Mask, Mask] = field(default_factory=dict)
    down: Mapping[Mask, Mask] = field(default_factory=dict)
    up_points: tuple[Mask, ...] | None = None
    down_points: tuple[Mask, ...] | None = None
    kind: str = field(default="monad-pair", init=False)

    @classmethod
    def from_points(cls, up_points: tuple[Mask, ...], down_points: tuple[Mask, ...]) -> "MonadPair":
        return cls(up_points=tuple(up_points), down_points=tuple(down_points))

    @property
    def point_generated(self) -> bool:
        return self.up_points is not None

    def relates(self, space: FiniteSpace, u: Mask, v: Mask) -> bool:
        return is_subset(u, self.cone_down(space, v)) and is_subset(v, self.cone_up(space, u))

    def cone_up(self, space: FiniteSpace, u: Mask) -> Mask:
        if self.up_points is None:
            return self.up[u]
        return _union_of(self.up_points, u)

    def cone_down(self, space: FiniteSpace, u: Mask) -> Mask:
        if self.down_points is None:
            return self.down[u]
        return _union_of(self.down_points, u)

    def opposite(self) -> "MonadPair":
        return MonadPair(up=self.down, down=self.up, up_points=self.down_points, down_points=self.up_points)

    __hash__ = object.__hash__


def _union_of(cones: tuple[Mask, ...], u: Mask) -> Mask:
    result = 0
    for i in bits(u):
        result |= cones[i]
    return result


@dataclass(frozen=True)
class UpperOrder(OrderSource):
    """U ⊴ V iff V ⊆ ↑U (reversed: U ⊴ V iff U ⊆ ↑V)."""

    reverse: bool = False
    kind: str = field(default="upper", init=False)

    def relates(self, space: FiniteSpace, u: Mask, v: Mask) -> bool:
        if self.reverse:
            u, v = v, u
        return is_subset(v, space.up_set(u))

    def opposite(self) -> "UpperOrder":
        return UpperOrder(reverse=not self.reverse)
