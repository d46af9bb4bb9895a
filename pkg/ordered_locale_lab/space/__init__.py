"""Finite preordered spaces: point sets, cones, interiors and open-cone checks."""

from ordered_locale_lab.space.bitmask import Mask
from ordered_locale_lab.space.finite_space import (
    FiniteSpace,
    OpenConesVerdict,
    OpenRegion,
    PointSet,
    build_space,
    is_preorder,
    space_from_relation,
    topology_is_closed,
)
from ordered_locale_lab.space.library import SPACES, chain3, lvfail, random_space, star, vee
from ordered_locale_lab.space.schema import SpaceDocument, TopologySpec

__all__ = [
    "Mask",
    "FiniteSpace",
    "OpenConesVerdict",
    "OpenRegion",
    "PointSet",
    "build_space",
    "is_preorder",
    "space_from_relation",
    "topology_is_closed",
    "SPACES",
    "chain3",
    "vee",
    "star",
    "lvfail",
    "random_space",
    "SpaceDocument",
    "TopologySpec",
]
