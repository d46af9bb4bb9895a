"""Pydantic models for the space JSON format.

    {"name": str, "points": [str], "order": [[str, str]],
     "topology": {"kind": "discrete"} | {"kind": "subbase", "sets": [[str]]}}
"""

from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from ordered_locale_lab.space.bitmask import bits
from ordered_locale_lab.space.finite_space import FiniteSpace, build_space


class TopologySpec(BaseModel):
    """Topology part of a space document."""

    kind: Literal["discrete", "subbase"]
    sets: list[list[str]] | None = None

    @model_validator(mode="after")
    def check_sets(self) -> "TopologySpec":
        if self.kind == "subbase" and self.sets is None:
            raise ValueError("subbase topology requires 'sets'")
        if self.kind == "discrete" and self.sets is not None:
            raise ValueError("discrete topology takes no 'sets'")
        return self


class SpaceDocument(BaseModel):
    """A finite preordered space as exchanged by the CLI and scenario generators."""

    name: str = Field(..., min_length=1)
    points: list[str] = Field(..., min_length=1)
    order: list[tuple[str, str]] = Field(default_factory=list)
    topology: TopologySpec = Field(default_factory=lambda: TopologySpec(kind="discrete"))

    @field_validator("points")
    @classmethod
    def points_unique(cls, v: list[str]) -> list[str]:
        if len(set(v)) != len(v):
            raise ValueError(f"point labels must be unique, got {v}")
        return v

    @model_validator(mode="after")
    def references_known(self) -> "SpaceDocument":
        known = set(self.points)
        for x, y in self.order:
            if x not in known or y not in known:
                raise ValueError(f"order pair ({x}, {y}) references an unknown point")
        for s in self.topology.sets or []:
            missing = [p for p in s if p not in known]
            if missing:
                raise ValueError(f"subbase set references unknown points {missing}")
        return self

    def to_space(self) -> FiniteSpace:
        subbase = self.topology.sets if self.topology.kind == "subbase" else None
        return build_space(self.name, self.points, self.order, subbase)

    @classmethod
    def from_space(cls, space: FiniteSpace) -> "SpaceDocument":
        """Serialize a space; the order is written as its strict pairs."""
        order = [
            (space.points[i], space.points[j])
            for i in range(space.n)
            for j in bits(space.up_masks[i])
            if i != j
        ]
        if space.is_discrete:
            topology = TopologySpec(kind="discrete")
        else:
            topology = TopologySpec(
                kind="subbase", sets=[space.labels(u) for u in space.frame if u]
            )
        return cls(name=space.name, points=list(space.points), order=order, topology=topology)
