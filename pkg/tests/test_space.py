"""Tests for finite preordered spaces.

These tests verify:
1. Construction validates labels and capacity limits
2. Canonical frame order, interiors and minimal neighbourhoods
3. Open-cone detection on the library spaces
4. The JSON schema for spaces
"""

import pytest
from pydantic import ValidationError

from ordered_locale_lab.errors import CapacityError, SpaceDefinitionError
from ordered_locale_lab.space import (
    SpaceDocument,
    build_space,
    chain3,
    is_preorder,
    lvfail,
    random_space,
    space_from_relation,
    star,
    topology_is_closed,
    vee,
)
from ordered_locale_lab.space.bitmask import bits, canonical_key, is_subset, subsets_of


class TestBuildSpace:
    """Test space construction and validation."""

    def test_chain3_is_discrete_with_eight_opens(self, chain3_space):
        """CHAIN3 enumerates all subsets in canonical order."""
        assert chain3_space.is_discrete
        assert len(chain3_space.frame) == 8
        assert [chain3_space.format(u) for u in chain3_space.frame] == [
            "{}",
            "{a}",
            "{b}",
            "{c}",
            "{a,b}",
            "{a,c}",
            "{b,c}",
            "{a,b,c}",
        ]

    def test_order_is_transitively_closed(self, chain3_space):
        """a ≤ b ≤ c yields a ≤ c."""
        a, c = chain3_space.index("a"), chain3_space.index("c")
        assert chain3_space.leq(a, c)
        assert not chain3_space.leq(c, a)
        assert is_preorder(chain3_space)

    def test_duplicate_labels_rejected(self):
        """Duplicate point labels raise SpaceDefinitionError."""
        with pytest.raises(SpaceDefinitionError, match="Duplicate"):
            build_space("BAD", ["a", "a"])

    def test_unknown_order_reference_rejected(self):
        """Order pairs must reference known points."""
        with pytest.raises(SpaceDefinitionError, match="Unknown point 'q'"):
            build_space("BAD", ["a", "b"], [("a", "q")])

    def test_point_capacity(self):
        """More than 64 points cannot be represented."""
        with pytest.raises(CapacityError, match="exceed the capacity"):
            build_space("BIG", [f"p{i}" for i in range(65)])

    def test_discrete_frame_above_cap_is_virtual(self):
        """A discrete space above the cap refuses to enumerate its opens."""
        space = space_from_relation("LINE17", [f"p{i}" for i in range(17)], lambda i, j: i <= j)
        assert not space.frame_enumerable
        assert space.is_open(space.full)
        with pytest.raises(CapacityError, match="enumeration cap"):
            _ = space.frame

    def test_discrete_cap_from_environment(self, monkeypatch, fresh_settings):
        """OLAB_DISCRETE_CAP lowers the enumeration cap for new spaces."""
        monkeypatch.setenv("OLAB_DISCRETE_CAP", "2")
        space = chain3()
        assert space.discrete_cap == 2
        assert not space.frame_enumerable


class TestTopology:
    """Test opens, interiors and neighbourhoods."""

    def test_star_frame(self):
        """STAR's subbase closes to ten opens."""
        space = star()
        assert len(space.frame) == 10
        assert topology_is_closed(space)
        assert not space.is_open(space.mask(["z"]))

    def test_minimal_neighbourhood(self):
        """z only lies in opens containing m and p."""
        space = star()
        assert space.minimal_neighbourhood(space.index("z")) == space.mask(["m", "z", "p"])
        assert (space.index("m"), space.index("z")) in space.specialization_preorder()

    def test_interior_drops_unsupported_point(self):
        """The interior of ↑{s} = {s, z} loses z."""
        space = star()
        up = space.up_set(space.mask(["s"]))
        assert up == space.mask(["s", "z"])
        assert space.interior(up) == space.mask(["s"])

    def test_region_must_be_open(self):
        """region() rejects non-open label sets."""
        space = star()
        with pytest.raises(SpaceDefinitionError, match="not open"):
            space.region(["z"])
        assert space.region(["m", "z", "p"]).members == space.mask(["m", "z", "p"])

    def test_interior_is_largest_open_inside(self, rng):
        """On random spaces the interior is open, contained and maximal."""
        for n in (3, 4):
            space = random_space(rng, n, discrete=False)
            for a in subsets_of(space.full):
                inner = space.interior(a)
                assert space.is_open(inner)
                assert is_subset(inner, a)
                for u in space.frame:
                    if is_subset(u, a):
                        assert is_subset(u, inner)

    def test_frame_order_is_canonical(self, rng):
        """Every frame is sorted by cardinality then indices."""
        space = random_space(rng, 4, discrete=False)
        keys = [canonical_key(u) for u in space.frame]
        assert keys == sorted(keys)
        assert space.frame[0] == 0
        assert space.frame[-1] == space.full


class TestOpenCones:
    """Test has_open_cones on the library spaces."""

    def test_discrete_spaces_have_open_cones(self):
        """Discrete topologies make every cone open."""
        assert chain3().has_open_cones().holds
        assert vee().has_open_cones().holds

    def test_star_up_cone_not_open(self):
        """STAR fails first at {s} with ↑{s} = {s, z}."""
        space = star()
        verdict = space.has_open_cones()
        assert not verdict.holds
        assert verdict.witness == space.mask(["s"])
        assert verdict.cone == "up"

    def test_lvfail_cones_not_open(self):
        """LVFAIL's future cone of {a0, a1} is not open."""
        space = lvfail()
        assert not space.has_open_cones().holds
        future = space.up_set(space.mask(["a0", "a1"]))
        assert space.interior(future) == space.mask(["a0", "a1", "b1"])


class TestSpaceDocument:
    """Test the JSON space format."""

    def test_document_to_space(self):
        """A valid document builds the described space."""
        doc = SpaceDocument.model_validate(
            {"name": "V", "points": ["x", "y", "z"], "order": [["x", "z"], ["y", "z"]]}
        )
        space = doc.to_space()
        assert space.is_discrete
        assert space.up_set(space.mask(["x"])) == space.mask(["x", "z"])

    def test_document_rejects_unknown_reference(self):
        """Subbase sets must reference declared points."""
        with pytest.raises(ValidationError, match="unknown points"):
            SpaceDocument.model_validate(
                {"name": "V", "points": ["x"], "topology": {"kind": "subbase", "sets": [["q"]]}}
            )

    def test_document_rejects_duplicate_points(self):
        """Duplicate labels fail validation."""
        with pytest.raises(ValidationError, match="unique"):
            SpaceDocument.model_validate({"name": "V", "points": ["x", "x"]})

    def test_from_space_preserves_structure(self):
        """Serializing STAR keeps its opens and order."""
        space = star()
        rebuilt = SpaceDocument.from_space(space).to_space()
        assert rebuilt.frame == space.frame
        assert rebuilt.up_masks == space.up_masks
        assert list(bits(rebuilt.minimal_neighbourhood(2))) == [1, 2, 3]
