"""Tests for grid spacetimes, chains and the five domains of dependence."""

import pytest
from pydantic import ValidationError

from ordered_locale_lab.coverage import CoverageConfig
from ordered_locale_lab.dependence import FromOrderedLocale, domain_of_dependence
from ordered_locale_lab.errors import CapacityError, PathError, SpaceDefinitionError
from ordered_locale_lab.locales import AxiomStatus
from ordered_locale_lab.spacetime import (
    EXPECTED_INCLUSIONS,
    ChainMode,
    GridDocument,
    build_grid,
    cell_label,
    chain_cover_minus,
    chain_domain,
    chains_through,
    domains_all,
    localic_domain,
    past_inextendible,
    render_ascii,
    render_svg,
    scenario,
    validate_chain,
)

CHAIN_DOMAINS = ("inext_causal", "inext_chron", "bounded_causal", "bounded_chron")


class TestBuildGrid:
    """Test grid construction and the derived space."""

    def test_small_grid(self):
        """GRID(3,2) has six cells and (0,0) ≤ (1,1)."""
        G = build_grid(3, 2)
        assert len(G.cells) == 6
        assert G.precedes((0, 0), (1, 1))
        assert not G.precedes((0, 0), (2, 1))
        assert G.space.leq(G.index[(0, 0)], G.index[(1, 1)])

    def test_hole_is_absent(self):
        """A removed cell is not a point of the space."""
        G = build_grid(5, 3, holes=[(2, 1)])
        assert (2, 1) not in G.cells
        assert "(2,1)" not in G.space.points
        assert len(G.space.points) == 14

    def test_two_slopes_use_monad_pair(self):
        """Different slopes give the monad pair of the point cones instead of the Egli–Milner order."""
        G = build_grid(3, 3, up_slope=1, down_slope=2)
        L = G.locale
        assert L.source.kind == "monad-pair"
        assert L.point_generated
        pair = G.mask([(1, 0), (1, 2)])
        assert G.cells_of(L.cone_up(pair)) == G.future((1, 0))
        assert G.cells_of(L.cone_down(pair)) == G.past((1, 0)) | G.past((1, 2))
        assert G.cells_of(L.opposite().cone_up(G.mask([(1, 2)]))) == G.past((1, 2))
        assert build_grid(3, 3).locale.source.kind == "egli-milner"

    def test_past_uses_down_slope(self):
        """With slope 2 the past of (2,2) is one cell wide on row 1 and three on row 0."""
        G = build_grid(5, 3, up_slope=1, down_slope=2)
        assert G.past((2, 2)) == {(1, 0), (2, 0), (3, 0), (2, 1), (2, 2)}
        assert (3, 1) in G.future((2, 0))

    def test_invalid_grids(self):
        """Non-positive sizes, non-positive slopes and stray holes are rejected."""
        with pytest.raises(SpaceDefinitionError, match="positive"):
            build_grid(0, 3)
        with pytest.raises(SpaceDefinitionError, match="slopes"):
            build_grid(3, 3, up_slope=0)
        with pytest.raises(SpaceDefinitionError, match="outside"):
            build_grid(3, 3, holes=[(3, 0)])

    def test_large_grid_has_no_space(self):
        """Above the point capacity only chain-level operations run."""
        G = build_grid(9, 8)
        assert not G.tabulable
        with pytest.raises(CapacityError, match="at most 64"):
            _ = G.space
        assert chain_domain(G, G.row(0), "causal", inextendible=False) == frozenset(G.cells)

    def test_region_validation(self):
        """Regions may only contain existing cells."""
        G = build_grid(3, 3, holes=[(1, 1)])
        with pytest.raises(SpaceDefinitionError, match="not cells"):
            G.region([(1, 1)])

    def test_rectangles_are_deduplicated(self):
        """GRID(2,2) has nine rectangles: four cells, two rows, two columns and the whole grid."""
        G = build_grid(2, 2)
        rects = G.rectangles()
        assert len(rects) == len(set(rects)) == 9
        assert G.mask(G.cells) in rects


class TestChains:
    """Test chain enumeration and validation."""

    def test_inextendible_chains_reach_row_zero(self):
        """Every inextendible chain through (1,2) of GRID(3,3) starts on row 0."""
        chains = list(chains_through(build_grid(3, 3), (1, 2), "causal"))
        assert len(chains) == 7
        assert all(c.start[1] == 0 and c.end == (1, 2) for c in chains)
        assert len({c.cells for c in chains}) == 7

    def test_all_chains_through(self):
        """Without the inextendibility filter every suffix is a chain."""
        chains = list(chains_through(build_grid(3, 3), (1, 2), "causal", inextendible=False))
        assert len(chains) == 11
        assert chains[0].cells == ((1, 2),)

    def test_row_zero_singleton(self):
        """A cell on row 0 is its own inextendible chain."""
        assert [c.cells for c in chains_through(build_grid(3, 3), (1, 0))] == [((1, 0),)]

    def test_cone_cut_traps_singleton(self):
        """With all immediate predecessors removed, (2,2) starts its only chain."""
        G = scenario("CONE_CUT").grid
        assert past_inextendible(G, (2, 2))
        assert [c.cells for c in chains_through(G, (2, 2))] == [((2, 2),)]

    def test_chron_excludes_lightlike_pairs(self):
        """Chronological links stay strictly inside the cone, so sideways moves span two rows."""
        G = build_grid(5, 3)
        causal = list(chains_through(G, (2, 2), ChainMode.CAUSAL))
        chron = list(chains_through(G, (2, 2), ChainMode.CHRON))
        assert len(causal) == 9
        assert [c.cells for c in chron] == [
            ((1, 0), (2, 2)),
            ((2, 0), (2, 1), (2, 2)),
            ((3, 0), (2, 2)),
        ]
        assert len(list(chains_through(G, (2, 2), ChainMode.CHRON, inextendible=False))) == 5

    def test_chron_chain_links_are_timelike(self):
        """Every consecutive pair of a chronological chain is strictly inside the cone."""
        G = build_grid(5, 3)
        for chain in chains_through(G, (2, 2), ChainMode.CHRON, inextendible=False):
            for lower, upper in zip(chain.cells, chain.cells[1:]):
                assert abs(upper[0] - lower[0]) < upper[1] - lower[1]

    def test_validate_chain(self):
        """Links must climb inside the cone; chronological links inside the open cone."""
        G = build_grid(5, 3)
        assert validate_chain(G, [(0, 0), (1, 1), (2, 2)], "causal").format() == "((0,0),(1,1),(2,2))"
        with pytest.raises(PathError, match="not a causal link") as excinfo:
            validate_chain(G, [(0, 0), (2, 1)], "causal")
        assert excinfo.value.index == 1
        with pytest.raises(PathError, match="not a chronological link") as excinfo:
            validate_chain(G, [(0, 0), (1, 1), (2, 2)], "chron")
        assert excinfo.value.index == 1

    def test_lightlike_pair_is_not_chronological(self):
        """A single diagonal step is lightlike: causal but not chronological."""
        G = build_grid(3, 2)
        assert validate_chain(G, [(0, 0), (1, 1)], "causal").route == ((0, 0), (1, 1))
        with pytest.raises(PathError) as excinfo:
            validate_chain(G, [(0, 0), (1, 1)], "chron")
        assert excinfo.value.index == 1

    def test_chron_link_spans_rows(self):
        """A timelike link may skip rows; its trace climbs one row per step."""
        chain = validate_chain(build_grid(3, 3), [(0, 0), (1, 2)], "chron")
        assert chain.cells == ((0, 0), (1, 2))
        assert chain.route == ((0, 0), (0, 1), (1, 2))
        assert chain.meets({(0, 1)})

    def test_holes_block_long_links(self):
        """A link whose every walk crosses a hole is rejected."""
        G = scenario("CONE_CUT").grid
        with pytest.raises(PathError, match="Holes block") as excinfo:
            validate_chain(G, [(2, 0), (2, 2)], "chron")
        assert excinfo.value.index == 1

    def test_unknown_cell(self):
        with pytest.raises(SpaceDefinitionError, match="not a cell"):
            next(chains_through(build_grid(2, 2), (5, 5)))


class TestChainCover:
    """Test chain_cover_minus."""

    def test_row_covers_row(self):
        """Row 0 covers row 2: every chain descends into row 0."""
        G = build_grid(5, 3)
        for mode in ("causal", "chron"):
            assert chain_cover_minus(G, G.row(0), G.row(2), mode).covered

    def test_region_covers_itself(self):
        G = build_grid(5, 3)
        U = {(1, 1), (2, 2)}
        assert chain_cover_minus(G, U, U).covered

    def test_gap_in_row_zero(self):
        """Without (2,0) a chain from (2,0) reaches (2,2) in both modes."""
        G = build_grid(5, 3)
        A = G.row(0) - {(2, 0)}
        witnesses = {"causal": ((2, 0), (1, 1), (2, 2)), "chron": ((2, 0), (2, 2))}
        for mode, cells in witnesses.items():
            verdict = chain_cover_minus(G, A, {(2, 2)}, mode)
            assert not verdict.covered
            assert verdict.witness.cells == cells
            assert verdict.witness.route == ((2, 0), (1, 1), (2, 2))
            assert not verdict.witness.meets(A)
        assert chain_cover_minus(G, A, {(2, 2)}, "chron").to_dict()["route"] == ["(2,0)", "(1,1)", "(2,2)"]

    def test_lightlike_escape_is_caught_by_chron(self):
        """From (0,0) only a lightlike chain reaches (2,2) around {(1,0),(2,0),(3,0)}."""
        G = build_grid(5, 3)
        A = {(1, 0), (2, 0), (3, 0)}
        assert not chain_cover_minus(G, A, {(2, 2)}, "causal").covered
        assert chain_cover_minus(G, A, {(2, 2)}, "chron").covered

    def test_region_outside_past(self):
        """A must lie in the causal past of U."""
        G = build_grid(5, 3)
        verdict = chain_cover_minus(G, {(0, 2)}, {(4, 2)})
        assert not verdict.covered
        assert verdict.witness is None
        assert "(0,2)" in verdict.reason

    def test_inextendible_cover_on_cone_cut(self):
        """Row 0 covers (2,2) by bounded chains but not by inextendible ones."""
        sc = scenario("CONE_CUT")
        assert chain_cover_minus(sc.grid, sc.region, sc.target).covered
        verdict = chain_cover_minus(sc.grid, sc.region, sc.target, inextendible=True)
        assert not verdict.covered
        assert verdict.to_dict()["witness"] == ["(2,2)"]


class TestDomains:
    """Test the five domains and their inclusions."""

    def test_single_cell_region(self):
        """{(2,0)} determines only itself: chains through (1,1) end at (1,0)."""
        G = build_grid(5, 3)
        report = domains_all(G, {(2, 0)}, selection=CHAIN_DOMAINS)
        assert report.domains["inext_causal"] == {(2, 0)}
        assert "localic" not in report.domains

    @pytest.mark.parametrize(
        "name", ["MINKOWSKI_PLAIN", "POINT_REMOVED", "CONE_CUT", "CURVE_REMOVED_FROM_A", "REGION_REMOVED"]
    )
    def test_scenario_fragments(self, name):
        """Domain sizes and strict pairs match the scenario's expectation."""
        sc = scenario(name)
        report = domains_all(sc.grid, sc.region)
        sizes = {d: len(cells) for d, cells in report.domains.items()}
        assert sizes == sc.expected["sizes"]
        strict = [[i.left, i.right, cell_label(i.witness)] for i in report.strict_pairs]
        assert strict == sc.expected["strict"]
        assert report.violations == []
        assert report.undecided == []

    def test_curve_removed_matches_localic(self):
        """A one-cell gap in A is threaded by chains; only the outer top cells join A."""
        sc = scenario("CURVE_REMOVED_FROM_A")
        report = domains_all(sc.grid, sc.region)
        expected = sc.region | {(0, 2), (4, 2)}
        assert all(cells == expected for cells in report.domains.values())

    def test_cone_cut_strict_witness(self):
        """(2,2) is bounded-covered but escapes through its trapped singleton chain."""
        sc = scenario("CONE_CUT")
        report = domains_all(sc.grid, sc.region, selection=CHAIN_DOMAINS)
        entry = report.inclusion("inext_causal", "bounded_causal")
        assert entry.holds and entry.strict
        assert entry.witness == (2, 2)
        assert not report.inclusion("bounded_causal", "inext_causal").holds

    def test_empty_region(self):
        """The empty region determines nothing."""
        G = build_grid(4, 3)
        report = domains_all(G, set(), selection=CHAIN_DOMAINS)
        assert all(not cells for cells in report.domains.values())

    def test_unit_and_monotone(self, rng):
        """A ⊆ D(A) and A ⊆ B ⇒ D(A) ⊆ D(B) for the chain domains on random regions."""
        G = build_grid(4, 3, holes=[(1, 1)])
        cells = list(G.cells)
        for _ in range(30):
            small = {c for c in cells if rng.random() < 0.3}
            large = small | {c for c in cells if rng.random() < 0.3}
            first = domains_all(G, small, selection=CHAIN_DOMAINS)
            second = domains_all(G, large, selection=CHAIN_DOMAINS)
            for name in CHAIN_DOMAINS:
                assert small <= first.domains[name], name
                assert first.domains[name] <= second.domains[name], name
            assert first.violations == []

    def test_unknown_domain_name(self):
        with pytest.raises(ValueError, match="Unknown domain"):
            domains_all(build_grid(2, 2), set(), selection=["sideways"])

    def test_localic_unavailable_on_two_slopes(self):
        """The localic column needs parallel cones."""
        sc = scenario("TWO_SLOPES(1,2)")
        report = domains_all(sc.grid, sc.region)
        assert report.domains["localic"] is None
        assert "slopes differ" in report.unavailable["localic"]
        assert {d: len(c) for d, c in report.domains.items() if c is not None} == sc.expected["sizes"]
        with pytest.raises(CapacityError, match="not parallel"):
            localic_domain(sc.grid, sc.region)

    def test_localic_unavailable_on_large_grid(self):
        G = build_grid(9, 8)
        report = domains_all(G, G.row(0))
        assert report.domains["localic"] is None
        assert "capacity" in report.unavailable["localic"]
        assert len(report.domains["bounded_chron"]) == 72

    def test_inclusions_list_expected_pairs(self):
        """Every expected pair appears in the matrix when all five columns exist."""
        sc = scenario("MINKOWSKI_PLAIN")
        report = domains_all(sc.grid, sc.region)
        assert len(report.inclusions) == 20
        assert {(i.left, i.right) for i in report.inclusions if i.expected} == set(EXPECTED_INCLUSIONS)


class TestLocalicCrossValidation:
    """Test the localic column against the table-based domain of dependence."""

    @pytest.mark.parametrize("region, expected", [([(0, 0)], [(0, 0)]), ([(0, 0), (1, 0)], None)])
    def test_matches_dependence_tables(self, region, expected):
        """Both computations agree on GRID(2,2) with the rectangle basis."""
        G = build_grid(2, 2)
        coverage = FromOrderedLocale(G.locale, CoverageConfig(basis=G.rectangles(), keep_certificates=False))
        tabled = G.cells_of(domain_of_dependence(coverage).plus[G.mask(region)])
        column = localic_domain(G, region)
        assert column.undecided == []
        assert column.cells == tabled
        assert column.cells == (frozenset(expected) if expected is not None else frozenset(G.cells))

    def test_worker_count_does_not_change_column(self):
        sc = scenario("CONE_CUT")
        assert localic_domain(sc.grid, sc.region, workers=1).cells == localic_domain(sc.grid, sc.region, workers=4).cells


class TestScenarios:
    """Test the scenario library."""

    def test_two_slopes_parallel(self):
        """Different slopes break parallel orderedness; equal slopes keep it."""
        assert scenario("TWO_SLOPES(1,2)").grid.parallel_report().status is AxiomStatus.VIOLATED
        assert scenario("TWO_SLOPES(1,1)").grid.parallel_report().status is AxiomStatus.HOLDS
        assert scenario("TWO_SLOPES(1,2)").expected["parallel"] == "violated"

    def test_names_are_normalized(self):
        assert scenario("cone-cut").name == "CONE_CUT"
        assert scenario("TWO_SLOPES( 2 , 3 )").grid.height == 4

    def test_unknown_scenario(self):
        with pytest.raises(SpaceDefinitionError, match="Unknown scenario"):
            scenario("FLAT_TORUS")

    def test_slope_range(self):
        with pytest.raises(SpaceDefinitionError, match="1..8"):
            scenario("TWO_SLOPES(1,9)")


class TestGridDocument:
    """Test the grid JSON model."""

    def test_parse_and_build(self):
        doc = GridDocument.model_validate(
            {"kind": "grid", "width": 3, "height": 2, "holes": [[1, 1]], "regions": {"A": [[0, 0]]}}
        )
        G = doc.to_grid()
        assert len(G.cells) == 5
        assert doc.region("A") == {(0, 0)}
        assert doc.region("U") == frozenset()

    def test_rejects_hole_outside(self):
        with pytest.raises(ValidationError, match="outside"):
            GridDocument.model_validate({"width": 2, "height": 2, "holes": [[2, 0]]})

    def test_rejects_region_on_hole(self):
        with pytest.raises(ValidationError, match="not a cell"):
            GridDocument.model_validate({"width": 2, "height": 2, "holes": [[0, 0]], "regions": {"A": [[0, 0]]}})

    def test_from_grid(self):
        sc = scenario("CONE_CUT")
        doc = GridDocument.from_grid(sc.grid, sc.regions())
        assert doc.to_grid() == sc.grid
        assert doc.regions["U"] == [(2, 2)]


class TestRender:
    """Test the ASCII and SVG pictures."""

    def test_ascii_minkowski(self):
        sc = scenario("MINKOWSKI_PLAIN")
        report = domains_all(sc.grid, sc.region)
        assert render_ascii(sc.grid, sc.region, report) == "55555\n55555\nAAAAA\n"

    def test_ascii_cone_cut(self):
        """The trapped cell lies in three of the five domains."""
        sc = scenario("CONE_CUT")
        report = domains_all(sc.grid, sc.region)
        assert render_ascii(sc.grid, sc.region, report) == "55355\n5###5\nAAAAA\n"

    def test_ascii_without_report(self):
        assert render_ascii(build_grid(2, 2, holes=[(1, 1)])) == ".#\n..\n"

    def test_svg(self):
        sc = scenario("POINT_REMOVED")
        svg = render_svg(sc.grid, sc.region, sc.target)
        assert svg.startswith("<svg")
        assert svg.count("<rect") == 15 + 1
        assert svg.count("stroke-dasharray") == 2
        assert "<title>POINT_REMOVED</title>" in svg
