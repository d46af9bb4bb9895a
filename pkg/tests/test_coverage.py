"""Tests for causal coverage decisions and their certificates."""

import pytest

from ordered_locale_lab.coverage import (
    PROPERTIES,
    ChainSearcher,
    CoverageConfig,
    CoverageEngine,
    Outcome,
    canonical_interleave,
    cov_minus,
    cov_plus,
    enumerate_paths,
    find_local_past_refinement,
    minimal_antichain,
    verify_cov_properties,
)
from ordered_locale_lab.errors import SpaceDefinitionError
from ordered_locale_lab.locales import LOCALES, equality3, upper3
from ordered_locale_lab.paths import inhabits, make_path, refines, restrict_past


def m(L, labels):
    """Mask of a label string, e.g. m(L, "ab")."""
    return L.space.mask(list(labels))


def path(L, *groups):
    return make_path(L, [m(L, g) for g in groups])


class TestEnumeratePaths:
    """Test bounded target-path enumeration."""

    def test_all_opens_into_c(self, chain3_locale):
        """Length ≤ 2 into {c}: ({c}) first, then one 2-step path per open."""
        cfg = CoverageConfig(max_target_path_len=2).resolve(chain3_locale)
        formatted = [p.format() for p in enumerate_paths(chain3_locale, cfg, m(chain3_locale, "c"))]
        assert formatted[:3] == ["({c})", "({a},{c})", "({b},{c})"]
        assert "({a,b},{c})" in formatted
        assert len(formatted) == 8

    def test_singleton_basis(self, chain3_locale):
        """Singleton steps give exactly four paths."""
        basis = tuple(1 << i for i in range(3))
        cfg = CoverageConfig(basis=basis, max_target_path_len=2).resolve(chain3_locale)
        formatted = [p.format() for p in enumerate_paths(chain3_locale, cfg, m(chain3_locale, "c"))]
        assert formatted == ["({c})", "({a},{c})", "({b},{c})", "({c},{c})"]

    def test_empty_region(self, chain3_locale):
        """Nothing lands in ∅."""
        cfg = CoverageConfig().resolve(chain3_locale)
        assert list(enumerate_paths(chain3_locale, cfg, 0)) == []

    def test_budget_sets_truncated(self, chain3_locale):
        """A budget of three paths cuts the stream."""
        cfg = CoverageConfig(max_target_path_len=2, budget=3).resolve(chain3_locale)
        stream = enumerate_paths(chain3_locale, cfg, m(chain3_locale, "c"))
        assert len(list(stream)) == 3
        assert stream.truncated is True


class TestCoverageConfig:
    """Test bound resolution."""

    def test_defaults_follow_frame(self, chain3_locale):
        """Seven nonempty opens: target length 14, refinement bound (N+2)·8."""
        cfg = CoverageConfig().resolve(chain3_locale)
        assert len(cfg.universe) == 7
        assert cfg.max_target_path_len == 14
        assert cfg.refinement_bound(2) == 24

    def test_bounds_report_resolved_values(self, chain3_locale):
        """Unset bounds are reported as the numbers the search uses."""
        assert CoverageConfig().resolve(chain3_locale).bounds() == {
            "universe_size": 7,
            "max_target_path_len": 14,
            "max_refinement_len": 120,
        }
        explicit = CoverageConfig(max_target_path_len=3, max_refinement_len=9).resolve(chain3_locale)
        assert explicit.bounds() == {"universe_size": 7, "max_target_path_len": 3, "max_refinement_len": 9}

    def test_basis_must_be_open(self, star_locale):
        """{s,z} is not open in STAR."""
        with pytest.raises(ValueError, match="not an open"):
            CoverageConfig(basis=(m(star_locale, "sz"),)).resolve(star_locale)

    def test_bounds_positive(self):
        """Zero-length bounds are rejected."""
        with pytest.raises(ValueError):
            CoverageConfig(max_target_path_len=0)


class TestRefinementSearch:
    """Test chains and local past refinements."""

    def test_minimal_antichain(self):
        """Supersets and duplicates drop out."""
        assert minimal_antichain([0b011, 0b001, 0b110, 0b001]) == (0b001, 0b110)

    def test_chain_cache(self, chain3_locale):
        """A repeated chain query is a cache hit."""
        L = chain3_locale
        searcher = ChainSearcher(L, CoverageConfig().resolve(L).universe)
        reqs = (m(L, "a"), m(L, "b"))
        first = searcher.chain(m(L, "c"), reqs)
        assert searcher.chain(m(L, "c"), reqs) == first
        assert [L.format(s) for s in first] == ["{a}", "{b}", "{c}"]
        assert searcher.metrics.refinement_cache_hits == 1
        assert searcher.metrics.refinement_cache_misses == 1

    def test_chain3_interleaves_a(self, chain3_locale):
        """({b},{c}) refines to ({a},{b},{c}) inside {a}."""
        L = chain3_locale
        cfg = CoverageConfig().resolve(L)
        search = find_local_past_refinement(path(L, "b", "c"), m(L, "a"), cfg)
        assert search.found
        family = search.family
        assert [member.path.format() for member in family.members] == ["({a},{b},{c})"]
        assert family.replay()

    def test_vee_has_no_refinement(self, vee_locale):
        """{x} and {y} are ⊴-incomparable, so ({y},{z}) cannot reach {x}."""
        L = vee_locale
        cfg = CoverageConfig().resolve(L)
        search = find_local_past_refinement(path(L, "y", "z"), m(L, "x"), cfg)
        assert not search.found
        assert search.inconclusive is False

    def test_inhabiting_path_refines_itself(self, chain3_locale):
        """A path already inside A is its own family."""
        L = chain3_locale
        p = path(L, "a", "b")
        search = find_local_past_refinement(p, m(L, "ab"), CoverageConfig().resolve(L))
        assert search.family.method == "self"
        assert search.family.members[0].path == p

    def test_search_without_interleave(self, chain3_locale):
        """Chain search alone finds a family that replays."""
        L = chain3_locale
        cfg = CoverageConfig(use_interleave=False).resolve(L)
        search = find_local_past_refinement(path(L, "bc", "c"), m(L, "a"), cfg)
        assert search.family.method == "search"
        assert search.family.replay()
        for member in search.family.members:
            assert inhabits(member.path, m(L, "a"))
            assert refines(member.path, restrict_past(search.family.target, member.endpoint)) is not None


class TestCanonicalInterleave:
    """Test the canonical interleaving."""

    def test_chain3_middle_step(self, chain3_locale):
        """({a},{c}) with A={b} at k=0 gives ({a},{b},{c})."""
        L = chain3_locale
        q = canonical_interleave(path(L, "a", "c"), m(L, "b"), 0)
        assert q.format() == "({a},{b},{c})"

    def test_before_first_step(self, chain3_locale):
        """k = -1 inserts A ∧ ⇓p_0 in front."""
        L = chain3_locale
        q = canonical_interleave(path(L, "b", "c"), m(L, "a"), -1)
        assert q.format() == "({a},{b},{c})"

    def test_disjoint_region_is_absent(self, vee_locale):
        """{y} misses the cones around ({x},{z}) for every split."""
        L = vee_locale
        p = path(L, "x", "z")
        assert all(canonical_interleave(p, m(L, "y"), k) is None for k in (-1, 0))

    def test_split_index_range(self, chain3_locale):
        """k must leave a step on each side."""
        L = chain3_locale
        with pytest.raises(ValueError, match="outside"):
            canonical_interleave(path(L, "a", "c"), m(L, "b"), 1)


class TestCovMinus:
    """Test Cov⁻ membership."""

    def test_equality_means_equal(self):
        """On the equality order A covers U exactly when A = U."""
        L = equality3()
        engine = CoverageEngine(L)
        opens = [u for u in L.frame if u]
        for u in opens:
            for a in opens:
                verdict = engine.cov_minus(a, u)
                assert verdict.covered is (a == u), (L.format(a), L.format(u))
                assert verdict.decided

    def test_equality_saturates(self):
        """Constant paths repeat their state after one step."""
        L = equality3()
        verdict = cov_minus(L, m(L, "ab"), m(L, "ab"))
        assert verdict.saturated is True
        assert verdict.covered_up_to == 1

    def test_past_cone_covers(self, chain3_locale):
        """⇓{c} ∈ Cov⁻({c})."""
        L = chain3_locale
        c = m(L, "c")
        assert cov_minus(L, L.cone_down(c), c).outcome is Outcome.COVERED

    def test_vee_witness(self, vee_locale):
        """{x} does not cover {z}: ({y},{z}) escapes."""
        L = vee_locale
        verdict = cov_minus(L, m(L, "x"), m(L, "z"))
        assert verdict.outcome is Outcome.NOT_COVERED
        assert verdict.witness.format() == "({y},{z})"
        replay = find_local_past_refinement(verdict.witness, m(L, "x"), CoverageConfig().resolve(L))
        assert not replay.found

    def test_region_outside_past_cone(self, vee_locale):
        """{x} ⋢ ⇓{y} fails before any path is explored."""
        L = vee_locale
        verdict = cov_minus(L, m(L, "x"), m(L, "y"))
        assert verdict.outcome is Outcome.NOT_COVERED
        assert verdict.witness is None
        assert "⋢" in verdict.reason
        assert verdict.metrics.states_explored == 0

    def test_certificates_replay(self, chain3_locale):
        """Every certificate of {a} ∈ Cov⁻({c}) re-validates."""
        L = chain3_locale
        verdict = cov_minus(L, m(L, "a"), m(L, "c"))
        assert verdict.covered
        assert verdict.certificates
        assert verdict.certificates[0].method == "interleave"
        assert all(family.replay() for family in verdict.certificates)

    def test_certificates_optional(self, chain3_locale):
        """keep_certificates=False leaves the list empty."""
        L = chain3_locale
        verdict = cov_minus(L, m(L, "a"), m(L, "c"), CoverageConfig(keep_certificates=False))
        assert verdict.covered
        assert verdict.certificates == []

    def test_short_bound_is_not_saturated(self, vee_locale):
        """One-step targets all refine; the verdict only holds up to length 1."""
        L = vee_locale
        verdict = cov_minus(L, m(L, "x"), m(L, "z"), CoverageConfig(max_target_path_len=1))
        assert verdict.outcome is Outcome.COVERED
        assert verdict.saturated is False
        assert verdict.covered_up_to == 1

    def test_longer_bound_never_recovers(self, vee_locale):
        """Once NotCovered, raising the target bound keeps it NotCovered."""
        L = vee_locale
        outcomes = [
            cov_minus(L, m(L, "x"), m(L, "z"), CoverageConfig(max_target_path_len=n)).outcome
            for n in range(1, 5)
        ]
        first = outcomes.index(Outcome.NOT_COVERED)
        assert all(o is Outcome.NOT_COVERED for o in outcomes[first:])

    def test_budget_gives_unknown(self, chain3_locale):
        """A one-state budget stops at the second layer."""
        L = chain3_locale
        verdict = cov_minus(L, m(L, "a"), m(L, "c"), CoverageConfig(budget=1))
        assert verdict.outcome is Outcome.UNKNOWN
        assert "budget" in verdict.reason
        assert verdict.metrics.truncated is True
        assert verdict.bounds["max_refinement_len"] == 120

    def test_empty_target(self, chain3_locale):
        """Cov⁻(∅) contains ∅ and nothing else."""
        L = chain3_locale
        assert cov_minus(L, 0, 0).covered
        assert cov_minus(L, m(L, "a"), 0).outcome is Outcome.NOT_COVERED

    def test_non_open_region_rejected(self, star_locale):
        """Regions must be opens of the frame."""
        L = star_locale
        with pytest.raises(SpaceDefinitionError, match="not an open"):
            cov_minus(L, m(L, "sz"), m(L, "mzp"))

    def test_verdicts_are_cached(self, vee_locale):
        """The engine answers a repeated question from its cache."""
        engine = CoverageEngine(vee_locale)
        x, z = m(vee_locale, "x"), m(vee_locale, "z")
        assert engine.cov_minus(x, z) is engine.cov_minus(x, z)

    def test_to_dict(self, vee_locale):
        """The witness serializes as label lists; metrics are opt-in."""
        L = vee_locale
        data = cov_minus(L, m(L, "x"), m(L, "z")).to_dict()
        assert data["outcome"] == "not_covered"
        assert data["witness"] == [["y"], ["z"]]
        assert "metrics" not in data


class TestCovPlus:
    """Test Cov⁺ via the opposite locale."""

    def test_top_covers_bottom_from_above(self, chain3_locale):
        """{c} ∈ Cov⁺({a}) mirrors {a} ∈ Cov⁻({c})."""
        L = chain3_locale
        verdict = cov_plus(L, m(L, "c"), m(L, "a"))
        assert verdict.covered
        assert verdict.direction == "future"

    def test_vee_future_is_not_mirrored(self, vee_locale):
        """{z} is above both {x} and {y}, so it covers {x} from above."""
        L = vee_locale
        assert cov_plus(L, m(L, "z"), m(L, "x")).covered

    def test_future_cone_covers(self, vee_locale):
        """⇑U ∈ Cov⁺(U)."""
        L = vee_locale
        y = m(L, "y")
        assert cov_plus(L, L.cone_up(y), y).covered


class TestCovProperties:
    """Test the coverage property suite."""

    @pytest.mark.parametrize("name", ["CHAIN3", "VEE", "EQUALITY3"])
    def test_every_property_on_parallel_frames(self, name):
        """On parallel ordered frames with (c-∨) every property holds, decided exactly."""
        report = verify_cov_properties(LOCALES[name]())
        assert report.holds
        for prop in PROPERTIES:
            result = report.results[prop]
            assert result.holds, (prop, result.violations)
            assert result.unknown == 0, prop
            assert result.instances > 0, prop

    @pytest.mark.parametrize("name", ["STAR", "LVFAIL", "UPPER3"])
    def test_no_unknowns_on_remaining_frames(self, name):
        """On the remaining library frames every decision is exact; reflexivity and cones hold."""
        report = verify_cov_properties(LOCALES[name]())
        assert all(report.results[prop].unknown == 0 for prop in PROPERTIES)
        assert report.results["reflexive"].holds
        assert report.results["cone"].holds

    def test_upper_order_breaks_empty_target(self):
        """⇓∅ is the full set under the upper order, so every region past-covers ∅ vacuously."""
        result = verify_cov_properties(upper3()).results["empty"]
        assert not result.holds
        assert result.violation_count == 7
        assert {v["direction"] for v in result.violations} == {"past"}

    def test_report_to_dict(self, chain3_locale):
        """Properties serialize in declaration order."""
        data = verify_cov_properties(chain3_locale).to_dict()
        assert [p["name"] for p in data["properties"]][:3] == ["reflexive", "cone", "transitive"]
