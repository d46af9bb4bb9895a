"""Tests for sieves and the causal Grothendieck topology."""

import pytest

from ordered_locale_lab.coverage import CoverageEngine, Outcome
from ordered_locale_lab.errors import SieveError
from ordered_locale_lab.locales import equality3
from ordered_locale_lab.locales.axioms import AxiomStatus
from ordered_locale_lab.sites import (
    GTAxiom,
    canonical_cover_member,
    down_closure,
    j_minus_member,
    kleisli_counterexample,
    make_sieve,
    maximal_sieve,
    pullback,
    sieves_on,
    verify_canonical_gt_axioms,
    verify_down_gt_axioms,
)
from ordered_locale_lab.space.bitmask import is_subset


def m(space, labels):
    return space.mask(list(labels))


class TestSieves:
    """Test sieve construction and pullback."""

    def test_maximal_sieve(self, chain3_space):
        """t_{a,b} = {∅, {a}, {b}, {a,b}}."""
        s = chain3_space
        sieve = maximal_sieve(s, m(s, "ab"))
        assert sieve.members == frozenset({0, m(s, "a"), m(s, "b"), m(s, "ab")})
        assert sieve.join == m(s, "ab")
        assert sieve.generators == (m(s, "ab"),)

    def test_maximal_sieve_on_empty(self, chain3_space):
        """t_∅ = {∅}."""
        assert maximal_sieve(chain3_space, 0).members == frozenset({0})

    def test_pullback_to_disjoint_open(self, chain3_space):
        """↓{{a}} on {a,b} pulled back to {b} is {∅}."""
        s = chain3_space
        sieve = down_closure(s, m(s, "ab"), [m(s, "a")])
        pulled = pullback(sieve, m(s, "b"))
        assert pulled.members == frozenset({0})
        assert pulled.root == m(s, "b")

    def test_pullback_along_identity(self, chain3_space):
        """h = id leaves the sieve unchanged."""
        s = chain3_space
        sieve = down_closure(s, m(s, "abc"), [m(s, "ab"), m(s, "c")])
        assert pullback(sieve, sieve.root) == sieve

    def test_pullback_of_maximal_is_maximal(self, chain3_space):
        """h*(t_U) = t_V for every V ⊑ U."""
        s = chain3_space
        for u in s.frame:
            for v in s.frame:
                if is_subset(v, u):
                    assert pullback(maximal_sieve(s, u), v) == maximal_sieve(s, v)

    def test_pullback_is_functorial(self, chain3_space):
        """(g∘h)* = h*∘g* on every chain W ⊑ V ⊑ U."""
        s = chain3_space
        for u in s.frame:
            for sieve in sieves_on(s, u):
                for v in s.frame:
                    if not is_subset(v, u):
                        continue
                    for w in s.frame:
                        if is_subset(w, v):
                            assert pullback(pullback(sieve, v), w) == pullback(sieve, w)

    def test_pullback_needs_subregion(self, chain3_space):
        """Pulling back along an open outside the root is an error."""
        s = chain3_space
        with pytest.raises(SieveError, match="outside"):
            pullback(maximal_sieve(s, m(s, "a")), m(s, "b"))

    def test_make_sieve_requires_down_closure(self, chain3_space):
        """{ {a,b} } alone is not a sieve."""
        s = chain3_space
        with pytest.raises(SieveError, match="not down-closed"):
            make_sieve(s, m(s, "ab"), [m(s, "ab")])

    def test_sieve_enumeration(self, chain3_space):
        """Six sieves on a two-point open, twenty on three points."""
        s = chain3_space
        on_ab = sieves_on(s, m(s, "ab"))
        assert len(on_ab) == 6
        assert on_ab[0].members == frozenset()
        assert len(set(on_ab)) == 6
        assert len(sieves_on(s, m(s, "abc"))) == 20

    def test_to_dict_uses_generators(self, chain3_space):
        """Sieves serialize as generator label lists."""
        s = chain3_space
        sieve = down_closure(s, m(s, "abc"), [m(s, "a"), m(s, "b")])
        assert sieve.to_dict(s) == {"root": ["a", "b", "c"], "generators": [["a"], ["b"]]}


class TestCanonicalCover:
    """Test the canonical topology ⋁R = U."""

    def test_maximal_covers(self, chain3_space):
        """(U, t_U) is covering."""
        s = chain3_space
        assert canonical_cover_member(m(s, "ab"), maximal_sieve(s, m(s, "ab")))

    def test_two_points_cover(self, chain3_space):
        """↓{{a},{b}} covers {a,b}; ↓{{a}} does not."""
        s = chain3_space
        ab = m(s, "ab")
        assert canonical_cover_member(ab, down_closure(s, ab, [m(s, "a"), m(s, "b")]))
        assert not canonical_cover_member(ab, down_closure(s, ab, [m(s, "a")]))

    def test_canonical_axioms(self, chain3_space):
        """(i)-(iii) hold for the canonical topology."""
        reports = verify_canonical_gt_axioms(chain3_space)
        assert [r.axiom for r in reports] == [GTAxiom.MAXIMAL, GTAxiom.STABILITY, GTAxiom.TRANSITIVITY]
        assert all(r.holds for r in reports)


class TestDownTopology:
    """Test J⁻ membership and its axioms."""

    def test_a_covers_c(self, chain3_locale):
        """↓{{a}} on ⇓{c} is a covering sieve of {c}."""
        L = chain3_locale
        s = L.space
        engine = CoverageEngine(L)
        c = m(s, "c")
        assert j_minus_member(engine, c, down_closure(s, L.cone_down(c), [m(s, "a")])) is Outcome.COVERED
        assert j_minus_member(engine, c, maximal_sieve(s, L.cone_down(c))) is Outcome.COVERED

    def test_empty_sieve_covers_nothing(self, chain3_locale):
        """{∅} is not covering for a nonempty open."""
        L = chain3_locale
        s = L.space
        c = m(s, "c")
        sieve = down_closure(s, L.cone_down(c), [0])
        assert j_minus_member(CoverageEngine(L), c, sieve) is Outcome.NOT_COVERED

    def test_root_must_be_past_cone(self, chain3_locale):
        """A sieve on U itself is rejected when ⇓U is larger."""
        L = chain3_locale
        s = L.space
        with pytest.raises(SieveError, match="must live on"):
            j_minus_member(CoverageEngine(L), m(s, "c"), maximal_sieve(s, m(s, "c")))

    @pytest.mark.parametrize("fixture", ["chain3_locale", "vee_locale"])
    def test_all_axioms(self, fixture, request):
        """All five axioms hold exhaustively on CHAIN3 and VEE."""
        reports = verify_down_gt_axioms(request.getfixturevalue(fixture))
        assert [r.axiom.value for r in reports] == ["i", "ii", "iii", "i'", "i''"]
        for report in reports:
            assert report.status is AxiomStatus.HOLDS, report.axiom
            assert report.instances > 0

    def test_equality_matches_canonical(self):
        """On the equality order J⁻ is the canonical topology."""
        L = equality3()
        engine = CoverageEngine(L)
        for u in L.frame:
            for sieve in sieves_on(L.space, u):
                expected = canonical_cover_member(u, sieve)
                assert (j_minus_member(engine, u, sieve) is Outcome.COVERED) is expected


class TestKleisli:
    """Test the Kleisli stability counterexample search."""

    def test_chain3_failure(self, chain3_locale):
        """W = {a} lies in the past of {b} but misses ⋁S = {b}."""
        L = chain3_locale
        s = L.space
        report = kleisli_counterexample(L)
        assert report.found
        assert report.target == m(s, "b")
        assert report.sieve.generators == (m(s, "b"),)
        assert report.source == m(s, "a")
        assert report.pulled.join == 0
        assert not CoverageEngine(L).cov_minus(report.pulled.join, report.source).covered

    def test_equality_has_no_failure(self):
        """With ⇓U = U every Kleisli arrow is an inclusion."""
        report = kleisli_counterexample(equality3())
        assert not report.found
        assert report.to_dict(equality3().space)["found"] is False
