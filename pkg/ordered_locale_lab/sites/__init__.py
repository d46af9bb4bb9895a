"""Sieves and the Grothendieck topologies induced by causal coverage."""

from ordered_locale_lab.sites.sieve import (
    Sieve,
    canonical_cover_member,
    down_closure,
    make_sieve,
    maximal_sieve,
    pullback,
    pushforward,
    sieves_on,
)
from ordered_locale_lab.sites.topology import (
    GTAxiom,
    GTReport,
    KleisliReport,
    j_minus_member,
    kleisli_counterexample,
    verify_canonical_gt_axioms,
    verify_down_gt_axioms,
)

__all__ = [
    "Sieve",
    "canonical_cover_member",
    "down_closure",
    "make_sieve",
    "maximal_sieve",
    "pullback",
    "pushforward",
    "sieves_on",
    "GTAxiom",
    "GTReport",
    "KleisliReport",
    "j_minus_member",
    "kleisli_counterexample",
    "verify_canonical_gt_axioms",
    "verify_down_gt_axioms",
]
