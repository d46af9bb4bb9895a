"""Abstract causal coverages, regions of influence and domains of dependence."""

from ordered_locale_lab.dependence.abstract import (
    SITE_AXIOMS,
    AbstractCoverage,
    ExplicitTable,
    FromOrderedLocale,
    SiteAxiomReport,
    check_causal_site_axioms,
)
from ordered_locale_lab.dependence.influence import (
    DependenceResult,
    InfluenceResult,
    domain_of_dependence,
    influence,
    monad_violations,
)
from ordered_locale_lab.dependence.lemmas import LEMMAS, DependenceLemmaReport, verify_dependence_lemmas
from ordered_locale_lab.dependence.roundtrip import (
    CounterexampleSearch,
    RoundtripReport,
    roundtrip_experiment,
    search_explicit_counterexample,
    two_point_spaces,
)

__all__ = [
    "LEMMAS",
    "SITE_AXIOMS",
    "AbstractCoverage",
    "CounterexampleSearch",
    "DependenceLemmaReport",
    "DependenceResult",
    "ExplicitTable",
    "FromOrderedLocale",
    "InfluenceResult",
    "RoundtripReport",
    "SiteAxiomReport",
    "check_causal_site_axioms",
    "domain_of_dependence",
    "influence",
    "monad_violations",
    "roundtrip_experiment",
    "search_explicit_counterexample",
    "two_point_spaces",
]
