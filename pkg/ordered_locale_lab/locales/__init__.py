"""Ordered locales, their axioms and the lemmas relating them."""

from ordered_locale_lab.locales.axioms import (
    ALL_AXIOMS,
    Axiom,
    AxiomReport,
    AxiomStatus,
    check_axioms,
    replay_violation,
)
from ordered_locale_lab.locales.equivalences import (
    EquivalenceItem,
    EquivalenceReport,
    check_equivalences,
    cones_parallel_witness,
)
from ordered_locale_lab.locales.library import LOCALES, equality3, upper3
from ordered_locale_lab.locales.ordered_locale import (
    OrderedLocale,
    egli_milner_locale,
    equality_locale,
    from_monad_pair,
    point_cone_locale,
    upper_order_locale,
)
from ordered_locale_lab.locales.orders import EgliMilner, MonadPair, OrderSource, UpperOrder

__all__ = [
    "ALL_AXIOMS",
    "Axiom",
    "AxiomReport",
    "AxiomStatus",
    "EgliMilner",
    "EquivalenceItem",
    "EquivalenceReport",
    "LOCALES",
    "MonadPair",
    "OrderSource",
    "OrderedLocale",
    "UpperOrder",
    "check_axioms",
    "check_equivalences",
    "cones_parallel_witness",
    "egli_milner_locale",
    "equality3",
    "equality_locale",
    "from_monad_pair",
    "point_cone_locale",
    "replay_violation",
    "upper3",
    "upper_order_locale",
]
