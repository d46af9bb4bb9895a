"""Named ordered locales for tests and the CLI.

The point-order spaces (CHAIN3, VEE, STAR, LVFAIL) are used with their
Egli–Milner order. EQUALITY3 and UPPER3 put other orders on CHAIN3's frame.
"""

from collections.abc import Callable

from ordered_locale_lab.locales.ordered_locale import (
    OrderedLocale,
    egli_milner_locale,
    equality_locale,
    upper_order_locale,
)
from ordered_locale_lab.space.library import SPACES, chain3


def equality3() -> OrderedLocale:
    """CHAIN3's frame with U ⊴ V iff U = V."""
    return equality_locale(chain3(), name="EQUALITY3")


def upper3() -> OrderedLocale:
    """CHAIN3's frame with U ⊴ V iff V ⊆ ↑U; ⇓∅ is the full set."""
    return upper_order_locale(chain3(), name="UPPER3")


def _point_order(name: str) -> Callable[[], OrderedLocale]:
    def build() -> OrderedLocale:
        return egli_milner_locale(SPACES[name]())

    build.__name__ = name.lower()
    return build


LOCALES: dict[str, Callable[[], OrderedLocale]] = {
    **{name: _point_order(name) for name in SPACES},
    "EQUALITY3": equality3,
    "UPPER3": upper3,
}
