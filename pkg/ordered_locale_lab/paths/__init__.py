"""Localic paths: validation, refinement, concatenation and restriction."""

from ordered_locale_lab.paths.lemmas import (
    LEMMAS,
    LemmaResult,
    PathLemmaReport,
    check_path_lemmas,
    satisfies_side_condition,
)
from ordered_locale_lab.paths.path import (
    Path,
    RefinementWitness,
    concat,
    inhabiting_index,
    inhabits,
    iter_paths,
    lands_in,
    make_path,
    normalize,
    refines,
    step_universe,
)
from ordered_locale_lab.paths.restriction import restrict_future, restrict_past

__all__ = [
    "LEMMAS",
    "LemmaResult",
    "Path",
    "PathLemmaReport",
    "RefinementWitness",
    "check_path_lemmas",
    "concat",
    "inhabiting_index",
    "inhabits",
    "iter_paths",
    "lands_in",
    "make_path",
    "normalize",
    "refines",
    "restrict_future",
    "restrict_past",
    "satisfies_side_condition",
    "step_universe",
]
