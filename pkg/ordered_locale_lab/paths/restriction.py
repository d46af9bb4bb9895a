"""Restriction of a path to a subregion of its endpoint (or start).

    (p|_W)_N = W,   (p|_W)_n = p_n ∧ ⇓(p|_W)_{n+1}
    (p|^V)_0 = V,   (p|^V)_{n+1} = p_{n+1} ∧ ⇑(p|^V)_n

On a parallel ordered locale every step stays nonempty and the result is a
path refining p. Elsewhere the recursion can empty a step or break ⊴; both are
reported as RestrictionError.
"""

from ordered_locale_lab.errors import PathError, RestrictionError
from ordered_locale_lab.paths.path import Path, make_path
from ordered_locale_lab.space.bitmask import Mask, is_subset

_PRECONDITION = "the locale is not parallel ordered"


def _finish(p: Path, steps: list[Mask]) -> Path:
    for i, step in enumerate(steps):
        if not step:
            raise RestrictionError(f"Restricted step {i} is empty: {_PRECONDITION}", index=i)
    try:
        return make_path(p.locale, steps)
    except PathError as exc:
        raise RestrictionError(f"{exc}: {_PRECONDITION}", index=exc.index) from exc


def restrict_past(p: Path, w: Mask) -> Path:
    """p|_W, the restriction of p to W ⊑ p_⊤.

    Raises:
        PathError: W empty or not inside the endpoint
        RestrictionError: A restricted step came out empty or unrelated
    """
    L = p.locale
    if not w:
        raise PathError("Cannot restrict to the empty region")
    if not is_subset(w, p.end) or not L.is_open(w):
        raise PathError(f"{L.format(w)} is not an open inside the endpoint {L.format(p.end)}")
    steps = [w]
    for step in reversed(p.steps[:-1]):
        steps.append(step & L.cone_down(steps[-1]))
    steps.reverse()
    return _finish(p, steps)


def restrict_future(p: Path, v: Mask) -> Path:
    """p|^V, the restriction of p to V ⊑ p_⊥.

    Raises:
        PathError: V empty or not inside the start
        RestrictionError: A restricted step came out empty or unrelated
    """
    L = p.locale
    if not v:
        raise PathError("Cannot restrict to the empty region")
    if not is_subset(v, p.start) or not L.is_open(v):
        raise PathError(f"{L.format(v)} is not an open inside the start {L.format(p.start)}")
    steps = [v]
    for step in p.steps[1:]:
        steps.append(step & L.cone_up(steps[-1]))
    return _finish(p, steps)
