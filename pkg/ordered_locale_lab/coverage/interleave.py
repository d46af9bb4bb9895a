"""Canonical interleaving: splice a step inside A into a path.

Split p between p_k and p_{k+1} and insert W″ = A ∧ ⇑p_k ∧ ⇓p_{k+1}. The head
p_0…p_k is restricted to p_k ∧ ⇓W″ and the tail p_{k+1}…p_N to p_{k+1} ∧ ⇑W″,
so the spliced path is head, W″, tail. With k = -1 the new step goes before
p_0 and W″ = A ∧ ⇓p_0.
"""

from ordered_locale_lab.errors import PathError, RestrictionError
from ordered_locale_lab.paths.path import Path, make_path
from ordered_locale_lab.paths.restriction import restrict_future, restrict_past
from ordered_locale_lab.space.bitmask import Mask


def _segment(p: Path, start: int, stop: int) -> Path:
    return Path(steps=p.steps[start:stop], locale=p.locale)


def _splice(p: Path, steps: tuple[Mask, ...]) -> Path:
    try:
        return make_path(p.locale, steps)
    except PathError as exc:
        raise RestrictionError(f"{exc}: the locale is not parallel ordered", index=exc.index) from exc


def _nonempty(region: Mask, what: str) -> Mask:
    if not region:
        raise RestrictionError(f"Interleaving {what} is empty: the locale is not parallel ordered")
    return region


def canonical_interleave(p: Path, region: Mask, k: int) -> Path | None:
    """Interleave a step inside region between p_k and p_{k+1}.

    Args:
        p: Path to refine
        region: The region A the inserted step lies in
        k: Split index, -1 ≤ k < len(p) - 1

    Returns:
        The spliced path, or None when W″ is empty

    Raises:
        ValueError: k out of range
        RestrictionError: A restricted segment came out empty (the locale is
            not parallel ordered)

    Example:
        >>> canonical_interleave(make_path(L, [a, c]), b, 0).format()
        '({a},{b},{c})'
    """
    L = p.locale
    if not -1 <= k < len(p) - 1:
        raise ValueError(f"Split index {k} outside -1..{len(p) - 2}")
    if k == -1:
        middle = region & L.cone_down(p.start)
        if not middle:
            return None
        tail = restrict_future(p, _nonempty(p.start & L.cone_up(middle), "tail start"))
        return _splice(p, (middle,) + tail.steps)

    middle = region & L.cone_up(p[k]) & L.cone_down(p[k + 1])
    if not middle:
        return None
    head = restrict_past(_segment(p, 0, k + 1), _nonempty(p[k] & L.cone_down(middle), "head end"))
    tail = restrict_future(_segment(p, k + 1, len(p)), _nonempty(p[k + 1] & L.cone_up(middle), "tail start"))
    return _splice(p, head.steps + (middle,) + tail.steps)
