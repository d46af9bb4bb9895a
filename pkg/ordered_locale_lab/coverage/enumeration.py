"""Bounded enumeration of target paths."""

from collections.abc import Iterator

from ordered_locale_lab.coverage.config import ResolvedCoverageConfig
from ordered_locale_lab.locales.ordered_locale import OrderedLocale
from ordered_locale_lab.paths.path import Path, iter_paths
from ordered_locale_lab.space.bitmask import Mask


class PathStream:
    """Paths landing in a region, cut off after cfg.budget paths.

    Iterate once; afterwards `truncated` tells whether the budget stopped the
    stream before it ran dry.

    Example:
        >>> stream = enumerate_paths(L, cfg, c)
        >>> [p.format() for p in stream]
        ['({c})', '({a},{c})', '({b},{c})', '({c},{c})']
        >>> stream.truncated
        False
    """

    def __init__(self, L: OrderedLocale, cfg: ResolvedCoverageConfig, ends_in: Mask):
        self.locale = L
        self.cfg = cfg
        self.ends_in = ends_in
        self.truncated = False
        self.emitted = 0

    def __iter__(self) -> Iterator[Path]:
        if not self.ends_in:
            return
        paths = iter_paths(self.locale, self.cfg.universe, self.cfg.max_target_path_len, self.ends_in)
        for path in paths:
            if self.emitted >= self.cfg.budget:
                self.truncated = True
                return
            self.emitted += 1
            yield path


def enumerate_paths(L: OrderedLocale, cfg: ResolvedCoverageConfig, ends_in: Mask) -> PathStream:
    """Every path over the step universe of length ≤ cfg.max_target_path_len landing in ends_in."""
    return PathStream(L, cfg, ends_in)
