"""Search bounds for coverage decisions."""

from collections.abc import Sequence
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict, Field

from ordered_locale_lab.config import get_settings
from ordered_locale_lab.locales.ordered_locale import OrderedLocale
from ordered_locale_lab.paths.path import step_universe
from ordered_locale_lab.space.bitmask import Mask


class CoverageConfig(BaseModel):
    """User-facing coverage bounds; unset fields derive from the frame.

    Attributes:
        basis: Explicit step universe (opens of the frame); None means every open
        max_target_path_len: Longest target path explored (default 2·|universe|)
        max_refinement_len: Longest refinement searched (default (N+2)·(|universe|+1)
            for a target path with N+1 steps)
        budget: Suffix states explored per target region (default OLAB_BUDGET)
        keep_certificates: Attach a refinement family per explored state to Covered verdicts
        use_interleave: Try the canonical interleaving before the exhaustive chain search
    """

    model_config = ConfigDict(frozen=True)

    basis: tuple[int, ...] | None = None
    max_target_path_len: int | None = Field(default=None, ge=1)
    max_refinement_len: int | None = Field(default=None, ge=1)
    budget: int | None = Field(default=None, ge=1)
    keep_certificates: bool = True
    use_interleave: bool = True

    def resolve(self, L: OrderedLocale) -> "ResolvedCoverageConfig":
        """Bind the bounds to a locale.

        Raises:
            ValueError: If a basis member is not an open of L's frame
        """
        if self.basis is not None:
            for u in self.basis:
                if not L.is_open(u):
                    raise ValueError(f"Basis member {L.format(u)} is not an open of '{L.name}'")
        universe = step_universe(L, self.basis)
        return ResolvedCoverageConfig(
            universe=universe,
            all_opens=self.basis is None,
            max_target_path_len=self.max_target_path_len or max(1, 2 * len(universe)),
            max_refinement_len=self.max_refinement_len,
            budget=self.budget or get_settings().budget,
            keep_certificates=self.keep_certificates,
            use_interleave=self.use_interleave,
        )


@dataclass(frozen=True)
class ResolvedCoverageConfig:
    """CoverageConfig bound to one locale's step universe."""

    universe: tuple[Mask, ...]
    all_opens: bool
    max_target_path_len: int
    max_refinement_len: int | None
    budget: int
    keep_certificates: bool = True
    use_interleave: bool = True

    def refinement_bound(self, target_len: int) -> int:
        """Refinement length allowed for a target path with target_len steps."""
        if self.max_refinement_len is not None:
            return self.max_refinement_len
        return (target_len + 1) * (len(self.universe) + 1)

    def bounds(self) -> dict:
        """Effective bounds; the refinement bound is the one for the longest target path."""
        return {
            "universe_size": len(self.universe),
            "max_target_path_len": self.max_target_path_len,
            "max_refinement_len": self.refinement_bound(self.max_target_path_len),
        }


def basis_of(L: OrderedLocale, kind: str, extra: Sequence[Mask] = ()) -> tuple[Mask, ...] | None:
    """Named step universes: "all" (None), "singletons", or an explicit list."""
    if kind == "all":
        return None
    if kind == "singletons":
        return tuple(1 << i for i in range(L.space.n) if L.is_open(1 << i))
    return tuple(extra)
