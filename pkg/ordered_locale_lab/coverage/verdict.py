"""Coverage verdicts and their certificates."""

from dataclasses import dataclass, field
from enum import Enum

from ordered_locale_lab.locales.ordered_locale import OrderedLocale
from ordered_locale_lab.monitoring import SearchMetrics
from ordered_locale_lab.paths.path import Path, RefinementWitness, inhabits, make_path, refines
from ordered_locale_lab.paths.restriction import restrict_past
from ordered_locale_lab.space.bitmask import Mask


class Outcome(str, Enum):
    COVERED = "covered"
    NOT_COVERED = "not_covered"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class FamilyMember:
    """One refinement q of p|_W with q_⊤ = W."""

    path: Path
    endpoint: Mask
    witness: RefinementWitness


@dataclass(frozen=True)
class LocalRefinementFamily:
    """A local past refinement of target, each member inhabiting region.

    Attributes:
        target: The refined path p
        region: The region A every member inhabits
        members: Refinements whose endpoints join to p_⊤
        method: "self", "interleave" or "search"
    """

    target: Path
    region: Mask
    members: tuple[FamilyMember, ...]
    method: str = "search"

    def replay(self) -> bool:
        """Re-validate every member through the paths module."""
        joined = 0
        for member in self.members:
            q = make_path(self.target.locale, member.path.steps)
            if q.end != member.endpoint or not inhabits(q, self.region):
                return False
            restricted = restrict_past(self.target, member.endpoint)
            if refines(q, restricted) is None or not member.witness.holds(q, restricted):
                return False
            joined |= member.endpoint
        return joined == self.target.end

    def to_dict(self) -> dict:
        L = self.target.locale
        return {
            "path": self.target.labels(),
            "method": self.method,
            "members": [
                {
                    "endpoint": L.space.labels(m.endpoint),
                    "refinement": m.path.labels(),
                    "assignment": list(m.witness.assignment),
                }
                for m in self.members
            ],
        }


@dataclass(frozen=True)
class RefinementSearch:
    """Result of find_local_past_refinement.

    Attributes:
        family: The family found, or None
        inconclusive: True when the refinement-length bound cut the search short
    """

    family: LocalRefinementFamily | None
    inconclusive: bool = False

    @property
    def found(self) -> bool:
        return self.family is not None


@dataclass
class CoverageVerdict:
    """Outcome of one Cov± membership question.

    Attributes:
        direction: "past" (cov_minus) or "future" (cov_plus)
        region: The covering region (A or B)
        target: The covered region U
        outcome: covered / not_covered / unknown
        saturated: Covered verdicts hold for every path length, not just up to the bound
        covered_up_to: Longest target path checked
        reason: Short explanation (failed cone inclusion, exceeded bound, …)
        witness: Target path with no local refinement (NotCovered)
        certificates: One refinement family per explored suffix state (Covered)
        locale: Locale the paths live in (the opposite locale for future verdicts)
        bounds: Bounds used, for replaying the search
        metrics: Search effort
    """

    direction: str
    region: Mask
    target: Mask
    outcome: Outcome
    locale: OrderedLocale
    saturated: bool = False
    covered_up_to: int = 0
    reason: str = ""
    witness: Path | None = None
    certificates: list[LocalRefinementFamily] = field(default_factory=list)
    bounds: dict = field(default_factory=dict)
    metrics: SearchMetrics = field(default_factory=SearchMetrics)

    @property
    def covered(self) -> bool:
        return self.outcome is Outcome.COVERED

    @property
    def decided(self) -> bool:
        return self.outcome is not Outcome.UNKNOWN

    def to_dict(self, include_metrics: bool = False) -> dict:
        """Convert to dictionary for JSON serialization.

        Metrics depend on cache timing under several workers, so they are opt-in.
        """
        fmt = self.locale.space.labels
        data = {
            "direction": self.direction,
            "region": fmt(self.region),
            "target": fmt(self.target),
            "outcome": self.outcome.value,
            "saturated": self.saturated,
            "covered_up_to": self.covered_up_to,
            "reason": self.reason,
            "witness": None if self.witness is None else self.witness.labels(),
            "certificates": [c.to_dict() for c in self.certificates],
            "bounds": self.bounds,
        }
        if include_metrics:
            data["metrics"] = self.metrics.to_dict()
        return data
