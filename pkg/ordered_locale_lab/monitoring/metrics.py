"""Search metrics dataclasses.

Provides dataclasses for tracking:
- Coverage search effort (states, paths, refinement cache behaviour)
- Exhaustive check effort (tuples evaluated per axiom)

Usage:
    from ordered_locale_lab.monitoring.metrics import SearchMetrics

    sm = SearchMetrics(states_explored=40, refinement_cache_hits=30, refinement_cache_misses=10)
    print(f"Hit rate: {sm.cache_hit_rate}%")  # 75.0%
"""

from dataclasses import asdict, dataclass, field


@dataclass
class SearchMetrics:
    """Effort spent by one coverage decision.

    Attributes:
        states_explored: Distinct suffix states visited
        paths_enumerated: Target paths represented by the explored layers
        layers: Path lengths explored
        refinement_queries: Chain searches requested
        refinement_cache_hits: Chain searches answered from cache
        refinement_cache_misses: Chain searches actually run
        truncated: True when a budget stopped the search
    """

    states_explored: int = 0
    paths_enumerated: int = 0
    layers: int = 0
    refinement_queries: int = 0
    refinement_cache_hits: int = 0
    refinement_cache_misses: int = 0
    truncated: bool = False

    @property
    def cache_hit_rate(self) -> float:
        """Refinement cache hit rate as percentage (0.0 when no queries ran)."""
        total = self.refinement_cache_hits + self.refinement_cache_misses
        return round(self.refinement_cache_hits / total * 100, 1) if total > 0 else 0.0

    def merge(self, other: "SearchMetrics") -> None:
        """Accumulate another decision's counters into this one."""
        self.states_explored += other.states_explored
        self.paths_enumerated += other.paths_enumerated
        self.layers = max(self.layers, other.layers)
        self.refinement_queries += other.refinement_queries
        self.refinement_cache_hits += other.refinement_cache_hits
        self.refinement_cache_misses += other.refinement_cache_misses
        self.truncated = self.truncated or other.truncated

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        data = asdict(self)
        data["cache_hit_rate"] = self.cache_hit_rate
        return data


@dataclass
class CheckMetrics:
    """Tuples evaluated by an exhaustive check, keyed by check name."""

    evaluated: dict[str, int] = field(default_factory=dict)

    def record(self, name: str, count: int) -> None:
        self.evaluated[name] = self.evaluated.get(name, 0) + count

    @property
    def total(self) -> int:
        return sum(self.evaluated.values())

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        return {"evaluated": dict(sorted(self.evaluated.items())), "total": self.total}
