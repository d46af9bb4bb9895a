"""Causal coverage: Cov⁻/Cov⁺ membership with replayable certificates."""

from ordered_locale_lab.coverage.config import CoverageConfig, ResolvedCoverageConfig, basis_of
from ordered_locale_lab.coverage.engine import CoverageEngine, SuffixState, cov_minus, cov_plus
from ordered_locale_lab.coverage.enumeration import PathStream, enumerate_paths
from ordered_locale_lab.coverage.interleave import canonical_interleave
from ordered_locale_lab.coverage.properties import (
    PROPERTIES,
    CovPropertyReport,
    PropertyResult,
    verify_cov_properties,
)
from ordered_locale_lab.coverage.refinement import ChainSearcher, find_local_past_refinement, minimal_antichain
from ordered_locale_lab.coverage.verdict import (
    CoverageVerdict,
    FamilyMember,
    LocalRefinementFamily,
    Outcome,
    RefinementSearch,
)

__all__ = [
    "CoverageConfig",
    "ResolvedCoverageConfig",
    "basis_of",
    "CoverageEngine",
    "SuffixState",
    "cov_minus",
    "cov_plus",
    "PathStream",
    "enumerate_paths",
    "canonical_interleave",
    "PROPERTIES",
    "CovPropertyReport",
    "PropertyResult",
    "verify_cov_properties",
    "ChainSearcher",
    "find_local_past_refinement",
    "minimal_antichain",
    "CoverageVerdict",
    "FamilyMember",
    "LocalRefinementFamily",
    "Outcome",
    "RefinementSearch",
]
