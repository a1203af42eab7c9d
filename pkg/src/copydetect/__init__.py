"""Photodetection boosted by trees of entangling quantum copiers.

Exact outcome distributions, Shannon mutual information and effective
detector efficiency for a complete binary tree of noisy copiers feeding
noisy photodetectors.
"""

from .cascade import (
    CapabilityError,
    ConditionalOutcomeDistribution,
    SchemeConfig,
    classical_copier_count_prob,
    conditional_distributions,
    monte_carlo_distribution,
    monte_carlo_patterns,
    perfect_copier_count_prob,
    perfect_copier_no_photon_posterior,
    subtree_outcome_distribution,
    total_variation,
)
from .information import (
    DomainError,
    InformationResult,
    baseline_mutual_information,
    closed_form_effective_efficiency,
    effective_efficiency,
    effective_efficiency_limit,
    evaluate,
    improvement_threshold,
    mutual_information,
)
from .model import (
    CopierParams,
    DetectorParams,
    DiagonalQubitState,
    PairDistribution,
    PovmElement,
    TwoQubitPureState,
    cnot_apply,
    copier_channel,
    copier_failure_state,
    detector_povm,
    outcome_probability,
)

__version__ = "0.1.0"
