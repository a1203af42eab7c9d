"""Mutual information and effective detector efficiency."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cascade import ConditionalOutcomeDistribution, SchemeConfig, conditional_distributions
from .model import CopierParams, DetectorParams

BISECTION_WIDTH = 1e-12
BISECTION_MAX_ITER = 200
MI_TOL = 1e-12


class DomainError(ValueError):
    """A mutual-information value no noiseless detector can reproduce."""


@dataclass(frozen=True)
class InformationResult:
    mutual_information_bits: float
    effective_efficiency: float


def binary_entropy(p: float) -> float:
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def mutual_information(priors, cond: ConditionalOutcomeDistribution | np.ndarray) -> float:
    """Shannon mutual information, in bits, between input and outcome.

    Parameters
    ----------
    priors : sequence of float
        ``(P(vacuum), P(photon))``; must sum to 1.
    cond : ConditionalOutcomeDistribution or array_like
        Conditional outcome distributions, one row per input symbol.
    """
    priors = np.asarray(priors, dtype=np.float64)
    if abs(priors.sum() - 1.0) > MI_TOL or np.any(priors < 0):
        raise ValueError(f"priors must be a probability vector, got {priors!r}")
    rows = cond.rows() if isinstance(cond, ConditionalOutcomeDistribution) else np.asarray(cond, dtype=np.float64)
    joint = priors[:, None] * rows
    marginal = joint.sum(axis=0)
    mask = joint > 0
    ratio = rows[mask] / np.broadcast_to(marginal, rows.shape)[mask]
    mi = float(np.sum(joint[mask] * np.log2(ratio)))
    return max(mi, 0.0)


def baseline_mutual_information(eta_e: float, p: float) -> float:
    """Mutual information of a lone noiseless detector of efficiency ``eta_e``.

    The channel is a Z-channel: vacuum never clicks, a photon clicks with
    probability ``eta_e``.  ``I = H(p * eta_e) - p * H(eta_e)``.
    """
    return max(binary_entropy(p * eta_e) - p * binary_entropy(eta_e), 0.0)


def effective_efficiency(target_mi: float, p: float) -> float:
    """Efficiency of a noiseless lone detector carrying ``target_mi`` bits.

    Inverts the strictly increasing :func:`baseline_mutual_information` by
    bisection on ``[0, 1]``.

    Raises
    ------
    DomainError
        If ``target_mi`` is negative or exceeds the ``eta_e = 1`` value by
        more than ``MI_TOL``.
    """
    if not 0.0 < p < 1.0:
        raise DomainError(f"prior p must lie strictly inside (0, 1), got {p!r}")
    ceiling = baseline_mutual_information(1.0, p)
    if target_mi < -MI_TOL or target_mi > ceiling + MI_TOL:
        raise DomainError(
            f"mutual information {target_mi!r} outside [0, {ceiling!r}] attainable at p={p!r}"
        )
    lo, hi = 0.0, 1.0
    for _ in range(BISECTION_MAX_ITER):
        if hi - lo < BISECTION_WIDTH:
            break
        mid = 0.5 * (lo + hi)
        if baseline_mutual_information(mid, p) < target_mi:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def closed_form_effective_efficiency(eps: float, eta: float, levels: int) -> float:
    """Iterate ``x -> eps * (1 - (1 - x)**2)`` ``levels`` times from ``eta``.

    Exact only for noiseless detectors and copiers that emit vacuum on
    failure.
    """
    x = eta
    for _ in range(levels):
        # x * (2 - x) == 1 - (1 - x)**2 without cancellation at small x
        x = eps * x * (2.0 - x)
    return x


def effective_efficiency_limit(eps: float) -> float:
    """Infinite-depth limit of :func:`closed_form_effective_efficiency`.

    For ``eps <= 1/2`` the only fixed point in ``[0, 1]`` is 0, which is
    returned instead of the non-positive ``2 - 1/eps``.
    """
    if eps <= 0.5:
        return 0.0
    return 2.0 - 1.0 / eps


def improvement_threshold(eta: float) -> float:
    """Smallest copier success probability at which one level beats ``eta``."""
    return 1.0 / (2.0 - eta)


def evaluate(cfg: SchemeConfig, c: CopierParams, d: DetectorParams) -> InformationResult:
    """Mutual information and effective efficiency of a full scheme."""
    cond = conditional_distributions(cfg, c, d)
    mi = mutual_information((1.0 - cfg.prior_p, cfg.prior_p), cond)
    return InformationResult(mi, effective_efficiency(mi, cfg.prior_p))
