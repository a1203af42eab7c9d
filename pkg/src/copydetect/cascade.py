"""Trees of copiers feeding leaf detectors.

A scheme of depth ``N`` is a complete binary tree: the input enters a copier,
each of its two outputs (including noise emitted on failure) enters a copier
of the next level, and so on; only the ``2**N`` leaves are measured.  Copier
failures are independent across the tree.

Outcome patterns are encoded as integers.  Bit ``k`` holds the result of the
``k``-th leaf counted left to right (1 = count), so the left subtree always
occupies the low-order bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .model import (
    CopierParams,
    DetectorParams,
    DiagonalQubitState,
    copier_channel,
    copier_failure_state,
    detector_povm,
    outcome_probability,
)

#: Deepest tree whose full pattern distribution is materialized (2**16 entries).
MAX_EXACT_LEVELS = 4
#: Deepest tree accepted at all (Monte Carlo only beyond MAX_EXACT_LEVELS).
MAX_LEVELS = 5

_MC_CHUNK = 1 << 16


class CapabilityError(ValueError):
    """Requested tree depth exceeds what the computation supports."""


@dataclass(frozen=True)
class SchemeConfig:
    """Tree depth ``levels`` and prior photon probability ``prior_p``."""

    levels: int = 1
    prior_p: float = 0.5

    def __post_init__(self) -> None:
        if int(self.levels) != self.levels or self.levels < 0:
            raise ValueError(f"levels must be a non-negative integer, got {self.levels!r}")
        if self.levels > MAX_LEVELS:
            raise CapabilityError(f"levels must be <= {MAX_LEVELS}, got {self.levels}")
        p = float(self.prior_p)
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"prior_p must lie in [0, 1], got {p!r}")
        object.__setattr__(self, "levels", int(self.levels))
        object.__setattr__(self, "prior_p", p)

    @property
    def n_leaves(self) -> int:
        return 1 << self.levels

    @property
    def n_patterns(self) -> int:
        return 1 << self.n_leaves


@dataclass(frozen=True)
class ConditionalOutcomeDistribution:
    """Pattern distributions conditioned on vacuum and on photon input."""

    given_vacuum: np.ndarray
    given_photon: np.ndarray

    def rows(self) -> np.ndarray:
        """Stack as ``[vacuum, photon]`` rows."""
        return np.vstack((self.given_vacuum, self.given_photon))


def pattern_bits(index: int, n_leaves: int) -> str:
    """Render a pattern index as leaf outcomes, leftmost leaf first."""
    return "".join("1" if (index >> k) & 1 else "0" for k in range(n_leaves))


def _check_exact_depth(depth: int) -> None:
    if depth < 0:
        raise ValueError(f"depth must be non-negative, got {depth}")
    if depth > MAX_EXACT_LEVELS:
        raise CapabilityError(
            f"exact distributions are limited to depth {MAX_EXACT_LEVELS} "
            f"(2**{1 << depth} patterns requested)"
        )


@lru_cache(maxsize=256)
def _subtree(input_bit: int, depth: int, c: CopierParams, d: DetectorParams) -> np.ndarray:
    if depth == 0:
        plus, _ = detector_povm(d)
        p_count = outcome_probability(DiagonalQubitState(float(input_bit)), plus)
        out = np.array([1.0 - p_count, p_count])
    else:
        pair = copier_channel(input_bit, c).as_array()
        out = kernels.combine_children(
            pair, _subtree(0, depth - 1, c, d), _subtree(1, depth - 1, c, d)
        )
    out.setflags(write=False)
    return out


def subtree_outcome_distribution(
    input_bit: int, depth: int, c: CopierParams, d: DetectorParams
) -> np.ndarray:
    """Exact distribution over the ``2**(2**depth)`` leaf patterns of a subtree.

    Parameters
    ----------
    input_bit : {0, 1}
        State entering the subtree root (1 = photon).
    depth : int
        Number of copier levels below the root; 0 means a bare detector.
    c, d : CopierParams, DetectorParams
        Parameters shared by every copier and every leaf detector.

    Returns
    -------
    numpy.ndarray
        Read-only probability vector indexed by pattern (see module docs).
    """
    if input_bit not in (0, 1):
        raise ValueError(f"input_bit must be 0 or 1, got {input_bit!r}")
    _check_exact_depth(depth)
    return _subtree(int(input_bit), int(depth), c, d)


def conditional_distributions(
    cfg: SchemeConfig, c: CopierParams, d: DetectorParams
) -> ConditionalOutcomeDistribution:
    return ConditionalOutcomeDistribution(
        given_vacuum=subtree_outcome_distribution(0, cfg.levels, c, d),
        given_photon=subtree_outcome_distribution(1, cfg.levels, c, d),
    )


def _sampler_inputs(c: CopierParams, d: DetectorParams) -> tuple[np.ndarray, np.ndarray]:
    fail_cdf = np.cumsum(copier_failure_state(c.mu).as_array().ravel())
    plus, _ = detector_povm(d)
    return fail_cdf, np.array([plus.a0, plus.a1])


def monte_carlo_patterns(
    input_bit: int,
    depth: int,
    c: CopierParams,
    d: DetectorParams,
    trials: int,
    seed: int,
) -> np.ndarray:
    """Sample ``trials`` outcome-pattern indices from the stochastic tree.

    Uniform draws come from ``numpy.random.default_rng(seed)`` in fixed-size
    chunks, so the result depends only on the arguments, not on the kernel
    backend.
    """
    if input_bit not in (0, 1):
        raise ValueError(f"input_bit must be 0 or 1, got {input_bit!r}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if not 0 <= depth <= MAX_LEVELS:
        raise CapabilityError(f"depth must lie in [0, {MAX_LEVELS}], got {depth}")
    fail_cdf, leaf_plus = _sampler_inputs(c, d)
    n_leaves = 1 << depth
    n_uniforms = 2 * (n_leaves - 1) + n_leaves
    rng = np.random.default_rng(seed)
    out = np.empty(trials, dtype=np.uint64)
    for start in range(0, trials, _MC_CHUNK):
        m = min(_MC_CHUNK, trials - start)
        u = rng.random((m, n_uniforms))
        out[start : start + m] = kernels.sample_patterns(
            int(input_bit), int(depth), c.eps, fail_cdf, leaf_plus, u
        )
    return out


def monte_carlo_distribution(
    input_bit: int,
    depth: int,
    c: CopierParams,
    d: DetectorParams,
    trials: int,
    seed: int,
) -> np.ndarray:
    """Empirical pattern distribution from :func:`monte_carlo_patterns`."""
    _check_exact_depth(depth)
    patterns = monte_carlo_patterns(input_bit, depth, c, d, trials, seed)
    counts = np.bincount(patterns.astype(np.int64), minlength=1 << (1 << depth))
    return counts / trials


def total_variation(p: np.ndarray, q: np.ndarray) -> float:
    return 0.5 * float(np.abs(np.asarray(p) - np.asarray(q)).sum())


def fluctuation_bound(depth: int, trials: int) -> float:
    """Loose tolerance on the TV distance of an empirical pattern distribution."""
    return 5.0 * math.sqrt((1 << (1 << depth)) / trials)


# Reference formulas for a single perfect copier and noiseless detectors.


def perfect_copier_count_prob(eta: float) -> float:
    """P(at least one count | photon) behind one perfect quantum copier."""
    return eta + (1.0 - eta) * eta


def perfect_copier_no_photon_posterior(eta: float, p: float) -> float:
    """P(no photon | no count) behind one perfect quantum copier."""
    denom = 1.0 - eta * p * (2.0 - eta)
    if denom < 1e-15:
        raise ZeroDivisionError("posterior undefined: a count is certain (eta = p = 1)")
    return (1.0 - p) / denom


def classical_copier_count_prob(eta: float) -> float:
    """Count probability when the copier itself must first detect the photon."""
    return eta * eta * (2.0 - eta)
