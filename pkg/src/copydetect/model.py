"""Elementary physics of the detection scheme.

Every state and operator the detection pipeline touches is diagonal in the
photon-number basis {|0>, |1>}, so detectors, single-qubit inputs and copier
outputs are stored as probability weights rather than density matrices.  The
one coherent object, the ideal controlled-NOT copier acting on a
superposition, gets its own pure-state type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: Absolute tolerance used when validating probabilities.
PROB_TOL = 1e-12


def _check_prob(name: str, value: float) -> float:
    value = float(value)
    if not (-PROB_TOL <= value <= 1.0 + PROB_TOL) or math.isnan(value):
        raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
    return min(max(value, 0.0), 1.0)


@dataclass(frozen=True)
class DetectorParams:
    """Leaf photodetector: quantum efficiency ``eta`` and noise parameter ``xi``.

    The dark-count probability is ``eta * xi``.  ``xi = 1`` is accepted.
    """

    eta: float
    xi: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "eta", _check_prob("eta", self.eta))
        object.__setattr__(self, "xi", _check_prob("xi", self.xi))


@dataclass(frozen=True)
class CopierParams:
    """One copier: success probability ``eps`` and failure shape ``mu``."""

    eps: float
    mu: float = -1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "eps", _check_prob("eps", self.eps))
        mu = float(self.mu)
        if not (-1.0 - PROB_TOL <= mu <= 1.0 + PROB_TOL) or math.isnan(mu):
            raise ValueError(f"mu must lie in [-1, 1], got {mu!r}")
        object.__setattr__(self, "mu", min(max(mu, -1.0), 1.0))


@dataclass(frozen=True)
class PovmElement:
    """Diagonal POVM element ``a0 |0><0| + a1 |1><1|``."""

    a0: float
    a1: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "a0", _check_prob("a0", self.a0))
        object.__setattr__(self, "a1", _check_prob("a1", self.a1))


@dataclass(frozen=True)
class DiagonalQubitState:
    """Qubit state diagonal in the photon-number basis; ``p1`` is P(photon)."""

    p1: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "p1", _check_prob("p1", self.p1))

    @property
    def p0(self) -> float:
        return 1.0 - self.p1


@dataclass(frozen=True)
class PairDistribution:
    """Diagonal two-qubit state as probabilities of ``|copy1 copy2>``.

    Entries are renormalized when their sum misses 1 by less than
    :data:`PROB_TOL` and rejected otherwise.
    """

    q00: float
    q01: float
    q10: float
    q11: float

    def __post_init__(self) -> None:
        vals = [_check_prob(f"q{k:02b}", v) for k, v in enumerate(self._raw())]
        total = sum(vals)
        if abs(total - 1.0) > PROB_TOL:
            raise ValueError(f"pair distribution sums to {total!r}, not 1")
        for name, v in zip(("q00", "q01", "q10", "q11"), vals):
            object.__setattr__(self, name, v / total)

    def _raw(self) -> tuple[float, float, float, float]:
        return (self.q00, self.q01, self.q10, self.q11)

    def as_array(self) -> np.ndarray:
        """Return a 2x2 array indexed ``[copy1, copy2]``."""
        return np.array([[self.q00, self.q01], [self.q10, self.q11]], dtype=np.float64)


@dataclass(frozen=True)
class TwoQubitPureState:
    """Pure two-qubit state with amplitudes on ``|00>, |01>, |10>, |11>``."""

    c00: complex
    c01: complex
    c10: complex
    c11: complex

    def __post_init__(self) -> None:
        norm = sum(abs(complex(c)) ** 2 for c in self.amplitudes)
        if abs(norm - 1.0) > PROB_TOL:
            raise ValueError(f"state is not normalized (norm^2 = {norm!r})")
        for name in ("c00", "c01", "c10", "c11"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    @property
    def amplitudes(self) -> tuple[complex, complex, complex, complex]:
        return (self.c00, self.c01, self.c10, self.c11)

    @classmethod
    def product(cls, first: tuple[complex, complex], second: tuple[complex, complex]) -> TwoQubitPureState:
        """Tensor product of two single-qubit amplitude pairs ``(c0, c1)``."""
        a0, a1 = first
        b0, b1 = second
        return cls(a0 * b0, a0 * b1, a1 * b0, a1 * b1)


def detector_povm(d: DetectorParams) -> tuple[PovmElement, PovmElement]:
    """Return the (count, no-count) POVM elements of a noisy detector."""
    dark = d.eta * d.xi
    plus = PovmElement(a0=dark, a1=d.eta)
    minus = PovmElement(a0=1.0 - dark, a1=1.0 - d.eta)
    return plus, minus


def outcome_probability(state: DiagonalQubitState, element: PovmElement) -> float:
    """Born-rule probability ``Tr[rho A]`` for diagonal ``rho`` and ``A``."""
    return state.p1 * element.a1 + state.p0 * element.a0


def copier_failure_state(mu: float) -> PairDistribution:
    """Two-copy state emitted when the copier fails.

    ``mu = -1`` gives vacuum in both copies, ``mu = 0`` the maximally mixed
    state and ``mu = 1`` a photon in both copies; intermediate values mix the
    uniform state with the relevant extreme.
    """
    mu = float(mu)
    if not -1.0 <= mu <= 1.0:
        raise ValueError(f"mu must lie in [-1, 1], got {mu!r}")
    base = (1.0 - abs(mu)) / 4.0
    q00 = base + (abs(mu) if mu <= 0 else 0.0)
    q11 = base + (mu if mu > 0 else 0.0)
    return PairDistribution(q00, base, base, q11)


def copier_channel(input_bit: int, c: CopierParams) -> PairDistribution:
    """Diagonal action of the noisy copier on ``|input_bit>``."""
    if input_bit not in (0, 1):
        raise ValueError(f"input_bit must be 0 or 1, got {input_bit!r}")
    fail = copier_failure_state(c.mu)
    q = [(1.0 - c.eps) * v for v in fail._raw()]
    q[3 if input_bit else 0] += c.eps
    return PairDistribution(*q)


def cnot_apply(s: TwoQubitPureState) -> TwoQubitPureState:
    """Controlled-NOT with the first qubit as control."""
    return TwoQubitPureState(s.c00, s.c01, s.c11, s.c10)


def entangle_superposition() -> TwoQubitPureState:
    """Run ``(|0> + |1>)/sqrt(2)`` with a vacuum dummy through the CNOT copier."""
    r = 1.0 / math.sqrt(2.0)
    return cnot_apply(TwoQubitPureState.product((r, r), (1.0, 0.0)))
