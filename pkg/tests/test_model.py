import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from copydetect.model import (
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
    entangle_superposition,
    outcome_probability,
)

probs = st.floats(0.0, 1.0)
mus = st.floats(-1.0, 1.0)


def pair(dist):
    return (dist.q00, dist.q01, dist.q10, dist.q11)


@pytest.mark.parametrize(
    "eta, xi, plus, minus",
    [
        (0.6, 0.0, (0.0, 0.6), (1.0, 0.4)),
        (1.0, 0.0, (0.0, 1.0), (1.0, 0.0)),
        (0.5, 0.2, (0.1, 0.5), (0.9, 0.5)),
    ],
)
def test_detector_povm(eta, xi, plus, minus):
    p, m = detector_povm(DetectorParams(eta, xi))
    assert (p.a0, p.a1) == pytest.approx(plus, abs=1e-15)
    assert (m.a0, m.a1) == pytest.approx(minus, abs=1e-15)


@given(probs, probs)
def test_povm_completeness(eta, xi):
    p, m = detector_povm(DetectorParams(eta, xi))
    assert p.a0 + m.a0 == 1.0
    assert p.a1 + m.a1 == 1.0


@pytest.mark.parametrize(
    "p1, eta, xi, expected",
    [(1.0, 0.6, 0.0, 0.6), (0.0, 0.6, 0.0, 0.0), (0.5, 0.6, 0.5, 0.45)],
)
def test_outcome_probability(p1, eta, xi, expected):
    plus, _ = detector_povm(DetectorParams(eta, xi))
    assert outcome_probability(DiagonalQubitState(p1), plus) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize(
    "mu, expected",
    [
        (0.0, (0.25, 0.25, 0.25, 0.25)),
        (-1.0, (1.0, 0.0, 0.0, 0.0)),
        (0.5, (0.125, 0.125, 0.125, 0.625)),
        (1.0, (0.0, 0.0, 0.0, 1.0)),
    ],
)
def test_copier_failure_state(mu, expected):
    assert pair(copier_failure_state(mu)) == pytest.approx(expected, abs=1e-15)


def test_failure_state_continuous_at_zero():
    lo = pair(copier_failure_state(-1e-15))
    hi = pair(copier_failure_state(1e-15))
    assert max(abs(a - b) for a, b in zip(lo, hi)) < 1e-14


@given(mus)
def test_failure_state_symmetric(mu):
    q = copier_failure_state(mu)
    assert q.q01 == q.q10


@pytest.mark.parametrize(
    "bit, eps, mu, expected",
    [
        (1, 1.0, -1.0, (0.0, 0.0, 0.0, 1.0)),
        (1, 1.0, 0.7, (0.0, 0.0, 0.0, 1.0)),
        (1, 0.8, -1.0, (0.2, 0.0, 0.0, 0.8)),
        (0, 0.8, 0.0, (0.85, 0.05, 0.05, 0.05)),
    ],
)
def test_copier_channel(bit, eps, mu, expected):
    assert pair(copier_channel(bit, CopierParams(eps, mu))) == pytest.approx(expected, abs=1e-15)


@given(st.sampled_from([0, 1]), probs, mus)
def test_channel_normalized(bit, eps, mu):
    assert abs(sum(pair(copier_channel(bit, CopierParams(eps, mu)))) - 1.0) < 1e-12


def test_copier_channel_rejects_bad_bit():
    with pytest.raises(ValueError):
        copier_channel(2, CopierParams(0.5))


@pytest.mark.parametrize(
    "factory",
    [
        lambda: DetectorParams(1.2),
        lambda: DetectorParams(0.5, -0.1),
        lambda: CopierParams(-0.01),
        lambda: CopierParams(0.5, 1.5),
        lambda: PovmElement(0.5, 1.1),
        lambda: DiagonalQubitState(float("nan")),
        lambda: PairDistribution(0.5, 0.5, 0.5, 0.0),
        lambda: TwoQubitPureState(1, 1, 0, 0),
    ],
)
def test_invalid_construction(factory):
    with pytest.raises(ValueError):
        factory()


def test_tolerant_construction():
    q = PairDistribution(0.25, 0.25, 0.25, 0.25 + 5e-13)
    assert sum(pair(q)) == pytest.approx(1.0, abs=1e-15)
    assert DetectorParams(1.0 + 1e-13).eta == 1.0
    assert DetectorParams(0.5, 1.0).xi == 1.0


def basis(k):
    amps = [0, 0, 0, 0]
    amps[k] = 1
    return TwoQubitPureState(*amps)


@pytest.mark.parametrize("k_in, k_out", [(0, 0), (1, 1), (2, 3), (3, 2)])
def test_cnot_basis(k_in, k_out):
    assert cnot_apply(basis(k_in)) == basis(k_out)


def test_cnot_entangles_superposition():
    r = 1 / math.sqrt(2)
    out = entangle_superposition()
    assert np.allclose(out.amplitudes, (r, 0, 0, r), atol=1e-15, rtol=0)


def test_cnot_involution_random_states():
    rng = np.random.default_rng(7)
    for _ in range(100):
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        v /= np.linalg.norm(v)
        s = TwoQubitPureState(*v)
        back = cnot_apply(cnot_apply(s))
        assert np.max(np.abs(np.subtract(back.amplitudes, s.amplitudes))) < 1e-12
