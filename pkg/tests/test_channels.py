import math

import numpy as np
import pytest

from noisygrover.channels import (
    amplitude_damping,
    apply_channel,
    apply_single_qubit,
    damped_state,
    lift,
    make_channel,
    phase_damping,
)
from noisygrover.core import GateParameter
from noisygrover import printed

from conftest import random_density
from oracles import kraus_sum

KETBRA_1 = np.diag([0.0, 1.0]).astype(complex)
PLUS = np.full((2, 2), 0.5, dtype=complex)


@pytest.mark.parametrize("factory", [amplitude_damping, phase_damping])
def test_completeness(factory):
    for p in np.linspace(0, 1, 101):
        assert factory(p).completeness_error() <= 1e-12


@pytest.mark.parametrize("factory", [amplitude_damping, phase_damping])
@pytest.mark.parametrize("p", [-0.1, 1.1, float("nan")])
def test_domain(factory, p):
    with pytest.raises(ValueError):
        factory(p)


def test_unknown_kind():
    with pytest.raises(ValueError):
        make_channel("depolarizing", 0.1)


def test_unknown_target():
    with pytest.raises(ValueError):
        lift(np.eye(2), "both")


def test_amplitude_damping_operators():
    ch = amplitude_damping(0.36)
    np.testing.assert_allclose(ch.operators[0], [[1, 0], [0, 0.8]], atol=1e-15)
    np.testing.assert_allclose(ch.operators[1], [[0, 0.6], [0, 0]], atol=1e-15)
    total = sum(e.conj().T @ e for e in ch.operators)
    np.testing.assert_allclose(total, np.eye(2), atol=1e-15)


def test_amplitude_damping_full_decay():
    out = apply_single_qubit(KETBRA_1, amplitude_damping(1.0))
    np.testing.assert_allclose(out, np.diag([1, 0]), atol=1e-15)


def test_phase_damping_full_dephasing(rng):
    for _ in range(20):
        g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        rho = g @ g.conj().T
        rho /= np.trace(rho)
        out = apply_single_qubit(rho, phase_damping(1.0))
        np.testing.assert_allclose(out, np.diag(np.diagonal(rho)), atol=1e-15)


def test_phase_damping_half_on_plus():
    out = apply_single_qubit(PLUS, phase_damping(0.5))
    np.testing.assert_allclose(np.diagonal(out), [0.5, 0.5], atol=1e-15)
    assert math.isclose(out[0, 1].real, 0.5 * math.sqrt(0.5), rel_tol=1e-14)


@pytest.mark.parametrize("kind", ["amplitude", "phase"])
@pytest.mark.parametrize("target", ["first", "second"])
def test_zero_probability_is_identity(rng, kind, target):
    for _ in range(20):
        rho = random_density(rng)
        assert np.max(np.abs(apply_channel(rho, make_channel(kind, 0.0), target) - rho)) <= 1e-14


def test_amplitude_damped_corner_entry(rng):
    for alpha_sq, p in rng.uniform(0, 1, size=(50, 2)):
        g = GateParameter.from_alpha_sq(alpha_sq)
        rho = damped_state(g, amplitude_damping(p))
        a2, b2 = g.alpha_sq, g.beta ** 2
        assert abs(rho[0, 0] - (a2 ** 2 + p * a2 * b2)) <= 1e-14


def test_amplitude_damped_hadamard_full_decay():
    rho = damped_state(GateParameter(1 / math.sqrt(2)), amplitude_damping(1.0))
    expected = np.zeros((4, 4))
    expected[0, 0] = expected[2, 2] = 0.5
    # the two decay branches carry opposite coherence on the first qubit
    np.testing.assert_allclose(rho, expected, atol=1e-15)


def test_lifted_application_matches_elementwise_sum(rng):
    for kind in ("amplitude", "phase"):
        for target in ("first", "second"):
            ch = make_channel(kind, rng.uniform())
            rho = random_density(rng)
            ops = [lift(e, target) for e in ch.operators]
            np.testing.assert_allclose(apply_channel(rho, ch, target), kraus_sum(rho, ops), atol=1e-14)


def test_physicality_random(rng):
    for _ in range(1000):
        rho = random_density(rng)
        ch = make_channel(("amplitude", "phase")[rng.integers(2)], rng.uniform())
        out = apply_channel(rho, ch, ("first", "second")[rng.integers(2)])
        assert abs(np.trace(out) - 1) <= 1e-12
        assert np.max(np.abs(out - out.conj().T)) <= 1e-12
        assert np.linalg.eigvalsh(out)[0] >= -1e-9


def test_amplitude_damping_composition(rng):
    for _ in range(100):
        p1, p2 = rng.uniform(size=2)
        rho = random_density(rng)
        target = ("first", "second")[rng.integers(2)]
        twice = apply_channel(apply_channel(rho, amplitude_damping(p1), target), amplitude_damping(p2), target)
        once = apply_channel(rho, amplitude_damping(1 - (1 - p1) * (1 - p2)), target)
        assert np.max(np.abs(twice - once)) <= 1e-10


def test_damped_density_against_transcription(rng):
    # every entry except (2,1), which is misprinted as a copy of (1,0)
    for alpha_sq, p in rng.uniform(0, 1, size=(20, 2)):
        g = GateParameter.from_alpha_sq(alpha_sq)
        rho = damped_state(g, amplitude_damping(p))
        ref = printed.amplitude_damped_density(g.alpha, g.beta, p)
        mask = np.ones((4, 4), dtype=bool)
        mask[2, 1] = False
        assert np.max(np.abs(rho.real - ref)[mask]) <= 1e-10
        assert np.max(np.abs(rho.imag)) == 0
        # the true (2,1) entry is the Hermitian partner of (1,2)
        assert abs(rho[2, 1] - rho[1, 2]) <= 1e-15


def test_both_qubits_is_composition(rng):
    rho = random_density(rng)
    ch = phase_damping(0.3)
    both = apply_channel(apply_channel(rho, ch, "first"), ch, "second")
    other_order = apply_channel(apply_channel(rho, ch, "second"), ch, "first")
    np.testing.assert_allclose(both, other_order, atol=1e-14)
