import math

import numpy as np
import pytest

from suprematrix import qubit, qutrit
from suprematrix.geometry import triangle_inequality_holds, triangle_sides
from suprematrix.matrix_core import unitarity_residual
from suprematrix.sampling import (
    SEED_ENV_VAR,
    SeededGenerator,
    sample_ball_probabilities,
    sample_density_matrix,
    sample_kraus_channel,
    sample_pure_state,
    sample_unitary,
)

# mean purity of the square Ginibre ensemble: (N + K) / (NK + 1) with K = N
GINIBRE_PURITY = {2: 0.8, 3: 0.6}


@pytest.mark.parametrize("dim", [2, 3])
def test_density_samples_are_states(g, dim):
    rho = sample_density_matrix(g, dim, size=2000)
    np.testing.assert_allclose(np.trace(rho, axis1=1, axis2=2), 1.0, atol=1e-14)
    np.testing.assert_array_equal(rho, np.conj(np.swapaxes(rho, 1, 2)))
    assert np.linalg.eigvalsh(rho).min() >= 0.0


def test_fixed_seed_deterministic():
    a = sample_density_matrix(SeededGenerator(42), 3, size=5)
    b = sample_density_matrix(SeededGenerator(42), 3, size=5)
    np.testing.assert_array_equal(a, b)
    c = sample_density_matrix(SeededGenerator(43), 3, size=5)
    assert not np.array_equal(a, c)


def test_frozen_first_draw():
    # PCG64 stream is fixed by numpy's stability guarantee for Generator methods
    v = SeededGenerator(0).rng.random(2)
    np.testing.assert_array_equal(v, np.random.Generator(np.random.PCG64(0)).random(2))


@pytest.mark.parametrize("dim", [2, 3])
def test_ensemble_mean_is_maximally_mixed(dim):
    rho = sample_density_matrix(SeededGenerator(11), dim, size=10_000)
    np.testing.assert_allclose(rho.mean(0), np.eye(dim) / dim, atol=0.05)


@pytest.mark.parametrize("dim", [2, 3])
def test_ensemble_purity(dim):
    rho = sample_density_matrix(SeededGenerator(12), dim, size=20_000)
    mean = np.trace(rho @ rho, axis1=1, axis2=2).real.mean()
    assert mean == pytest.approx(GINIBRE_PURITY[dim], abs=0.01)


def test_samples_pass_quantumness_report(g):
    pi = qutrit.probabilities_from_density(sample_density_matrix(g, 3, size=300))
    for row in pi:
        assert qutrit.quantumness_report(row).verdict


def test_ball_samples(g):
    p = sample_ball_probabilities(g, size=100_000)
    assert p.shape == (100_000, 3)
    assert np.all(qubit.ball_check(p).valid)
    assert np.all(triangle_inequality_holds(triangle_sides(p)))
    assert g.ball_accepted == 100_000
    assert g.ball_acceptance_rate == pytest.approx(math.pi / 6, abs=0.01)


def test_ball_single_and_reproducible():
    a = sample_ball_probabilities(SeededGenerator(3))
    assert a.shape == (3,)
    np.testing.assert_array_equal(
        sample_ball_probabilities(SeededGenerator(3), size=50),
        sample_ball_probabilities(SeededGenerator(3), size=50),
    )


@pytest.mark.parametrize("dim", [2, 3])
def test_unitaries(g, dim):
    u = sample_unitary(g, dim, size=5000)
    assert max(unitarity_residual(x) for x in u[:500]) < 1e-12
    np.testing.assert_allclose(np.abs(np.linalg.det(u)), 1.0, atol=1e-12)
    np.testing.assert_allclose(u.mean(0), 0.0, atol=0.05)


def test_pure_states(g):
    rho = sample_pure_state(g, 3, size=100)
    np.testing.assert_allclose(np.einsum("nij,nji->n", rho, rho).real, 1.0, atol=1e-12)


def test_kraus_channel_complete(g):
    ch = sample_kraus_channel(g, 4)
    assert len(ch.operators) == 4
    with pytest.raises(ValueError):
        sample_kraus_channel(g, 0)


def test_from_env(monkeypatch):
    monkeypatch.setenv(SEED_ENV_VAR, "99")
    assert SeededGenerator.from_env().seed == 99


def test_bad_seed():
    with pytest.raises(ValueError):
        SeededGenerator(-1)
