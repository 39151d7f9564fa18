"""
Seeded random generation of states, unitaries and channels.

All sampling goes through numpy's PCG64 bit generator seeded with a 64-bit
integer, so a seed reproduces the same stream on every platform.
"""

from __future__ import annotations

import os

import numpy as np

from .channels import KrausChannel

SEED_ENV_VAR = "SUPREMATRIX_SEED"
DEFAULT_SEED = 0


class SeededGenerator:
    """PCG64-backed generator with counters for ball rejection sampling.

    Not thread-safe; give each worker its own instance.
    """

    algorithm = "PCG64"

    def __init__(self, seed: int = DEFAULT_SEED):
        seed = int(seed)
        if not 0 <= seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        self.seed = seed
        self.rng = np.random.Generator(np.random.PCG64(seed))
        self.ball_proposals = 0
        self.ball_accepted = 0

    @classmethod
    def from_env(cls, default: int = DEFAULT_SEED) -> "SeededGenerator":
        return cls(int(os.environ.get(SEED_ENV_VAR, default)))

    @property
    def ball_acceptance_rate(self) -> float:
        return self.ball_accepted / self.ball_proposals if self.ball_proposals else float("nan")

    def complex_gaussian(self, shape) -> np.ndarray:
        shape = tuple(np.atleast_1d(shape))
        return self.rng.standard_normal(shape + (2,)) @ np.array([1.0, 1.0j])

    def __repr__(self):
        return f"SeededGenerator(seed={self.seed})"


def _batch_shape(size) -> tuple:
    return () if size is None else tuple(np.atleast_1d(size))


def sample_density_matrix(g: SeededGenerator, dim: int = 3, size=None) -> np.ndarray:
    """Ginibre-ensemble density matrices ``G G^dagger / Tr(G G^dagger)``."""
    if dim not in (2, 3):
        raise ValueError("dim must be 2 or 3")
    shape = _batch_shape(size)
    gin = g.complex_gaussian(shape + (dim, dim))
    rho = gin @ np.conj(np.swapaxes(gin, -1, -2))
    tr = np.trace(rho, axis1=-2, axis2=-1).real
    rho = rho / tr[..., None, None]
    # G G^dagger is Hermitian up to rounding; make it exactly so
    return 0.5 * (rho + np.conj(np.swapaxes(rho, -1, -2)))


def sample_unitary(g: SeededGenerator, dim: int = 3, size=None) -> np.ndarray:
    """Haar unitaries: QR of a complex Gaussian matrix with phase correction."""
    shape = _batch_shape(size)
    z = g.complex_gaussian(shape + (dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    return q * (d / np.abs(d))[..., None, :]


def sample_pure_state(g: SeededGenerator, dim: int = 3, size=None) -> np.ndarray:
    """Rank-one density matrices ``u |0><0| u^dagger`` for Haar ``u``."""
    u = sample_unitary(g, dim, size)
    psi = u[..., :, 0]
    return psi[..., :, None] * np.conj(psi[..., None, :])


def sample_cube_probabilities(g: SeededGenerator, n: int = 3, size=None) -> np.ndarray:
    return g.rng.random(_batch_shape(size) + (n,))


def sample_ball_probabilities(g: SeededGenerator, size=None) -> np.ndarray:
    """Uniform samples of ``sum (p_j - 1/2)^2 <= 1/4`` by rejection from the cube."""
    count = 1 if size is None else int(np.prod(_batch_shape(size)))
    accepted = []
    need = count
    while need > 0:
        batch = g.rng.random((max(2 * need, 16), 3))
        hits = np.flatnonzero(np.sum((batch - 0.5) ** 2, axis=-1) <= 0.25)[:need]
        take = batch[hits]
        # proposals after the last kept sample are discarded, not counted
        g.ball_proposals += int(hits[-1]) + 1 if len(hits) == need else len(batch)
        g.ball_accepted += len(take)
        accepted.append(take)
        need -= len(take)
    out = np.concatenate(accepted)
    return out[0] if size is None else out.reshape(_batch_shape(size) + (3,))


def sample_kraus_channel(g: SeededGenerator, n_operators: int = 3, dim: int = 3) -> KrausChannel:
    """Random channel from a Haar isometry ``C^dim -> C^(dim * n_operators)``."""
    if n_operators < 1:
        raise ValueError("need at least one Kraus operator")
    u = sample_unitary(g, dim * n_operators)
    iso = u[:, :dim]
    return KrausChannel(tuple(iso[k * dim:(k + 1) * dim] for k in range(n_operators)))
