"""
Qubit states as three spin-projection probabilities.

``p1``, ``p2`` and ``p3`` are the probabilities of spin projection +1/2
along x, y and z. The density matrix is::

    [[p3,                        (p1 - 1/2) - i (p2 - 1/2)],
     [(p1 - 1/2) + i (p2 - 1/2), 1 - p3                   ]]

Any triple in the unit cube is representable; only triples inside the ball
``sum (p_j - 1/2)^2 <= 1/4`` give positive semidefinite matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .exceptions import ProbabilityRangeError, TraceError
from .matrix_core import SPECTRAL_TOL, check_hermitian, eigenvalues_2

BALL_RADIUS_SQ = 0.25


def check_probabilities(p, n: int | None = None) -> np.ndarray:
    """Validate probability vectors of shape ``(..., n)``.

    Raises ``ProbabilityRangeError`` if any component is outside [0, 1].
    """
    p = np.asarray(p, dtype=float)
    if n is not None and p.shape[-1:] != (n,):
        raise ValueError(f"expected {n} probabilities per state, got shape {p.shape}")
    if not np.all(np.isfinite(p)):
        raise ProbabilityRangeError("probabilities must be finite")
    if np.any(p < 0.0) or np.any(p > 1.0):
        raise ProbabilityRangeError("probabilities must lie in [0, 1]")
    return p


def clip_rounding(p, tol: float = 1e-12) -> np.ndarray:
    """Snap components within ``tol`` outside [0, 1] back onto the boundary.

    Larger excursions are left alone so that range checks still catch them.
    """
    p = np.asarray(p, dtype=float)
    near = (p >= -tol) & (p <= 1.0 + tol)
    return np.where(near, np.clip(p, 0.0, 1.0), p)


@dataclass(frozen=True)
class ProbabilityPair:
    """Two-outcome distribution ``(p, 1 - p)``."""

    p: float

    def __post_init__(self):
        check_probabilities(self.p)

    @property
    def q(self) -> float:
        return 1.0 - self.p

    def __iter__(self):
        yield self.p
        yield self.q


@dataclass(frozen=True)
class QubitProbabilities:
    p1: float
    p2: float
    p3: float

    def __post_init__(self):
        check_probabilities([self.p1, self.p2, self.p3])

    def __array__(self, dtype=None, copy=None):
        return np.array([self.p1, self.p2, self.p3], dtype=dtype)

    def as_array(self) -> np.ndarray:
        return np.array([self.p1, self.p2, self.p3])

    @classmethod
    def from_density(cls, m) -> "QubitProbabilities":
        return cls(*probabilities_from_density(m).tolist())

    @property
    def pairs(self) -> tuple[ProbabilityPair, ProbabilityPair, ProbabilityPair]:
        """The x, y and z distributions."""
        return ProbabilityPair(self.p1), ProbabilityPair(self.p2), ProbabilityPair(self.p3)

    @property
    def is_quantum(self) -> bool:
        return bool(ball_check(self).valid)


def density_from_probabilities(p) -> np.ndarray:
    """Build the 2x2 density matrix (or a batch of them) from ``(..., 3)``."""
    p = check_probabilities(p, 3)
    p1, p2, p3 = p[..., 0], p[..., 1], p[..., 2]
    rho = np.empty(p.shape[:-1] + (2, 2), dtype=complex)
    off = (p1 - 0.5) - 1j * (p2 - 0.5)
    rho[..., 0, 0] = p3
    rho[..., 1, 1] = 1.0 - p3
    rho[..., 0, 1] = off
    rho[..., 1, 0] = np.conj(off)
    return rho


def probabilities_from_density(m, trace_tol: float = SPECTRAL_TOL) -> np.ndarray:
    """Inverse of :func:`density_from_probabilities`.

    ``p1 = Re m12 + 1/2``, ``p2 = -Im m12 + 1/2``, ``p3 = m11``. The result
    is not range-checked, since a unit-trace Hermitian matrix that is not
    positive can map outside the cube.
    """
    m = check_hermitian(m, 2)
    tr = m[..., 0, 0].real + m[..., 1, 1].real
    if np.any(np.abs(tr - 1.0) > trace_tol):
        raise TraceError("density matrix must have unit trace")
    off = m[..., 0, 1]
    return np.stack([off.real + 0.5, -off.imag + 0.5, m[..., 0, 0].real], axis=-1)


def bloch_radius(p) -> np.ndarray:
    p = check_probabilities(p, 3)
    return np.sqrt(np.sum((p - 0.5) ** 2, axis=-1))


def eigenvalues_from_probabilities(p) -> np.ndarray:
    """``1/2 +- sqrt(sum_j (p_j - 1/2)^2)``, descending, shape ``(..., 2)``."""
    r = bloch_radius(p)
    return np.stack([0.5 + r, 0.5 - r], axis=-1)


class BallCheck(NamedTuple):
    radius_sq: np.ndarray | float
    """``sum_j (p_j - 1/2)^2``"""
    valid: np.ndarray | bool
    """``radius_sq <= 1/4``"""

    @property
    def margin(self):
        """Slack ``1/4 - radius_sq``; nonnegative for quantum states."""
        return BALL_RADIUS_SQ - self.radius_sq


def ball_check(p, tol: float = 0.0) -> BallCheck:
    """Test whether probabilities describe a positive density matrix.

    ``tol`` widens the ball slightly to absorb rounding; the default is the
    exact inequality.
    """
    p = check_probabilities(p, 3)
    r2 = np.sum((p - 0.5) ** 2, axis=-1)
    valid = r2 <= BALL_RADIUS_SQ + tol
    if np.ndim(r2) == 0:
        return BallCheck(float(r2), bool(valid))
    return BallCheck(r2, valid)


def min_eigenvalue(p) -> np.ndarray:
    """Smallest eigenvalue of the density matrix, via the numeric path."""
    return eigenvalues_2(density_from_probabilities(p))[..., 1]
