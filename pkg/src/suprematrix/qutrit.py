"""
Qutrit density matrices in terms of three artificial qubits.

A qutrit state is described by eight probabilities, stored in this order::

    Pi = (p1(1), p2(1), p3(1), p1(2), p2(2), p3(2), p1(3), p2(3))

where ``pj(k)`` is the probability of spin projection +1/2 along axis ``j``
for artificial qubit ``k``. The third qubit's z-probability is not stored:
``p3(3) == p3(2)``. With ``z_k = p1(k) + i p2(k)`` and ``g = (1 + i)/2`` the
density matrix reads::

    [[p3(2) + p3(1) - 1, conj(z2 - g),  z1 - g      ],
     [z2 - g,            1 - p3(2),     z3 - g      ],
     [conj(z1 - g),      conj(z3 - g),  1 - p3(1)   ]]

Qubits 2 and 3 follow the qubit convention of :mod:`suprematrix.qubit`
exactly. Qubit 1 sits at position (1, 3) with the conjugate convention, so
``p2(1) = Im r13 + 1/2``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import TraceError
from .matrix_core import SPECTRAL_TOL, check_hermitian, eigenvalues_3
from .qubit import BALL_RADIUS_SQ, check_probabilities

GAMMA = 0.5 + 0.5j

# zero-based (row, col) where z_k - g sits, for k = 1, 2, 3
_OFFDIAG_POSITIONS = ((0, 2), (1, 0), (1, 2))


@dataclass(frozen=True)
class QutritProbabilities:
    """The eight independent probabilities of a qutrit state."""

    first: tuple[float, float, float]
    second: tuple[float, float, float]
    third: tuple[float, float]

    def __post_init__(self):
        if len(self.first) != 3 or len(self.second) != 3 or len(self.third) != 2:
            raise ValueError("expected 3 + 3 + 2 probabilities")
        check_probabilities(self.vector)

    @classmethod
    def from_vector(cls, pi) -> "QutritProbabilities":
        pi = [float(x) for x in np.asarray(pi, dtype=float).reshape(8)]
        return cls(tuple(pi[0:3]), tuple(pi[3:6]), tuple(pi[6:8]))

    @classmethod
    def from_density(cls, m) -> "QutritProbabilities":
        return cls.from_vector(probabilities_from_density(m))

    @property
    def vector(self) -> np.ndarray:
        return np.array([*self.first, *self.second, *self.third], dtype=float)

    def __array__(self, dtype=None, copy=None):
        return self.vector.astype(dtype) if dtype is not None else self.vector

    @property
    def p3_third(self) -> float:
        """z-probability of the third artificial qubit (equal to the second's)."""
        return self.second[2]

    def artificial_qubit(self, k: int) -> tuple[float, float, float]:
        """``(p1, p2, p3)`` of artificial qubit ``k`` in {1, 2, 3}."""
        if k == 1:
            return self.first
        if k == 2:
            return self.second
        if k == 3:
            return (*self.third, self.p3_third)
        raise ValueError(f"artificial qubit index must be 1, 2 or 3, got {k}")


def _as_pi(pi) -> np.ndarray:
    return check_probabilities(pi, 8)


def artificial_qubit_probabilities(pi) -> np.ndarray:
    """Expand ``(..., 8)`` into ``(..., 3, 3)``: one ``(p1, p2, p3)`` row per qubit."""
    pi = _as_pi(pi)
    out = np.empty(pi.shape[:-1] + (3, 3))
    out[..., 0, :] = pi[..., 0:3]
    out[..., 1, :] = pi[..., 3:6]
    out[..., 2, 0:2] = pi[..., 6:8]
    out[..., 2, 2] = pi[..., 5]
    return out


def complex_coordinates(pi) -> np.ndarray:
    """``z_k - g`` for k = 1, 2, 3; shape ``(..., 3)``."""
    pi = _as_pi(pi)
    return (pi[..., [0, 3, 6]] + 1j * pi[..., [1, 4, 7]]) - GAMMA


def density_from_probabilities(pi) -> np.ndarray:
    """3x3 density matrix (batch-aware) from eight probabilities."""
    pi = _as_pi(pi)
    p31, p32 = pi[..., 2], pi[..., 5]
    w = complex_coordinates(pi)
    rho = np.zeros(pi.shape[:-1] + (3, 3), dtype=complex)
    rho[..., 0, 0] = p32 + p31 - 1.0
    rho[..., 1, 1] = 1.0 - p32
    rho[..., 2, 2] = 1.0 - p31
    for k, (r, c) in enumerate(_OFFDIAG_POSITIONS):
        rho[..., r, c] = w[..., k]
        rho[..., c, r] = np.conj(w[..., k])
    return rho


def check_unit_trace(m: np.ndarray, tol: float) -> None:
    tr = np.trace(m, axis1=-2, axis2=-1).real
    if np.any(np.abs(tr - 1.0) > tol):
        raise TraceError("density matrix must have unit trace")


def extract_artificial_qubits(m, trace_tol: float = SPECTRAL_TOL) -> np.ndarray:
    """The three artificial-qubit 2x2 matrices, shape ``(..., 3, 2, 2)``.

    ``rho(1)`` and ``rho(2)`` come from partial tracing, ``rho(3)`` from
    swapping levels 1 and 3 before doing the same.
    """
    m = check_hermitian(m, 3)
    check_unit_trace(m, trace_tol)
    out = np.empty(m.shape[:-2] + (3, 2, 2), dtype=complex)
    blocks = (
        (m[..., 0, 0] + m[..., 1, 1], m[..., 0, 2], m[..., 2, 2]),
        (m[..., 0, 0] + m[..., 2, 2], m[..., 0, 1], m[..., 1, 1]),
        (m[..., 2, 2] + m[..., 0, 0], m[..., 2, 1], m[..., 1, 1]),
    )
    for k, (top, off, bottom) in enumerate(blocks):
        out[..., k, 0, 0] = top
        out[..., k, 0, 1] = off
        out[..., k, 1, 0] = np.conj(off)
        out[..., k, 1, 1] = bottom
    return out


def probabilities_from_density(m, trace_tol: float = SPECTRAL_TOL) -> np.ndarray:
    """Eight probabilities from a unit-trace Hermitian 3x3 matrix.

    Exact inverse of :func:`density_from_probabilities`. Matrices that are
    not positive semidefinite are accepted and may map outside [0, 1].
    """
    m = check_hermitian(m, 3)
    check_unit_trace(m, trace_tol)
    r13, r12, r32 = m[..., 0, 2], m[..., 0, 1], m[..., 2, 1]
    return np.stack(
        [
            r13.real + 0.5,
            r13.imag + 0.5,
            m[..., 0, 0].real + m[..., 1, 1].real,
            r12.real + 0.5,
            -r12.imag + 0.5,
            m[..., 0, 0].real + m[..., 2, 2].real,
            r32.real + 0.5,
            -r32.imag + 0.5,
        ],
        axis=-1,
    )


def purity(pi) -> np.ndarray:
    """``Tr rho^2`` written directly in the probabilities."""
    pi = _as_pi(pi)
    p31, p32 = pi[..., 2], pi[..., 5]
    w = complex_coordinates(pi)
    diag = (p32 + p31 - 1.0) ** 2 + (1.0 - p32) ** 2 + (1.0 - p31) ** 2
    return diag + 2.0 * np.sum(np.abs(w) ** 2, axis=-1)


def ball_margins(pi) -> np.ndarray:
    """``1/4 - sum_j (pj(k) - 1/2)^2`` per artificial qubit, shape ``(..., 3)``."""
    q = artificial_qubit_probabilities(pi)
    return BALL_RADIUS_SQ - np.sum((q - 0.5) ** 2, axis=-1)


def diagonal_margin(pi) -> np.ndarray:
    """``r11 = p3(1) + p3(2) - 1``."""
    pi = _as_pi(pi)
    return pi[..., 2] + pi[..., 5] - 1.0


def quadratic_margin(pi) -> np.ndarray:
    """``(1 - p3(2))(1 - p3(1)) - |z3 - g|^2``, the (2, 3) principal minor."""
    pi = _as_pi(pi)
    w3 = complex_coordinates(pi)[..., 2]
    return (1.0 - pi[..., 5]) * (1.0 - pi[..., 2]) - np.abs(w3) ** 2


def cubic_margin(pi) -> np.ndarray:
    """The determinant expanded as a cubic polynomial in the probabilities."""
    pi = _as_pi(pi)
    p31, p32 = pi[..., 2], pi[..., 5]
    w = complex_coordinates(pi)
    w1, w2, w3 = w[..., 0], w[..., 1], w[..., 2]
    r11 = p32 + p31 - 1.0
    r22 = 1.0 - p32
    r33 = 1.0 - p31
    cyclic = w2 * w1 * np.conj(w3)
    return (
        r11 * r22 * r33
        + 2.0 * cyclic.real
        - np.abs(w1) ** 2 * r22
        - np.abs(w2) ** 2 * r33
        - np.abs(w3) ** 2 * r11
    )


@dataclass(frozen=True)
class QuantumnessReport:
    """Inequality margins for one state; each margin is >= 0 when satisfied.

    ``verdict`` comes from the eigenvalues, not from the margins: the
    inequalities are necessary for positivity but are not used as a test of it.
    """

    ball_margins: tuple[float, float, float]
    diag_nonneg: float
    quadratic_margin: float
    cubic_margin: float
    min_eigenvalue: float
    verdict: bool

    @property
    def inequalities_hold(self) -> bool:
        return all(
            x >= -SPECTRAL_TOL
            for x in (*self.ball_margins, self.diag_nonneg, self.quadratic_margin, self.cubic_margin)
        )

    def as_dict(self) -> dict:
        return {
            "ball_margins": list(self.ball_margins),
            "diag_nonneg": self.diag_nonneg,
            "quadratic_margin": self.quadratic_margin,
            "cubic_margin": self.cubic_margin,
            "min_eigenvalue": self.min_eigenvalue,
            "verdict": self.verdict,
        }


def quantumness_report(pi, tol: float = SPECTRAL_TOL) -> QuantumnessReport:
    pi = _as_pi(pi)
    if pi.ndim != 1:
        raise ValueError("quantumness_report takes a single state; use the margin functions for batches")
    lam_min = float(eigenvalues_3(density_from_probabilities(pi))[-1])
    report = QuantumnessReport(
        ball_margins=tuple(float(x) for x in ball_margins(pi)),
        diag_nonneg=float(diagonal_margin(pi)),
        quadratic_margin=float(quadratic_margin(pi)),
        cubic_margin=float(cubic_margin(pi)),
        min_eigenvalue=lam_min,
        verdict=lam_min >= -tol,
    )
    if report.verdict and not report.inequalities_hold:
        raise AssertionError(f"positive state violates a necessary inequality: {report}")
    return report


def is_quantum(pi, tol: float = SPECTRAL_TOL) -> np.ndarray:
    """Batch verdict: minimum eigenvalue of the reconstructed matrix >= -tol."""
    return eigenvalues_3(density_from_probabilities(pi))[..., -1] >= -tol
