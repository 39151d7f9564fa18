"""
Qubit observables as three classical random variables.

A Hermitian observable ``A`` is split into two-valued variables ``X``,
``Y``, ``Z`` with ``X1 = Re a12``, ``Y1 = -Im a12``, ``X2 = -X1``,
``Y2 = -Y1``, ``Z = (a11, a22)``. Their classical means under the x, y, z
spin-projection distributions add up to the quantum mean ``Tr(A rho)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix_core import check_hermitian
from .qubit import check_probabilities


@dataclass(frozen=True)
class QubitObservable:
    """Hermitian 2x2 observable stored as ``(a11, a22, a12)``."""

    a11: float
    a22: float
    a12: complex = 0j

    @classmethod
    def from_matrix(cls, m) -> "QubitObservable":
        m = check_hermitian(m, 2)
        if m.ndim != 2:
            raise ValueError("expected a single 2x2 matrix")
        return cls(float(m[0, 0].real), float(m[1, 1].real), complex(m[0, 1]))

    def matrix(self) -> np.ndarray:
        return np.array(
            [[self.a11, self.a12], [np.conj(self.a12), self.a22]], dtype=complex
        )


PAULI_X = QubitObservable(0.0, 0.0, 1.0 + 0j)
PAULI_Y = QubitObservable(0.0, 0.0, -1j)
PAULI_Z = QubitObservable(1.0, -1.0)
IDENTITY = QubitObservable(1.0, 1.0)


@dataclass(frozen=True)
class ClassicalVariables:
    """Values taken by the three classical random variables."""

    X: tuple[float, float]
    Y: tuple[float, float]
    Z: tuple[float, float]

    def __post_init__(self):
        # X2 = -X1 and Y2 = -Y1 are part of the model, not approximate
        if self.X[1] != -self.X[0] or self.Y[1] != -self.Y[0]:
            raise ValueError("X and Y must satisfy X1 + X2 = Y1 + Y2 = 0")

    @classmethod
    def from_values(cls, x1: float, y1: float, z1: float, z2: float) -> "ClassicalVariables":
        return cls((x1, -x1), (y1, -y1), (z1, z2))

    def to_observable(self) -> QubitObservable:
        """Rebuild ``A`` via ``a11 = Z1``, ``a22 = Z2``, ``a12 = X1 - i Y1``."""
        return QubitObservable(self.Z[0], self.Z[1], complex(self.X[0], -self.Y[0]))


def classical_variables(a: QubitObservable) -> ClassicalVariables:
    a12 = complex(a.a12)
    return ClassicalVariables.from_values(a12.real, -a12.imag, a.a11, a.a22)


def _dot(values: tuple[float, float], p) -> float:
    return values[0] * p + values[1] * (1.0 - p)


def mean_value(a: QubitObservable, p) -> float:
    """Quantum mean as a sum of three classical means.

    ``p1 X1 + (1-p1) X2 + p2 Y1 + (1-p2) Y2 + p3 Z1 + (1-p3) Z2``
    """
    p1, p2, p3 = check_probabilities(p, 3)
    v = classical_variables(a)
    return float(_dot(v.X, p1) + _dot(v.Y, p2) + _dot(v.Z, p3))


def second_moment(a: QubitObservable, p) -> float:
    """``<A^2>`` in terms of the classical variables and distributions.

    ``(Z1 + Z2)(X.P1 + Y.P2) + X1^2 + Y1^2 + p3 (Z1^2 - Z2^2) + Z2^2``
    """
    p1, p2, p3 = check_probabilities(p, 3)
    v = classical_variables(a)
    (x1, _), (y1, _), (z1, z2) = v.X, v.Y, v.Z
    return float(
        (z1 + z2) * (_dot(v.X, p1) + _dot(v.Y, p2))
        + x1 * x1
        + y1 * y1
        + p3 * (z1 * z1 - z2 * z2)
        + z2 * z2
    )


def variance(a: QubitObservable, p) -> float:
    return second_moment(a, p) - mean_value(a, p) ** 2
