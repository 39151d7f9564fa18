"""
Qutrit channels as affine maps of the eight-probability vector.

A linear map on density matrices acts on ``vec(rho)`` through a 9x9
superoperator ``S``; with the row-major convention a conjugation
``rho -> V rho V^dagger`` has ``S = V (x) conj(V)``. Writing the
probability coordinates as affine maps

    Pi = M vec(rho) + c,        vec(rho) = N Pi + d,

the same channel acts on probabilities as ``Pi' = U Pi + G`` with
``U = M S N`` and ``G = M S d + c``. Both are real for any map that
preserves Hermiticity; the imaginary residue is checked.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .exceptions import ChannelError, NonPhysicalStateWarning
from .matrix_core import SPECTRAL_TOL, check_square, dagger, eigenvalues_3, kron, unitarity_residual
from .qutrit import check_probabilities, density_from_probabilities, probabilities_from_density

IMAG_RESIDUE_TOL = 1e-12
COMPLETENESS_TOL = 1e-10
WEIGHT_SUM_TOL = 1e-12

_H = 0.5
_IH = 0.5j


def _coordinate_maps():
    # vec index: r11 0, r12 1, r13 2, r21 3, r22 4, r23 5, r31 6, r32 7, r33 8
    m = np.zeros((8, 9), dtype=complex)
    c = np.array([_H, _H, 0, _H, _H, 0, _H, _H], dtype=float)
    m[0, [2, 6]] = _H, _H            # p1(1) = Re r13 + 1/2
    m[1, [2, 6]] = -_IH, _IH         # p2(1) = Im r13 + 1/2
    m[2, [0, 4]] = 1, 1              # p3(1) = r11 + r22
    m[3, [1, 3]] = _H, _H            # p1(2) = Re r12 + 1/2
    m[4, [1, 3]] = _IH, -_IH         # p2(2) = -Im r12 + 1/2
    m[5, [0, 8]] = 1, 1              # p3(2) = r11 + r33
    m[6, [7, 5]] = _H, _H            # p1(3) = Re r32 + 1/2
    m[7, [7, 5]] = _IH, -_IH         # p2(3) = -Im r32 + 1/2

    n = np.zeros((9, 8), dtype=complex)
    g, gc = 0.5 + 0.5j, 0.5 - 0.5j
    d = np.array([-1, -gc, -g, -g, 1, -g, -gc, -gc, 1], dtype=complex)
    n[0, [2, 5]] = 1, 1              # r11 = p3(1) + p3(2) - 1
    n[1, [3, 4]] = 1, -1j            # r12 = conj(z2 - g)
    n[2, [0, 1]] = 1, 1j             # r13 = z1 - g
    n[3, [3, 4]] = 1, 1j             # r21 = z2 - g
    n[4, 5] = -1                     # r22 = 1 - p3(2)
    n[5, [6, 7]] = 1, 1j             # r23 = z3 - g
    n[6, [0, 1]] = 1, -1j            # r31 = conj(z1 - g)
    n[7, [6, 7]] = 1, -1j            # r32 = conj(z3 - g)
    n[8, 2] = -1                     # r33 = 1 - p3(1)
    for a in (m, c, n, d):
        a.setflags(write=False)
    return m, c, n, d


PI_FROM_VEC, PI_OFFSET, VEC_FROM_PI, VEC_OFFSET = _coordinate_maps()


class CoordinateMaps(NamedTuple):
    pi_from_vec: np.ndarray
    """complex (8, 9)"""
    pi_offset: np.ndarray
    """real (8,)"""
    vec_from_pi: np.ndarray
    """complex (9, 8)"""
    vec_offset: np.ndarray
    """complex (9,)"""

    def to_vec(self, pi) -> np.ndarray:
        """``vec(rho)`` for probability vectors ``(..., 8)``."""
        return np.asarray(pi, dtype=float) @ self.vec_from_pi.T + self.vec_offset

    def to_pi(self, v) -> np.ndarray:
        """Probabilities from ``vec(rho)``; imaginary rounding residue is dropped."""
        return (np.asarray(v) @ self.pi_from_vec.T).real + self.pi_offset


def probability_coordinate_maps() -> CoordinateMaps:
    return CoordinateMaps(PI_FROM_VEC, PI_OFFSET, VEC_FROM_PI, VEC_OFFSET)


def _real_part(x: np.ndarray, what: str) -> np.ndarray:
    residue = float(np.max(np.abs(np.imag(x)), initial=0.0))
    if residue > IMAG_RESIDUE_TOL:
        raise ArithmeticError(f"{what} has imaginary residue {residue:.3g}")
    return np.real(x).copy()


@dataclass(frozen=True, eq=False)
class AffineChannelMap:
    """``Pi' = matrix @ Pi + offset`` on eight-probability vectors."""

    matrix: np.ndarray
    offset: np.ndarray

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=float)
        off = np.array(self.offset, dtype=float)
        if mat.shape != (8, 8) or off.shape != (8,):
            raise ValueError("affine channel map needs an 8x8 matrix and an 8-vector")
        mat.setflags(write=False)
        off.setflags(write=False)
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "offset", off)

    @classmethod
    def identity(cls) -> "AffineChannelMap":
        return cls(np.eye(8), np.zeros(8))

    @classmethod
    def from_superoperator(cls, s) -> "AffineChannelMap":
        s = check_square(s, 9)
        return cls(
            _real_part(PI_FROM_VEC @ s @ VEC_FROM_PI, "channel matrix"),
            _real_part(PI_FROM_VEC @ s @ VEC_OFFSET + PI_OFFSET, "channel offset"),
        )

    def apply(self, pi) -> np.ndarray:
        """Map ``(..., 8)`` probability vectors."""
        pi = check_probabilities(pi, 8)
        return pi @ self.matrix.T + self.offset

    __call__ = apply

    def compose(self, inner: "AffineChannelMap") -> "AffineChannelMap":
        """The map ``self`` applied after ``inner``."""
        return AffineChannelMap(self.matrix @ inner.matrix, self.matrix @ inner.offset + self.offset)

    def allclose(self, other: "AffineChannelMap", atol: float = 1e-10) -> bool:
        return bool(
            np.allclose(self.matrix, other.matrix, rtol=0, atol=atol)
            and np.allclose(self.offset, other.offset, rtol=0, atol=atol)
        )

    def as_dict(self) -> dict:
        return {"matrix": self.matrix.tolist(), "offset": self.offset.tolist()}


def check_unitary(u, tol: float = SPECTRAL_TOL) -> np.ndarray:
    u = check_square(u, 3)
    if u.ndim != 2:
        raise ValueError("expected a single 3x3 matrix")
    residual = unitarity_residual(u)
    if residual > tol:
        raise ChannelError(f"matrix is not unitary (residual {residual:.3g})", "unitarity")
    return u


def superoperator_from_unitary(u) -> np.ndarray:
    u = check_unitary(u)
    return kron(u, np.conj(u))


def affine_map_from_unitary(u) -> AffineChannelMap:
    """Probability-domain form of ``rho -> u rho u^dagger``."""
    return AffineChannelMap.from_superoperator(superoperator_from_unitary(u))


@dataclass(frozen=True, eq=False)
class UnitalMixture:
    """Random-unitary channel ``rho -> sum_k w_k u_k rho u_k^dagger``."""

    weights: tuple[float, ...]
    unitaries: tuple[np.ndarray, ...]

    def __post_init__(self):
        w = tuple(float(x) for x in self.weights)
        if len(w) == 0 or len(w) != len(self.unitaries):
            raise ChannelError("need one weight per unitary", "weights")
        if any(not 0.0 <= x <= 1.0 for x in w):
            raise ChannelError("weights must lie in [0, 1]", "weights")
        if abs(sum(w) - 1.0) > WEIGHT_SUM_TOL:
            raise ChannelError(f"weights sum to {sum(w)!r}, not 1", "weights")
        us = tuple(check_unitary(u) for u in self.unitaries)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "unitaries", us)

    def superoperator(self) -> np.ndarray:
        return sum(w * kron(u, np.conj(u)) for w, u in zip(self.weights, self.unitaries))

    def apply_matrix(self, rho) -> np.ndarray:
        rho = check_square(rho, 3)
        return sum(w * (u @ rho @ dagger(u)) for w, u in zip(self.weights, self.unitaries))


def affine_map_from_unital(mix: UnitalMixture) -> AffineChannelMap:
    """``U = sum_k w_k U_k`` and ``G = sum_k w_k G_k``."""
    parts = [affine_map_from_unitary(u) for u in mix.unitaries]
    return AffineChannelMap(
        sum(w * p.matrix for w, p in zip(mix.weights, parts)),
        sum(w * p.offset for w, p in zip(mix.weights, parts)),
    )


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """Completely positive trace-preserving map ``rho -> sum_k V_k rho V_k^dagger``."""

    operators: tuple[np.ndarray, ...]

    def __post_init__(self):
        ops = tuple(check_square(v, 3) for v in self.operators)
        if not ops or any(v.ndim != 2 for v in ops):
            raise ChannelError("need at least one 3x3 Kraus operator", "completeness")
        total = sum(dagger(v) @ v for v in ops)
        residual = float(np.max(np.abs(total - np.eye(3))))
        if residual > COMPLETENESS_TOL:
            raise ChannelError(
                f"sum of V^dagger V differs from identity by {residual:.3g}", "completeness"
            )
        object.__setattr__(self, "operators", ops)

    def superoperator(self) -> np.ndarray:
        return sum(kron(v, np.conj(v)) for v in self.operators)

    def apply_matrix(self, rho) -> np.ndarray:
        rho = check_square(rho, 3)
        return sum(v @ rho @ dagger(v) for v in self.operators)

    def affine_map(self) -> AffineChannelMap:
        return AffineChannelMap.from_superoperator(self.superoperator())


def apply_kraus(channel: KrausChannel, pi, tol: float = SPECTRAL_TOL) -> np.ndarray:
    """Probabilities of ``sum_k V_k rho V_k^dagger`` for ``rho = rho(Pi)``.

    Inputs that do not reconstruct to a positive matrix are still mapped,
    with a :class:`NonPhysicalStateWarning`.
    """
    rho = density_from_probabilities(pi)
    if np.any(eigenvalues_3(rho)[..., -1] < -tol):
        warnings.warn("input state is not positive semidefinite", NonPhysicalStateWarning, stacklevel=2)
    return probabilities_from_density(channel.apply_matrix(rho))


def dephasing_channel() -> KrausChannel:
    """Keeps populations, removes all coherences: projectors onto the basis."""
    return KrausChannel(tuple(np.diag(np.eye(3)[k]).astype(complex) for k in range(3)))


class TransposeResult(NamedTuple):
    probabilities: np.ndarray
    valid: np.ndarray | bool
    """output reconstructs to a positive semidefinite matrix"""


# zero-based matrix positions of the off-diagonal pair owned by each artificial qubit
_QUBIT_PAIRS = {1: (0, 2), 2: (0, 1), 3: (1, 2)}


@dataclass(frozen=True)
class TransposeMap:
    """Transposition of one artificial qubit's 2x2 block.

    Swaps the pair ``r_ab``, ``r_ba`` owned by qubit ``which``, i.e. sends
    ``p2(which)`` to ``1 - p2(which)``. The map is positive on that qubit
    but not completely positive on the qutrit, so outputs can leave the set
    of states; :meth:`apply` reports this instead of rejecting it.
    """

    which: int

    def __post_init__(self):
        if self.which not in _QUBIT_PAIRS:
            raise ChannelError(f"artificial qubit must be 1, 2 or 3, got {self.which!r}", "which")

    def superoperator(self) -> np.ndarray:
        a, b = _QUBIT_PAIRS[self.which]
        perm = np.arange(9)
        perm[3 * a + b], perm[3 * b + a] = 3 * b + a, 3 * a + b
        return np.eye(9, dtype=complex)[perm]

    def apply_matrix(self, rho) -> np.ndarray:
        rho = np.array(check_square(rho, 3))
        a, b = _QUBIT_PAIRS[self.which]
        rho[..., [a, b], [b, a]] = rho[..., [b, a], [a, b]]
        return rho

    def affine_map(self) -> AffineChannelMap:
        return AffineChannelMap.from_superoperator(self.superoperator())

    def apply(self, pi, tol: float = SPECTRAL_TOL) -> TransposeResult:
        out = probabilities_from_density(self.apply_matrix(density_from_probabilities(pi)))
        valid = eigenvalues_3(density_from_probabilities(out))[..., -1] >= -tol
        return TransposeResult(out, bool(valid) if np.ndim(valid) == 0 else valid)

