"""
Small fixed-size complex matrix utilities.

Everything here works on numpy arrays of shape ``(..., d, d)`` with
``d`` in ``{2, 3}``; leading axes are treated as a batch. The 3x3 matrices
are flattened row-major, i.e. ``(r11, r12, r13, r21, ..., r33)``, and the
rest of the package (channels in particular) depends on this ordering.
"""

from __future__ import annotations

import numpy as np

from .exceptions import NotHermitianError

HERMITIAN_TOL = 1e-12
SPECTRAL_TOL = 1e-10


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose over the last two axes."""
    return np.conj(np.swapaxes(m, -1, -2))


def check_square(m, dim: int | None = None) -> np.ndarray:
    """Return ``m`` as a complex array of square matrices.

    Raises ``ValueError`` on non-square input, non-finite entries, or when
    ``dim`` is given and does not match.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim < 2 or m.shape[-1] != m.shape[-2]:
        raise ValueError(f"expected square matrices, got shape {m.shape}")
    if dim is not None and m.shape[-1] != dim:
        raise ValueError(f"expected {dim}x{dim} matrices, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def hermiticity_residual(m: np.ndarray) -> np.ndarray:
    """Largest ``|m_jk - conj(m_kj)|`` per matrix."""
    return np.max(np.abs(m - dagger(m)), axis=(-1, -2))


def check_hermitian(m, dim: int | None = None, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Validate that ``m`` is (a batch of) Hermitian matrices."""
    m = check_square(m, dim)
    residual = hermiticity_residual(m)
    if np.any(residual > tol):
        raise NotHermitianError(
            f"matrix is not Hermitian (residual {np.max(residual):.3g} > {tol:g})"
        )
    return m


def is_hermitian(m, tol: float = HERMITIAN_TOL) -> bool:
    try:
        check_hermitian(m, tol=tol)
    except ValueError:
        return False
    return True


def trace(m: np.ndarray) -> np.ndarray:
    return np.trace(m, axis1=-2, axis2=-1)


def eigenvalues_2(m) -> np.ndarray:
    """Eigenvalues of Hermitian 2x2 matrices, in descending order.

    Closed-form roots of ``(m11 - l)(m22 - l) - m12 m21 = 0``. Returns an
    array of shape ``(..., 2)``.
    """
    m = check_hermitian(m, 2)
    a = m[..., 0, 0].real
    d = m[..., 1, 1].real
    off = np.abs(m[..., 0, 1])
    half_trace = 0.5 * (a + d)
    # hypot keeps the discriminant accurate when the diagonal gap is tiny
    radius = 0.5 * np.hypot(a - d, 2.0 * off)
    return np.stack([half_trace + radius, half_trace - radius], axis=-1)


def eigenvalues_3(m) -> np.ndarray:
    """Eigenvalues of Hermitian 3x3 matrices, in descending order.

    Uses LAPACK's symmetric eigensolver; see the test suite for the
    characteristic-polynomial cross-check.
    """
    m = check_hermitian(m, 3)
    return np.linalg.eigvalsh(m)[..., ::-1]


def eigenvalues(m) -> np.ndarray:
    """Dispatch on matrix size (2 or 3)."""
    m = check_square(m)
    if m.shape[-1] == 2:
        return eigenvalues_2(m)
    if m.shape[-1] == 3:
        return eigenvalues_3(m)
    raise ValueError(f"only 2x2 and 3x3 matrices are supported, got {m.shape}")


def vec(m) -> np.ndarray:
    """Row-major flattening of 3x3 matrices into 9-vectors."""
    m = check_square(m, 3)
    return m.reshape(m.shape[:-2] + (9,))


def unvec(v, tol: float = SPECTRAL_TOL) -> np.ndarray:
    """Inverse of :func:`vec`; the implied matrix must be Hermitian."""
    v = np.asarray(v, dtype=complex)
    if v.shape[-1:] != (9,):
        raise ValueError(f"expected 9-component vectors, got shape {v.shape}")
    return check_hermitian(v.reshape(v.shape[:-1] + (3, 3)), 3, tol=tol)


def kron(a, b) -> np.ndarray:
    """Kronecker product of two square matrices of the same size.

    With row-major :func:`vec`, ``kron(a, b) @ vec(r) == vec(a @ r @ b.T)``.
    """
    a = check_square(a)
    b = check_square(b)
    if a.ndim != 2 or b.ndim != 2:
        raise ValueError("kron expects single matrices, not batches")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return np.kron(a, b)


def unitarity_residual(u) -> float:
    u = check_square(u)
    return float(np.max(np.abs(u @ dagger(u) - np.eye(u.shape[-1]))))
