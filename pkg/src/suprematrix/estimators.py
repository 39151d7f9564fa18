"""
scikit-learn compatible transformers.

These wrap the closed-form maps of the package so batches of states can be
pushed through ``sklearn.pipeline.Pipeline`` objects. None of them learn
anything from data: ``fit`` only validates input and records shapes.
Density-matrix batches are complex, which ``sklearn.utils.check_array``
refuses, so they go through :func:`check_density_batch` instead.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from . import geometry, qubit, qutrit
from .channels import AffineChannelMap, KrausChannel, TransposeMap, UnitalMixture, affine_map_from_unital, affine_map_from_unitary
from .matrix_core import check_hermitian
from .qutrit import check_unit_trace

_DIMS = {"qubit": (2, 3), "qutrit": (3, 8)}


def _dims(kind: str) -> tuple[int, int]:
    try:
        return _DIMS[kind]
    except KeyError:
        raise ValueError(f"kind must be 'qubit' or 'qutrit', got {kind!r}") from None


def check_density_batch(X, dim: int, trace_tol: float = 1e-10) -> np.ndarray:
    """Validate a batch of density matrices, shape ``(n, dim, dim)``.

    A single matrix is promoted to a batch of one. Entries must be finite,
    each matrix Hermitian with unit trace.
    """
    X = np.asarray(X, dtype=complex)
    if X.ndim == 2:
        X = X[None]
    if X.ndim != 3 or X.shape[0] == 0:
        raise ValueError(f"expected an array of shape (n_samples, {dim}, {dim}), got {X.shape}")
    X = check_hermitian(X, dim)
    check_unit_trace(X, trace_tol)
    return X


def check_probability_batch(X, n_features: int) -> np.ndarray:
    """``check_array`` plus the [0, 1] range check; shape ``(n, n_features)``."""
    X = check_array(X, dtype=np.float64, ensure_2d=True)
    if X.shape[1] != n_features:
        raise ValueError(f"expected {n_features} probabilities per sample, got {X.shape[1]}")
    return qubit.check_probabilities(X, n_features)


class ProbabilityRepresentation(TransformerMixin, BaseEstimator):
    """Density matrices to spin-projection probabilities and back.

    Parameters
    ----------
    kind : {"qutrit", "qubit"}
        Maps ``(n, 3, 3)`` to ``(n, 8)`` or ``(n, 2, 2)`` to ``(n, 3)``.
    """

    def __init__(self, kind="qutrit"):
        self.kind = kind

    def fit(self, X, y=None):
        dim, n_out = _dims(self.kind)
        check_density_batch(X, dim)
        self.n_components_ = n_out
        return self

    def transform(self, X):
        check_is_fitted(self)
        dim, _ = _dims(self.kind)
        X = check_density_batch(X, dim)
        mod = qutrit if self.kind == "qutrit" else qubit
        return mod.probabilities_from_density(X)

    def inverse_transform(self, P):
        check_is_fitted(self)
        _, n = _dims(self.kind)
        P = check_probability_batch(P, n)
        mod = qutrit if self.kind == "qutrit" else qubit
        return mod.density_from_probabilities(P)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self)
        if self.kind == "qubit":
            return np.array(["p1", "p2", "p3"], dtype=object)
        return np.array(
            [f"p{j}_{k}" for k, js in ((1, (1, 2, 3)), (2, (1, 2, 3)), (3, (1, 2))) for j in js],
            dtype=object,
        )


def _as_affine_map(channel) -> AffineChannelMap:
    if isinstance(channel, AffineChannelMap):
        return channel
    if isinstance(channel, (KrausChannel, TransposeMap)):
        return channel.affine_map()
    if isinstance(channel, UnitalMixture):
        return affine_map_from_unital(channel)
    if channel is None:
        return AffineChannelMap.identity()
    return affine_map_from_unitary(channel)


class AffineChannel(TransformerMixin, BaseEstimator):
    """Apply a qutrit channel to ``(n, 8)`` probability vectors.

    Parameters
    ----------
    channel : KrausChannel, UnitalMixture, TransposeMap, AffineChannelMap, array or None
        A bare 3x3 array is taken as a unitary. ``None`` is the identity.
    """

    def __init__(self, channel=None):
        self.channel = channel

    def fit(self, X=None, y=None):
        if X is not None:
            check_probability_batch(X, 8)
        self.map_ = _as_affine_map(self.channel)
        self.n_features_in_ = 8
        return self

    def transform(self, X):
        check_is_fitted(self)
        X = check_probability_batch(X, 8)
        return qubit.clip_rounding(self.map_.apply(X))


class MalevichFeatures(TransformerMixin, BaseEstimator):
    """Triangle sides and area sums of the artificial qubits.

    Output columns per artificial qubit: ``L1, L2, L3, S``; with
    ``include_purity`` a final purity column is appended.
    """

    def __init__(self, include_purity=False):
        self.include_purity = include_purity

    def fit(self, X, y=None):
        check_probability_batch(X, 8)
        self.n_features_in_ = 8
        return self

    def transform(self, X):
        check_is_fitted(self)
        X = check_probability_batch(X, 8)
        q = qutrit.artificial_qubit_probabilities(X)
        sides = geometry.triangle_sides(q)
        sums = geometry.malevich_area_sum(q)
        cols = np.concatenate([sides, sums[..., None]], axis=-1).reshape(len(X), 12)
        if self.include_purity:
            cols = np.column_stack([cols, qutrit.purity(X)])
        return cols

    def get_feature_names_out(self, input_features=None):
        names = [f"{name}_{k}" for k in (1, 2, 3) for name in ("L1", "L2", "L3", "S")]
        if self.include_purity:
            names.append("purity")
        return np.array(names, dtype=object)
