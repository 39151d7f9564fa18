"""
Relative-entropy inequalities for the artificial qubits of a qutrit.

Every axis ``j`` of every artificial qubit ``k`` gives a two-outcome
distribution ``(pj(k), 1 - pj(k))``. The relative entropy between the
distributions of two different qubits along the same axis is nonnegative,
which turns into inequalities on the qutrit matrix elements.

Natural logarithms throughout. ``0 ln 0 = 0``; a positive probability
against a zero one gives ``math.inf``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import rel_entr

from .matrix_core import check_hermitian
from .qubit import ProbabilityPair, check_probabilities
from .qutrit import check_unit_trace, artificial_qubit_probabilities

# (k, k', axis) with k != k', all 1-based
SUITE_INDICES = tuple(
    (k, kp, j) for j in (1, 2, 3) for k, kp in itertools.permutations((1, 2, 3), 2)
)


def _as_p(x) -> float:
    if isinstance(x, ProbabilityPair):
        return x.p
    return float(check_probabilities(x))


def relative_entropy(a, b) -> float:
    """``D(a || b)`` for two-outcome distributions given as pairs or ``p``."""
    p, q = _as_p(a), _as_p(b)
    # cancellation between the two terms can leave a tiny negative residue
    return max(float(rel_entr(p, q) + rel_entr(1.0 - p, 1.0 - q)), 0.0)


def binary_entropy(p) -> np.ndarray:
    """Shannon entropy ``-p ln p - (1-p) ln(1-p)``, batch-aware."""
    p = check_probabilities(p)
    return -(rel_entr(p, 1.0) + rel_entr(1.0 - p, 1.0))


@dataclass(frozen=True)
class RelativeEntropyResult:
    value: float
    distributions: tuple[ProbabilityPair, ProbabilityPair]
    indices: tuple[int, int, int]
    """``(k, k', axis)``"""

    def as_dict(self) -> dict:
        k, kp, j = self.indices
        return {
            "k": k,
            "k_prime": kp,
            "axis": j,
            "p": self.distributions[0].p,
            "p_prime": self.distributions[1].p,
            "value": self.value,
        }


def entropic_suite_values(pi) -> np.ndarray:
    """All 18 relative entropies, shape ``(..., 18)``, ordered as ``SUITE_INDICES``."""
    q = artificial_qubit_probabilities(pi)
    k = np.array([i[0] - 1 for i in SUITE_INDICES])
    kp = np.array([i[1] - 1 for i in SUITE_INDICES])
    j = np.array([i[2] - 1 for i in SUITE_INDICES])
    a = q[..., k, j]
    b = q[..., kp, j]
    return np.maximum(rel_entr(a, b) + rel_entr(1.0 - a, 1.0 - b), 0.0)


def qutrit_entropic_suite(pi) -> list[RelativeEntropyResult]:
    q = artificial_qubit_probabilities(pi)
    if q.ndim != 2:
        raise ValueError("qutrit_entropic_suite takes a single state; use entropic_suite_values for batches")
    values = entropic_suite_values(pi)
    return [
        RelativeEntropyResult(
            value=float(v),
            distributions=(ProbabilityPair(float(q[k - 1, j - 1])), ProbabilityPair(float(q[kp - 1, j - 1]))),
            indices=(k, kp, j),
        )
        for v, (k, kp, j) in zip(values, SUITE_INDICES)
    ]


@dataclass(frozen=True)
class MatrixEntropyDiagnostic:
    """Raw value of the matrix-element entropy expression.

    ``terms`` holds the two summands; a summand is ``None`` when its
    logarithm argument is not positive, and ``failed_term`` then names the
    first such summand (1 or 2) and ``value`` is ``None``.
    """

    permutation: tuple[int, int, int]
    terms: tuple[float | None, float | None]
    value: float | None
    failed_term: int | None

    @property
    def nonnegative(self) -> bool | None:
        return None if self.value is None else self.value >= 0.0

    def as_dict(self) -> dict:
        return {
            "permutation": list(self.permutation),
            "terms": list(self.terms),
            "value": self.value,
            "failed_term": self.failed_term,
            "nonnegative": self.nonnegative,
        }


def _xlog_ratio(weight: float, num: float, den: float) -> float | None:
    if weight == 0.0:
        return 0.0
    if den == 0.0 or num / den <= 0.0:
        return None
    return float(weight * math.log(num / den))


def matrix_element_entropy_diagnostic(m, permutation=(1, 2, 3)) -> MatrixEntropyDiagnostic:
    """Evaluate the matrix-element entropy expression literally.

    With ``r_ab = m[permutation[a], permutation[b]]`` (1-based indices),
    the value is::

        (r12 + r21 + 1)/2 * ln[(r12 + r21 + 1) / (r13 + r31 + 1)]
      + [i(r12 - r21) - 1]/2 * ln[(i(r12 - r21) - 1) / (i(r13 - r31) - 1)]

    No sign is asserted; see ``nonnegative`` on the result.
    """
    m = check_hermitian(m, 3)
    if m.ndim != 2:
        raise ValueError("expected a single 3x3 matrix")
    check_unit_trace(m, 1e-10)
    perm = tuple(int(x) for x in permutation)
    if sorted(perm) != [1, 2, 3]:
        raise ValueError(f"not a permutation of (1, 2, 3): {permutation}")
    idx = [x - 1 for x in perm]
    r = m[np.ix_(idx, idx)]

    sym12 = (r[0, 1] + r[1, 0]).real + 1.0
    sym13 = (r[0, 2] + r[2, 0]).real + 1.0
    anti12 = (1j * (r[0, 1] - r[1, 0])).real - 1.0
    anti13 = (1j * (r[0, 2] - r[2, 0])).real - 1.0

    t1 = _xlog_ratio(0.5 * sym12, sym12, sym13)
    t2 = _xlog_ratio(0.5 * anti12, anti12, anti13)
    failed = 1 if t1 is None else (2 if t2 is None else None)
    value = None if failed else t1 + t2
    return MatrixEntropyDiagnostic(perm, (t1, t2), value, failed)


def all_permutation_diagnostics(m) -> list[MatrixEntropyDiagnostic]:
    return [
        matrix_element_entropy_diagnostic(m, perm)
        for perm in itertools.permutations((1, 2, 3))
    ]
