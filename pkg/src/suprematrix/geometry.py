"""
Triangle geometry and Malevich squares for qubit and qutrit states.

A qubit triple ``(p1, p2, p3)`` maps to a triangle with sides ``L1, L2,
L3``; the squares drawn on these sides form a triada. For quantum states the
sum of the three square areas lies in ``[3/2, 9/2)``; for arbitrary points
of the unit cube it lies in ``[3/2, 6]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qubit import check_probabilities
from .qutrit import artificial_qubit_probabilities

RADICAND_TOL = 1e-12

AREA_SUM_MIN = 1.5
QUANTUM_AREA_SUM_SUP = 4.5
CLASSICAL_AREA_SUM_MAX = 6.0


def _side_radicand(a, b):
    return 2.0 + 2.0 * a * a - 4.0 * a - 2.0 * b + 2.0 * b * b + 2.0 * a * b


def triangle_sides(p) -> np.ndarray:
    """Side lengths ``(L1, L2, L3)``, shape ``(..., 3)``.

    ``L1`` uses ``(p2, p3)``, ``L2`` uses ``(p3, p1)``, ``L3`` uses
    ``(p1, p2)``. The radicand touches zero at cube corners such as
    ``p2 = 1, p3 = 0``, so rounding noise down to ``-1e-12`` is clamped.
    """
    p = check_probabilities(p, 3)
    p1, p2, p3 = p[..., 0], p[..., 1], p[..., 2]
    rad = np.stack(
        [_side_radicand(p2, p3), _side_radicand(p3, p1), _side_radicand(p1, p2)],
        axis=-1,
    )
    if np.any(rad < -RADICAND_TOL):
        raise ArithmeticError(f"negative side radicand {np.min(rad):.3g}")
    return np.sqrt(np.maximum(rad, 0.0))


def triangle_inequality_holds(sides) -> np.ndarray | bool:
    """All three strict inequalities ``L_n + L_(n-1) > L_(n+1)``."""
    s = np.asarray(sides, dtype=float)
    l1, l2, l3 = s[..., 0], s[..., 1], s[..., 2]
    ok = (l1 + l2 > l3) & (l2 + l3 > l1) & (l3 + l1 > l2)
    return bool(ok) if np.ndim(ok) == 0 else ok


def triangle_area(sides) -> float | None:
    """Area from the side lengths, or ``None`` for a degenerate triangle.

    ``(1/4) sqrt((L1+L2+L3)(L1+L2-L3)(L2+L3-L1)(L3+L1-L2))``
    """
    l1, l2, l3 = (float(x) for x in np.asarray(sides, dtype=float).reshape(3))
    if not triangle_inequality_holds((l1, l2, l3)):
        return None
    return 0.25 * math.sqrt((l1 + l2 + l3) * (l1 + l2 - l3) * (l2 + l3 - l1) * (l3 + l1 - l2))


def malevich_area_sum(p) -> np.ndarray:
    """Sum of the three square areas, written directly in the probabilities."""
    p = check_probabilities(p, 3)
    p1, p2, p3 = p[..., 0], p[..., 1], p[..., 2]
    return 2.0 * (
        3.0 * (1.0 - p1 - p2 - p3)
        + 2.0 * (p1 * p1 + p2 * p2 + p3 * p3)
        + p1 * p2
        + p2 * p3
        + p3 * p1
    )


@dataclass(frozen=True)
class TriadaGeometry:
    sides: tuple[float, float, float]
    square_areas: tuple[float, float, float]
    triangle_area: float | None
    area_sum: float

    @property
    def degenerate(self) -> bool:
        return self.triangle_area is None

    def as_dict(self) -> dict:
        return {
            "sides": list(self.sides),
            "square_areas": list(self.square_areas),
            "triangle_area": self.triangle_area,
            "area_sum": self.area_sum,
        }


def triada(p) -> TriadaGeometry:
    """Full geometry for a single qubit triple."""
    sides = triangle_sides(p)
    if sides.ndim != 1:
        raise ValueError("triada takes a single (p1, p2, p3) triple")
    return TriadaGeometry(
        sides=tuple(float(x) for x in sides),
        square_areas=tuple(float(x) for x in sides**2),
        triangle_area=triangle_area(sides),
        area_sum=float(malevich_area_sum(p)),
    )


@dataclass(frozen=True)
class QutritTriadas:
    """One triada per artificial qubit of a qutrit state."""

    triadas: tuple[TriadaGeometry, TriadaGeometry, TriadaGeometry]

    def __iter__(self):
        return iter(self.triadas)

    def __getitem__(self, k):
        return self.triadas[k]

    def as_dict(self) -> dict:
        return {"triadas": [t.as_dict() for t in self.triadas]}


def qutrit_triadas(pi) -> QutritTriadas:
    q = artificial_qubit_probabilities(pi)
    if q.ndim != 2:
        raise ValueError("qutrit_triadas takes a single 8-probability vector")
    return QutritTriadas(tuple(triada(row) for row in q))
