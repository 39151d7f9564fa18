"""Probability representation of qubit and qutrit states.

Density matrices are converted to and from spin-projection probabilities,
checked against the positivity and entropic inequalities those
probabilities must satisfy, drawn as triadas of Malevich squares, and
evolved by channels written as affine maps of the probability vector.
"""

from .channels import (
    AffineChannelMap,
    KrausChannel,
    TransposeMap,
    UnitalMixture,
    affine_map_from_unital,
    affine_map_from_unitary,
    apply_kraus,
    dephasing_channel,
    probability_coordinate_maps,
)
from .entropy import matrix_element_entropy_diagnostic, qutrit_entropic_suite, relative_entropy
from .geometry import (
    QutritTriadas,
    TriadaGeometry,
    malevich_area_sum,
    qutrit_triadas,
    triada,
    triangle_area,
    triangle_inequality_holds,
    triangle_sides,
)
from .matrix_core import eigenvalues_2, eigenvalues_3, kron, unvec, vec
from .observables import ClassicalVariables, QubitObservable, classical_variables, mean_value, second_moment
from .qubit import ProbabilityPair, QubitProbabilities, ball_check
from .qutrit import QuantumnessReport, QutritProbabilities, purity, quantumness_report
from .sampling import SeededGenerator
from .svg import render_triadas_svg

__version__ = "0.1.0"
