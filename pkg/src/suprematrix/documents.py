"""
JSON state and channel documents.

State document::

    {"kind": "qubit" | "qutrit",
     "representation": "density" | "probabilities",
     "data": [[[re, im], ...], ...]  or  [p, ...],
     "metadata": {...}}

Channel document::

    {"kind": "unitary" | "unital" | "kraus" | "dephasing" | "transpose",
     "matrices": [[[[re, im], ...], ...], ...],
     "weights": [w, ...],
     "which": 1 | 2 | 3}

Complex numbers are always ``[re, im]`` arrays. Floats are written with
``repr`` precision, so text round trips are bit-exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import qubit, qutrit
from .channels import (
    AffineChannelMap,
    KrausChannel,
    TransposeMap,
    UnitalMixture,
    affine_map_from_unital,
    dephasing_channel,
)
from .matrix_core import SPECTRAL_TOL, check_hermitian

KINDS = {"qubit": (2, 3), "qutrit": (3, 8)}
REPRESENTATIONS = ("density", "probabilities")
CHANNEL_KINDS = ("unitary", "unital", "kraus", "dephasing", "transpose")


class DocumentError(ValueError):
    """A document is malformed: wrong structure, types or shape."""


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None


def _number(x) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise DocumentError(f"expected a number, got {x!r}")
    return float(x)


def parse_complex_matrix(rows, dim: int | None = None) -> np.ndarray:
    if not isinstance(rows, list) or not rows:
        raise DocumentError("matrix must be a non-empty list of rows")
    n = len(rows)
    if dim is not None and n != dim:
        raise DocumentError(f"expected a {dim}x{dim} matrix, got {n} rows")
    out = np.empty((n, n), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise DocumentError(f"row {i} must have {n} entries")
        for j, entry in enumerate(row):
            if not isinstance(entry, list) or len(entry) != 2:
                raise DocumentError(f"entry ({i}, {j}) must be a [re, im] pair, got {entry!r}")
            out[i, j] = complex(_number(entry[0]), _number(entry[1]))
    if not np.all(np.isfinite(out)):
        raise DocumentError("matrix entries must be finite")
    return out


def format_complex_matrix(m) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m)]


@dataclass
class StateDocument:
    kind: str
    representation: str
    data: np.ndarray
    metadata: dict = field(default_factory=dict)

    @classmethod
    def from_obj(cls, obj) -> "StateDocument":
        """Parse a decoded JSON object.

        Structural problems raise :class:`DocumentError`; physically
        meaningless values (probabilities outside [0, 1], a non-Hermitian or
        non-unit-trace matrix) raise the corresponding ``SuprematrixError``.
        """
        if not isinstance(obj, dict):
            raise DocumentError("state document must be a JSON object")
        kind = obj.get("kind")
        rep = obj.get("representation")
        if kind not in KINDS:
            raise DocumentError(f"kind must be one of {sorted(KINDS)}, got {kind!r}")
        if rep not in REPRESENTATIONS:
            raise DocumentError(f"representation must be one of {REPRESENTATIONS}, got {rep!r}")
        metadata = obj.get("metadata", {})
        if not isinstance(metadata, dict):
            raise DocumentError("metadata must be an object")
        dim, n_prob = KINDS[kind]
        raw = obj.get("data")
        if rep == "density":
            data = parse_complex_matrix(raw, dim)
            check_hermitian(data, dim)
            qutrit.check_unit_trace(data, SPECTRAL_TOL)
        else:
            if not isinstance(raw, list) or len(raw) != n_prob:
                raise DocumentError(f"{kind} probabilities must be a list of {n_prob} numbers")
            data = qubit.check_probabilities([_number(x) for x in raw], n_prob)
        return cls(kind, rep, data, dict(metadata))

    def to_obj(self) -> dict:
        if self.representation == "density":
            data = format_complex_matrix(self.data)
        else:
            data = [float(x) for x in self.data]
        obj = {"kind": self.kind, "representation": self.representation, "data": data}
        if self.metadata:
            obj["metadata"] = self.metadata
        return obj

    def probabilities(self) -> np.ndarray:
        if self.representation == "probabilities":
            return self.data
        mod = qubit if self.kind == "qubit" else qutrit
        return qubit.check_probabilities(qubit.clip_rounding(mod.probabilities_from_density(self.data)))

    def density(self) -> np.ndarray:
        if self.representation == "density":
            return self.data
        mod = qubit if self.kind == "qubit" else qutrit
        return mod.density_from_probabilities(self.data)

    def converted(self, representation: str) -> "StateDocument":
        if representation not in REPRESENTATIONS:
            raise DocumentError(f"unknown representation {representation!r}")
        data = self.probabilities() if representation == "probabilities" else self.density()
        return StateDocument(self.kind, representation, data, dict(self.metadata))


@dataclass(frozen=True, eq=False)
class ChannelSpec:
    """A parsed channel document: a probability-domain map and its matrix-domain action."""

    kind: str
    affine_map: AffineChannelMap
    channel: object

    def apply_matrix(self, rho) -> np.ndarray:
        return self.channel.apply_matrix(rho)


def parse_channel(obj) -> ChannelSpec:
    if not isinstance(obj, dict):
        raise DocumentError("channel document must be a JSON object")
    kind = obj.get("kind")
    if kind not in CHANNEL_KINDS:
        raise DocumentError(f"channel kind must be one of {CHANNEL_KINDS}, got {kind!r}")

    def matrices():
        mats = obj.get("matrices")
        if not isinstance(mats, list) or not mats:
            raise DocumentError(f"{kind} channel needs a non-empty 'matrices' list")
        return [parse_complex_matrix(m, 3) for m in mats]

    if kind == "unitary":
        mats = matrices()
        if len(mats) != 1:
            raise DocumentError("unitary channel takes exactly one matrix")
        channel = UnitalMixture((1.0,), (mats[0],))
        return ChannelSpec(kind, affine_map_from_unital(channel), channel)
    if kind == "unital":
        mats = matrices()
        weights = obj.get("weights")
        if not isinstance(weights, list):
            raise DocumentError("unital channel needs a 'weights' list")
        channel = UnitalMixture(tuple(_number(w) for w in weights), tuple(mats))
        return ChannelSpec(kind, affine_map_from_unital(channel), channel)
    if kind == "kraus":
        channel = KrausChannel(tuple(matrices()))
        return ChannelSpec(kind, channel.affine_map(), channel)
    if kind == "dephasing":
        channel = dephasing_channel()
        return ChannelSpec(kind, channel.affine_map(), channel)
    which = obj.get("which")
    if isinstance(which, bool) or not isinstance(which, int):
        raise DocumentError("transpose channel needs an integer 'which'")
    channel = TransposeMap(which)
    return ChannelSpec(kind, channel.affine_map(), channel)


def channel_to_obj(kind: str, matrices=(), weights=None, which=None) -> dict:
    obj = {"kind": kind}
    if matrices:
        obj["matrices"] = [format_complex_matrix(m) for m in matrices]
    if weights is not None:
        obj["weights"] = [float(w) for w in weights]
    if which is not None:
        obj["which"] = int(which)
    return obj
