"""
Command-line interface.

Exit codes: 0 success / quantum-valid state, 1 well-formed but not a
quantum state, 2 malformed input, 3 constraint violation (out-of-range
probabilities, non-unitary matrix, incomplete Kraus set, ...), 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import entropy, geometry, qubit, qutrit, sampling
from .documents import DocumentError, StateDocument, dumps, loads, parse_channel
from .exceptions import ChannelError, SuprematrixError
from .matrix_core import eigenvalues
from .svg import render_triadas_svg

EXIT_OK = 0
EXIT_NOT_QUANTUM = 1
EXIT_MALFORMED = 2
EXIT_CONSTRAINT = 3
EXIT_IO = 4


class CLIError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror}", EXIT_IO) from None


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise CLIError(f"cannot write {path}: {exc.strerror}", EXIT_IO) from None


def _load_state(path: str) -> StateDocument:
    return StateDocument.from_obj(loads(_read_text(path)))


def build_report(doc: StateDocument) -> tuple[dict, bool]:
    """Report dictionary and quantum verdict for one state."""
    pi = doc.probabilities()
    rho = doc.density()
    if doc.kind == "qubit":
        check = qubit.ball_check(pi)
        lam = eigenvalues(rho)
        valid = bool(lam[-1] >= -1e-12)
        report = {
            "kind": "qubit",
            "quantumness": {
                "ball_radius_sq": check.radius_sq,
                "ball_margin": check.margin,
                "eigenvalues": lam.tolist(),
                "min_eigenvalue": float(lam[-1]),
                "verdict": valid,
            },
            "geometry": geometry.triada(pi).as_dict(),
            "purity": float(np.real(np.trace(rho @ rho))),
        }
        return report, valid
    q = qutrit.quantumness_report(pi)
    report = {
        "kind": "qutrit",
        "quantumness": q.as_dict(),
        "geometry": geometry.qutrit_triadas(pi).as_dict(),
        "entropic": [r.as_dict() for r in entropy.qutrit_entropic_suite(pi)],
        "purity": float(qutrit.purity(pi)),
    }
    return report, q.verdict


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        for i, x in enumerate(obj):
            yield from _flatten(x, f"{prefix}[{i}]")
    else:
        yield prefix, obj


def render(obj, fmt: str) -> str:
    if fmt == "json":
        return dumps(obj)
    lines = [f"{k}: {v!r}" if isinstance(v, float) else f"{k}: {v}" for k, v in _flatten(obj)]
    return "\n".join(lines) + "\n"


def cmd_convert(args) -> int:
    doc = _load_state(args.input)
    target = args.to or ("probabilities" if doc.representation == "density" else "density")
    _write_text(args.output, render(doc.converted(target).to_obj(), args.format))
    return EXIT_OK


def cmd_validate(args) -> int:
    report, valid = build_report(_load_state(args.input))
    _write_text(args.output, render(report, args.format))
    return EXIT_OK if valid else EXIT_NOT_QUANTUM


def _geometry_of(doc: StateDocument):
    pi = doc.probabilities()
    if doc.kind == "qubit":
        return [geometry.triada(pi)]
    return list(geometry.qutrit_triadas(pi))


def cmd_geometry(args) -> int:
    triadas = _geometry_of(_load_state(args.input))
    _write_text(args.output, render({"triadas": [t.as_dict() for t in triadas]}, args.format))
    return EXIT_OK


def cmd_render(args) -> int:
    triadas = _geometry_of(_load_state(args.input))
    if not args.scale > 0:
        raise CLIError("--scale must be positive", EXIT_CONSTRAINT)
    _write_text(args.output, render_triadas_svg(triadas, scale=args.scale))
    return EXIT_OK


def _load_channel(path: str):
    return parse_channel(loads(_read_text(path)))


def cmd_channel_derive(args) -> int:
    spec = _load_channel(args.channel)
    obj = {"kind": spec.kind, **spec.affine_map.as_dict()}
    _write_text(args.output, render(obj, args.format))
    return EXIT_OK


def cmd_channel_apply(args) -> int:
    spec = _load_channel(args.channel)
    doc = _load_state(args.input)
    if doc.kind != "qutrit":
        raise CLIError("channels act on qutrit states", EXIT_MALFORMED)
    out_pi = qubit.check_probabilities(qubit.clip_rounding(spec.affine_map.apply(doc.probabilities())), 8)
    valid = bool(qutrit.is_quantum(out_pi))
    out = StateDocument("qutrit", "probabilities", out_pi, dict(doc.metadata))
    out.metadata["channel"] = spec.kind
    out.metadata["quantum_valid"] = valid
    if doc.representation == "density":
        out = out.converted("density")
    _write_text(args.output, render(out.to_obj(), args.format))
    return EXIT_OK if valid else EXIT_NOT_QUANTUM


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    raw = os.environ.get(sampling.SEED_ENV_VAR)
    if raw is None:
        return sampling.DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise CLIError(f"{sampling.SEED_ENV_VAR} must be an integer, got {raw!r}", EXIT_MALFORMED) from None


def sample_documents(count: int, kind: str, seed: int, representation: str = "density", pure: bool = False):
    g = sampling.SeededGenerator(seed)
    dim = 2 if kind == "qubit" else 3
    for i in range(count):
        rho = sampling.sample_pure_state(g, dim) if pure else sampling.sample_density_matrix(g, dim)
        doc = StateDocument(kind, "density", rho, {"seed": seed, "index": i})
        yield doc.converted(representation) if representation != "density" else doc


def cmd_sample(args) -> int:
    if args.count < 1:
        raise CLIError("--count must be at least 1", EXIT_CONSTRAINT)
    seed = _seed(args)
    docs = sample_documents(args.count, args.kind, seed, args.representation, args.pure)
    if args.format == "json":
        # JSON Lines: one compact, key-sorted document per line
        text = "".join(json.dumps(d.to_obj(), sort_keys=True) + "\n" for d in docs)
    else:
        text = "".join(render(d.to_obj(), "text") + "\n" for d in docs)
    _write_text(args.output, text)
    return EXIT_OK


def cmd_entropy(args) -> int:
    doc = _load_state(args.input)
    if doc.kind != "qutrit":
        raise CLIError("the entropic suite is defined for qutrit states", EXIT_MALFORMED)
    pi = doc.probabilities()
    obj = {
        "suite": [r.as_dict() for r in entropy.qutrit_entropic_suite(pi)],
        "matrix_element_diagnostics": [d.as_dict() for d in entropy.all_permutation_diagnostics(doc.density())],
    }
    _write_text(args.output, render(obj, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    io_flags = argparse.ArgumentParser(add_help=False)
    io_flags.add_argument("--input", "-i", default="-", help="input document path, '-' for stdin")
    io_flags.add_argument("--output", "-o", default="-", help="output path, '-' for stdout")
    io_flags.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(
        prog="suprematrix",
        description="Probability representation of qubit and qutrit states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", parents=[io_flags], help="density <-> probabilities")
    p.add_argument("--to", choices=("density", "probabilities"))
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("validate", parents=[io_flags], help="quantumness report; exit 1 if not a state")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("geometry", parents=[io_flags], help="triangle sides and Malevich squares")
    p.set_defaults(func=cmd_geometry)

    p = sub.add_parser("render", parents=[io_flags], help="SVG of the triadas")
    p.add_argument("--scale", type=float, default=100.0, help="SVG units per unit length")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("channel", help="qutrit channels on the probability vector")
    chan = p.add_subparsers(dest="channel_command", required=True)
    d = chan.add_parser("derive", parents=[io_flags], help="emit the 8x8 matrix and offset")
    d.add_argument("--channel", "-c", required=True)
    d.set_defaults(func=cmd_channel_derive)
    a = chan.add_parser("apply", parents=[io_flags], help="apply a channel to a state")
    a.add_argument("--channel", "-c", required=True)
    a.set_defaults(func=cmd_channel_apply)

    p = sub.add_parser("sample", parents=[io_flags], help="random states as JSON Lines")
    p.add_argument("--count", "-n", type=int, default=1)
    p.add_argument("--kind", choices=("qubit", "qutrit"), default="qutrit")
    p.add_argument("--seed", type=int, default=None, help=f"default: ${sampling.SEED_ENV_VAR} or 0")
    p.add_argument("--representation", choices=("density", "probabilities"), default="density")
    p.add_argument("--pure", action="store_true", help="sample pure states instead of Ginibre mixed states")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("entropy", parents=[io_flags], help="relative-entropy suite")
    p.set_defaults(func=cmd_entropy)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except DocumentError as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ChannelError as exc:
        print(f"error: channel violates {exc.invariant}: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except SuprematrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT


if __name__ == "__main__":
    sys.exit(main())
