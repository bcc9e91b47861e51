"""Command-line interface.

Commands: ``verify`` (identity suites), ``eval`` (one correlation),
``scan`` (1-2 variable sweeps), ``fig1``/``fig2`` (figure-data CSV emission),
``chsh`` (CHSH optimization). Exit codes: 0 success, 1 computational failure,
2 argument errors.

Numbers are printed with 17 significant digits (round-trip exact for IEEE-754
doubles) and CSV output uses LF line endings, so reruns with identical flags
are byte-identical. No environment variables are read; output is never
colored (NO_COLOR trivially honored).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

import numpy as np

from . import correlations as corr
from . import states as st
from .clifford import GammaLabel
from .errors import EprDiracError
from .lorentz import cmf_momentum, on_shell_momentum, parity_flip
from .verify import run_all

__all__ = ["main", "entrypoint"]


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad numeric list {text!r}: {exc}") from None


def _parse_direction(text: str) -> np.ndarray:
    """Direction as 'theta,phi' angles (radians) or 'x,y,z' unit 3-vector."""
    vals = _parse_floats(text)
    if len(vals) == 2:
        return corr.direction(vals)
    if len(vals) == 3:
        v = np.asarray(vals)
        norm = float(np.linalg.norm(v))
        if abs(norm - 1.0) > 1e-6:
            raise argparse.ArgumentTypeError(
                f"direction {text!r} has norm {norm}; deviation from 1 exceeds 1e-6"
            )
        return v / norm
    raise argparse.ArgumentTypeError(f"direction {text!r} needs 2 angles or 3 components")


def _parse_vec3(text: str) -> np.ndarray:
    vals = _parse_floats(text)
    if len(vals) != 3:
        raise argparse.ArgumentTypeError(f"momentum {text!r} needs exactly 3 components")
    return np.asarray(vals)


def _parse_complex_list(text: str) -> np.ndarray:
    try:
        return np.asarray([complex(part) for part in text.split(",")])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad complex list {text!r}: {exc}") from None


def _parse_mask(text: str) -> list[bool]:
    try:
        return [bool(int(part)) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad mask {text!r}: {exc}") from None


def _parse_label(text: str) -> GammaLabel:
    head, _, idx = text.partition(":")
    try:
        if head == "identity":
            return GammaLabel("identity")
        if head == "gamma5":
            return GammaLabel("gamma5")
        if head == "gamma":
            return GammaLabel("gamma_mu", mu=int(idx))
        if head == "gamma-gamma5":
            return GammaLabel("gamma_mu_gamma5", mu=int(idx))
        if head == "commutator":
            mu, nu = idx.split(",")
            return GammaLabel("commutator", mu=int(mu), nu=int(nu))
    except (ValueError, EprDiracError) as exc:
        raise argparse.ArgumentTypeError(f"bad Clifford label {text!r}: {exc}") from None
    raise argparse.ArgumentTypeError(
        f"unknown Clifford label {text!r} (use identity, gamma5, gamma:MU, "
        f"gamma-gamma5:MU, or commutator:MU,NU)"
    )


class _Sweep:
    VARS = ("beta", "theta_a", "phi_a", "theta_b", "phi_b")

    def __init__(self, text: str):
        parts = text.split(":")
        if len(parts) != 4:
            raise argparse.ArgumentTypeError(
                f"sweep {text!r} must look like var:start:stop:count"
            )
        name, start, stop, count = parts
        if name not in self.VARS:
            raise argparse.ArgumentTypeError(
                f"sweep variable {name!r} not in {self.VARS}"
            )
        try:
            self.start, self.stop, self.count = float(start), float(stop), int(count)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"sweep {text!r}: {exc}") from None
        if self.count < 2:
            raise argparse.ArgumentTypeError(f"sweep {text!r} needs count >= 2")
        if not (np.isfinite(self.start) and np.isfinite(self.stop)):
            raise argparse.ArgumentTypeError(f"sweep {text!r} has non-finite range")
        self.name = name

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)


def _emit(lines: Sequence[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def _rows_out(header: Sequence[str], rows: Sequence[Sequence[float]],
              out: str | None, fmt: str) -> None:
    if fmt == "json":
        lines = [json.dumps(dict(zip(header, map(float, row)))) for row in rows]
    else:
        lines = [",".join(header)] + [",".join(_fmt(x) for x in row) for row in rows]
    _emit(lines, out)


# ------------------------------------------------------------------ verify


def cmd_verify(args: argparse.Namespace) -> int:
    reports = run_all(samples=args.samples, seed=args.seed, tol_override=args.tol)
    if args.format == "json":
        payload = [
            {
                "suite": r.suite,
                "wall_time": r.wall_time,
                "checks": [
                    {"name": c.name, "max_error": c.max_error,
                     "tolerance": c.tolerance, "passed": c.passed}
                    for c in r.checks
                ],
            }
            for r in reports
        ]
        _emit([json.dumps(payload)], args.out)
    else:
        lines = ["suite,check,max_error,tolerance,status"]
        for r in reports:
            for c in r.checks:
                status = "pass" if c.passed else "FAIL"
                lines.append(f"{r.suite},{c.name},{c.max_error:.3e},{c.tolerance:.1e},{status}")
        _emit(lines, args.out)
    n_pass = sum(r.n_passed for r in reports)
    n_fail = sum(r.n_failed for r in reports)
    wall = sum(r.wall_time for r in reports)
    print(f"verify: {n_pass} checks passed, {n_fail} failed in {wall:.2f} s", file=sys.stderr)
    if n_fail:
        failing = [c.name for r in reports for c in r.checks if not c.passed]
        print("failing identities: " + ", ".join(failing), file=sys.stderr)
        return 1
    return 0


# -------------------------------------------------------------------- eval


def _momenta_from_args(args: argparse.Namespace) -> tuple[np.ndarray, np.ndarray]:
    if args.cmf:
        if args.n is None:
            raise EprDiracError("--cmf needs a flight direction --n")
        k = cmf_momentum(args.beta, args.n, args.mass)
        return k, parity_flip(k)
    if args.k is None or args.p is None:
        raise EprDiracError("give either --cmf (with --beta/--n) or both --k and --p")
    return (on_shell_momentum(args.k, args.mass),
            on_shell_momentum(args.p, args.mass))


def _build_state(args: argparse.Namespace) -> st.EnsembleState:
    if args.state == "ensemble":
        if args.ensemble_file is None:
            raise EprDiracError("--state ensemble needs --ensemble-file")
        return st.load_ensemble_csv(args.ensemble_file, m=args.mass, kind=args.kind,
                                    phi=args.phi, label=args.label)
    k, p = _momenta_from_args(args)
    if args.state == "pseudoscalar":
        return st.sharp_ensemble(st.pseudoscalar_kernel(k, p, args.mass))
    if args.state == "vector":
        if args.phi is None:
            raise EprDiracError("--state vector needs a polarization --phi")
        phi = args.phi
        if phi.shape == (3,):
            phi = np.concatenate(([0.0], phi))  # CMF: time component vanishes
        tol = args.tol if args.tol is not None else st.TRANSVERSALITY_TOL
        return st.sharp_ensemble(st.vector_kernel(k, p, phi, args.mass,
                                                  transversality_tol=tol))
    raise EprDiracError(f"state {args.state!r} is not oracle-backed")


def cmd_eval(args: argparse.Namespace) -> int:
    if args.state == "czachor":
        if args.n is None:
            raise EprDiracError("--state czachor needs --n")
        value = corr.correlation_czachor_cmf(args.n, args.beta, args.a, args.b)
        num, den = value, 1.0
    elif args.state == "triplet":
        if args.phi is None or args.phi.shape != (3,):
            raise EprDiracError("--state triplet needs a 3-component --phi")
        value = corr.correlation_triplet_nonrel(args.phi, args.a, args.b)
        num, den = value, 1.0
    else:
        state = _build_state(args)
        res = corr.correlate_oracle(state, args.a, args.b,
                                    mask_a=args.mask_a, mask_b=args.mask_b)
        value, num, den = res.value, res.numerator, res.denominator
    _rows_out(["value", "numerator", "denominator"], [[value, num, den]],
              args.out, args.format)
    return 0


# -------------------------------------------------------------------- scan


def _scan_correlator(args: argparse.Namespace) -> Callable[[float, np.ndarray, np.ndarray], float]:
    m = args.mass
    if args.state == "czachor":
        return lambda beta, a, b: corr.correlation_czachor_cmf(args.n, beta, a, b)
    if args.state == "triplet":
        if args.phi is None:
            raise EprDiracError("--state triplet needs --phi")
        return lambda beta, a, b: corr.correlation_triplet_nonrel(args.phi, a, b)
    if args.state == "pseudoscalar":
        def ps(beta: float, a: np.ndarray, b: np.ndarray) -> float:
            k = cmf_momentum(beta, args.n, m)
            kern = st.pseudoscalar_kernel(k, parity_flip(k), m)
            return corr.correlate_oracle(st.sharp_ensemble(kern), a, b).value
        return ps
    if args.state == "vector":
        if args.phi is None or args.phi.shape != (3,):
            raise EprDiracError("--state vector scans need a 3-component --phi (CMF)")
        def vec(beta: float, a: np.ndarray, b: np.ndarray) -> float:
            k = cmf_momentum(beta, args.n, m)
            phi4 = np.concatenate(([0.0], args.phi))
            kern = st.vector_kernel(k, parity_flip(k), phi4, m)
            return corr.correlate_oracle(st.sharp_ensemble(kern), a, b).value
        return vec
    raise EprDiracError(f"state {args.state!r} cannot be scanned")


def cmd_scan(args: argparse.Namespace) -> int:
    sweeps: list[_Sweep] = args.sweep or []
    if not 1 <= len(sweeps) <= 2:
        raise EprDiracError("scan needs one or two --sweep specifications")
    names = [s.name for s in sweeps]
    if len(set(names)) != len(names):
        raise EprDiracError("swept variables must be distinct")
    if args.n is None and args.state in ("czachor", "pseudoscalar", "vector"):
        raise EprDiracError(f"--state {args.state} needs a flight direction --n")

    angle_swept = {nm for nm in names if nm != "beta"}
    if args.a is not None and angle_swept & {"theta_a", "phi_a"}:
        raise EprDiracError("give --a either as a vector or via swept angles, not both")
    if args.b is not None and angle_swept & {"theta_b", "phi_b"}:
        raise EprDiracError("give --b either as a vector or via swept angles, not both")

    fixed = {"beta": args.beta, "theta_a": args.theta_a, "phi_a": args.phi_a,
             "theta_b": args.theta_b, "phi_b": args.phi_b}
    correlator = _scan_correlator(args)

    def point(values: dict[str, float]) -> float:
        a = args.a if args.a is not None else corr.direction(
            [values["theta_a"], values["phi_a"]])
        b = args.b if args.b is not None else corr.direction(
            [values["theta_b"], values["phi_b"]])
        return correlator(values["beta"], a, b)

    rows = []
    if len(sweeps) == 1:
        for x in sweeps[0].values():
            vals = dict(fixed)
            vals[names[0]] = float(x)
            rows.append([x, point(vals)])
    else:
        for x in sweeps[0].values():
            for y in sweeps[1].values():
                vals = dict(fixed)
                vals[names[0]] = float(x)
                vals[names[1]] = float(y)
                rows.append([x, y, point(vals)])
    _rows_out(names + ["value"], rows, args.out, args.format)
    return 0


# ------------------------------------------------------------------- fig1


def cmd_fig1(args: argparse.Namespace) -> int:
    n = np.array([0.0, 0.0, 1.0])
    thetas = np.linspace(0.0, np.pi, args.grid)
    rows = []
    for phi_b in args.phi_b:
        cos_pb, sin_pb = np.cos(phi_b), np.sin(phi_b)
        for theta_a in thetas:
            a = np.array([np.sin(theta_a), 0.0, np.cos(theta_a)])
            for theta_b in thetas:
                b = np.array([np.sin(theta_b) * cos_pb,
                              np.sin(theta_b) * sin_pb,
                              np.cos(theta_b)])
                rows.append([phi_b, theta_a, theta_b,
                             corr.delta_c_pseudoscalar(n, args.beta, a, b)])
    _rows_out(["phi_b", "theta_a", "theta_b", "delta_c"], rows, args.out, args.format)
    return 0


# ------------------------------------------------------------------- fig2


def cmd_fig2(args: argparse.Namespace) -> int:
    angles = np.linspace(0.0, 2.0 * np.pi, args.grid)
    rows = []
    for theta in args.theta:
        cos2 = np.cos(theta) ** 2
        for phi_a in angles:
            for phi_b in angles:
                rows.append([theta, phi_a, phi_b,
                             -2.0 * np.cos(phi_a) * np.cos(phi_b) * cos2])
    _rows_out(["theta", "phi_a", "phi_b", "delta_c"], rows, args.out, args.format)
    return 0


# ------------------------------------------------------------------- chsh


def cmd_chsh(args: argparse.Namespace) -> int:
    if args.state == "czachor":
        if args.n is None:
            raise EprDiracError("--state czachor needs --n")
        correlator = lambda a, b: corr.correlation_czachor_cmf(args.n, args.beta, a, b)
    elif args.state == "triplet":
        if args.phi is None or args.phi.shape != (3,):
            raise EprDiracError("--state triplet needs a 3-component --phi")
        correlator = lambda a, b: corr.correlation_triplet_nonrel(args.phi, a, b)
    else:
        correlator = corr.oracle_correlator(_build_state(args))
    value, dirs = corr.chsh_max(correlator, mode=args.mode,
                                grid_points=args.grid, descent_iters=args.iters,
                                seed=args.seed)
    header = ["chsh"] + [f"{nm}{ax}" for nm in ("a", "ap", "b", "bp") for ax in "xyz"]
    row = [value] + [float(x) for d in dirs for x in d]
    _rows_out(header, [row], args.out, args.format)
    return 0


# ------------------------------------------------------------------ parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mass", type=float, default=1.0, help="particle mass (default 1)")
    p.add_argument("--seed", type=int, default=7, help="seed for all randomness (default 7)")
    p.add_argument("--tol", type=float, default=None,
                   help="tolerance override (verify checks; eval/chsh transversality)")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="output format (default csv)")


def _add_state_options(p: argparse.ArgumentParser, states: tuple[str, ...]) -> None:
    p.add_argument("--state", choices=states, required=True)
    p.add_argument("--cmf", action="store_true",
                   help="center-of-mass frame: momenta from --beta and --n")
    p.add_argument("--beta", type=float, default=0.0, help="speed in [0,1) (default 0)")
    p.add_argument("--n", type=_parse_direction, default=None, help="flight direction")
    p.add_argument("--k", type=_parse_vec3, default=None,
                   help="antiparticle spatial momentum (energy recomputed on shell)")
    p.add_argument("--p", type=_parse_vec3, default=None,
                   help="particle spatial momentum (energy recomputed on shell)")
    p.add_argument("--phi", type=_parse_complex_list, default=None,
                   help="polarization: 3 components in the CMF, 4 with explicit momenta")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epr-dirac",
        description="Spin correlation functions of relativistic particle-antiparticle pairs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run every identity suite")
    _add_common(p)
    p.add_argument("--samples", type=int, default=1000,
                   help="random samples per suite (default 1000)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", help="evaluate one correlation")
    _add_common(p)
    _add_state_options(p, ("pseudoscalar", "vector", "czachor", "triplet", "ensemble"))
    p.add_argument("--a", type=_parse_direction, required=True,
                   help="particle measurement direction ('x,y,z' or 'theta,phi')")
    p.add_argument("--b", type=_parse_direction, required=True,
                   help="antiparticle measurement direction")
    p.add_argument("--ensemble-file", default=None, help="ensemble CSV path")
    p.add_argument("--kind", choices=("pseudoscalar", "vector", "general"),
                   default="pseudoscalar", help="kernel kind for ensembles")
    p.add_argument("--label", type=_parse_label, default=None,
                   help="Clifford label for general kernels")
    p.add_argument("--mask-a", type=_parse_mask, default=None,
                   help="particle-side inclusion mask, e.g. 1,0,1")
    p.add_argument("--mask-b", type=_parse_mask, default=None,
                   help="antiparticle-side inclusion mask")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("scan", help="sweep a correlator over 1-2 variables")
    _add_common(p)
    _add_state_options(p, ("pseudoscalar", "vector", "czachor", "triplet"))
    p.add_argument("--sweep", type=_Sweep, action="append",
                   help="var:start:stop:count with var in "
                        "{beta, theta_a, phi_a, theta_b, phi_b}; repeat for 2D")
    p.add_argument("--a", type=_parse_direction, default=None)
    p.add_argument("--b", type=_parse_direction, default=None)
    p.add_argument("--theta-a", type=float, default=0.0)
    p.add_argument("--phi-a", type=float, default=0.0)
    p.add_argument("--theta-b", type=float, default=0.0)
    p.add_argument("--phi-b", type=float, default=0.0)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("fig1", help="deviation surface of the Czachor-observable correlation")
    _add_common(p)
    p.add_argument("--beta", type=float, default=0.999, help="speed (default 0.999)")
    p.add_argument("--phi-b", type=_parse_floats,
                   default=[0.0, np.pi / 4.0],
                   help="comma list of phi_b values (default 0,pi/4)")
    p.add_argument("--grid", type=int, default=61,
                   help="points per theta axis over [0, pi] (default 61)")
    p.set_defaults(func=cmd_fig1)

    p = sub.add_parser("fig2", help="ultrarelativistic vector-channel deviation surface")
    _add_common(p)
    p.add_argument("--theta", type=_parse_floats, default=[0.0],
                   help="comma list of polar angles between polarization and flight "
                        "direction (default 0)")
    p.add_argument("--grid", type=int, default=61,
                   help="points per phi axis over [0, 2 pi] (default 61)")
    p.set_defaults(func=cmd_fig2)

    p = sub.add_parser("chsh", help="maximize the CHSH combination for a state")
    _add_common(p)
    _add_state_options(p, ("pseudoscalar", "vector", "czachor", "triplet"))
    p.add_argument("--mode", choices=("planar", "full"), default="planar")
    p.add_argument("--grid", type=int, default=24, help="grid points per angle (default 24)")
    p.add_argument("--iters", type=int, default=60,
                   help="coordinate-descent iterations (default 60)")
    p.set_defaults(func=cmd_chsh)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "beta", None) is not None and hasattr(args, "state"):
        if not 0.0 <= args.beta < 1.0:
            parser.error(f"--beta must be in [0, 1), got {args.beta}")
    if getattr(args, "grid", None) is not None and args.grid < 2:
        parser.error(f"--grid needs at least 2 points, got {args.grid}")
    if getattr(args, "samples", None) is not None and args.samples < 1:
        parser.error(f"--samples must be >= 1, got {args.samples}")
    try:
        return args.func(args)
    except EprDiracError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())
