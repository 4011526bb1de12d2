"""
Command-line harness.

    geoqm verify  --suite S --dim N --trials K [--tol T] [--seed R] [--report PATH]
    geoqm evolve  --state P --hamiltonian P --t-final T [--dt D] [--method exact|rk4] --out P
    geoqm bloch   --state P
    geoqm gate    --circuit P --state P [--out P]

Exit codes: 0 success, 1 domain or validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import io
from .composite import pauli_decompose
from .density import casimir, make_density, von_neumann_flow
from .exceptions import GeometryError
from .gates import apply_circuit, load_circuit
from .observables import check_hermitian
from .pauli import density_to_bloch
from .projective import bloch_map, pure_projector
from .realified import to_real
from .verify import MAX_DIM, SUITES, run_verify


def _clean(values) -> list:
    # avoid "-0.0" in printed JSON
    return (np.asarray(values, dtype=float) + 0.0).tolist()


def _load_density(path) -> np.ndarray:
    kind, data = io.load(path)
    if kind == "vector":
        return pure_projector(to_real(data))
    return make_density(data)


def cmd_verify(args) -> int:
    report = run_verify(args.suite, args.dim, args.trials, args.tol, args.seed, args.fd_tol)
    text = report.to_json()
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for f in report.failures:
        print(f"FAIL {f['property']} trial={f['trial']} deviation={f['deviation']:.3e}", file=sys.stderr)
    return 0 if report.passed else 1


def cmd_evolve(args) -> int:
    rho0 = _load_density(args.state)
    kind, H = io.load(args.hamiltonian)
    if kind != "matrix":
        raise GeometryError("hamiltonian file must hold a matrix")
    H = check_hermitian(H)
    traj = von_neumann_flow(rho0, H, args.t_final, args.dt, args.method)
    traj.to_csv(args.out)
    final = traj.final
    n = final.shape[0]
    summary = {
        "t_final": float(traj.times[-1]),
        "purity": casimir(final, 2).value,
        "casimirs": {str(k): casimir(final, k).value for k in range(2, max(3, n) + 1)},
        "rows": len(traj.times),
    }
    if n == 2:
        summary["x"] = _clean(density_to_bloch(final))
    print(json.dumps(summary))
    return 0


def cmd_bloch(args) -> int:
    kind, data = io.load(args.state)
    dim = data.shape[0]
    if dim == 2:
        x = bloch_map(to_real(data)) if kind == "vector" else density_to_bloch(make_density(data))
        print(json.dumps({"x": _clean(x)}))
        return 0
    if dim == 4:
        rho = pure_projector(to_real(data)) if kind == "vector" else data
        dec = pauli_decompose(rho)
        print(json.dumps({"p": _clean(dec.p), "q": _clean(dec.q), "r": _clean(dec.r)}))
        return 0
    raise GeometryError(f"bloch supports dim 2 (qubit) or 4 (two qubits), got {dim}")


def cmd_gate(args) -> int:
    circuit = load_circuit(args.circuit)
    kind, psi = io.load(args.state)
    if kind != "vector":
        raise GeometryError("gate expects a pure-state vector")
    out = io.dumps("vector", apply_circuit(psi, circuit))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return 0


def _positive(kind):
    def parse(text):
        value = kind(text)
        if value <= 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {text}")
        return value
    return parse


def _dim(text):
    value = int(text)
    if not 1 <= value <= MAX_DIM:
        raise argparse.ArgumentTypeError(f"dim must be in [1, {MAX_DIM}]")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geoqm", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run randomized identity suites")
    p.add_argument("--suite", required=True, choices=(*SUITES, "all"))
    p.add_argument("--dim", required=True, type=_dim)
    p.add_argument("--trials", type=_positive(int), default=100)
    p.add_argument("--tol", type=_positive(float), default=1e-10)
    p.add_argument("--fd-tol", type=_positive(float), default=1e-6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("evolve", help="integrate the von Neumann equation")
    p.add_argument("--state", required=True)
    p.add_argument("--hamiltonian", required=True)
    p.add_argument("--t-final", type=float, required=True)
    p.add_argument("--dt", type=_positive(float), default=1e-3)
    p.add_argument("--method", choices=("exact", "rk4"), default="exact")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("bloch", help="Bloch vector or two-qubit Pauli coefficients")
    p.add_argument("--state", required=True)
    p.set_defaults(func=cmd_bloch)

    p = sub.add_parser("gate", help="apply a circuit of built-in gates to a state")
    p.add_argument("--circuit", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.suite == "composite" and args.dim != 4:
        parser.error("the composite suite is defined for --dim 4 only")
    if args.command == "evolve" and args.t_final < 0:
        parser.error("--t-final must be non-negative")
    try:
        return args.func(args)
    except (GeometryError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
