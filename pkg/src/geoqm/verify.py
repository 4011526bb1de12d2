"""
Randomized identity suites and the verification report.

Every trial draws from ``SeedSequence([seed, suite_index, trial])``, so a
report depends only on ``(suite, dim, trials, seed, tolerances)`` and not on
execution order.  Properties are either algebraic (checked against ``tol``)
or finite-difference estimates (checked against ``fd_tol``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.linalg import expm

from . import composite, density, gates, observables as obs, projective, realified
from .finite_diff import exterior_derivative_2form, gradient
from .pauli import SIGMA3, bloch_to_density, density_to_bloch, pauli_coefficients
from .sampling import (
    random_decomposition,
    random_density,
    random_hermitian,
    random_realified,
    random_state,
    random_unit_state,
    random_unitary,
    spectral_decomposition,
    trial_rng,
)

SUITES = ("realified", "brackets", "projective", "density", "composite", "gates")
FD = "fd"
ALG = "algebraic"
MAX_DIM = 16


@dataclass
class VerificationReport:
    suite: str
    dim: int
    trials: int
    seed: int
    tol: float
    fd_tol: float
    max_deviation: dict[str, float] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "dim": self.dim,
            "trials": self.trials,
            "seed": self.seed,
            "tol": self.tol,
            "fd_tol": self.fd_tol,
            "passed": self.passed,
            "max_deviation": dict(sorted(self.max_deviation.items())),
            "failures": self.failures,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


# -- suites --------------------------------------------------------------------
# Each returns {property: (category, deviation)} for one trial.

def _realified(rng, n):
    x, y = random_realified(rng, n), random_realified(rng, n)
    J = realified.apply_complex_structure
    g, w = realified.metric, realified.symplectic
    gm, om, Jm = realified.tensor_matrices(n)
    G = obs.jordan_matrix(n)
    L = obs.poisson_matrix(n)
    gxy, wxy, hxy = realified.hermitian_parts(x, y)
    _, _, hyx = realified.hermitian_parts(y, x)
    scale = max(1.0, np.linalg.norm(x) * np.linalg.norm(y))
    A = random_hermitian(rng, n)
    x0 = random_realified(rng, n)
    return {
        "j_squared": (ALG, np.max(np.abs(J(J(x)) + x))),
        "metric_j_invariance": (ALG, max(abs(g(J(x), J(y)) - g(x, y)), abs(g(J(x), y) + g(x, J(y)))) / scale),
        "symplectic_j_invariance": (ALG, max(abs(w(J(x), J(y)) - w(x, y)), abs(w(J(x), y) + w(x, J(y)))) / scale),
        "hermitian_split": (ALG, max(abs(hxy - complex(g(x, y), w(x, y))), abs(gxy - g(x, y)), abs(wxy - w(x, y))) / scale),
        "compatibility": (ALG, abs(g(x, y) - w(x, J(y))) / scale),
        "conjugate_symmetry": (ALG, abs(hxy - hyx.conjugate()) / scale),
        "jordan_equals_j_lambda": (ALG, np.max(np.abs(G - Jm @ L))),
        "matrix_forms": (ALG, max(abs(x @ gm @ y - g(x, y)), abs(x @ om @ y - w(x, y)), np.max(np.abs(Jm @ x - J(x)))) / scale),
        "homogeneity_quadratic": (FD, abs(realified.homogeneity_degree(
            lambda v: obs.quadratic_form(A, v).real + v @ v, x0) - 2.0)),
        "homogeneity_expectation": (FD, abs(realified.homogeneity_degree(
            lambda v: obs.expectation(A, v) + 10.0, x0) - 0.0)),
    }


def _brackets(rng, n):
    A, B, C = (random_hermitian(rng, n) for _ in range(3))
    x = random_realified(rng, n)
    scale = max(1.0, x @ x) * max(1.0, np.linalg.norm(A) * np.linalg.norm(B))
    pb = obs.poisson_bracket(A, B, x)
    jb = obs.jordan_bracket(A, B, x)
    rhs_p = -1j * obs.quadratic_form(obs.commutator(A, B), x)
    rhs_j = obs.quadratic_form(obs.anticommutator(A, B), x)

    # finite-difference gradients as an independent route to the same bracket
    fA = lambda v: obs.quadratic_form(A, v).real
    fB = lambda v: obs.quadratic_form(B, v).real
    dA_fd, dB_fd = gradient(fA, x), gradient(fB, x)
    pb_fd, jb_fd = obs.bracket_general(dA_fd, dB_fd, x)

    # Jacobi: inner brackets are real quadratic forms x.M.x with M = T_B L T_C
    L = obs.poisson_matrix(n)
    T = {k: obs.tensorize(M) for k, M in (("A", A), ("B", B), ("C", C))}
    d = {k: T[k] @ x for k in T}

    def inner_diff(a, b):
        M = T[a] @ L @ T[b]
        return (M + M.T) @ x

    jac = (
        obs.bracket_general(d["A"], inner_diff("B", "C"))[0]
        + obs.bracket_general(d["B"], inner_diff("C", "A"))[0]
        + obs.bracket_general(d["C"], inner_diff("A", "B"))[0]
    )
    fBv, fCv = fB(x), obs.quadratic_form(C, x).real
    lhs_leib = obs.bracket_general(d["A"], fCv * d["B"] + fBv * d["C"])[0]
    rhs_leib = obs.poisson_bracket(A, B, x) * fCv + fBv * obs.poisson_bracket(A, C, x)
    TA = obs.tensorize(A)
    _, _, Jm = realified.tensor_matrices(n)
    return {
        "poisson_identity": (ALG, abs(pb - rhs_p) / scale),
        "jordan_identity": (ALG, abs(jb - rhs_j) / scale),
        "poisson_real": (ALG, abs(rhs_p.imag) / scale),
        "poisson_fd_gradient": (FD, abs(pb_fd - pb) / scale),
        "jordan_fd_gradient": (FD, abs(jb_fd - jb) / scale),
        "antisymmetry": (ALG, abs(pb + obs.poisson_bracket(B, A, x)) / scale),
        "jacobi": (ALG, abs(jac) / (scale * max(1.0, np.linalg.norm(C)) * max(1.0, x @ x))),
        "leibniz": (ALG, abs(lhs_leib - rhs_leib) / (scale * max(1.0, np.linalg.norm(C)) * max(1.0, x @ x))),
        "tensorize_commutes_with_j": (ALG, np.max(np.abs(TA @ Jm - Jm @ TA))),
        "hamiltonian_contraction": (ALG, abs(
            realified.symplectic(obs.hamiltonian_field(d["A"]), obs.hamiltonian_field(d["B"])) - pb) / scale),
    }


def _fs_real_display(z, v, w):
    """g_FS and omega_FS from the (q, p, H_a, phi_a) expressions."""
    q, p = z.real, z.imag
    vq, vp, wq, wp = v.real, v.imag, w.real, w.imag
    Ha = (p**2 + q**2) / 2
    H = Ha.sum()
    dH = lambda tq, tp: np.sum(q * tq + p * tp)
    Hdphi = lambda tq, tp: Ha * (q * tp - p * tq) / (2 * Ha)
    gfs = (np.sum(vq * wq + vp * wp) / (2 * H)
           - dH(vq, vp) * dH(wq, wp) / (2 * H) ** 2
           - 4 * np.sum(Hdphi(vq, vp)) * np.sum(Hdphi(wq, wp)) / (2 * H) ** 2)
    wfs = (np.sum(vq * wp - vp * wq) / (2 * H)
           - (dH(vq, vp) * np.sum(2 * Hdphi(wq, wp)) - dH(wq, wp) * np.sum(2 * Hdphi(vq, vp))) / (2 * H) ** 2)
    return gfs, wfs


def _projective(rng, n):
    x = random_realified(rng, n)
    U = random_unitary(rng, n)
    z = realified.to_complex(x)
    J = realified.apply_complex_structure
    out = {}
    Fu = projective.momentum_map(realified.to_real(U @ z))
    out["momentum_equivariance"] = (ALG, np.max(np.abs(Fu - U @ projective.momentum_map(x) @ U.conj().T)) / max(1.0, x @ x))
    rho = projective.pure_projector(x)
    out["projector_idempotent"] = (ALG, np.max(np.abs(rho @ rho - rho)))
    out["projector_trace"] = (ALG, abs(np.trace(rho) - 1))
    lam = complex(*rng.normal(size=2))
    out["projector_scale_invariance"] = (ALG, np.max(np.abs(
        projective.pure_projector(realified.to_real(lam * z)) - rho)))
    out["connection_delta"] = (ALG, abs(projective.connection_form(x, x) - 1))
    out["connection_gamma"] = (ALG, abs(projective.connection_form(x, J(x)) - 1j))
    v, w = random_realified(rng, n), random_realified(rng, n)
    hv = projective.horizontal_projection(x, v)
    out["horizontal_kernel"] = (ALG, abs(projective.connection_form(x, hv)) * max(1.0, x @ x) / max(1.0, v @ v))
    out["horizontal_idempotent"] = (ALG, np.max(np.abs(projective.horizontal_projection(x, hv) - hv)) / max(1.0, np.linalg.norm(v)))
    norm2 = x @ x
    out["fs_vertical_kernel"] = (ALG, max(
        abs(projective.fubini_study(x, x, w)), abs(projective.fubini_study(x, J(x), w)),
        abs(projective.fubini_study(x, w, x)), abs(projective.fubini_study(x, w, J(x))),
    ) * norm2 / max(1.0, np.linalg.norm(w) * np.sqrt(norm2)))
    out["fs_conjugate_symmetry"] = (ALG, abs(
        projective.fubini_study(x, v, w) - projective.fubini_study(x, w, v).conjugate()) * norm2 / max(1.0, np.linalg.norm(v) * np.linalg.norm(w)))
    K = projective.fubini_study_matrix(x)
    P = np.array([projective.horizontal_projection(x, e) for e in np.eye(2 * n)]).T
    gram = P.T @ K.real @ P
    out["fs_horizontal_psd"] = (ALG, max(0.0, -np.linalg.eigvalsh((gram + gram.T) / 2)[0]))
    # conformal factor: on horizontal vectors FS = <v|w>/|psi|^2
    hw = projective.horizontal_projection(x, w)
    _, _, hvw = realified.hermitian_parts(hv, hw)
    out["fs_conformal"] = (ALG, abs(projective.fubini_study(x, hv, hw) - hvw / norm2) * norm2 / max(1.0, abs(hvw)))

    # qubit-specific checks run on C^2 whatever n is
    psi = random_realified(rng, 2)
    zq = realified.to_complex(psi)
    xb = projective.bloch_map(psi)
    out["bloch_unit_norm"] = (ALG, abs(np.linalg.norm(xb) - 1))
    out["bloch_projector"] = (ALG, np.max(np.abs(projective.pure_projector(psi) - bloch_to_density(xb))))
    c = complex(*rng.normal(size=2))
    out["bloch_scale_phase_invariance"] = (ALG, np.max(np.abs(projective.bloch_map(realified.to_real(c * zq)) - xb)))
    theta = rng.uniform(-np.pi, np.pi)
    Rz = expm(-0.5j * theta * SIGMA3)
    rot = np.array([[np.cos(theta), -np.sin(theta), 0], [np.sin(theta), np.cos(theta), 0], [0, 0, 1]])
    out["bloch_rotation"] = (ALG, np.max(np.abs(projective.bloch_map(realified.to_real(Rz @ zq)) - rot @ xb)))
    Ha = np.abs(zq) ** 2 / 2
    if np.min(Ha) > 1e-3 * Ha.sum():
        vq, wq = random_state(rng, 2), random_state(rng, 2)
        gfs, wfs = _fs_real_display(zq, vq, wq)
        fs = projective.fubini_study(psi, realified.to_real(vq), realified.to_real(wq))
        out["fs_real_display"] = (ALG, max(abs(gfs - fs.real), abs(wfs - fs.imag)))
    dw = exterior_derivative_2form(lambda y: projective.fubini_study_matrix(y).imag, psi / np.linalg.norm(psi))
    out["fs_closed"] = (FD, np.max(np.abs(dw)))
    return out


def _density(rng, n):
    out = {}
    rho = random_density(rng, n)
    A, B = random_hermitian(rng, n), random_hermitian(rng, n)
    d1 = spectral_decomposition(rho)
    d2 = random_decomposition(rng, rho)
    e1, e2 = density.extended_brackets(d1, A, B), density.extended_brackets(d2, A, B)
    tr = density.density_brackets(rho, A, B)
    scale = max(1.0, np.linalg.norm(A) * np.linalg.norm(B))
    out["decomposition_independence"] = (ALG, max(abs(e1[0] - e2[0]), abs(e1[1] - e2[1])) / scale)
    out["extended_trace_form"] = (ALG, max(abs(e2[0] - tr[0]), abs(e2[1] - tr[1])) / scale)
    out["mix_reconstruction"] = (ALG, max(np.max(np.abs(density.mix(d1) - rho)), np.max(np.abs(density.mix(d2) - rho))))
    out["mix_linearity"] = (ALG, abs(
        sum(p * density.expectation_density(projective.pure_projector(s), A) for p, s in zip(d2.weights, d2.states))
        - density.expectation_density(rho, A)) / max(1.0, np.linalg.norm(A)))
    U = random_unitary(rng, n)
    rot = U @ rho @ U.conj().T
    out["casimir_invariance"] = (ALG, max(
        abs(density.casimir(rot, k).value - density.casimir(rho, k).value) for k in (2, 3, 4)))

    H = random_hermitian(rng, n)
    H /= np.linalg.norm(H, 2)
    t_final, dt = 1.0, 1e-3
    ex = density.von_neumann_flow(rho, H, t_final, dt, "exact")
    rk = density.von_neumann_flow(rho, H, t_final, dt, "rk4")
    out["flow_rk4_vs_exact"] = (FD, np.max(np.abs(ex.final - rk.final)))
    out["flow_exact_vs_expm"] = (ALG, np.max(np.abs(ex.final - expm(-1j * H * t_final) @ rho @ expm(1j * H * t_final))))
    out["flow_spectrum"] = (FD, np.max(np.abs(np.linalg.eigvalsh(rk.final) - np.linalg.eigvalsh(rho))))
    out["flow_purity"] = (FD, abs(density.casimir(rk.final, 2).value - density.casimir(rho, 2).value))

    xi1, xi2 = 1j * random_hermitian(rng, n), 1j * random_hermitian(rng, n)
    out["orbit_antisymmetry"] = (ALG, abs(density.orbit_symplectic_form(rho, xi1, xi2) + density.orbit_symplectic_form(rho, xi2, xi1)))
    if n >= 2:
        evals = np.sort(rng.dirichlet(np.ones(n)))
        if np.min(np.diff(evals)) > 1e-3:
            gram = density.orbit_form_gram(np.diag(evals))
            rank = np.linalg.matrix_rank(gram, tol=1e-10)
            diag_null = max(np.max(np.abs(gram[:, k])) for k in range(n))
            out["orbit_kernel_rank"] = (ALG, float(abs(rank - (n * n - n))))
            out["orbit_kernel_diagonal"] = (ALG, diag_null)

    # Bloch ball (n = 2)
    rq = random_density(rng, 2)
    xq = density_to_bloch(rq)
    Aq, Bq = random_hermitian(rng, 2), random_hermitian(rng, 2)
    dq = random_decomposition(rng, rq)
    lp = density.lie_poisson_bloch(xq, Aq, Bq)
    a, b = pauli_coefficients(Aq)[1], pauli_coefficients(Bq)[1]
    out["lie_poisson_vs_extended"] = (ALG, abs(lp - 2 * density.extended_brackets(dq, Aq, Bq)[0]))
    out["lie_poisson_vs_tensor"] = (ALG, abs(lp - 2 * a @ density.bloch_poisson_tensor(xq) @ b))
    out["casimir_bloch"] = (ALG, abs(density.casimir(rq, 2).value - (1 + xq @ xq) / 2))
    out["casimir_central"] = (ALG, np.max(np.abs(2 * xq @ density.bloch_poisson_tensor(xq))))
    u = xq / np.linalg.norm(xq)
    v = np.cross(u, rng.normal(size=3))
    Jv = density.partial_complex_structure(xq, v)
    out["partial_cs_square"] = (ALG, np.max(np.abs(density.partial_complex_structure(xq, Jv) + v)) / max(1.0, np.linalg.norm(v)))
    out["partial_cs_casimir_kernel"] = (ALG, np.max(np.abs(density.partial_complex_structure(xq, xq, project=True))))
    out["partial_cs_defining_relation"] = (ALG, np.max(np.abs(
        density.partial_complex_structure(u, a, project=True) - density.bloch_hamiltonian_vector(u, a))))
    alpha = np.cross(xq, rng.normal(size=3))
    tv = np.cross(xq, rng.normal(size=3))
    out["ball_form_left_inverse"] = (ALG, abs(
        density.ball_two_form(xq, density.bloch_hamiltonian_vector(xq, alpha), tv) + alpha @ tv))
    r2 = xq @ xq
    out["ball_form_not_closed"] = (FD, abs(density.ball_two_form_exterior_derivative(xq) - 1 / r2) * r2)
    return out


def _composite(rng, n):
    out = {}
    rho = random_density(rng, 4)
    dec = composite.pauli_decompose(rho)
    out["pauli_roundtrip"] = (ALG, np.max(np.abs(dec.to_matrix() - rho)))
    out["purity_identity"] = (ALG, abs(np.trace(rho @ rho).real - (1 + dec.squared_norm()) / 4))
    nv, mv = rng.normal(size=3), rng.normal(size=3)
    nv, mv = nv / np.linalg.norm(nv), mv / np.linalg.norm(mv)
    sep = composite.separable_pure(nv, mv)
    ev = np.linalg.eigvalsh(sep)
    out["separable_rank_one"] = (ALG, max(abs(ev[-1] - 1), np.max(np.abs(ev[:-1]))))
    sd = composite.pauli_decompose(sep)
    out["separable_decomposition"] = (ALG, max(
        np.max(np.abs(sd.p - nv)), np.max(np.abs(sd.q - mv)), np.max(np.abs(sd.r - np.outer(nv, mv)))))
    zn = _bloch_lift(nv)
    wm = _bloch_lift(mv)
    out["separable_vs_tensor_state"] = (ALG, np.max(np.abs(
        projective.pure_projector(realified.to_real(composite.tensor_state(zn, wm))) - sep)))
    z, w = random_state(rng, 2), random_state(rng, 2)
    out["tensor_norm"] = (ALG, abs(np.linalg.norm(composite.tensor_state(z, w)) - np.linalg.norm(z) * np.linalg.norm(w)))
    idx = tuple(int(i) for i in rng.integers(1, 3, size=4))
    conj = tuple(bool(c) for c in rng.integers(0, 2, size=4))
    lhs, rhs = composite.product_poisson_sides(*idx, z, w, conj)
    out["product_poisson_rule"] = (ALG, abs(lhs - rhs) / max(1.0, np.linalg.norm(z) * np.linalg.norm(w)) ** 2)
    cf = composite.cartan_canonical_form(rho)
    out["cartan_reconstruction"] = (ALG, np.max(np.abs(cf.to_matrix() - rho)))
    out["cartan_unitary"] = (ALG, np.max(np.abs(cf.U.conj().T @ cf.U - np.eye(4))))
    diag = np.diag(cf.diagonal()).real
    out["cartan_simplex"] = (ALG, max(0.0, -diag.min(), diag.max() - 1, np.max(np.abs(cf.p)) - 1))
    return out


def _bloch_lift(x) -> np.ndarray:
    """A unit vector of C^2 whose Bloch vector is x."""
    theta = np.arccos(np.clip(x[2], -1, 1))
    phi = np.arctan2(x[1], x[0])
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])


def _gates(rng, n):
    out = {}
    theta = rng.uniform(-np.pi, np.pi)
    psi = random_unit_state(rng, 2)
    for name, th in (("hadamard", None), ("phase", None), ("phase_shift", theta)):
        S = gates.builtin_generating(name, th)
        out[f"{name}_unitary"] = (ALG, np.max(np.abs(S.U.conj().T @ S.U - np.eye(2))))
        out[f"{name}_canonical_residual"] = (ALG, gates.canonical_residual(S, psi, S.U @ psi))
    H = gates.builtin_generating("hadamard").U
    out["hadamard_involution"] = (ALG, np.max(np.abs(H @ H - np.eye(2))))
    x = projective.bloch_map(realified.to_real(psi))
    xh = projective.bloch_map(realified.to_real(H @ psi))
    out["hadamard_bloch_involution"] = (ALG, np.max(np.abs(xh - np.array([x[2], -x[1], x[0]]))))
    out["phase_shift_pi"] = (ALG, np.max(np.abs(
        gates.builtin_generating("phase_shift", np.pi).U - gates.builtin_generating("phase").U)))
    Us = [gates.GeneratingFunction(random_unitary(rng, n)) for _ in range(3)]
    z0 = random_unit_state(rng, n)
    direct = Us[2].U @ Us[1].U @ Us[0].U @ z0
    left = gates.apply_circuit(gates.apply_circuit(z0, Us[:1]), Us[1:])
    right = gates.apply_circuit(z0, [gates.GeneratingFunction(Us[1].U @ Us[0].U), Us[2]])
    out["circuit_associativity"] = (ALG, max(np.max(np.abs(left - direct)), np.max(np.abs(right - direct))))
    out["circuit_norm"] = (ALG, abs(np.linalg.norm(direct) - 1))
    return out


_SUITE_FUNCS: dict[str, Callable] = {
    "realified": _realified,
    "brackets": _brackets,
    "projective": _projective,
    "density": _density,
    "composite": _composite,
    "gates": _gates,
}


def run_verify(
    suite: str,
    dim: int,
    trials: int,
    tol: float = 1e-10,
    seed: int = 0,
    fd_tol: float = 1e-6,
) -> VerificationReport:
    """Run a named suite (or ``"all"``) and collect max deviations and failures.

    The composite suite always works on two qubits (C^4) and is only valid
    for ``dim == 4``; under ``"all"`` it is skipped for other dimensions.
    """
    if suite != "all" and suite not in _SUITE_FUNCS:
        raise KeyError(f"unknown suite {suite!r}")
    if not 1 <= dim <= MAX_DIM:
        raise ValueError(f"dim must be in [1, {MAX_DIM}]")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if suite == "composite" and dim != 4:
        raise ValueError("the composite suite is defined for dim 4 only")
    if suite == "all":
        names = [s for s in SUITES if s != "composite" or dim == 4]
    else:
        names = [suite]

    report = VerificationReport(suite=suite, dim=dim, trials=trials, seed=seed, tol=tol, fd_tol=fd_tol)
    for name in names:
        for trial in range(trials):
            rng = trial_rng(seed, SUITES.index(name), trial)
            for prop, (kind, dev) in _SUITE_FUNCS[name](rng, dim).items():
                key = prop if suite != "all" else f"{name}.{prop}"
                dev = float(dev)
                report.max_deviation[key] = max(report.max_deviation.get(key, 0.0), dev)
                limit = fd_tol if kind == FD else tol
                if not dev <= limit:
                    report.failures.append({"property": key, "trial": trial, "deviation": dev})
    return report
