"""Acceptance criteria, one test per criterion, each reporting a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py`` (the summary lines are
printed at the end of the session) or ``python3 tests/test_acceptance.py``.
"""

import subprocess
import sys
import time

import numpy as np
import pytest

from geoqm.composite import monomial_pairs, pauli_decompose, product_poisson_sides, separable_pure
from geoqm.density import (
    ball_two_form_exterior_derivative,
    casimir,
    extended_brackets,
    orbit_form_gram,
    orbit_symplectic_form,
    von_neumann_flow,
)
from geoqm.gates import builtin_generating, canonical_residual
from geoqm.observables import (
    anticommutator,
    commutator,
    jordan_bracket,
    jordan_matrix,
    poisson_bracket,
    poisson_matrix,
    quadratic_form,
)
from geoqm.pauli import SIGMA0, SIGMA1, SIGMA2, SIGMA3, SIGMAS
from geoqm.projective import (
    bloch_map,
    connection_form,
    fubini_study,
    horizontal_projection,
    momentum_map,
    pure_projector,
)
from geoqm.realified import apply_complex_structure as J, hermitian_parts, metric, symplectic, tensor_matrices, to_complex, to_real
from geoqm.sampling import complex_normal, random_decomposition, random_density, random_hermitian, random_realified, random_unitary

RESULTS: dict[int, str] = {}


def record(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title} ({detail})"
    RESULTS[number] = line
    print(line)
    assert ok, line


def test_criterion_01_bracket_theorems():
    start = time.perf_counter()
    worst = 0.0
    for n in (2, 3, 4):
        rng = np.random.default_rng(1000 + n)
        for _ in range(200):
            A, B = random_hermitian(rng, n), random_hermitian(rng, n)
            x = random_realified(rng, n)
            worst = max(
                worst,
                abs(poisson_bracket(A, B, x) - (-1j) * quadratic_form(commutator(A, B), x)),
                abs(jordan_bracket(A, B, x) - quadratic_form(anticommutator(A, B), x)),
            )
    elapsed = time.perf_counter() - start
    record(1, "Poisson and Jordan bracket theorems", worst < 1e-10 and elapsed < 5,
           f"max dev {worst:.2e}, {elapsed:.2f} s")


def test_criterion_02_tensor_triple():
    worst = 0.0
    for n in (1, 2, 3, 4):
        rng = np.random.default_rng(2000 + n)
        g_mat, w_mat, J_mat = tensor_matrices(n)
        worst = max(worst, np.max(np.abs(J_mat @ J_mat + np.eye(2 * n))),
                    np.max(np.abs(jordan_matrix(n) - J_mat @ poisson_matrix(n))))
        for _ in range(100):
            x, y = random_realified(rng, n), random_realified(rng, n)
            g, w, h = hermitian_parts(x, y)
            worst = max(
                worst,
                abs(h - complex(g, w)),
                abs(h - np.vdot(to_complex(x), to_complex(y))),
                abs(metric(J(x), J(y)) - g),
                abs(symplectic(J(x), J(y)) - w),
                np.max(np.abs(J(J(x)) + x)),
            )
    record(2, "tensor triple axioms", worst < 1e-12, f"max dev {worst:.2e}")


def test_criterion_03_momentum_equivariance():
    worst = 0.0
    rng = np.random.default_rng(3000)
    for trial in range(100):
        n = 1 + trial % 4
        U, x = random_unitary(rng, n), random_realified(rng, n)
        diff = momentum_map(to_real(U @ to_complex(x))) - U @ momentum_map(x) @ U.conj().T
        worst = max(worst, np.max(np.abs(diff)))
    record(3, "momentum map equivariance", worst < 1e-12, f"max dev {worst:.2e}")


def test_criterion_04_connection_and_fubini_study():
    rng = np.random.default_rng(4000)
    worst = 0.0
    lowest = np.inf
    for _ in range(100):
        n = int(rng.integers(2, 5))
        z = complex_normal(rng, n)
        x = to_real(z / np.linalg.norm(z))
        worst = max(worst, abs(connection_form(x, x) - 1), abs(connection_form(x, J(x)) - 1j))
        w = random_realified(rng, n)
        for v in (x, J(x)):
            worst = max(worst, abs(fubini_study(x, v, v)), abs(fubini_study(x, v, w)), abs(fubini_study(x, w, v)))
        vecs = [horizontal_projection(x, random_realified(rng, n)) for _ in range(2 * n)]
        gram = np.array([[fubini_study(x, a, b) for b in vecs] for a in vecs])
        lowest = min(lowest, np.linalg.eigvalsh(gram).min())
    record(4, "connection form and Fubini-Study degeneracy", worst < 1e-12 and lowest >= -1e-10,
           f"max dev {worst:.2e}, min eigenvalue {lowest:.2e}")


def test_criterion_05_bloch_consistency():
    rng = np.random.default_rng(5000)
    worst = 0.0
    for _ in range(200):
        z = complex_normal(rng, 2)
        x = bloch_map(to_real(z))
        rho = (SIGMA0 + np.einsum("k,kij->ij", x, SIGMAS)) / 2
        lam = complex(*rng.normal(size=2))
        worst = max(
            worst,
            abs(np.linalg.norm(x) - 1),
            np.max(np.abs(pure_projector(to_real(z)) - rho)),
            np.max(np.abs(bloch_map(to_real(lam * z)) - x)),
        )
    record(5, "Bloch map consistency", worst < 1e-12, f"max dev {worst:.2e}")


def test_criterion_06_decomposition_independence():
    worst = 0.0
    for n in (2, 3):
        rng = np.random.default_rng(6000 + n)
        for _ in range(50):
            rho = random_density(rng, n)
            A, B = random_hermitian(rng, n), random_hermitian(rng, n)
            d1, d2 = random_decomposition(rng, rho), random_decomposition(rng, rho)
            e1, e2 = extended_brackets(d1, A, B), extended_brackets(d2, A, B)
            worst = max(worst, abs(e1[0] - e2[0]), abs(e1[1] - e2[1]))
    record(6, "decomposition independence of extended brackets", worst < 1e-10, f"max dev {worst:.2e}")


def test_criterion_07_flow_oracle():
    rng = np.random.default_rng(7000)
    match = drift = 0.0
    for n in (2, 3, 4):
        rho = random_density(rng, n)
        H = random_hermitian(rng, n)
        H /= np.linalg.norm(H, 2)
        exact = von_neumann_flow(rho, H, np.pi, dt=1e-3, method="exact")
        rk4 = von_neumann_flow(rho, H, np.pi, dt=1e-3, method="rk4")
        match = max(match, np.max(np.abs(exact.final - rk4.final)))
        ev0, p0 = np.linalg.eigvalsh(rho), casimir(rho, 2).value
        for state in rk4.states:
            drift = max(drift, np.max(np.abs(np.linalg.eigvalsh(state) - ev0)), abs(casimir(state, 2).value - p0))
    prec = von_neumann_flow((SIGMA0 + SIGMA1) / 2, SIGMA3, np.pi / 2, dt=1e-3, method="rk4")
    end = np.max(np.abs(prec.bloch()[-1] - [-1, 0, 0]))
    record(7, "von Neumann flow oracle", match < 1e-6 and drift < 1e-8 and end < 1e-6,
           f"rk4 vs exact {match:.2e}, drift {drift:.2e}, precession {end:.2e}")


def test_criterion_08_orbit_form():
    value = orbit_symplectic_form(np.diag([1.0, 0.0]), 1j * SIGMA1, 1j * SIGMA2)
    rng = np.random.default_rng(8000)
    ranks_ok = True
    for trial in range(20):
        n = 2 + trial % 3
        p = rng.dirichlet(np.ones(n))
        gram = orbit_form_gram(np.diag(p))
        # kernel = commutant of a diagonal rho with distinct eigenvalues = the n diagonal generators
        ranks_ok &= np.linalg.matrix_rank(gram, tol=1e-9) == n * n - n and np.allclose(gram[:n], 0, atol=1e-15)
    record(8, "orbit symplectic form", abs(value - 2) < 1e-12 and ranks_ok, f"value {value:.12f}, kernel ranks ok={ranks_ok}")


def test_criterion_09_ball_form_not_closed():
    coeff = ball_two_form_exterior_derivative([1.0, 0.0, 0.0])
    record(9, "exterior derivative of the ball two-form", abs(coeff - 1) < 1e-5, f"coefficient {coeff:.8f}")


def test_criterion_10_composite_identities():
    rng = np.random.default_rng(10000)
    trip = purity = sep = rule = 0.0
    for _ in range(100):
        rho = random_density(rng, 4, rank=int(rng.integers(1, 5)))
        dec = pauli_decompose(rho)
        trip = max(trip, np.max(np.abs(dec.to_matrix() - rho)))
        purity = max(purity, abs(np.trace(rho @ rho).real - (1 + dec.squared_norm()) / 4))
    for _ in range(50):
        n, m = (v / np.linalg.norm(v) for v in rng.normal(size=(2, 3)))
        rho = separable_pure(n, m)
        dec = pauli_decompose(rho)
        ev = np.linalg.eigvalsh(rho)
        sep = max(sep, abs(ev[-1] - 1), np.max(np.abs(ev[:-1])), np.max(np.abs(dec.p - n)),
                  np.max(np.abs(dec.q - m)), np.max(np.abs(dec.r - np.outer(n, m))))
    pairs = list(monomial_pairs())
    for k in rng.choice(len(pairs), size=100, replace=False):
        idx, conj = pairs[k]
        lhs, rhs = product_poisson_sides(*idx, complex_normal(rng, 2), complex_normal(rng, 2), conj)
        rule = max(rule, abs(lhs - rhs))
    ok = trip < 1e-12 and sep < 1e-10 and purity < 1e-12 and rule < 1e-12
    record(10, "composite identities", ok,
           f"round trip {trip:.2e}, separable {sep:.2e}, purity {purity:.2e}, product rule {rule:.2e}")


def test_criterion_11_gates():
    rng = np.random.default_rng(11000)
    UH = builtin_generating("hadamard").U
    worst = max(np.max(np.abs(UH.conj().T @ UH - np.eye(2))), np.max(np.abs(UH @ UH - np.eye(2))))
    resid = 0.0
    for name, theta in (("hadamard", None), ("phase", None), ("phase_shift", 1.1)):
        S = builtin_generating(name, theta)
        worst = max(worst, np.max(np.abs(S.U.conj().T @ S.U - np.eye(2))))
        for _ in range(100):
            psi = complex_normal(rng, 2)
            psi /= np.linalg.norm(psi)
            resid = max(resid, canonical_residual(S, psi, S.U @ psi))
    shift = np.max(np.abs(builtin_generating("phase_shift", np.pi).U - builtin_generating("phase").U))
    record(11, "gates as generating functions", worst < 1e-12 and resid < 1e-12 and shift < 1e-12,
           f"unitarity {worst:.2e}, residual {resid:.2e}, phase_shift(pi) {shift:.2e}")


def test_criterion_12_cli_end_to_end():
    cmd = [sys.executable, "-m", "geoqm", "verify", "--suite", "all", "--dim", "4", "--trials", "100", "--seed", "42"]
    start = time.perf_counter()
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    elapsed = time.perf_counter() - start
    ok = first.returncode == 0 and second.returncode == 0 and first.stdout == second.stdout and elapsed / 2 < 60
    record(12, "CLI verify --suite all --dim 4", ok,
           f"exit codes {first.returncode}/{second.returncode}, identical={first.stdout == second.stdout}, "
           f"{elapsed / 2:.1f} s per run")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
