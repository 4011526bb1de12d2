"""
Density states as a convex body inside u*(n).

Covers validation and mixing of density matrices, the brackets extended
from pure states by linearity, Casimir functions, the Bloch-ball tensors
for n = 2, the orbit (KKS) symplectic form and von Neumann flows.

Two bracket normalizations appear here:

* :func:`extended_brackets` and :func:`density_brackets` keep the
  ``f_A = <psi|A psi>/2`` ledger of :mod:`geoqm.observables`, giving
  ``{f_A, f_B}(rho) = -(i/2) Tr(rho [A, B])``.
* :func:`lie_poisson_bloch` uses the trace normalization
  ``{Tr(rho A), Tr(rho B)} = -i Tr(rho [A, B])``, so on Bloch coordinates
  ``{x_i, x_j} = 2 eps_ijk x_k``.  :func:`bloch_poisson_tensor` is the
  standard su(2)* tensor ``eps_ijk x_k``, half of that.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .exceptions import (
    DensityError,
    DimensionError,
    NotHermitianError,
    SingularPointError,
    TangencyError,
)
from .finite_diff import exterior_derivative_2form
from .observables import anticommutator, check_hermitian, commutator, jordan_bracket, poisson_bracket
from .pauli import bloch_to_density, density_to_bloch
from .projective import pure_projector
from .realified import to_real

__all__ = [
    "HERMITIAN_ATOL",
    "TRACE_ATOL",
    "PSD_ATOL",
    "make_density",
    "is_density",
    "MixtureDecomposition",
    "mix",
    "expectation_density",
    "extended_brackets",
    "density_brackets",
    "CasimirValue",
    "casimir",
    "lie_poisson_bloch",
    "bloch_poisson_tensor",
    "bloch_hamiltonian_vector",
    "partial_complex_structure",
    "ball_two_form",
    "ball_two_form_matrix",
    "ball_two_form_exterior_derivative",
    "anti_hermitian_basis",
    "orbit_symplectic_form",
    "orbit_form_gram",
    "Trajectory",
    "von_neumann_flow",
]

HERMITIAN_ATOL = 1e-12
TRACE_ATOL = 1e-12
PSD_ATOL = 1e-10


def make_density(M) -> np.ndarray:
    """Validate M as a density state and return a Hermitian copy.

    Raises
    ------
    DimensionError
        M is not square.
    DensityError
        M is not Hermitian, its trace is not 1, or an eigenvalue is
        below ``-PSD_ATOL`` ("positivity violated").
    """
    M = np.array(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise DimensionError(f"density matrix must be square, got shape {M.shape}")
    if not np.allclose(M, M.conj().T, rtol=0.0, atol=HERMITIAN_ATOL):
        raise DensityError("hermiticity violated")
    M = (M + M.conj().T) / 2
    tr = np.trace(M).real
    if abs(tr - 1.0) > TRACE_ATOL:
        raise DensityError(f"unit trace violated (trace = {tr!r})")
    lowest = np.linalg.eigvalsh(M)[0]
    if lowest < -PSD_ATOL:
        raise DensityError(f"positivity violated (smallest eigenvalue {lowest:.3e})")
    return M


def is_density(M) -> bool:
    try:
        make_density(M)
    except (DensityError, DimensionError):
        return False
    return True


@dataclass(frozen=True)
class MixtureDecomposition:
    """Convex combination ``sum_k p_k rho_{psi_k}`` of pure states.

    ``states`` holds realified vectors; they need not be normalized.
    """

    weights: tuple[float, ...]
    states: tuple[np.ndarray, ...] = field(repr=False)

    def __init__(self, weights: Sequence[float], states: Sequence) -> None:
        w = np.asarray(weights, dtype=float)
        if w.ndim != 1 or len(w) != len(states) or len(w) == 0:
            raise DensityError("weights and states must be non-empty and of equal length")
        if np.any(w < 0) or abs(w.sum() - 1.0) > TRACE_ATOL:
            raise DensityError("weights must be non-negative and sum to 1")
        vecs = tuple(np.asarray(s, dtype=float) for s in states)
        if len({v.shape for v in vecs}) != 1:
            raise DimensionError("all states in a decomposition must share a dimension")
        object.__setattr__(self, "weights", tuple(float(p) for p in w))
        object.__setattr__(self, "states", vecs)

    @classmethod
    def from_complex(cls, weights, vectors) -> "MixtureDecomposition":
        return cls(weights, [to_real(v) for v in vectors])

    def normalized_states(self) -> list[np.ndarray]:
        out = []
        for x in self.states:
            norm = np.linalg.norm(x)
            if norm == 0.0:
                raise SingularPointError("zero vector in decomposition")
            out.append(x / norm)
        return out


def mix(d: MixtureDecomposition) -> np.ndarray:
    """``rho = sum_k p_k rho_{psi_k}``, renormalized to unit trace."""
    rho = sum(p * pure_projector(x) for p, x in zip(d.weights, d.states))
    rho = (rho + rho.conj().T) / 2
    return rho / np.trace(rho).real


def _as_density(rho) -> np.ndarray:
    return make_density(rho)


def expectation_density(rho, A) -> float:
    """Tr(rho A) for Hermitian A."""
    rho = np.asarray(rho, dtype=complex)
    A = check_hermitian(A)
    if rho.shape != A.shape:
        raise DimensionError(f"shape mismatch: rho {rho.shape}, A {A.shape}")
    return float(np.trace(rho @ A).real)


def extended_brackets(d: MixtureDecomposition, A, B) -> tuple[float, float]:
    """Poisson and Jordan brackets of f_A, f_B at rho, extended by linearity.

    Evaluates ``sum_k p_k {f_A, f_B}(psi_k)`` (and likewise for the Jordan
    bracket) on the normalized pure states of the decomposition.  The
    value depends only on ``mix(d)``.
    """
    A = check_hermitian(A)
    B = check_hermitian(B)
    pb = jb = 0.0
    for p, x in zip(d.weights, d.normalized_states()):
        pb += p * poisson_bracket(A, B, x)
        jb += p * jordan_bracket(A, B, x)
    return pb, jb


def density_brackets(rho, A, B) -> tuple[float, float]:
    """Closed form of :func:`extended_brackets` in terms of rho alone."""
    rho = np.asarray(rho, dtype=complex)
    A = check_hermitian(A)
    B = check_hermitian(B)
    pb = (-0.5j * np.trace(rho @ commutator(A, B))).real
    jb = (0.5 * np.trace(rho @ anticommutator(A, B))).real
    return float(pb), float(jb)


@dataclass(frozen=True)
class CasimirValue:
    order: int
    value: float
    zeta: float | None = None


def casimir(rho, k: int) -> CasimirValue:
    """Tr(rho^k); for qubits also ``zeta = |x|^2`` with Tr(rho^2) = (1 + zeta)/2."""
    if k < 2:
        raise ValueError("Casimir order must be at least 2")
    rho = np.asarray(rho, dtype=complex)
    value = float(np.trace(np.linalg.matrix_power(rho, k)).real)
    zeta = None
    if rho.shape == (2, 2):
        zeta = float(np.sum(density_to_bloch(rho) ** 2))
    return CasimirValue(order=k, value=value, zeta=zeta)


# -- Bloch ball (n = 2) -------------------------------------------------------

def _bloch(x, allow_zero: bool = True) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (3,):
        raise DimensionError(f"Bloch vector must have 3 components, got {x.shape}")
    if not allow_zero and not np.any(x):
        raise SingularPointError("undefined at the centre of the Bloch ball")
    return x


def _check_qubit_operator(A) -> np.ndarray:
    A = check_hermitian(A)
    if A.shape != (2, 2):
        raise DimensionError("qubit operators must be 2x2")
    return A


def lie_poisson_bloch(x, A, B) -> float:
    """``-i Tr(rho(x) [A, B])``, the Lie-Poisson bracket of x -> Tr(rho(x) A), x -> Tr(rho(x) B)."""
    x = _bloch(x)
    if x @ x > 1.0 + 1e-12:
        raise DensityError("Bloch vector outside the unit ball")
    A = _check_qubit_operator(A)
    B = _check_qubit_operator(B)
    return float((-1j * np.trace(bloch_to_density(x) @ commutator(A, B))).real)


def bloch_poisson_tensor(x) -> np.ndarray:
    """Matrix ``L[i, j] = eps_ijk x_k`` of the su(2)* Poisson bivector."""
    x1, x2, x3 = _bloch(x)
    return np.array([[0.0, x3, -x2], [-x3, 0.0, x1], [x2, -x1, 0.0]])


def bloch_hamiltonian_vector(x, df) -> np.ndarray:
    """Hamiltonian vector ``df @ L`` (components ``sum_i df_i eps_ijk x_k = x cross df``)."""
    return np.asarray(df, dtype=float) @ bloch_poisson_tensor(x)


def partial_complex_structure(x, v, *, project: bool = False, atol: float = 1e-10) -> np.ndarray:
    """``(x/|x|) cross v`` on vectors tangent to the sphere through x.

    The map squares to -1 on tangent vectors and is independent of |x|.
    With ``project=True`` the normal component of v is discarded first, so
    the gradient of the Casimir |x|^2 is sent to zero.
    """
    x = _bloch(x, allow_zero=False)
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise DimensionError("tangent vector must have 3 components")
    u = x / np.linalg.norm(x)
    if project:
        v = v - (v @ u) * u
    elif abs(v @ u) > atol:
        raise TangencyError("v is not tangent to the sphere through x")
    return np.cross(u, v)


def ball_two_form_matrix(x) -> np.ndarray:
    """Matrix W of ``omega = (x1 dx2^dx3 + x2 dx3^dx1 + x3 dx1^dx2) / |x|^2``."""
    x = _bloch(x, allow_zero=False)
    return bloch_poisson_tensor(x) / (x @ x)


def ball_two_form(x, v, w) -> float:
    """``x . (v cross w) / |x|^2``, a left inverse of the Poisson bivector on tangent data."""
    return float(np.asarray(v, dtype=float) @ ball_two_form_matrix(x) @ np.asarray(w, dtype=float))


def ball_two_form_exterior_derivative(x, step: float = 1e-5) -> float:
    """Coefficient of dx1^dx2^dx3 in d(omega) at x, by central differences.

    Analytically this is ``1 / |x|^2``: the form is not closed.
    """
    x = _bloch(x, allow_zero=False)
    return float(exterior_derivative_2form(ball_two_form_matrix, x, step)[0, 1, 2])


# -- coadjoint orbits ------------------------------------------------------------

def anti_hermitian_basis(n: int) -> list[np.ndarray]:
    """Real basis of u(n): ``i E_jj``, ``E_jk - E_kj`` and ``i (E_jk + E_kj)``."""
    basis = []
    for j in range(n):
        E = np.zeros((n, n), dtype=complex)
        E[j, j] = 1j
        basis.append(E)
    for j in range(n):
        for k in range(j + 1, n):
            E = np.zeros((n, n), dtype=complex)
            E[j, k], E[k, j] = 1, -1
            basis.append(E)
            E = np.zeros((n, n), dtype=complex)
            E[j, k] = E[k, j] = 1j
            basis.append(E)
    return basis


def _check_anti_hermitian(xi, atol: float = 1e-12) -> np.ndarray:
    xi = np.asarray(xi, dtype=complex)
    if xi.ndim != 2 or xi.shape[0] != xi.shape[1]:
        raise DimensionError("Lie algebra element must be square")
    if not np.allclose(xi, -xi.conj().T, rtol=0.0, atol=atol):
        raise NotHermitianError("argument is not anti-Hermitian")
    return xi


def orbit_symplectic_form(rho, xi1, xi2) -> float:
    """KKS form on the orbit through rho: ``i Tr(rho [xi1, xi2])``.

    xi1 and xi2 are anti-Hermitian generators of the tangent vectors
    ``[xi, rho]``.  Vanishes when either generator commutes with rho.
    """
    rho = _as_density(rho)
    xi1 = _check_anti_hermitian(xi1)
    xi2 = _check_anti_hermitian(xi2)
    if xi1.shape != rho.shape or xi2.shape != rho.shape:
        raise DimensionError("generators and rho must have the same shape")
    return float((1j * np.trace(rho @ commutator(xi1, xi2))).real)


def orbit_form_gram(rho) -> np.ndarray:
    """Matrix of :func:`orbit_symplectic_form` on :func:`anti_hermitian_basis`."""
    rho = _as_density(rho)
    basis = anti_hermitian_basis(rho.shape[0])
    return np.array([[orbit_symplectic_form(rho, a, b) for b in basis] for a in basis])


# -- von Neumann flow --------------------------------------------------------------

@dataclass(frozen=True)
class Trajectory:
    """Sampled solution of the von Neumann equation."""

    times: np.ndarray
    states: np.ndarray  # shape (len(times), n, n)

    @property
    def final(self) -> np.ndarray:
        return self.states[-1]

    def bloch(self) -> np.ndarray:
        if self.states.shape[1:] != (2, 2):
            raise DimensionError("Bloch coordinates need n = 2")
        return np.array([density_to_bloch(r) for r in self.states])

    def csv_header(self) -> list[str]:
        n = self.states.shape[1]
        cols = ["t"]
        for i in range(n):
            for j in range(n):
                cols += [f"re_{i}_{j}", f"im_{i}_{j}"]
        if n == 2:
            cols += ["x1", "x2", "x3"]
        return cols

    def csv_rows(self) -> list[list[float]]:
        n = self.states.shape[1]
        rows = []
        for t, rho in zip(self.times, self.states):
            row = [float(t)]
            for entry in rho.reshape(-1):
                row += [float(entry.real), float(entry.imag)]
            if n == 2:
                row += [float(c) for c in density_to_bloch(rho)]
            rows.append(row)
        return rows

    def to_csv(self, path=None) -> str:
        """Write the trajectory as CSV; return the text.  ``path=None`` only returns it."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.csv_header())
        writer.writerows(self.csv_rows())
        text = buf.getvalue()
        if path is not None:
            Path(path).write_text(text)
        return text


def _rhs(H, rho):
    return -1j * (H @ rho - rho @ H)


def _rk4_step(H, rho, h):
    k1 = _rhs(H, rho)
    k2 = _rhs(H, rho + 0.5 * h * k1)
    k3 = _rhs(H, rho + 0.5 * h * k2)
    k4 = _rhs(H, rho + h * k3)
    return rho + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)


def von_neumann_flow(
    rho0, H, t_final: float, dt: float = 1e-3, method: str = "exact"
) -> Trajectory:
    """Integrate ``d rho/dt = -i [H, rho]`` from 0 to ``t_final``.

    The time grid is ``k * dt`` (the last step shortened to land on
    ``t_final``), sampled every ``max(1, round(0.01 / dt))`` steps plus the
    final time.  ``method="exact"`` evaluates ``exp(-iHt) rho0 exp(iHt)``
    from the eigendecomposition of H; ``method="rk4"`` uses classical
    Runge-Kutta on the grid.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    if t_final < 0:
        raise ValueError("t_final must be non-negative")
    rho0 = _as_density(rho0)
    H = check_hermitian(H)
    if H.shape != rho0.shape:
        raise DimensionError(f"H has shape {H.shape}, rho0 has shape {rho0.shape}")

    n_steps = max(0, math.ceil(t_final / dt - 1e-9))
    grid = np.minimum(np.arange(n_steps + 1) * dt, t_final)
    stride = max(1, round(0.01 / dt))
    keep = list(range(0, n_steps + 1, stride))
    if keep[-1] != n_steps:
        keep.append(n_steps)

    if method == "exact":
        evals, V = np.linalg.eigh(H)
        states = []
        for t in grid[keep]:
            U = (V * np.exp(-1j * evals * t)) @ V.conj().T
            states.append(U @ rho0 @ U.conj().T)
    elif method == "rk4":
        states = []
        rho = rho0.copy()
        keep_set = set(keep)
        if 0 in keep_set:
            states.append(rho.copy())
        for k in range(1, n_steps + 1):
            rho = _rk4_step(H, rho, grid[k] - grid[k - 1])
            if k in keep_set:
                states.append(rho.copy())
    else:
        raise ValueError(f"unknown method {method!r}; use 'exact' or 'rk4'")
    return Trajectory(times=grid[keep].copy(), states=np.array(states))
