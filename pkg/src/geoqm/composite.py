"""
Two-qubit composite systems, C^2 (x) C^2 = C^4.

Subsystem A is the left Kronecker factor, so the components of z (x) w
are ``(z1 w1, z1 w2, z2 w1, z2 w2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .density import make_density
from .exceptions import DimensionError, GeometryError
from .observables import poisson_matrix
from .pauli import SIGMA0, SIGMA3, SIGMAS, bloch_to_density

__all__ = [
    "LAMBDA",
    "PauliDecomposition",
    "CartanForm",
    "tensor_state",
    "separable_pure",
    "pauli_decompose",
    "cartan_canonical_form",
    "product_poisson",
    "product_poisson_sides",
]

# Cartan basis lambda_0..lambda_3 = 1(x)1, sigma3(x)1, 1(x)sigma3, sigma3(x)sigma3
LAMBDA = np.stack([
    np.kron(SIGMA0, SIGMA0),
    np.kron(SIGMA3, SIGMA0),
    np.kron(SIGMA0, SIGMA3),
    np.kron(SIGMA3, SIGMA3),
])
LAMBDA.setflags(write=False)

_A_OPS = np.array([np.kron(s, SIGMA0) for s in SIGMAS])
_B_OPS = np.array([np.kron(SIGMA0, s) for s in SIGMAS])
_AB_OPS = np.array([[np.kron(s, t) for t in SIGMAS] for s in SIGMAS])


@dataclass(frozen=True)
class PauliDecomposition:
    """Coefficients of ``rho = (1 + p.sigma(x)1 + q.1(x)sigma + r_jk sigma_j(x)sigma_k) / 4``."""

    p: np.ndarray
    q: np.ndarray
    r: np.ndarray

    def to_matrix(self) -> np.ndarray:
        """Reconstruct the 4x4 matrix; positivity is not implied by the coefficients."""
        return (
            np.eye(4)
            + np.einsum("j,jab->ab", self.p, _A_OPS)
            + np.einsum("k,kab->ab", self.q, _B_OPS)
            + np.einsum("jk,jkab->ab", self.r, _AB_OPS)
        ) / 4

    def squared_norm(self) -> float:
        """``sum p^2 + sum q^2 + sum r^2``; equals ``4 Tr(rho^2) - 1``, at most 3."""
        return float(self.p @ self.p + self.q @ self.q + np.sum(self.r**2))


@dataclass(frozen=True)
class CartanForm:
    """``rho = U (lambda_0 + p . lambda) / 4 U^dagger`` with diagonal middle factor."""

    U: np.ndarray
    p: np.ndarray

    def diagonal(self) -> np.ndarray:
        return (LAMBDA[0] + np.einsum("k,kab->ab", self.p, LAMBDA[1:])) / 4

    def to_matrix(self) -> np.ndarray:
        return self.U @ self.diagonal() @ self.U.conj().T


def tensor_state(z, w) -> np.ndarray:
    """``z (x) w`` as a complex 4-vector."""
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    if z.shape != (2,) or w.shape != (2,):
        raise DimensionError("tensor_state expects two complex 2-vectors")
    return np.kron(z, w)


def _unit3(v, name):
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise DimensionError(f"{name} must be a real 3-vector")
    if abs(np.linalg.norm(v) - 1.0) > 1e-10:
        raise GeometryError(f"{name} must be a unit vector")
    return v


def separable_pure(n, m) -> np.ndarray:
    """Product of the Bloch projectors of unit vectors n (system A) and m (system B)."""
    n = _unit3(n, "n")
    m = _unit3(m, "m")
    return np.kron(bloch_to_density(n), bloch_to_density(m))


def pauli_decompose(rho) -> PauliDecomposition:
    """Project a two-qubit density state onto the Pauli product basis."""
    rho = make_density(rho)
    if rho.shape != (4, 4):
        raise DimensionError("pauli_decompose expects a 4x4 density matrix")
    p = np.einsum("ab,jba->j", rho, _A_OPS).real
    q = np.einsum("ab,jba->j", rho, _B_OPS).real
    r = np.einsum("ab,jkba->jk", rho, _AB_OPS).real
    return PauliDecomposition(p=p, q=q, r=r)


def _phase_fix(v: np.ndarray) -> np.ndarray:
    k = int(np.argmax(np.abs(v) > 1e-12 * np.max(np.abs(v))))
    return v * (abs(v[k]) / v[k])


def cartan_canonical_form(rho, tie_atol: float = 1e-12) -> CartanForm:
    """Diagonalize rho and express the spectrum in the lambda basis.

    Eigenvalues are sorted in descending order.  Each eigenvector is
    rephased so its first significant entry is real and positive; exactly
    tied eigenvalues are ordered by lexicographic comparison of the
    rephased eigenvectors.
    """
    rho = make_density(rho)
    if rho.shape != (4, 4):
        raise DimensionError("cartan_canonical_form expects a 4x4 density matrix")
    evals, vecs = np.linalg.eigh(rho)
    cols = [_phase_fix(vecs[:, k]) for k in range(4)]

    def key(k):
        # descending eigenvalue; ties resolved by the vector itself
        lam = round(float(evals[k]) / tie_atol) * tie_atol if tie_atol else float(evals[k])
        vec = tuple(c for z in cols[k] for c in (-round(z.real, 12), -round(z.imag, 12)))
        return (-lam, vec)

    order = sorted(range(4), key=key)
    d = evals[order]
    U = np.column_stack([cols[k] for k in order])
    # 4 d = lambda_0 + sum_k p_k lambda_k on the diagonal
    system = np.array([np.diag(L).real for L in LAMBDA]).T
    coeffs = np.linalg.solve(system, 4 * d)
    return CartanForm(U=U, p=coeffs[1:])


# -- product Poisson rule --------------------------------------------------------

def _coordinate_covector(slot: int, conj: bool, n: int = 4) -> np.ndarray:
    """Differential of z_slot (or its conjugate) on C^n realified."""
    e = np.zeros(2 * n, dtype=complex)
    e[slot] = 1.0
    e[n + slot] = -1j if conj else 1j
    return e


def _coord_value(v: np.ndarray, index: int, conj: bool) -> complex:
    c = v[index]
    return c.conjugate() if conj else c


def _check_index(i):
    if i not in (1, 2):
        raise IndexError(f"qubit coordinate index must be 1 or 2, got {i}")
    return i - 1


def product_poisson_sides(m, n, r, s, z, w, conj=(False, False, False, False)) -> tuple[complex, complex]:
    """Both sides of ``{z_m w_n, z_r w_s} = {z_m, z_r} w_n w_s + z_m z_r {w_n, w_s}``.

    ``conj`` flags which of the four coordinates ``(z_m, w_n, z_r, w_s)`` are
    complex-conjugated.  The left side uses the Poisson tensor on the
    realified joint space C^2 (+) C^2 (8 real coordinates); the right side
    uses the Poisson tensors of the two factors.
    """
    m, n, r, s = (_check_index(i) for i in (m, n, r, s))
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    if z.shape != (2,) or w.shape != (2,):
        raise DimensionError("z and w must be complex 2-vectors")
    cm, cn, cr, cs = conj

    # joint coordinates (z1, z2, w1, w2)
    joint = np.concatenate([z, w])
    zm, wn = _coord_value(z, m, cm), _coord_value(w, n, cn)
    zr, ws = _coord_value(z, r, cr), _coord_value(w, s, cs)
    dF = wn * _coordinate_covector(m, cm) + zm * _coordinate_covector(2 + n, cn)
    dG = ws * _coordinate_covector(r, cr) + zr * _coordinate_covector(2 + s, cs)
    lhs = complex(dF @ poisson_matrix(joint.size) @ dG)

    lam2 = poisson_matrix(2)
    zz = complex(_coordinate_covector(m, cm, 2) @ lam2 @ _coordinate_covector(r, cr, 2))
    ww = complex(_coordinate_covector(n, cn, 2) @ lam2 @ _coordinate_covector(s, cs, 2))
    rhs = zz * wn * ws + zm * zr * ww
    return lhs, rhs


def product_poisson(m, n, r, s, z, w, conj=(False, False, False, False)) -> complex:
    """``{z_m w_n, z_r w_s}`` on the joint space (1-based indices)."""
    return product_poisson_sides(m, n, r, s, z, w, conj)[0]


def monomial_pairs():
    """All index/conjugation patterns accepted by :func:`product_poisson`."""
    for idx in product((1, 2), repeat=4):
        for conj in product((False, True), repeat=4):
            yield idx, conj
