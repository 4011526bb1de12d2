"""Pauli matrices and the Bloch-vector parameterization of qubit states."""

from __future__ import annotations

import numpy as np

from .exceptions import DimensionError

SIGMA0 = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMAS = np.stack([SIGMA1, SIGMA2, SIGMA3])

for _s in (SIGMA0, SIGMA1, SIGMA2, SIGMA3, SIGMAS):
    _s.setflags(write=False)


def bloch_to_density(x) -> np.ndarray:
    """``(sigma_0 + x . sigma) / 2`` for a real 3-vector x (no validation)."""
    x = np.asarray(x, dtype=float)
    if x.shape != (3,):
        raise DimensionError(f"Bloch vector must have 3 components, got {x.shape}")
    return (SIGMA0 + np.einsum("k,kij->ij", x, SIGMAS)) / 2


def density_to_bloch(rho) -> np.ndarray:
    """Components ``Tr(rho sigma_k)`` of a 2x2 matrix."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise DimensionError(f"expected a 2x2 matrix, got {rho.shape}")
    return np.einsum("ij,kji->k", rho, SIGMAS).real


def pauli_coefficients(A) -> tuple[float, np.ndarray]:
    """Write a 2x2 Hermitian A as ``a0 sigma_0 + a . sigma``; return ``(a0, a)``."""
    A = np.asarray(A, dtype=complex)
    if A.shape != (2, 2):
        raise DimensionError(f"expected a 2x2 matrix, got {A.shape}")
    a0 = float(np.trace(A).real / 2)
    a = np.einsum("ij,kji->k", A, SIGMAS).real / 2
    return a0, a
