"""
Operators as tensors and quadratic functions on the realified space.

Scaling ledger (fixed once, every identity below depends on it):

* ``f_A(psi) = <psi|A psi> / 2``
* the Poisson matrix ``Lambda`` satisfies ``{f, g} = df @ Lambda @ dg`` and
  equals ``inv(omega).T``
* ``G = inv(g)``
* the Hamiltonian field of f is ``Lambda @ df``, i.e. ``omega(X_f, .) = df``

Under this ledger ``{f_A, f_B} = -i f_[A,B]`` and
``(f_A, f_B) = f_(AB + BA)`` hold with no extra factors, and
``G = J @ Lambda``.
"""

from __future__ import annotations

import numpy as np

from .exceptions import DimensionError, NotHermitianError, SingularPointError
from .realified import dimension, tensor_matrices, to_complex, to_real

__all__ = [
    "check_hermitian",
    "tensorize",
    "operator_fields",
    "quadratic_form",
    "expectation",
    "poisson_matrix",
    "jordan_matrix",
    "hamiltonian_field",
    "bracket_general",
    "poisson_bracket",
    "jordan_bracket",
    "commutator",
    "anticommutator",
]

HERMITIAN_ATOL = 1e-12


def check_hermitian(A, atol: float = HERMITIAN_ATOL) -> np.ndarray:
    """Return ``A`` as a complex array, raising if it is not Hermitian."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"operator must be square, got shape {A.shape}")
    if not np.allclose(A, A.conj().T, rtol=0.0, atol=atol):
        raise NotHermitianError("hermiticity violated")
    return A


def commutator(A, B) -> np.ndarray:
    return A @ B - B @ A


def anticommutator(A, B) -> np.ndarray:
    return A @ B + B @ A


def tensorize(A) -> np.ndarray:
    """Real 2n x 2n matrix T_A with ``T_A @ to_real(z) == to_real(A @ z)``."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"operator must be square, got shape {A.shape}")
    R, S = A.real, A.imag
    return np.block([[R, -S], [S, R]])


def _match(A, x):
    n = dimension(x)
    if A.shape != (n, n):
        raise DimensionError(f"operator shape {A.shape} does not act on C^{n}")


def operator_fields(A, x) -> tuple[np.ndarray, np.ndarray]:
    """Values of ``X_A = T_A(Delta)`` and ``Y_A = T_A(J Delta)`` at ``x``.

    For Hermitian A, ``X_A`` is the gradient of ``f_A`` with respect to g.
    """
    A = check_hermitian(A)
    x = np.asarray(x, dtype=float)
    _match(A, x)
    z = to_complex(x)
    return to_real(A @ z), to_real(A @ (1j * z))


def quadratic_form(A, psi, route: str = "complex") -> complex:
    """``f_A(psi) = <psi|A psi> / 2`` for any square matrix A.

    ``route="complex"`` evaluates the Hermitian product directly;
    ``route="tensor"`` uses ``(g(x, T_A x) + i omega(x, T_A x)) / 2``.
    """
    A = np.asarray(A, dtype=complex)
    x = np.asarray(psi, dtype=float)
    _match(A, x)
    if route == "complex":
        z = to_complex(x)
        return complex(np.vdot(z, A @ z)) / 2
    if route == "tensor":
        g, omega, _ = tensor_matrices(dimension(x))
        Tx = tensorize(A) @ x
        return complex(x @ g @ Tx, x @ omega @ Tx) / 2
    raise ValueError(f"unknown route {route!r}")


def expectation(A, psi) -> float:
    """Normalized expectation ``<psi|A psi> / <psi|psi>``; invariant under psi -> c psi."""
    A = check_hermitian(A)
    x = np.asarray(psi, dtype=float)
    _match(A, x)
    z = to_complex(x)
    norm2 = float(np.vdot(z, z).real)
    if norm2 == 0.0:
        raise SingularPointError("expectation value undefined at psi = 0")
    return float(np.vdot(z, A @ z).real / norm2)


def poisson_matrix(n: int) -> np.ndarray:
    """Lambda, built from omega so that ``{f, g} = df @ Lambda @ dg``."""
    _, omega, _ = tensor_matrices(n)
    return np.linalg.inv(omega).T


def jordan_matrix(n: int) -> np.ndarray:
    """G, the inverse of the metric g."""
    g, _, _ = tensor_matrices(n)
    return np.linalg.inv(g)


def hamiltonian_field(df) -> np.ndarray:
    """Hamiltonian vector ``Lambda @ df`` of a differential ``df``."""
    df = np.asarray(df, dtype=float)
    return poisson_matrix(dimension(df)) @ df


def bracket_general(df, dg, x=None) -> tuple[complex | float, complex | float]:
    """Poisson and Riemann-Jordan brackets of two differentials at a point.

    ``df`` and ``dg`` are covectors of length 2n (complex covectors are
    accepted and handled bilinearly).  The tensors are constant in the
    linear chart, so ``x`` is only used to check the dimension.
    """
    df = np.asarray(df)
    dg = np.asarray(dg)
    if df.shape != dg.shape:
        raise DimensionError(f"covector shapes differ: {df.shape} vs {dg.shape}")
    n = dimension(df)
    if x is not None and dimension(x) != n:
        raise DimensionError("covectors and base point have different dimensions")
    pb = df @ poisson_matrix(n) @ dg
    jb = df @ jordan_matrix(n) @ dg
    if np.iscomplexobj(pb) or np.iscomplexobj(jb):
        return complex(pb), complex(jb)
    return float(pb), float(jb)


def _quadratic_differential(A, x) -> np.ndarray:
    # f_A = x.T_A.x / 2 with T_A symmetric for Hermitian A
    return tensorize(A) @ x


def poisson_bracket(A, B, psi) -> float:
    """``{f_A, f_B}`` at psi from the gradients and the Poisson tensor."""
    A = check_hermitian(A)
    B = check_hermitian(B)
    x = np.asarray(psi, dtype=float)
    _match(A, x)
    _match(B, x)
    pb, _ = bracket_general(_quadratic_differential(A, x), _quadratic_differential(B, x), x)
    return pb


def jordan_bracket(A, B, psi) -> float:
    """``(f_A, f_B)`` at psi from the gradients and the inverse metric."""
    A = check_hermitian(A)
    B = check_hermitian(B)
    x = np.asarray(psi, dtype=float)
    _match(A, x)
    _match(B, x)
    _, jb = bracket_general(_quadratic_differential(A, x), _quadratic_differential(B, x), x)
    return jb
