"""
Momentum map, projection onto CP^{n-1}, connection form and Fubini-Study tensor.

Tangent vectors at psi live in the same flat realified chart as points.
"""

from __future__ import annotations

import numpy as np

from .exceptions import DimensionError, SingularPointError
from .realified import dimension, to_complex, to_real

__all__ = [
    "momentum_map",
    "pure_projector",
    "connection_form",
    "horizontal_projection",
    "fubini_study",
    "fubini_study_matrix",
    "bloch_map",
]


def _nonzero(psi) -> tuple[np.ndarray, float]:
    z = to_complex(psi)
    norm2 = float(np.vdot(z, z).real)
    if norm2 == 0.0:
        raise SingularPointError("psi = 0 has no image in projective space")
    return z, norm2


def _tangent(psi, v) -> np.ndarray:
    if np.shape(v) != np.shape(psi):
        raise DimensionError(f"tangent vector shape {np.shape(v)} != point shape {np.shape(psi)}")
    return to_complex(v)


def momentum_map(psi) -> np.ndarray:
    """``-i |psi><psi|``, an anti-Hermitian matrix (element of u*(n) = u(n)).

    Equivariant: ``momentum_map(U psi) == U momentum_map(psi) U^dagger``.
    """
    z = to_complex(psi)
    return -1j * np.outer(z, z.conj())


def pure_projector(psi) -> np.ndarray:
    """Rank-one projector ``|psi><psi| / <psi|psi>``."""
    z, norm2 = _nonzero(psi)
    return np.outer(z, z.conj()) / norm2


def connection_form(psi, v) -> complex:
    """theta(v) = <psi|v> / <psi|psi>; theta(Delta) = 1, theta(J Delta) = i."""
    z, norm2 = _nonzero(psi)
    return complex(np.vdot(z, _tangent(psi, v))) / norm2


def horizontal_projection(psi, v) -> np.ndarray:
    """Remove the span{Delta, J Delta} component of v, leaving ker(theta)."""
    z = to_complex(psi)
    w = _tangent(psi, v)
    return to_real(w - connection_form(psi, v) * z)


def fubini_study(psi, v, w) -> complex:
    """Hermitian Fubini-Study tensor at psi evaluated on tangent vectors v, w.

    Returns ``<v|w>/N - <v|psi><psi|w>/N**2`` with ``N = <psi|psi>``.
    The real part is the metric, the imaginary part the symplectic form;
    both vanish whenever v or w lies in span{psi, i psi}.
    """
    z, norm2 = _nonzero(psi)
    a = _tangent(psi, v)
    b = _tangent(psi, w)
    return complex(np.vdot(a, b) / norm2 - np.vdot(a, z) * np.vdot(z, b) / norm2**2)


def fubini_study_matrix(psi) -> np.ndarray:
    """Complex 2n x 2n matrix K with ``fubini_study(psi, v, w) == v @ K @ w``.

    ``K.real`` is the symmetric metric and ``K.imag`` the antisymmetric
    two-form, both in the realified chart.
    """
    n = dimension(psi)
    basis = np.eye(2 * n)
    return np.array([[fubini_study(psi, e, f) for f in basis] for e in basis])


def bloch_map(psi) -> np.ndarray:
    """Bloch vector of a qubit state psi in C^2 (realified length 4).

    Evaluates ``x1 = (z1 z2* + z1* z2)/N``, ``x2 = i (z1 z2* - z1* z2)/N``,
    ``x3 = (|z1|^2 - |z2|^2)/N`` literally.  With this orientation
    ``pure_projector(psi) == (sigma_0 + x . sigma) / 2``.
    """
    if dimension(psi) != 2:
        raise DimensionError("the Bloch map is defined for n = 2 only")
    z, norm2 = _nonzero(psi)
    z1, z2 = z
    c12 = z1 * z2.conjugate()
    x1 = (c12 + c12.conjugate()) / norm2
    x2 = 1j * (c12 - c12.conjugate()) / norm2
    x3 = (abs(z1) ** 2 - abs(z2) ** 2) / norm2
    return np.array([x1.real, x2.real, x3])
