"""
Realification of C^n and the Hermitian tensor triple (g, omega, J).

A complex vector ``z`` with ``z_a = q_a + i p_a`` is stored as the real
array ``(q_1, ..., q_n, p_1, ..., p_n)``.  All tensors are applied as maps
on these arrays; explicit matrices are available through
:func:`tensor_matrices` for inspection and testing.

Conventions
-----------
* ``h(x, y) = <x|y>`` is antilinear in the first slot.
* ``g = Re h`` (the Euclidean product) and ``omega = Im h``.
* ``J`` is multiplication by ``i``; in block form ``[[0, -I], [I, 0]]``.

With these choices ``g(x, y) = omega(x, J y)``.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .exceptions import DimensionError, SingularPointError

__all__ = [
    "to_real",
    "to_complex",
    "dimension",
    "apply_complex_structure",
    "hermitian_parts",
    "metric",
    "symplectic",
    "canonical_fields",
    "homogeneity_degree",
    "tensor_matrices",
]


def to_real(z) -> np.ndarray:
    """Map a complex n-vector to its 2n real coordinates ``(Re z, Im z)``."""
    z = np.asarray(z, dtype=complex)
    if z.ndim != 1:
        raise DimensionError(f"expected a 1-d complex vector, got shape {z.shape}")
    return np.concatenate([z.real, z.imag])


def to_complex(x) -> np.ndarray:
    """Inverse of :func:`to_real`."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size % 2:
        raise DimensionError(f"realified vector must have even length, got shape {x.shape}")
    n = x.size // 2
    return x[:n] + 1j * x[n:]


def dimension(x) -> int:
    """Complex dimension n of a realified vector."""
    x = np.asarray(x)
    if x.ndim != 1 or x.size % 2:
        raise DimensionError(f"realified vector must have even length, got shape {x.shape}")
    return x.size // 2


def apply_complex_structure(x) -> np.ndarray:
    """J(x): the realified image of ``i * to_complex(x)``."""
    n = dimension(x)
    x = np.asarray(x, dtype=float)
    return np.concatenate([-x[n:], x[:n]])


def _check_pair(x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise DimensionError(f"dimension mismatch: {x.shape} vs {y.shape}")
    dimension(x)
    return x, y


def hermitian_parts(x, y) -> tuple[float, float, complex]:
    """Return ``(g(x, y), omega(x, y), h(x, y))`` with ``h = g + i omega``.

    ``h`` is the standard Hermitian product of the complex vectors,
    antilinear in ``x``.
    """
    x, y = _check_pair(x, y)
    h = complex(np.vdot(to_complex(x), to_complex(y)))
    g = h.real
    w = h.imag
    return g, w, complex(g, w)


def metric(x, y) -> float:
    """g(x, y), the real part of the Hermitian product."""
    x, y = _check_pair(x, y)
    return float(x @ y)


def symplectic(x, y) -> float:
    """omega(x, y) = sum_a (q_a p'_a - p_a q'_a)."""
    x, y = _check_pair(x, y)
    n = x.size // 2
    return float(x[:n] @ y[n:] - x[n:] @ y[:n])


def canonical_fields(x) -> tuple[np.ndarray, np.ndarray]:
    """Values at ``x`` of the dilation field Delta and of Gamma = J(Delta)."""
    x = np.array(x, dtype=float)
    dimension(x)
    return x.copy(), apply_complex_structure(x)


def homogeneity_degree(f: Callable[[np.ndarray], float], x, step: float = 1e-5) -> float:
    """Estimate ``(Delta . f)(x) / f(x)`` by central differences.

    The flow of Delta through ``x`` is ``t -> (1 + t) x``, so ``step`` is a
    displacement relative to ``|x|``.  For a homogeneous function of degree
    k the result approximates k.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    x = np.asarray(x, dtype=float)
    fx = float(f(x))
    if not np.isfinite(fx):
        raise SingularPointError("f is not finite at x")
    if fx == 0.0:
        raise SingularPointError("f(x) = 0: homogeneity degree undefined")
    deriv = (f((1.0 + step) * x) - f((1.0 - step) * x)) / (2.0 * step)
    return float(deriv / fx)


def tensor_matrices(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Explicit 2n x 2n matrices ``(g, omega, J)``.

    ``g(x, y) = x @ g @ y``, ``omega(x, y) = x @ omega @ y`` and
    ``J(x) = J @ x``.
    """
    if n < 1:
        raise DimensionError("n must be positive")
    eye = np.eye(n)
    zero = np.zeros((n, n))
    g = np.eye(2 * n)
    omega = np.block([[zero, eye], [-eye, zero]])
    J = np.block([[zero, -eye], [eye, zero]])
    return g, omega, J
