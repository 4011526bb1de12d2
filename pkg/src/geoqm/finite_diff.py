"""Central-difference derivatives used as independent numerical oracles."""

from __future__ import annotations

from itertools import combinations
from typing import Callable

import numpy as np


def gradient(f: Callable[[np.ndarray], float], x, step: float = 1e-6) -> np.ndarray:
    """Central-difference gradient of a scalar function."""
    x = np.asarray(x, dtype=float)
    out = np.empty(x.size)
    for i in range(x.size):
        e = np.zeros_like(x)
        e[i] = step
        out[i] = (f(x + e) - f(x - e)) / (2 * step)
    return out


def exterior_derivative_2form(
    form: Callable[[np.ndarray], np.ndarray], x, step: float = 1e-5
) -> np.ndarray:
    """d of a two-form field, as a totally antisymmetric m x m x m array.

    ``form(x)`` must return the antisymmetric matrix W with
    ``omega(v, w) = v @ W @ w``.  The result T satisfies
    ``T[i, j, k] = d_i W_jk + d_j W_ki + d_k W_ij``.
    """
    x = np.asarray(x, dtype=float)
    m = x.size
    partials = []
    for i in range(m):
        e = np.zeros(m)
        e[i] = step
        partials.append((np.asarray(form(x + e)) - np.asarray(form(x - e))) / (2 * step))
    partials = np.array(partials)  # partials[i] = d_i W
    out = np.zeros((m, m, m))
    for i, j, k in combinations(range(m), 3):
        val = partials[i][j, k] + partials[j][k, i] + partials[k][i, j]
        for (a, b, c), sign in (
            ((i, j, k), 1), ((j, k, i), 1), ((k, i, j), 1),
            ((j, i, k), -1), ((i, k, j), -1), ((k, j, i), -1),
        ):
            out[a, b, c] = sign * val
    return out
