"""Seeded random draws of states, operators and decompositions."""

from __future__ import annotations

import numpy as np
from scipy.stats import unitary_group

from .density import MixtureDecomposition
from .realified import to_real


def trial_rng(seed: int, *keys: int) -> np.random.Generator:
    """Generator derived from ``(seed, *keys)`` alone, e.g. ``(seed, suite, trial)``."""
    return np.random.default_rng(np.random.SeedSequence([seed, *keys]))


def complex_normal(rng, shape) -> np.ndarray:
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def random_state(rng, n: int) -> np.ndarray:
    """Gaussian (unnormalized) complex n-vector."""
    return complex_normal(rng, n)


def random_unit_state(rng, n: int) -> np.ndarray:
    z = random_state(rng, n)
    return z / np.linalg.norm(z)


def random_realified(rng, n: int) -> np.ndarray:
    return to_real(random_state(rng, n))


def random_hermitian(rng, n: int) -> np.ndarray:
    M = complex_normal(rng, (n, n))
    return (M + M.conj().T) / 2


def random_unitary(rng, n: int) -> np.ndarray:
    if n == 1:
        return np.exp(2j * np.pi * rng.random()).reshape(1, 1)
    return unitary_group.rvs(n, random_state=rng)


def random_density(rng, n: int, rank: int | None = None) -> np.ndarray:
    """``A A^dagger / Tr`` with A of shape (n, rank)."""
    A = complex_normal(rng, (n, rank or n))
    rho = A @ A.conj().T
    rho = (rho + rho.conj().T) / 2
    return rho / np.trace(rho).real


def spectral_decomposition(rho) -> MixtureDecomposition:
    evals, vecs = np.linalg.eigh(rho)
    keep = evals > 1e-14
    w = evals[keep] / evals[keep].sum()
    return MixtureDecomposition.from_complex(w, list(vecs[:, keep].T))


def random_decomposition(rng, rho, extra: int = 2) -> MixtureDecomposition:
    """A random ensemble for rho, mixing the scaled eigenvectors by an isometry."""
    evals, vecs = np.linalg.eigh(rho)
    keep = evals > 1e-14
    scaled = vecs[:, keep] * np.sqrt(evals[keep])
    r = scaled.shape[1]
    m = r + extra
    W = random_unitary(rng, m)[:, :r]
    members = scaled @ W.T  # column k = sum_i W[k, i] * scaled[:, i]
    weights = np.sum(np.abs(members) ** 2, axis=0)
    keep = weights > 1e-14
    members, weights = members[:, keep], weights[keep]
    return MixtureDecomposition.from_complex(weights / weights.sum(), list(members.T))
