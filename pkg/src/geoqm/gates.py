"""
Quantum gates as generating functions of linear canonical transformations.

A gate with matrix U is encoded by ``S(phi*, psi) = i phi^dagger U psi``.
The canonical relations read

    dS/dpsi^k  = i psi*_k
    dS/dphi*_k = i phi^k

and both hold exactly when ``phi = U psi`` with U unitary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .exceptions import DimensionError, GeometryError

__all__ = [
    "GeneratingFunction",
    "builtin_generating",
    "canonical_residual",
    "apply_circuit",
    "parse_circuit",
    "load_circuit",
]


@dataclass(frozen=True)
class GeneratingFunction:
    U: np.ndarray

    def __post_init__(self):
        U = np.array(self.U, dtype=complex)
        if U.ndim != 2 or U.shape[0] != U.shape[1]:
            raise DimensionError(f"generating matrix must be square, got {U.shape}")
        U.setflags(write=False)
        object.__setattr__(self, "U", U)

    @property
    def dim(self) -> int:
        return self.U.shape[0]

    @classmethod
    def from_coefficients(cls, coeffs: dict[tuple[int, int], complex], dim: int) -> "GeneratingFunction":
        """Build from ``S = i sum c[k, j] phi*_k psi^j`` with 1-based (k, j)."""
        U = np.zeros((dim, dim), dtype=complex)
        for (k, j), c in coeffs.items():
            U[k - 1, j - 1] += c
        return cls(U)

    def __call__(self, phi, psi) -> complex:
        return complex(1j * np.vdot(phi, self.U @ np.asarray(psi, dtype=complex)))

    def d_psi(self, phi) -> np.ndarray:
        """``dS/dpsi^j = i sum_k phi*_k U^k_j``."""
        return 1j * (np.conj(phi) @ self.U)

    def d_phi_star(self, psi) -> np.ndarray:
        """``dS/dphi*_k = i sum_j U^k_j psi^j``."""
        return 1j * (self.U @ np.asarray(psi, dtype=complex))

    def is_unitary(self, atol: float = 1e-12) -> bool:
        return np.allclose(self.U.conj().T @ self.U, np.eye(self.dim), rtol=0.0, atol=atol)


_INV_SQRT2 = 1 / np.sqrt(2)


def builtin_generating(name: str, theta: float | None = None) -> GeneratingFunction:
    """Generating function of a named single-qubit gate.

    ``hadamard``:    S = i/sqrt2 (phi*_1 psi^1 + phi*_2 psi^1 + phi*_1 psi^2 - phi*_2 psi^2)
    ``phase``:       S = i (phi*_1 psi^1 - phi*_2 psi^2)
    ``phase_shift``: S = i (phi*_1 psi^1 + e^{i theta} phi*_2 psi^2)
    """
    if name == "phase_shift":
        if theta is None:
            raise GeometryError("phase_shift requires theta")
        coeffs = {(1, 1): 1.0, (2, 2): np.exp(1j * theta)}
    elif theta is not None:
        raise GeometryError(f"gate {name!r} takes no theta")
    elif name == "hadamard":
        coeffs = {(1, 1): _INV_SQRT2, (2, 1): _INV_SQRT2, (1, 2): _INV_SQRT2, (2, 2): -_INV_SQRT2}
    elif name == "phase":
        coeffs = {(1, 1): 1.0, (2, 2): -1.0}
    else:
        raise GeometryError(f"unknown gate {name!r}")
    return GeneratingFunction.from_coefficients(coeffs, 2)


def canonical_residual(S: GeneratingFunction, psi, phi) -> float:
    """Norm of the residuals of both canonical relations at (psi, phi)."""
    psi = np.asarray(psi, dtype=complex)
    phi = np.asarray(phi, dtype=complex)
    if psi.shape != (S.dim,) or phi.shape != (S.dim,):
        raise DimensionError("psi and phi must match the generating function's dimension")
    r1 = S.d_psi(phi) - 1j * psi.conj()
    r2 = S.d_phi_star(psi) - 1j * phi
    return float(np.sqrt(np.vdot(r1, r1).real + np.vdot(r2, r2).real))


def apply_circuit(psi0, gates: Sequence[GeneratingFunction]) -> np.ndarray:
    """``U_k ... U_2 U_1 psi0`` for gates listed in application order."""
    psi = np.array(psi0, dtype=complex)
    for S in gates:
        if S.dim != psi.size:
            raise DimensionError(f"gate of dimension {S.dim} applied to a {psi.size}-vector")
        psi = S.U @ psi
    return psi


def parse_circuit(entries: Iterable[dict]) -> list[GeneratingFunction]:
    """Circuit from ``[{"gate": name, "theta": number?}, ...]``."""
    if not isinstance(entries, list):
        raise GeometryError("circuit must be a JSON array")
    gates = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict) or "gate" not in entry:
            raise GeometryError(f"circuit entry {i} needs a 'gate' field")
        theta = entry.get("theta")
        gates.append(builtin_generating(entry["gate"], None if theta is None else float(theta)))
    return gates


def load_circuit(path) -> list[GeneratingFunction]:
    return parse_circuit(json.loads(Path(path).read_text()))
