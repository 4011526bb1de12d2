"""
Gates as canonical transformations
==================================

A unitary gate U can be encoded by the generating function
S(phi*, psi) = i phi^dagger U psi.  Its partial derivatives reproduce the
pairing phi = U psi, which we check for the built-in single-qubit gates.
"""

import numpy as np

from geoqm import gates
from geoqm.projective import bloch_map
from geoqm.realified import to_real

H = gates.builtin_generating("hadamard")
Z = gates.builtin_generating("phase")
print("U_H =\n", np.round(H.U, 6))
print("U_H squared =\n", np.round(H.U @ H.U, 12).real + 0.0)

###############################################################################
# Canonical relations
# -------------------
# The residual is zero exactly when phi is the image of psi.

psi = np.array([0.6, 0.8j])
print("residual at phi = U psi :", gates.canonical_residual(H, psi, H.U @ psi))
print("residual at phi = 2U psi:", gates.canonical_residual(H, psi, 2 * H.U @ psi))

###############################################################################
# A phase shift by pi is the phase gate
# -------------------------------------

print(np.allclose(gates.builtin_generating("phase_shift", np.pi).U, Z.U))

###############################################################################
# Circuits and the Bloch sphere
# -----------------------------
# The Hadamard gate swaps the first and third Bloch coordinates and flips the
# second.  A circuit is applied left to right.

circuit = gates.parse_circuit([{"gate": "hadamard"}, {"gate": "phase_shift", "theta": np.pi / 2}])
out = gates.apply_circuit([1, 0], circuit)
print("H then S on |0>:", np.round(out, 6))
print("Bloch before:", bloch_map(to_real(psi)), "after H:", np.round(bloch_map(to_real(H.U @ psi)), 12) + 0.0)
