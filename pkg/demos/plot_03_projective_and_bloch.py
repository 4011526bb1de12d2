"""
Rays, the Fubini-Study tensor and the Bloch sphere
==================================================

Physical states are rays, so every quantity on the projective space must
ignore the direction of x and of J x.  Here we look at the connection form
that measures those two directions and at the Fubini-Study tensor that
discards them.  The qubit case ends on the Bloch sphere.
"""

import numpy as np

from geoqm import projective as pj
from geoqm.realified import apply_complex_structure as J, to_real
from geoqm.sampling import random_realified

rng = np.random.default_rng(2)
psi = random_realified(rng, 3)

###############################################################################
# Vertical directions
# -------------------
# The connection form returns 1 on the radial direction and i on the phase
# direction.  The Fubini-Study tensor vanishes on both.

print("theta(Delta)   =", pj.connection_form(psi, psi))
print("theta(J Delta) =", pj.connection_form(psi, J(psi)))
v = random_realified(rng, 3)
print("FS(psi, v)     =", abs(pj.fubini_study(psi, psi, v)))

###############################################################################
# Horizontal directions
# ---------------------
# Removing the vertical part of a tangent vector leaves a horizontal one.
# On horizontal vectors the Fubini-Study metric is positive.

vecs = [pj.horizontal_projection(psi, random_realified(rng, 3)) for _ in range(6)]
gram = np.array([[pj.fubini_study(psi, a, b) for b in vecs] for a in vecs])
print("eigenvalues of the horizontal Gram matrix:")
print(np.round(np.linalg.eigvalsh(gram), 6))

###############################################################################
# The qubit and its Bloch vector
# ------------------------------
# For n = 2 each ray maps to a point on the unit sphere.  Scaling the state
# by any nonzero complex number leaves that point unchanged.

for label, z in [("|0>", [1, 0]), ("|+>", [1, 1]), ("|+i>", [1, 1j])]:
    x = pj.bloch_map(to_real(np.array(z) / np.linalg.norm(z)))
    print(f"{label:5s} -> {np.round(x, 12) + 0.0}")

z = np.array([0.3 - 0.4j, 1.1 + 0.2j])
print("scale invariance:", np.allclose(pj.bloch_map(to_real(z)), pj.bloch_map(to_real((2 - 5j) * z))))
