"""
Mixed states, Casimirs and von Neumann flows
============================================

A density matrix is a convex combination of pure projectors.  The bracket
of two observables at a mixed state does not depend on how the mixture was
prepared, and unitary flows move the state along an orbit on which every
Casimir stays constant.
"""

import numpy as np

from geoqm import density as dm
from geoqm.pauli import SIGMA0, SIGMA1, SIGMA3
from geoqm.sampling import random_decomposition, random_density, random_hermitian

rng = np.random.default_rng(3)

###############################################################################
# Two ensembles for one state
# ---------------------------
# We draw a random qutrit state, build two different ensembles for it and
# evaluate the extended brackets on each.

rho = random_density(rng, 3)
A, B = random_hermitian(rng, 3), random_hermitian(rng, 3)
for k in range(2):
    d = random_decomposition(rng, rho)
    pb, jb = dm.extended_brackets(d, A, B)
    print(f"ensemble {k}: {len(d.weights)} members, poisson={pb:+.12f}, jordan={jb:+.12f}")
print("closed form:", dm.density_brackets(rho, A, B))

###############################################################################
# Casimir functions
# -----------------
# Tr(rho^k) is unchanged by unitary conjugation.  For a qubit, purity is
# (1 + |x|^2)/2 with x the Bloch vector.

c = dm.casimir((SIGMA0 + 0.6 * SIGMA3) / 2, 2)
print(c)

###############################################################################
# Precession on the Bloch sphere
# ------------------------------
# With H = sigma_3 the Bloch vector rotates about the third axis at angular
# speed 2.  After a quarter period the state (1, 0, 0) reaches (-1, 0, 0).

traj = dm.von_neumann_flow((SIGMA0 + SIGMA1) / 2, SIGMA3, np.pi / 2, dt=1e-3, method="rk4")
xs = traj.bloch()
for t, x in list(zip(traj.times, xs))[::40]:
    print(f"t={t:5.3f}  x={np.round(x, 6) + 0.0}")
print("final:", np.round(xs[-1], 9) + 0.0)

###############################################################################
# Orbits and their symplectic form
# --------------------------------
# Generators that commute with rho do not move it, so they span the kernel
# of the orbit form.  For a diagonal rho with distinct eigenvalues that kernel
# is the diagonal subalgebra.

rho = np.diag([0.5, 0.3, 0.2])
gram = dm.orbit_form_gram(rho)
print("rank of the orbit form:", np.linalg.matrix_rank(gram, tol=1e-9), "of", gram.shape[0])

###############################################################################
# The Bloch-ball two-form is not closed
# -------------------------------------
# The finite-difference exterior derivative matches 1/|x|^2.

for x in ([1.0, 0.0, 0.0], [0.0, 0.5, 0.0]):
    print(x, dm.ball_two_form_exterior_derivative(x))
