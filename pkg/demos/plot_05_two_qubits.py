"""
Two qubits in the Pauli and Cartan bases
========================================

A two-qubit density matrix has fifteen real coordinates: three for each
local Bloch vector and nine correlation coefficients.  A product state has
correlations equal to the outer product of its local vectors.
"""

import numpy as np

from geoqm import composite as cp
from geoqm.sampling import complex_normal, random_density

###############################################################################
# A product state and a Bell state
# --------------------------------

n = np.array([1.0, 0.0, 0.0])
m = np.array([0.0, 0.0, 1.0])
dec = cp.pauli_decompose(cp.separable_pure(n, m))
print("p =", dec.p, " q =", dec.q)
print("r =\n", dec.r)

bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
dec = cp.pauli_decompose(np.outer(bell, bell.conj()))
print("Bell correlations:\n", np.round(dec.r, 12) + 0.0)

###############################################################################
# Purity from the coordinates
# ---------------------------
# Tr(rho^2) equals (1 + |p|^2 + |q|^2 + |r|^2) / 4.  Pure states saturate the
# bound |p|^2 + |q|^2 + |r|^2 = 3.

rng = np.random.default_rng(4)
rho = random_density(rng, 4)
dec = cp.pauli_decompose(rho)
print("Tr rho^2 =", np.trace(rho @ rho).real, " from coordinates:", (1 + dec.squared_norm()) / 4)

###############################################################################
# Cartan form
# -----------
# Diagonalizing rho and writing its spectrum in the basis
# 1x1, s3x1, 1xs3, s3xs3 gives three numbers p that fix the eigenvalues.

form = cp.cartan_canonical_form(rho)
print("eigenvalues:", np.round(np.diag(form.diagonal()).real, 6))
print("p =", np.round(form.p, 6))
print("reconstruction error:", np.max(np.abs(form.to_matrix() - rho)))

###############################################################################
# Product rule for brackets
# -------------------------
# The bracket of products z_m w_n on the joint space splits into brackets on
# each factor.

z, w = complex_normal(rng, 2), complex_normal(rng, 2)
lhs, rhs = cp.product_poisson_sides(1, 1, 1, 1, z, w, conj=(False, False, True, False))
print("{z1 w1, z1* w1}:", lhs, " split:", rhs, " -2i w1^2:", -2j * w[0] ** 2)
