"""
Complex vectors as real phase space
===================================

A state vector in C^n can be read as a point of R^2n by splitting each
component into real and imaginary parts.  This script walks through what
survives that translation: the complex structure J, the metric g and the
symplectic form omega, which together rebuild the Hermitian product.
"""

import numpy as np

from geoqm import realified as rf

###############################################################################
# From complex to real coordinates
# --------------------------------
# The real vector lists all real parts first, then all imaginary parts.

z = np.array([1 + 2j, 3 - 1j])
x = rf.to_real(z)
print("z =", z)
print("x =", x)
print("round trip:", rf.to_complex(x))

###############################################################################
# Multiplication by i becomes a real linear map
# ---------------------------------------------
# J sends (q, p) to (-p, q).  Applying it twice gives minus the identity.

print("J x       =", rf.apply_complex_structure(x))
print("to_real(iz) =", rf.to_real(1j * z))
print("J J x + x =", rf.apply_complex_structure(rf.apply_complex_structure(x)) + x)

###############################################################################
# The Hermitian product splits into two real tensors
# --------------------------------------------------
# The real part of <x|y> is a Euclidean inner product.  The imaginary part is
# an antisymmetric form, and J links the two of them.

rng = np.random.default_rng(0)
y = rng.normal(size=4)
g, w, h = rf.hermitian_parts(x, y)
print(f"g = {g:.4f}, omega = {w:.4f}, h = {h:.4f}")
print("g(x, y) - omega(x, Jy) =", g - rf.symplectic(x, rf.apply_complex_structure(y)))

###############################################################################
# Dilation and phase rotation
# ---------------------------
# Two vector fields come for free on any complex vector space: the radial
# field Delta(x) = x and the phase field Gamma(x) = J x.  Functions that only
# depend on the ray through x are homogeneous of degree zero along Delta.

delta, gamma = rf.canonical_fields(x)
norm_sq = lambda v: v @ v
print("degree of |x|^2:", round(rf.homogeneity_degree(norm_sq, x), 6))
print("degree of x_1/|x|:", round(rf.homogeneity_degree(lambda v: v[0] / np.sqrt(v @ v), x), 6))
