"""
Observables as quadratic functions
==================================

Every Hermitian matrix A defines a real function f_A(x) = <x|A x>/2 on the
realified state space.  Commutators and anticommutators of matrices turn
into Poisson and Jordan brackets of these functions.
"""

import numpy as np

from geoqm import observables as obs
from geoqm.pauli import SIGMA1, SIGMA2, SIGMA3
from geoqm.realified import to_real
from geoqm.sampling import random_hermitian, random_realified

###############################################################################
# A first example on a qubit
# --------------------------
# At the basis vector e1 the Pauli matrices sigma_1 and sigma_2 have vanishing
# expectation, yet their Poisson bracket is 1.  That is the value of
# -i f_[A,B] = f_{2 sigma_3} at e1.

e1 = to_real([1, 0])
print("f_sigma3(e1)      =", obs.quadratic_form(SIGMA3, e1).real)
print("{f_s1, f_s2}(e1)  =", obs.poisson_bracket(SIGMA1, SIGMA2, e1))
print("(f_s1, f_s1)(e1)  =", obs.jordan_bracket(SIGMA1, SIGMA1, e1))

###############################################################################
# The bracket theorems on random data
# -----------------------------------
# We draw random Hermitian pairs and compare the bracket of the functions with
# the function of the (anti)commutator.

rng = np.random.default_rng(1)
worst = 0.0
for _ in range(200):
    A, B = random_hermitian(rng, 3), random_hermitian(rng, 3)
    x = random_realified(rng, 3)
    lie = -1j * obs.quadratic_form(obs.commutator(A, B), x)
    jordan = obs.quadratic_form(obs.anticommutator(A, B), x)
    worst = max(worst, abs(obs.poisson_bracket(A, B, x) - lie), abs(obs.jordan_bracket(A, B, x) - jordan))
print(f"largest deviation over 200 draws: {worst:.1e}")

###############################################################################
# Brackets of arbitrary functions
# -------------------------------
# bracket_general takes differentials, so it also handles functions that are
# not quadratic.  For the canonical coordinates q_1 and p_1 we get {q, p} = 1.

dq = np.eye(4)[0]
dp = np.eye(4)[2]
print("{q1, p1} =", obs.bracket_general(dq, dp)[0])

# The symmetric tensor of the Jordan bracket is J composed with the Poisson
# tensor.  In these coordinates both are plain matrices.
print(obs.jordan_matrix(2))
