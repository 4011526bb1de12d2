import numpy as np
import pytest

from geoqm.composite import (
    LAMBDA,
    PauliDecomposition,
    cartan_canonical_form,
    monomial_pairs,
    pauli_decompose,
    product_poisson,
    product_poisson_sides,
    separable_pure,
    tensor_state,
)
from geoqm.exceptions import DensityError, DimensionError, GeometryError
from geoqm.pauli import SIGMA0, SIGMA1, SIGMA2, SIGMA3
from geoqm.projective import pure_projector
from geoqm.realified import to_real
from geoqm.sampling import complex_normal, random_density, random_unitary

BELL = np.array([1, 0, 0, 1]) / np.sqrt(2)
PAULI = [SIGMA1, SIGMA2, SIGMA3]


def unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def bloch_lift(x):
    """A unit spinor whose Bloch vector is x (independent of the library)."""
    theta = np.arccos(np.clip(x[2], -1, 1))
    phi = np.arctan2(x[1], x[0])
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])


def test_tensor_state_examples(rng):
    np.testing.assert_array_equal(tensor_state([1, 0], [1, 0]), [1, 0, 0, 0])
    np.testing.assert_array_equal(tensor_state([1, 0], [0, 1]), [0, 1, 0, 0])
    z, w = complex_normal(rng, 2), complex_normal(rng, 2)
    u = tensor_state(z, w)
    np.testing.assert_allclose(u, [z[0] * w[0], z[0] * w[1], z[1] * w[0], z[1] * w[1]])
    assert np.linalg.norm(u) == pytest.approx(np.linalg.norm(z) * np.linalg.norm(w))
    with pytest.raises(DimensionError):
        tensor_state([1, 0, 0], [1, 0])


def test_separable_pure_examples():
    np.testing.assert_allclose(separable_pure([0, 0, 1], [0, 0, 1]), np.diag([1, 0, 0, 0]))
    plus = np.full((2, 2), 0.5)
    np.testing.assert_allclose(separable_pure([1, 0, 0], [0, 0, 1]), np.kron(plus, np.diag([1, 0])))
    with pytest.raises(GeometryError):
        separable_pure([1, 1, 0], [0, 0, 1])
    with pytest.raises(DimensionError):
        separable_pure([1, 0], [0, 0, 1])


def test_separable_pure_properties(rng):
    for _ in range(50):
        n, m = unit(rng), unit(rng)
        rho = separable_pure(n, m)
        ev = np.linalg.eigvalsh(rho)
        assert ev[-1] == pytest.approx(1, abs=1e-10)
        assert np.max(np.abs(ev[:-1])) < 1e-10
        dec = pauli_decompose(rho)
        assert np.max(np.abs(dec.p - n)) < 1e-10
        assert np.max(np.abs(dec.q - m)) < 1e-10
        assert np.max(np.abs(dec.r - np.outer(n, m))) < 1e-10
        lifted = pure_projector(to_real(tensor_state(bloch_lift(n), bloch_lift(m))))
        assert np.max(np.abs(lifted - rho)) < 1e-10


def test_pauli_decompose_examples():
    dec = pauli_decompose(np.eye(4) / 4)
    assert not dec.p.any() and not dec.q.any() and not dec.r.any()
    bell = pauli_decompose(np.outer(BELL, BELL))
    np.testing.assert_allclose(bell.p, 0, atol=1e-15)
    np.testing.assert_allclose(bell.q, 0, atol=1e-15)
    np.testing.assert_allclose(bell.r, np.diag([1, -1, 1]), atol=1e-15)
    assert bell.squared_norm() == pytest.approx(3)


def test_pauli_decompose_against_trace_oracle(rng):
    rho = random_density(rng, 4)
    dec = pauli_decompose(rho)
    for j in range(3):
        assert dec.p[j] == pytest.approx(np.trace(rho @ np.kron(PAULI[j], SIGMA0)).real, abs=1e-14)
        assert dec.q[j] == pytest.approx(np.trace(rho @ np.kron(SIGMA0, PAULI[j])).real, abs=1e-14)
        for k in range(3):
            assert dec.r[j, k] == pytest.approx(np.trace(rho @ np.kron(PAULI[j], PAULI[k])).real, abs=1e-14)


def test_pauli_round_trip_and_purity(rng):
    for _ in range(100):
        rho = random_density(rng, 4, rank=int(rng.integers(1, 5)))
        dec = pauli_decompose(rho)
        assert np.max(np.abs(dec.to_matrix() - rho)) < 1e-12
        purity = np.trace(rho @ rho).real
        assert abs(purity - (1 + dec.squared_norm()) / 4) < 1e-12
        assert dec.squared_norm() <= 3 + 1e-10


def test_pauli_decompose_rejects_bad_input():
    with pytest.raises(DimensionError):
        pauli_decompose(np.eye(2) / 2)
    with pytest.raises(DensityError):
        pauli_decompose(np.diag([1.5, -0.5, 0, 0]))


def test_reconstruction_does_not_imply_positivity():
    dec = PauliDecomposition(p=np.zeros(3), q=np.zeros(3), r=np.diag([1.0, 1.0, 1.0]))
    M = dec.to_matrix()
    assert np.trace(M).real == pytest.approx(1)
    assert np.linalg.eigvalsh(M).min() < 0


def test_lambda_basis():
    np.testing.assert_array_equal(np.diag(LAMBDA[1]).real, [1, 1, -1, -1])
    np.testing.assert_array_equal(np.diag(LAMBDA[2]).real, [1, -1, 1, -1])
    np.testing.assert_array_equal(np.diag(LAMBDA[3]).real, [1, -1, -1, 1])
    D = np.array([np.diag(L).real for L in LAMBDA])
    np.testing.assert_array_equal(D @ D.T, 4 * np.eye(4))


def test_cartan_examples():
    form = cartan_canonical_form(np.eye(4) / 4)
    np.testing.assert_allclose(form.p, 0, atol=1e-15)
    np.testing.assert_allclose(form.U, np.eye(4), atol=1e-15)
    form = cartan_canonical_form(np.diag([1.0, 0, 0, 0]))
    np.testing.assert_allclose(form.p, [1, 1, 1], atol=1e-14)
    bell = np.outer(BELL, BELL)
    form = cartan_canonical_form(bell)
    np.testing.assert_allclose(form.p, [1, 1, 1], atol=1e-12)
    np.testing.assert_allclose(form.to_matrix(), bell, atol=1e-12)
    np.testing.assert_allclose(form.U[:, 0], BELL, atol=1e-12)


def test_cartan_reconstruction_and_ranges(rng):
    for _ in range(50):
        rho = random_density(rng, 4, rank=int(rng.integers(1, 5)))
        form = cartan_canonical_form(rho)
        U = form.U
        np.testing.assert_allclose(U.conj().T @ U, np.eye(4), atol=1e-12)
        assert np.max(np.abs(form.to_matrix() - rho)) < 1e-10
        diag = np.diag(form.diagonal()).real
        assert np.all(np.diff(diag) <= 1e-12)
        assert np.all((diag >= -1e-12) & (diag <= 1 + 1e-12))
        assert np.all(np.abs(form.p) <= 1 + 1e-12)
        np.testing.assert_allclose(np.sort(diag), np.linalg.eigvalsh(rho), atol=1e-12)


def test_cartan_is_deterministic_for_degenerate_spectra(rng):
    U = random_unitary(rng, 4)
    rho = U @ np.diag([0.5, 0.5, 0, 0]) @ U.conj().T
    a, b = cartan_canonical_form(rho), cartan_canonical_form(rho.copy())
    np.testing.assert_array_equal(a.U, b.U)
    np.testing.assert_array_equal(a.p, b.p)


def test_product_poisson_examples(rng):
    z, w = complex_normal(rng, 2), complex_normal(rng, 2)
    assert product_poisson(1, 1, 1, 2, z, w) == pytest.approx(0, abs=1e-14)
    value = product_poisson(1, 1, 1, 1, z, w, conj=(False, False, True, False))
    assert value == pytest.approx(-2j * w[0] ** 2, abs=1e-12)


def test_product_poisson_real_coordinate_oracle(rng):
    # {z1 w1, z1* w1} expanded by hand with {q_a, p_b} = delta_ab on the 8 real coordinates
    z, w = complex_normal(rng, 2), complex_normal(rng, 2)

    def bracket(dF, dG):  # differentials split as (d/dq, d/dp)
        return np.sum(dF[0] * dG[1] - dF[1] * dG[0])

    e = np.eye(4)
    F = (w[0] * e[0] + z[0] * e[2], 1j * w[0] * e[0] + 1j * z[0] * e[2])
    G = (w[0] * e[0] + z[0].conjugate() * e[2], -1j * w[0] * e[0] + 1j * z[0].conjugate() * e[2])
    expected = bracket(F, G)
    assert product_poisson(1, 1, 1, 1, z, w, conj=(False, False, True, False)) == pytest.approx(expected, abs=1e-12)


def test_product_rule_on_monomial_pairs(rng):
    pairs = list(monomial_pairs())
    assert len(pairs) == 256
    picks = rng.choice(len(pairs), size=100, replace=False)
    for k in picks:
        (m, n, r, s), conj = pairs[k]
        z, w = complex_normal(rng, 2), complex_normal(rng, 2)
        lhs, rhs = product_poisson_sides(m, n, r, s, z, w, conj)
        assert abs(lhs - rhs) < 1e-12


def test_product_poisson_index_errors():
    with pytest.raises(IndexError):
        product_poisson(0, 1, 1, 1, [1, 0], [1, 0])
    with pytest.raises(IndexError):
        product_poisson(1, 1, 3, 1, [1, 0], [1, 0])
