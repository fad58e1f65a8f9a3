import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_state, rng
from tangle3.exceptions import (
    DimensionError,
    InvalidOperator,
    InvalidTrace,
    NearSingularMarginal,
    NotHermitian,
    NotPositive,
)
from tangle3.linalg import (
    I2,
    SX,
    SZ,
    basis_state,
    density_matrix,
    herm_eigensystem,
    inv_sqrt_2x2,
    kron3,
    local_operator,
    min_eigenvalue,
    partial_trace,
    projector,
    two_qubit_marginal,
)
from tangle3.states import GHZ, PI_GHZ, PI_W, W


def test_kron3_identity():
    assert np.array_equal(kron3(I2, I2, I2), np.eye(8))


def test_kron3_flip_on_first_qubit():
    assert np.array_equal(kron3(SX, I2, I2) @ basis_state("000"), basis_state("100"))


def test_kron3_zzz_diagonal():
    expected = [1, -1, -1, 1, -1, 1, 1, -1]
    assert np.array_equal(kron3(SZ, SZ, SZ), np.diag(expected))


def test_kron3_rejects_wrong_shape():
    with pytest.raises(DimensionError):
        kron3(np.eye(3), I2, I2)


@pytest.mark.parametrize("keep", [1, 2, 3])
def test_partial_trace_ghz_is_maximally_mixed(keep):
    assert np.allclose(partial_trace(PI_GHZ, keep), I2 / 2, atol=1e-15)


def test_partial_trace_product_state():
    assert np.allclose(partial_trace(projector(basis_state("001")), 3), np.diag([0, 1]))


def test_partial_trace_w_first_qubit():
    assert np.allclose(partial_trace(PI_W, 1), np.diag([2 / 3, 1 / 3]), atol=1e-15)


def test_partial_trace_bad_index():
    with pytest.raises(DimensionError):
        partial_trace(PI_GHZ, 4)


def test_partial_trace_recovers_product_factor():
    g = rng(1)
    factors = []
    for _ in range(3):
        a = g.normal(size=(2, 2)) + 1j * g.normal(size=(2, 2))
        factors.append(a @ a.conj().T)
    rho = kron3(*factors)
    for j in range(3):
        others = np.prod([np.trace(f) for k, f in enumerate(factors) if k != j])
        assert np.allclose(partial_trace(rho, j + 1), factors[j] * others, atol=1e-12)


def test_two_qubit_marginal_matches_brute_force():
    rho = random_state(rng(2))
    t = rho.reshape((2,) * 6)
    brute = np.zeros((4, 4), dtype=complex)
    for a, b, c, d, e in np.ndindex(2, 2, 2, 2, 2):
        brute[2 * a + b, 2 * c + d] += t[a, e, b, c, e, d]
    assert np.allclose(two_qubit_marginal(rho, 1, 3), brute, atol=1e-15)


def test_eigensystem_of_diagonal():
    w, v = herm_eigensystem(np.diag(np.arange(1.0, 9.0)))
    assert np.allclose(w, np.arange(1, 9))
    assert np.allclose(np.abs(v), np.eye(8))


def test_eigensystem_of_ghz_projector():
    w, v = herm_eigensystem(PI_GHZ)
    assert np.allclose(w, [0] * 7 + [1], atol=1e-12)
    assert abs(abs(np.vdot(v[:, -1], GHZ)) - 1) < 1e-12


def test_eigensystem_of_raw_symmetric_matrix():
    # x = 1/4, y = 0: a = b = 1/8, so a - x < 0 and the matrix is not a state
    m = np.eye(8) / 8
    m[0, 7] = m[7, 0] = 0.25
    w, _ = herm_eigensystem(m)
    assert np.allclose(w, sorted([1 / 8 - 1 / 4, 1 / 8 + 1 / 4] + [1 / 8] * 6))
    with pytest.raises(NotPositive):
        density_matrix(m)


def test_eigensystem_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        herm_eigensystem(np.triu(np.ones((8, 8))))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_eigensystem_reconstructs(seed):
    g = rng(seed)
    a = g.normal(size=(8, 8)) + 1j * g.normal(size=(8, 8))
    m = a + a.conj().T
    w, v = herm_eigensystem(m)
    assert np.allclose((v * w) @ v.conj().T, m, atol=1e-8)
    assert np.allclose(v.conj().T @ v, np.eye(8), atol=1e-9)


def test_inv_sqrt_examples():
    assert np.allclose(inv_sqrt_2x2(I2 / 2), np.sqrt(2) * I2)
    assert np.allclose(inv_sqrt_2x2(np.diag([4.0, 1.0])), np.diag([0.5, 1.0]))
    with pytest.raises(NearSingularMarginal):
        inv_sqrt_2x2(np.diag([1e-16, 1.0]))


def test_inv_sqrt_is_hermitian_and_inverts():
    g = rng(4)
    a = g.normal(size=(2, 2)) + 1j * g.normal(size=(2, 2))
    m = a @ a.conj().T + 0.1 * I2
    s = inv_sqrt_2x2(m)
    assert np.allclose(s, s.conj().T, atol=1e-12)
    assert np.allclose(s @ s @ m, I2, atol=1e-9)


def test_min_eigenvalue_examples():
    assert min_eigenvalue(np.eye(8) / 8) == pytest.approx(1 / 8)
    assert min_eigenvalue(PI_GHZ) == pytest.approx(0, abs=1e-12)
    assert min_eigenvalue(PI_GHZ - 0.1 * projector(W)) == pytest.approx(-0.1, abs=1e-12)


def test_density_matrix_clips_tiny_negative_eigenvalues():
    m = PI_GHZ - 5e-11 * projector(W)
    out = density_matrix(m)
    assert min_eigenvalue(out) >= -1e-15


def test_density_matrix_trace_rules():
    with pytest.raises(InvalidTrace):
        density_matrix(np.zeros((8, 8)))
    with pytest.raises(InvalidTrace):
        density_matrix(2 * PI_GHZ)
    assert np.trace(density_matrix(0.5 * PI_GHZ)).real == pytest.approx(0.5)


def test_local_operator_requires_unit_determinant():
    with pytest.raises(InvalidOperator):
        local_operator(2 * I2, I2, I2)
    op = local_operator(I2, I2, I2)
    assert op.is_unitary()
