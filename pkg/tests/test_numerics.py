import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_hermitian
from squeezecat.errors import NonHermitianError
from squeezecat.numerics import (
    cos_hermitian,
    exp_i_hermitian,
    func_of_hermitian,
    hermitian_eig,
    matrix_norms,
    sin_hermitian,
)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)


def destroy(n):
    return np.diag(np.sqrt(np.arange(1, n, dtype=float)), 1).astype(complex)


def test_eig_diagonal_input():
    dec = hermitian_eig(np.diag([3.0, 1.0]).astype(complex))
    np.testing.assert_allclose(dec.eigenvalues, [1.0, 3.0])
    # eigenvectors are the permuted identity with the positive-phase convention
    np.testing.assert_allclose(np.abs(dec.eigenvectors), [[0, 1], [1, 0]], atol=1e-15)


def test_eig_pauli_x():
    dec = hermitian_eig(SIGMA_X)
    np.testing.assert_allclose(dec.eigenvalues, [-1.0, 1.0], atol=1e-15)


def test_eig_number_operator():
    a = destroy(8)
    dec = hermitian_eig(a.conj().T @ a)
    np.testing.assert_allclose(dec.eigenvalues, np.arange(8), atol=1e-14)


def test_eig_reconstruction_and_orthonormality(rng):
    m = random_hermitian(rng, 24)
    dec = hermitian_eig(m)
    v = dec.eigenvectors
    assert np.linalg.norm(v @ v.conj().T - np.eye(24)) <= 1e-10 * 24
    rebuilt = (v * dec.eigenvalues) @ v.conj().T
    assert np.linalg.norm(rebuilt - m) <= 1e-9 * np.linalg.norm(m)


def test_eig_deterministic(rng):
    m = random_hermitian(rng, 17)
    d1 = hermitian_eig(m)
    d2 = hermitian_eig(m.copy())
    assert np.array_equal(d1.eigenvalues, d2.eigenvalues)
    assert np.array_equal(d1.eigenvectors, d2.eigenvectors)


def test_eig_rejects_non_square():
    with pytest.raises(ValueError):
        hermitian_eig(np.zeros((3, 4)))


def test_eig_rejects_non_hermitian():
    with pytest.raises(NonHermitianError) as err:
        hermitian_eig(np.array([[0, 1], [0, 0]], dtype=complex))
    assert err.value.defect > 0


def test_cos_of_zero_is_identity():
    np.testing.assert_allclose(cos_hermitian(np.zeros((5, 5))), np.eye(5), atol=1e-15)


def test_exp_i_scale_diagonal_phases():
    omega, t = 2.5, 0.7
    n = np.diag(np.arange(6, dtype=float)).astype(complex)
    u = exp_i_hermitian(omega * n, scale=-t)
    expected = np.diag(np.exp(-1j * omega * np.arange(6) * t))
    np.testing.assert_allclose(u, expected, atol=1e-14)


def test_cos_matches_taylor_series_oracle():
    """Spectral cosine vs independent Taylor summation, interior entries <= 1e-8."""
    n, guard = 40, 10
    a = destroy(n)
    beta, gamma = 0.3, 0.2
    m = beta * a + np.conj(beta) * a.conj().T + gamma * np.eye(n)
    spectral = cos_hermitian(m)

    taylor = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    m2 = m @ m
    for k in range(1, 60):
        term = term @ m2 * (-1.0) / ((2 * k - 1) * (2 * k))
        taylor += term
        if np.abs(term).max() < 1e-18:
            break
    interior = np.s_[: n - guard, : n - guard]
    assert np.abs(spectral[interior] - taylor[interior]).max() <= 1e-8


def test_unitarity_group_property(rng):
    m = random_hermitian(rng, 20)
    t = 0.83
    prod = exp_i_hermitian(m, -t) @ exp_i_hermitian(m, t)
    assert np.linalg.norm(prod - np.eye(20)) <= 1e-9 * 20


def test_cos_sin_pythagoras(rng):
    a = destroy(30)
    m = 0.4 * a + 0.4 * a.conj().T + 0.1 * np.eye(30)
    c, s = cos_hermitian(m), sin_hermitian(m)
    assert np.linalg.norm(c @ c + s @ s - np.eye(30)) <= 1e-9 * 30


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=2, max_value=12), st.integers(min_value=0, max_value=10_000))
def test_exp_i_is_unitary_property(dim, seed):
    m = random_hermitian(np.random.default_rng(seed), dim)
    u = exp_i_hermitian(m, 1.0)
    assert np.linalg.norm(u @ u.conj().T - np.eye(dim)) <= 1e-9 * dim


def test_func_of_accepts_decomposition(rng):
    m = random_hermitian(rng, 9)
    dec = hermitian_eig(m)
    np.testing.assert_allclose(
        func_of_hermitian(dec, np.cos), cos_hermitian(m), atol=1e-14
    )


def test_norms_identity():
    fro, spec = matrix_norms(np.eye(7))
    assert fro == pytest.approx(np.sqrt(7), rel=1e-15)
    assert spec == pytest.approx(1.0, rel=1e-12)


def test_norms_zero():
    assert matrix_norms(np.zeros((4, 4))) == (0.0, 0.0)


def test_norms_rank_one_outer_product(rng):
    u = rng.normal(size=5) + 1j * rng.normal(size=5)
    v = rng.normal(size=5) + 1j * rng.normal(size=5)
    u, v = u / np.linalg.norm(u), v / np.linalg.norm(v)
    fro, spec = matrix_norms(np.outer(u, v.conj()))
    assert fro == pytest.approx(1.0, rel=1e-12)
    assert spec == pytest.approx(1.0, rel=1e-12)
