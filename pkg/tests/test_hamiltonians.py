import math

import numpy as np
import pytest

from squeezecat.diagnostics import (
    conjugation_residual,
    jc_dropped_residual,
    rotation_residual,
    x_rotation_residual,
)
from squeezecat.errors import RegimeViolation, ResonanceSingularity
from squeezecat.hamiltonians import (
    DeviceParams,
    PhysParams,
    default_params,
    deep_squeeze_params,
    derive_params,
    dispersive_coefficient,
    effective_hamiltonian,
    full_hamiltonian,
    jaynes_cummings_hamiltonian,
    squeeze_coefficient,
    squeeze_hamiltonian,
    squeeze_rate,
    squeeze_superposition_hamiltonian,
    transformed_constant,
    transformed_hamiltonian,
)
from squeezecat.hilbert import (
    SIGMA_X,
    SIGMA_Z,
    compose,
    field_identity,
    number_operator,
)
from squeezecat.numerics import hermitian_eig


def make_params(beta, gamma=0.0, hw=10.0, ej=1.0, ez=0.0):
    return PhysParams(hbar_omega=hw, e_j=ej, e_z=ez, beta=beta, gamma_flux=gamma)


# --- device-to-model mapping -------------------------------------------------

def test_derive_params_degeneracy_point():
    dev = DeviceParams(e_ch=2.5, e_j=1.0, n_g=0.5)
    assert derive_params(dev).e_z == 0.0


def test_derive_params_frequency():
    assert derive_params(DeviceParams(e_ch=2.5, e_j=1.0)).hbar_omega == 10.0


def test_derive_params_flux_and_mode():
    dev = DeviceParams(e_ch=2.5, e_j=1.0, flux_ratio_classical=0.0, mode_ratio=0.3)
    p = derive_params(dev)
    assert p.gamma_flux == 0.0
    assert p.beta == 0.3
    assert derive_params(
        DeviceParams(e_ch=2.5, e_j=1.0, flux_ratio_classical=0.5)
    ).gamma_flux == pytest.approx(math.pi / 2)


def test_charge_regime_flag():
    assert DeviceParams(e_ch=2.5, e_j=0.5).in_charge_regime()
    assert not DeviceParams(e_ch=2.5, e_j=1.0).in_charge_regime()


# --- full Hamiltonian ---------------------------------------------------------

def test_full_hamiltonian_beta_zero(check_dims):
    h = full_hamiltonian(make_params(0.0, ez=0.7), check_dims)
    expected = (
        10.0 * compose(np.eye(2), number_operator(check_dims))
        + 0.7 * compose(SIGMA_Z, field_identity(check_dims))
        - 1.0 * compose(SIGMA_X, field_identity(check_dims))
    )
    np.testing.assert_allclose(h, expected, atol=1e-12)


def test_full_hamiltonian_interaction_vanishes_at_right_angle(check_dims):
    h = full_hamiltonian(make_params(0.0, gamma=math.pi / 2, ez=0.0), check_dims)
    expected = 10.0 * compose(np.eye(2), number_operator(check_dims))
    np.testing.assert_allclose(h, expected, atol=1e-12)


def test_full_hamiltonian_hermitian_complex_beta(check_dims):
    h = full_hamiltonian(make_params(0.3 + 0.1j, gamma=0.4), check_dims)
    assert np.linalg.norm(h - h.conj().T) < 1e-10 * np.linalg.norm(h)


# --- transformed Hamiltonian and the conjugation identity ---------------------

def test_transformed_beta_zero_closed_form(check_dims):
    h = transformed_hamiltonian(make_params(0.0, ez=0.7), check_dims)
    expected = (
        10.0 * compose(np.eye(2), number_operator(check_dims))
        + 1.0 * compose(SIGMA_Z, field_identity(check_dims))
        - 0.7 * compose(SIGMA_X, field_identity(check_dims))
    )
    np.testing.assert_allclose(h, expected, atol=1e-12)


def test_transformed_hermitian(check_dims):
    h = transformed_hamiltonian(make_params(0.3 + 0.1j, gamma=0.4, ez=0.5), check_dims)
    assert np.linalg.norm(h - h.conj().T) < 1e-10 * np.linalg.norm(h)


def test_conjugation_identity_moderate_beta(check_dims):
    res = conjugation_residual(make_params(0.3, gamma=0.2, ez=1.0), check_dims)
    assert res <= 1e-6


def test_conjugation_identity_large_beta(check_dims):
    # the identity is exact in beta, not perturbative
    res = conjugation_residual(make_params(0.45), check_dims)
    assert res <= 1e-6


def test_transformed_constant_scales_with_frequency():
    assert transformed_constant(make_params(0.25)) == pytest.approx(10.0 * 0.125**2)


# --- Jaynes-Cummings reduction -------------------------------------------------

def test_jc_beta_zero(check_dims):
    with pytest.warns(RegimeViolation):  # beta = 0 is maximally outside the JC regime
        h = jaynes_cummings_hamiltonian(make_params(0.0), check_dims)
    expected = 10.0 * compose(np.eye(2), number_operator(check_dims)) + 0.5 * compose(
        SIGMA_Z, field_identity(check_dims)
    )
    np.testing.assert_allclose(h, expected, atol=1e-12)


def test_jc_dropped_norm_bounded(check_dims):
    dropped, _ = jc_dropped_residual(default_params(), check_dims)
    # exact dropped operator has spectral norm E_J/2
    assert dropped <= 1.5
    assert dropped == pytest.approx(0.5, abs=0.05)


def test_jc_relative_residual_monotone(check_dims):
    ratios = []
    for target in (0.4, 0.2, 0.1, 0.05):
        hw = 1.0 / (target * 0.25)
        _, rel = jc_dropped_residual(make_params(0.25, hw=hw), check_dims)
        ratios.append(rel)
    assert all(b < a for a, b in zip(ratios, ratios[1:]))


# --- effective Hamiltonian (small rotations) -----------------------------------

def test_rotation_identity_within_bound(check_dims):
    residual, bound, _ = rotation_residual(default_params(), check_dims)
    assert residual <= bound


def test_rotation_residual_quadratic_in_beta(check_dims):
    res_full, _, _ = rotation_residual(make_params(0.25), check_dims)
    res_half, _, _ = rotation_residual(make_params(0.125), check_dims)
    assert res_full / res_half >= 3.5


def test_effective_requires_zero_ez(check_dims):
    with pytest.raises(ValueError):
        effective_hamiltonian(make_params(0.25, ez=0.5), check_dims)


def test_effective_resonance_guard(check_dims):
    with pytest.raises(ResonanceSingularity):
        effective_hamiltonian(make_params(0.25, hw=1.0), check_dims)


def test_effective_beta_zero(check_dims):
    h = effective_hamiltonian(make_params(0.0), check_dims)
    expected = 10.0 * compose(np.eye(2), number_operator(check_dims)) + 0.5 * compose(
        SIGMA_Z, field_identity(check_dims)
    )
    np.testing.assert_allclose(h, expected, atol=1e-12)


def test_squeeze_coefficient_simplification():
    # (E_J - hw)/(E_J^2 - hw^2) = 1/(E_J + hw), so the two-photon coefficient is -xi^2
    params = default_params()
    direct = -(1.0 - 10.0) * 0.25**2 * 10.0**2 / (4.0 * (1.0**2 - 10.0**2))
    assert direct == pytest.approx(-squeeze_coefficient(params), rel=1e-14)
    assert squeeze_coefficient(params) == pytest.approx(0.142045, abs=5e-7)


# --- squeeze Hamiltonian and its x-basis rotation ------------------------------

def test_dispersive_to_squeeze_ratio():
    for hw, expected in ((10.0, 4.0 / 9.0), (50.0, 4.0 / 49.0)):
        params = make_params(0.25, hw=hw)
        ratio = abs(dispersive_coefficient(params)) / squeeze_coefficient(params)
        assert ratio == pytest.approx(expected, rel=1e-12)


def test_squeeze_hamiltonian_is_term_removal(check_dims):
    params = default_params()
    diff = effective_hamiltonian(params, check_dims) - squeeze_hamiltonian(params, check_dims)
    expected = dispersive_coefficient(params) * compose(
        SIGMA_Z, number_operator(check_dims) + 0.5 * field_identity(check_dims)
    )
    np.testing.assert_allclose(diff, expected, atol=1e-12)


def test_squeeze_regime_warning(check_dims):
    with pytest.warns(RegimeViolation):
        squeeze_hamiltonian(make_params(0.25, hw=4.0), check_dims)


def test_x_rotation_conjugation_exact(check_dims):
    assert x_rotation_residual(default_params(), check_dims) < 1e-10
    assert x_rotation_residual(deep_squeeze_params(), check_dims) < 1e-10


def test_superposition_block_structure(check_dims):
    """In the sigma_x eigenbasis the field blocks are hw*n +/- E_J/2 -/+ xi^2 (a^2+a^dag^2)."""
    params = default_params()
    h = squeeze_superposition_hamiltonian(params, check_dims)
    n = check_dims.n_fock
    plus = np.concatenate([np.eye(n), np.eye(n)]) / np.sqrt(2)   # |+> x field
    minus = np.concatenate([np.eye(n), -np.eye(n)]) / np.sqrt(2)
    xi2 = squeeze_coefficient(params)
    a = np.diag(np.sqrt(np.arange(1, n, dtype=float)), 1).astype(complex)
    two_photon = a @ a + (a @ a).conj().T
    block_plus = 10.0 * number_operator(check_dims) + 0.5 * np.eye(n) - xi2 * two_photon
    block_minus = 10.0 * number_operator(check_dims) - 0.5 * np.eye(n) + xi2 * two_photon
    np.testing.assert_allclose(plus.conj().T @ h @ plus, block_plus, atol=1e-12)
    np.testing.assert_allclose(minus.conj().T @ h @ minus, block_minus, atol=1e-12)
    np.testing.assert_allclose(minus.conj().T @ h @ plus, np.zeros((n, n)), atol=1e-12)


@pytest.mark.filterwarnings("ignore::squeezecat.errors.RegimeViolation")
def test_every_builder_returns_hermitian(check_dims):
    params = default_params()
    builders = (
        full_hamiltonian,
        transformed_hamiltonian,
        jaynes_cummings_hamiltonian,
        effective_hamiltonian,
        squeeze_hamiltonian,
        squeeze_superposition_hamiltonian,
    )
    for build in builders:
        h = build(params, check_dims)
        assert np.linalg.norm(h - h.conj().T) < 1e-10 * np.linalg.norm(h)
        hermitian_eig(h)  # must pass the spectral gate


def test_xi_squared_values():
    assert squeeze_coefficient(make_params(0.0)) == 0.0
    xi2 = squeeze_coefficient(default_params())
    assert xi2 == pytest.approx(0.25**2 * 100.0 / 44.0, rel=1e-15)
    # quadratic scaling in beta
    assert squeeze_coefficient(make_params(0.5)) == pytest.approx(4 * xi2, rel=1e-12)
    assert squeeze_rate(default_params()) == pytest.approx(xi2, rel=1e-15)  # hbar = 1
