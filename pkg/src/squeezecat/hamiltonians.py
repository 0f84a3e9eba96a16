"""Model parameters and the chain of Hamiltonians for the qubit-cavity system.

Units: hbar = 1 and the Josephson energy E_J = 1 internally; configuration
energies are given in units of E_J and times in units of hbar/E_J.  All regime
statements are ratios, so nothing depends on absolute scales.

The chain, from the full nonlinear model down to the solvable form:

* ``full_hamiltonian``          -- oscillator + qubit + cosine coupling
* ``transformed_hamiltonian``   -- after the displacement-based linearizing
                                   transform (see transforms.linearizing_transform)
* ``jaynes_cummings_hamiltonian`` -- the same with the bounded cosine/sine
                                   terms dropped (valid when hbar*omega*|beta| >> E_J)
* ``effective_hamiltonian``     -- after the two small rotations, first order
* ``squeeze_hamiltonian``       -- dispersive term dropped
* ``squeeze_superposition_hamiltonian`` -- rotated sigma_z -> sigma_x, the
                                   generator of squeezed-state superpositions
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import RegimeViolation, ResonanceSingularity
from .hilbert import (
    HilbertDims,
    QUBIT_IDENTITY,
    SIGMA_MINUS,
    SIGMA_PLUS,
    SIGMA_X,
    SIGMA_Z,
    annihilation,
    compose,
    field_identity,
    number_operator,
)
from .numerics import cos_hermitian, func_of_hermitian, hermitian_eig

HBAR = 1.0

#: JC-regime inequality "hbar*omega*|beta| >> E_J" operationalized with a
#: desk-scale factor of 4; violations warn rather than fail.
JC_REGIME_FACTOR = 4.0
SQUEEZE_REGIME_FACTOR = 4.0


@dataclass(frozen=True)
class DeviceParams:
    """Raw device quantities: charging/Josephson energies, gate charge, flux ratios.

    ``mode_ratio`` is the cavity mode function already scaled by pi/Phi_0, so
    it maps directly onto the interaction phase ``beta``.
    """

    e_ch: float
    e_j: float
    n_g: float = 0.5
    flux_ratio_classical: float = 0.0
    mode_ratio: complex = 0.25

    def in_charge_regime(self, factor: float = 5.0) -> bool:
        return self.e_ch >= factor * self.e_j


@dataclass(frozen=True)
class PhysParams:
    """Derived model parameters; every Hamiltonian builder consumes these."""

    hbar_omega: float
    e_j: float = 1.0
    e_z: float = 0.0
    beta: complex = 0.25
    gamma_flux: float = 0.0

    def __post_init__(self):
        vals = [self.hbar_omega, self.e_j, self.e_z, self.gamma_flux]
        if not all(np.isfinite(v) for v in vals) or not np.isfinite(complex(self.beta)):
            raise ValueError("parameters must be finite")
        if self.hbar_omega <= 0:
            raise ValueError(f"hbar_omega must be positive, got {self.hbar_omega}")

    @property
    def beta_real(self) -> float:
        """beta as a real number; raises when it carries an imaginary part."""
        b = complex(self.beta)
        if abs(b.imag) > 1e-12:
            raise ValueError(f"this step requires real beta, got {b}")
        return b.real


def default_params() -> PhysParams:
    return PhysParams(hbar_omega=10.0, e_j=1.0, e_z=0.0, beta=0.25, gamma_flux=0.0)


def deep_squeeze_params() -> PhysParams:
    """Preset far inside the squeeze regime (dispersive/squeeze ratio 4/49)."""
    return PhysParams(hbar_omega=50.0, e_j=1.0, e_z=0.0, beta=0.25, gamma_flux=0.0)


def derive_params(dev: DeviceParams) -> PhysParams:
    """Map device quantities to model parameters.

    hbar*omega = 4 E_ch, E_z = -2 E_ch (1 - 2 n_g), gamma = pi * Phi_c/Phi_0,
    beta = mode_ratio.
    """
    return PhysParams(
        hbar_omega=4.0 * dev.e_ch,
        e_j=dev.e_j,
        e_z=-2.0 * dev.e_ch * (1.0 - 2.0 * dev.n_g),
        beta=dev.mode_ratio,
        gamma_flux=np.pi * dev.flux_ratio_classical,
    )


def check_jc_regime(params: PhysParams) -> bool:
    """Warn (RegimeViolation) unless hbar*omega*|beta| >= 4 E_J; returns the verdict."""
    ok = params.hbar_omega * abs(complex(params.beta)) >= JC_REGIME_FACTOR * params.e_j
    if not ok:
        warnings.warn(
            f"JC regime marginal: hbar_omega*|beta| = "
            f"{params.hbar_omega * abs(complex(params.beta)):.3g} < "
            f"{JC_REGIME_FACTOR} * E_J = {JC_REGIME_FACTOR * params.e_j:.3g}",
            RegimeViolation,
            stacklevel=2,
        )
    return ok


def check_squeeze_regime(params: PhysParams) -> bool:
    """Warn unless hbar*omega - E_J >= 4 E_J (dispersive term negligible)."""
    ok = params.hbar_omega - params.e_j >= SQUEEZE_REGIME_FACTOR * params.e_j
    if not ok:
        warnings.warn(
            f"squeeze regime marginal: hbar_omega - E_J = "
            f"{params.hbar_omega - params.e_j:.3g} < "
            f"{SQUEEZE_REGIME_FACTOR} * E_J = {SQUEEZE_REGIME_FACTOR * params.e_j:.3g}",
            RegimeViolation,
            stacklevel=2,
        )
    return ok


def _cosine_argument(params: PhysParams, dims: HilbertDims, factor: float = 1.0):
    """Hermitian operator factor*(beta a + beta* a^dag) + factor*gamma."""
    a = annihilation(dims)
    b = complex(params.beta)
    return factor * (b * a + np.conj(b) * a.conj().T) + factor * params.gamma_flux * field_identity(dims)


def full_hamiltonian(params: PhysParams, dims: HilbertDims) -> np.ndarray:
    """hbar*omega a^dag a + E_z sigma_z - E_J sigma_x cos(gamma + beta a + beta* a^dag)."""
    cos_term = cos_hermitian(_cosine_argument(params, dims))
    return (
        params.hbar_omega * compose(QUBIT_IDENTITY, number_operator(dims))
        + params.e_z * compose(SIGMA_Z, field_identity(dims))
        - params.e_j * compose(SIGMA_X, cos_term)
    )


def transformed_constant(params: PhysParams) -> float:
    """Scalar energy offset produced by the linearizing transform.

    The exact conjugation yields hbar*omega*|beta/2|^2 (an overall phase for
    dynamics); it is kept in the transformed Hamiltonian and must be
    subtracted before residual comparisons against the reduced forms.
    """
    return params.hbar_omega * abs(complex(params.beta) / 2.0) ** 2


def transformed_hamiltonian(params: PhysParams, dims: HilbertDims) -> np.ndarray:
    """Explicit closed form of the conjugated Hamiltonian T H T^dagger.

    Contains the oscillator, the qubit splitting E_J/2 sigma_z, a linear
    sigma_x drive, cosine/sine terms at doubled phase, and the scalar offset
    from ``transformed_constant``.
    """
    a = annihilation(dims)
    b = complex(params.beta)
    n2 = 2 * dims.n_fock
    arg2 = _cosine_argument(params, dims, factor=2.0)
    dec2 = hermitian_eig(arg2)
    cos2 = func_of_hermitian(dec2, np.cos)
    sin2 = func_of_hermitian(dec2, np.sin)
    drive = (
        1j * (HBAR / 2.0)
        * (params.hbar_omega / HBAR)
        * (b * a - np.conj(b) * a.conj().T)
        - params.e_z * field_identity(dims)
    )
    return (
        params.hbar_omega * compose(QUBIT_IDENTITY, number_operator(dims))
        + (params.e_j / 2.0) * compose(SIGMA_Z, field_identity(dims))
        + compose(SIGMA_X, drive)
        + (params.e_j / 2.0) * compose(SIGMA_Z, cos2)
        - 1j * (params.e_j / 2.0) * compose(SIGMA_PLUS - SIGMA_MINUS, sin2)
        + transformed_constant(params) * np.eye(n2, dtype=complex)
    )


def jaynes_cummings_hamiltonian(params: PhysParams, dims: HilbertDims) -> np.ndarray:
    """The transformed Hamiltonian minus its bounded cosine/sine terms and offset."""
    check_jc_regime(params)
    a = annihilation(dims)
    b = complex(params.beta)
    drive = (
        1j * (params.hbar_omega / 2.0) * (b * a - np.conj(b) * a.conj().T)
        - params.e_z * field_identity(dims)
    )
    return (
        params.hbar_omega * compose(QUBIT_IDENTITY, number_operator(dims))
        + (params.e_j / 2.0) * compose(SIGMA_Z, field_identity(dims))
        + compose(SIGMA_X, drive)
    )


def _check_off_resonance(params: PhysParams):
    if abs(params.e_j**2 - params.hbar_omega**2) < 1e-6 * params.hbar_omega**2:
        raise ResonanceSingularity(
            f"E_J^2 - (hbar_omega)^2 vanishes for E_J={params.e_j}, "
            f"hbar_omega={params.hbar_omega}; rotation coefficients diverge"
        )


def _require_zero_ez(params: PhysParams):
    if abs(params.e_z) > 1e-12:
        raise ValueError("the squeeze-producing reduction requires E_z = 0 (n_g = 1/2)")


def effective_hamiltonian(params: PhysParams, dims: HilbertDims) -> np.ndarray:
    """First-order result of the two small rotations on the JC form.

    hbar*omega a^dag a + (E_J/2) sigma_z
      - [(E_J - hw) beta^2 hw^2 / (4 (E_J^2 - hw^2))] (a^2 + a^dag^2) sigma_z
      + [E_J beta^2 hw^2 / (E_J^2 - hw^2)] (a^dag a + 1/2) sigma_z
    """
    _require_zero_ez(params)
    _check_off_resonance(params)
    b = params.beta_real
    hw, ej = params.hbar_omega, params.e_j
    a = annihilation(dims)
    two_photon = a @ a + (a @ a).conj().T
    squeeze_c = -(ej - hw) * b**2 * hw**2 / (4.0 * (ej**2 - hw**2))
    dispersive_c = ej * b**2 * hw**2 / (ej**2 - hw**2)
    return (
        hw * compose(QUBIT_IDENTITY, number_operator(dims))
        + (ej / 2.0) * compose(SIGMA_Z, field_identity(dims))
        + squeeze_c * compose(SIGMA_Z, two_photon)
        + dispersive_c * compose(SIGMA_Z, number_operator(dims) + 0.5 * field_identity(dims))
    )


def dispersive_coefficient(params: PhysParams) -> float:
    """Coefficient of the (a^dag a + 1/2) sigma_z term in the effective Hamiltonian."""
    _check_off_resonance(params)
    b = params.beta_real
    return params.e_j * b**2 * params.hbar_omega**2 / (params.e_j**2 - params.hbar_omega**2)


def squeeze_hamiltonian(params: PhysParams, dims: HilbertDims) -> np.ndarray:
    """Effective Hamiltonian with the dispersive term removed (squeeze regime)."""
    check_squeeze_regime(params)
    disp = dispersive_coefficient(params)
    return effective_hamiltonian(params, dims) - disp * compose(
        SIGMA_Z, number_operator(dims) + 0.5 * field_identity(dims)
    )


def squeeze_superposition_hamiltonian(params: PhysParams, dims: HilbertDims) -> np.ndarray:
    """Squeeze Hamiltonian rotated sigma_z -> sigma_x.

    hbar*omega a^dag a + (E_J/2) sigma_x - xi^2 (a^2 + a^dag^2) sigma_x with
    xi^2 = ``squeeze_coefficient``.  Starting from a coherent field and the
    qubit ground state this generates entangled superpositions of two
    oppositely squeezed coherent states.
    """
    check_squeeze_regime(params)
    _require_zero_ez(params)
    # xi^2 itself is regular at E_J = hbar_omega, but the reduction chain that
    # justifies this Hamiltonian is not; inherit the resonance gate
    _check_off_resonance(params)
    xi2 = squeeze_coefficient(params)
    a = annihilation(dims)
    two_photon = a @ a + (a @ a).conj().T
    return (
        params.hbar_omega * compose(QUBIT_IDENTITY, number_operator(dims))
        + (params.e_j / 2.0) * compose(SIGMA_X, field_identity(dims))
        - xi2 * compose(SIGMA_X, two_photon)
    )


def squeeze_coefficient(params: PhysParams) -> float:
    """xi^2 = beta^2 (hbar*omega)^2 / (4 (E_J + hbar*omega)), in energy units."""
    b = params.beta_real
    return b**2 * params.hbar_omega**2 / (4.0 * (params.e_j + params.hbar_omega))


def squeeze_rate(params: PhysParams) -> float:
    """xi^2 / hbar: the rate at which the squeeze magnitude r(t) = 2 xi^2 t / hbar grows."""
    return squeeze_coefficient(params) / HBAR
