"""Unitary transformations that carry the Hamiltonian down the reduction chain."""

from dataclasses import dataclass

import numpy as np

from .errors import EpsilonTooLarge, ResonanceSingularity
from .hamiltonians import PhysParams
from .hilbert import (
    HilbertDims,
    QUBIT_IDENTITY,
    SIGMA_MINUS,
    SIGMA_PLUS,
    SIGMA_Z,
    annihilation,
    compose,
    displacement,
    field_identity,
)
from .numerics import exp_i_hermitian

EPSILON_BOUND = 0.2


def linearizing_transform(params: PhysParams, dims: HilbertDims) -> np.ndarray:
    """Displacement-built unitary that trades the cosine coupling for a linear drive.

    With D = D(i beta*/2) e^(i gamma/2):

        (1/sqrt2) { -1/2 (D^dag - D) I  - 1/2 (D^dag + D) sigma_z
                    + D sigma_+ + D^dag sigma_- }

    In qubit blocks this collapses to (1/sqrt2) [[-D^dag, D], [D^dag, D]],
    manifestly unitary.  At beta = gamma = 0 it degenerates to the pure qubit
    rotation (sigma_x - sigma_z)/sqrt2.
    """
    b = complex(params.beta)
    alpha = 1j * np.conj(b) / 2.0
    disp = displacement(alpha, dims) * np.exp(1j * params.gamma_flux / 2.0)
    disp_d = disp.conj().T
    return (1.0 / np.sqrt(2.0)) * (
        compose(QUBIT_IDENTITY, -0.5 * (disp_d - disp))
        + compose(SIGMA_Z, -0.5 * (disp_d + disp))
        + compose(SIGMA_PLUS, disp)
        + compose(SIGMA_MINUS, disp_d)
    )


@dataclass(frozen=True)
class SmallRotations:
    """The two drive-cancelling rotations and their amplitudes.

    ``u1`` is applied first (innermost), ``u2`` second, as in
    u2 @ u1 @ H @ u1^dag @ u2^dag.
    """

    eps1: complex
    eps2: complex
    u1: np.ndarray
    u2: np.ndarray


def rotation_amplitudes(params: PhysParams) -> tuple[complex, complex]:
    """eps1 = i hw beta / (2 (E_J - hw)), eps2 = -i hw beta / (2 (E_J + hw)).

    Both are purely imaginary for real beta, making the rotation generators
    anti-Hermitian and the rotations exactly unitary.
    """
    b = params.beta_real
    hw, ej = params.hbar_omega, params.e_j
    if abs(ej - hw) < 1e-6 * hw:
        raise ResonanceSingularity(
            f"|E_J - hbar_omega| < 1e-6 * hbar_omega (E_J={ej}, hbar_omega={hw})"
        )
    eps1 = 1j * hw * b / (2.0 * (ej - hw))
    eps2 = -1j * hw * b / (2.0 * (ej + hw))
    return eps1, eps2


def build_small_rotations(params: PhysParams, dims: HilbertDims) -> SmallRotations:
    """Construct the two small rotations as exact spectral exponentials.

    The amplitude eps2 multiplies the counter-rotating generator
    a^dag sigma_+ + a sigma_- (applied first) and eps1 the co-rotating one
    a sigma_+ + a^dag sigma_-: this pairing is the one that cancels the
    linear drive at first order -- with the amplitudes attached the other way
    round the drive survives and the conjugation residual scales linearly
    rather than quadratically in beta (measured slopes 1.0 vs >= 2.1).
    """
    eps1, eps2 = rotation_amplitudes(params)
    for name, eps in (("eps1", eps1), ("eps2", eps2)):
        if abs(eps) >= EPSILON_BOUND:
            raise EpsilonTooLarge(
                f"|{name}| = {abs(eps):.4f} >= {EPSILON_BOUND}; the small-rotation "
                f"premise fails for beta={params.beta}, hbar_omega={params.hbar_omega}"
            )
    a = annihilation(dims)
    counter_rotating = compose(SIGMA_PLUS, a.conj().T) + compose(SIGMA_MINUS, a)
    co_rotating = compose(SIGMA_PLUS, a) + compose(SIGMA_MINUS, a.conj().T)
    u1 = exp_i_hermitian(counter_rotating, eps2.imag)
    u2 = exp_i_hermitian(co_rotating, eps1.imag)
    return SmallRotations(eps1=eps1, eps2=eps2, u1=u1, u2=u2)


def qubit_z_to_x_rotation(dims: HilbertDims) -> np.ndarray:
    """exp(-i pi sigma_y / 4) on the qubit, identity on the field.

    Satisfies U sigma_z U^dag = sigma_x (to rounding), mapping the
    sigma_z-conditioned squeeze Hamiltonian onto its sigma_x-conditioned form.
    """
    c = np.sqrt(0.5)
    rot = np.array([[c, -c], [c, c]], dtype=complex)
    return compose(rot, field_identity(dims))
