"""Residual measurements along the reduction chain.

Each function quantifies one approximation step: how far the explicit
closed-form Hamiltonian sits from the exact conjugation that is supposed to
produce it.  All identities are asserted on the interior block (guard band
projected out on both sides) because truncated displacement-type operators
are only faithful away from the Fock-space edge.
"""

import warnings

import numpy as np

from .errors import RegimeViolation
from .hamiltonians import (
    PhysParams,
    effective_hamiltonian,
    full_hamiltonian,
    jaynes_cummings_hamiltonian,
    squeeze_hamiltonian,
    squeeze_superposition_hamiltonian,
    transformed_constant,
    transformed_hamiltonian,
)
from .hilbert import HilbertDims, interior_block
from .numerics import matrix_norms
from .transforms import (
    build_small_rotations,
    linearizing_transform,
    qubit_z_to_x_rotation,
)


def interior_unitarity_defect(u: np.ndarray, dims: HilbertDims) -> float:
    """||P (U U^dag - I) P||_F on the trusted block."""
    m = u @ u.conj().T - np.eye(u.shape[0], dtype=complex)
    return float(np.linalg.norm(interior_block(m, dims)))


def quiet_jc_hamiltonian(params: PhysParams, dims: HilbertDims) -> np.ndarray:
    """H_JC without the marginal-regime warning.

    The residual functions below exist to *quantify* marginal regimes, so the
    builder's RegimeViolation warning is redundant noise on these paths.
    """
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeViolation)
        return jaynes_cummings_hamiltonian(params, dims)


def conjugation_residual(params: PhysParams, dims: HilbertDims) -> float:
    """|| T H T^dag - H_transformed ||_F / ||H||_F on the interior block."""
    t = linearizing_transform(params, dims)
    h = full_hamiltonian(params, dims)
    explicit = transformed_hamiltonian(params, dims)
    res = interior_block(t @ h @ t.conj().T - explicit, dims)
    return float(np.linalg.norm(res) / np.linalg.norm(h))


def _low_fock_block(m: np.ndarray, dims: HilbertDims, n_max: int) -> np.ndarray:
    keep = np.arange(n_max + 1)
    ix = np.concatenate([keep, keep + dims.n_fock])
    return m[np.ix_(ix, ix)]


def jc_dropped_residual(params: PhysParams, dims: HilbertDims, n_max: int = 10):
    """Size of the terms dropped in the Jaynes-Cummings reduction.

    Returns (absolute, relative): the spectral norm of
    H_transformed - H_JC - const restricted to Fock levels n <= n_max, and the
    same divided by the spectral norm of the restricted sigma_x drive term.
    The exact dropped operator has spectral norm E_J/2, so the absolute value
    sits near E_J/2 regardless of parameters while the drive grows with
    hbar_omega * |beta|.
    """
    h_t = transformed_hamiltonian(params, dims)
    h_jc = quiet_jc_hamiltonian(params, dims)
    const = transformed_constant(params) * np.eye(2 * dims.n_fock, dtype=complex)
    dropped = _low_fock_block(h_t - h_jc - const, dims, n_max)
    free = (
        params.hbar_omega
        * np.kron(np.eye(2), np.diag(np.arange(dims.n_fock, dtype=float)))
        + (params.e_j / 2.0) * np.kron(np.diag([1.0, -1.0]), np.eye(dims.n_fock))
    )
    drive = _low_fock_block(h_jc - free.astype(complex), dims, n_max)
    _, dropped_spec = matrix_norms(dropped)
    _, drive_spec = matrix_norms(drive)
    return dropped_spec, dropped_spec / drive_spec


def rotation_residual(params: PhysParams, dims: HilbertDims):
    """Distance between the exact double rotation of H_JC and the first-order form.

    Returns (residual, bound, amplitude_sum) where residual is
    ||U2 U1 H_JC U1^dag U2^dag - H_eff||_F on the interior block and bound is
    4 * (|eps1| + |eps2|)^2 * ||H_JC||_F.
    """
    rot = build_small_rotations(params, dims)
    h_jc = quiet_jc_hamiltonian(params, dims)
    h_eff = effective_hamiltonian(params, dims)
    conj = rot.u2 @ rot.u1 @ h_jc @ rot.u1.conj().T @ rot.u2.conj().T
    residual = float(np.linalg.norm(interior_block(conj - h_eff, dims)))
    eps_sum = abs(rot.eps1) + abs(rot.eps2)
    bound = 4.0 * eps_sum**2 * float(np.linalg.norm(h_jc))
    return residual, bound, eps_sum


def rotation_residual_relative(params: PhysParams, dims: HilbertDims) -> float:
    """Rotation residual normalized by ||H_JC||_F on the interior block."""
    rot = build_small_rotations(params, dims)
    h_jc = quiet_jc_hamiltonian(params, dims)
    h_eff = effective_hamiltonian(params, dims)
    conj = rot.u2 @ rot.u1 @ h_jc @ rot.u1.conj().T @ rot.u2.conj().T
    num = float(np.linalg.norm(interior_block(conj - h_eff, dims)))
    den = float(np.linalg.norm(interior_block(h_jc, dims)))
    return num / den


def x_rotation_residual(params: PhysParams, dims: HilbertDims) -> float:
    """||U_R H_squeeze U_R^dag - H_superposition||_F / ||H_superposition||_F (exact rotation)."""
    u_r = qubit_z_to_x_rotation(dims)
    h_sq = squeeze_hamiltonian(params, dims)
    h_ss = squeeze_superposition_hamiltonian(params, dims)
    res = u_r @ h_sq @ u_r.conj().T - h_ss
    return float(np.linalg.norm(res) / np.linalg.norm(h_ss))
