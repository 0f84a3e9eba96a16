"""Closed-form final states, fidelity, and the charge-measurement collapse.

The sigma_x-conditioned squeeze Hamiltonian is block diagonal in the qubit
|+/-> basis, so evolving |coherent> (x) |g> admits an exact solution: each
branch is a single spectral exponential of omega a^dag a -/+ (xi^2/hbar)
(a^2 + a^dag^2) applied to the coherent state, dressed with -/+ E_J t/(2 hbar)
phases.  This module builds that solution independently of the generic
propagator so the two can cross-check each other.
"""

from dataclasses import dataclass

import numpy as np

from .errors import TruncationLeakage, ZeroProbabilityCollapse
from .hamiltonians import HBAR, PhysParams, squeeze_coefficient
from .hilbert import (
    FieldState,
    HilbertDims,
    JointState,
    annihilation,
    coherent_state,
    leakage,
    number_operator,
)
from .numerics import hermitian_eig

COMPONENT_LEAKAGE_BUDGET = 1e-8


def squeezed_component(
    gamma_amp: complex,
    t: float,
    params: PhysParams,
    dims: HilbertDims,
    squeeze_sign: int = 1,
    omega_stripped: bool = False,
) -> FieldState:
    """One squeezed coherent component, as a single combined exponential.

    Applies exp(-i t [omega a^dag a + squeeze_sign * (xi^2/hbar)(a^2 + a^dag^2)])
    to the coherent state.  ``omega_stripped=True`` zeroes the oscillator term;
    that mode exists only for unit tests of the squeezing law (the pure
    two-photon generator squeezes by magnitude r = 2 xi^2 t / hbar) and is
    never used in physics runs.
    """
    if squeeze_sign not in (1, -1):
        raise ValueError("squeeze_sign must be +1 or -1")
    coh = coherent_state(gamma_amp, dims)
    a = annihilation(dims)
    two_photon = a @ a + (a @ a).conj().T
    omega = 0.0 if omega_stripped else params.hbar_omega / HBAR
    rate = squeeze_coefficient(params) / HBAR
    gen = omega * number_operator(dims) + squeeze_sign * rate * two_photon
    dec = hermitian_eig(gen)
    amps = dec.eigenvectors @ (
        np.exp(-1j * dec.eigenvalues * t) * (dec.eigenvectors.conj().T @ coh.amplitudes)
    )
    return FieldState(dims=dims, amplitudes=amps)


@dataclass(frozen=True)
class SqueezeComponents:
    """The two (unnormalized) field components of the entangled state at time t.

    phi_plus pairs with |g>, phi_minus with |e>; together they carry the full
    norm: ||phi_plus||^2 + ||phi_minus||^2 = 2.
    """

    phi_plus: FieldState
    phi_minus: FieldState
    t: float
    params: PhysParams


def analytic_components(
    gamma_amp: complex,
    t: float,
    params: PhysParams,
    dims: HilbertDims,
    omega_stripped: bool = False,
) -> SqueezeComponents:
    """Both superposition components at time t.

    phi_+/- = (1/sqrt2) [ e^(-i E_J t / 2 hbar) |branch +> +/- e^(+i E_J t / 2 hbar) |branch ->]

    where |branch +/-> evolves under omega a^dag a -/+ (xi^2/hbar)(a^2+a^dag^2):
    the sigma_x = +1 branch pairs the -E_J/2-phase with the *negative*
    two-photon sign because both terms enter that branch of the generator
    together.  Raises TruncationLeakage when either branch leaks more than
    1e-8 into the guard band.
    """
    branch_plus = squeezed_component(
        gamma_amp, t, params, dims, squeeze_sign=-1, omega_stripped=omega_stripped
    )
    branch_minus = squeezed_component(
        gamma_amp, t, params, dims, squeeze_sign=+1, omega_stripped=omega_stripped
    )
    for name, st in (("sigma_x=+1", branch_plus), ("sigma_x=-1", branch_minus)):
        lk = leakage(st)
        if lk > COMPONENT_LEAKAGE_BUDGET:
            raise TruncationLeakage(
                f"{name} branch leaks {lk:.3e} > {COMPONENT_LEAKAGE_BUDGET} at t={t:g}"
            )
    phase = np.exp(-1j * params.e_j * t / (2.0 * HBAR))
    a_plus = phase * branch_plus.amplitudes
    a_minus = np.conj(phase) * branch_minus.amplitudes
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    return SqueezeComponents(
        phi_plus=FieldState(dims=dims, amplitudes=inv_sqrt2 * (a_plus + a_minus), normalized=False),
        phi_minus=FieldState(dims=dims, amplitudes=inv_sqrt2 * (a_plus - a_minus), normalized=False),
        t=t,
        params=params,
    )


def analytic_joint_state(
    gamma_amp: complex, t: float, params: PhysParams, dims: HilbertDims
) -> JointState:
    """Entangled qubit-field state (1/sqrt2)[phi_minus |e> + phi_plus |g>]."""
    comps = analytic_components(gamma_amp, t, params, dims)
    n = dims.n_fock
    amps = np.empty(2 * n, dtype=complex)
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    amps[:n] = inv_sqrt2 * comps.phi_minus.amplitudes
    amps[n:] = inv_sqrt2 * comps.phi_plus.amplitudes
    return JointState(dims=dims, amplitudes=amps)


def fidelity(a, b) -> float:
    """|<a|b>|^2 for two states of the same kind and dimensions."""
    if type(a) is not type(b):
        raise ValueError(f"cannot compare {type(a).__name__} with {type(b).__name__}")
    if a.dims != b.dims:
        raise ValueError(f"dimension mismatch: {a.dims} vs {b.dims}")
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)) ** 2)


def measure_qubit(psi: JointState, outcome: str):
    """Project onto a qubit outcome; return (probability, collapsed field state).

    Probabilities over both outcomes sum to one; an outcome with probability
    below 1e-14 raises ZeroProbabilityCollapse instead of renormalizing noise.
    """
    block = psi.qubit_block(outcome)
    prob = float(np.sum(np.abs(block) ** 2))
    if prob < 1e-14:
        raise ZeroProbabilityCollapse(
            f"outcome {outcome!r} has probability {prob:.3e}; state carries no such branch"
        )
    collapsed = FieldState(dims=psi.dims, amplitudes=block / np.sqrt(prob))
    return prob, collapsed
