"""Scenario computations behind the evolve / wigner / sweep commands.

Each function consumes a validated ScenarioConfig and returns plain Python
containers (lists of floats, None for unavailable cells) ready for JSON or
CSV serialization.  Row order is fully determined by the config, never by
timing, so identical configs yield identical outputs byte for byte.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .analytics import analytic_joint_state, fidelity, measure_qubit
from .config import ScenarioConfig
from .diagnostics import jc_dropped_residual, rotation_residual_relative
from .dynamics import TimeGrid, evolve, propagator
from .errors import EpsilonTooLarge, LeakageAbort, ResonanceSingularity, TruncationLeakage
from .hamiltonians import (
    PhysParams,
    squeeze_coefficient,
    squeeze_rate,
    squeeze_superposition_hamiltonian,
)
from .hilbert import (
    FieldState,
    HilbertDims,
    JointState,
    annihilation,
    coherent_state,
)
from .observables import quadrature_stats, wigner

#: Truncation used for the chain-residual columns of a sweep (identity-check scale).
RESIDUAL_DIMS = HilbertDims(n_fock=40, guard=10)

EVOLVE_COLUMNS = [
    "t",
    "fidelity_vs_analytic",
    "p_g",
    "p_e",
    "var_x_g",
    "var_p_g",
    "min_var_g",
    "leakage",
]
WIGNER_COLUMNS = ["x", "p", "w"]
SWEEP_COLUMNS = ["beta", "xi_squared", "t_star", "chain_residual_jc", "chain_residual_rot"]


def initial_joint_state(cfg: ScenarioConfig) -> JointState:
    """|coherent(gamma_amp)> on the field, qubit in |g>."""
    dims = cfg.dims.to_dims()
    coh = coherent_state(cfg.gamma_amp_complex, dims)
    amps = np.zeros(2 * dims.n_fock, dtype=complex)
    amps[dims.n_fock:] = coh.amplitudes
    return JointState(dims=dims, amplitudes=amps)


@dataclass(frozen=True)
class EvolveResult:
    columns: list
    rows: list
    aborted: bool


def evolve_run(cfg: ScenarioConfig) -> EvolveResult:
    """Time series of the entangled-state observables along the config grid."""
    params = cfg.params.to_phys()
    dims = cfg.dims.to_dims()
    h = squeeze_superposition_hamiltonian(params, dims)
    psi0 = initial_joint_state(cfg)
    aborted = False
    try:
        traj = evolve(h, psi0, cfg.grid.to_grid())
    except LeakageAbort as err:
        traj = err.trajectory
        aborted = True
    rows = []
    for t, state, leak in zip(traj.times, traj.states, traj.leakages):
        try:
            reference = analytic_joint_state(cfg.gamma_amp_complex, float(t), params, dims)
            fid = fidelity(state, reference)
        except TruncationLeakage:
            fid = None  # reference untrustworthy past the leakage budget
        p_g = float(np.sum(np.abs(state.qubit_block("g")) ** 2))
        p_e = float(np.sum(np.abs(state.qubit_block("e")) ** 2))
        _, collapsed = measure_qubit(state, "g")
        stats = quadrature_stats(collapsed)
        rows.append(
            [
                float(t),
                fid,
                p_g,
                p_e,
                stats.var_x,
                stats.var_p,
                stats.min_var_over_rotations,
                float(leak),
            ]
        )
    return EvolveResult(columns=list(EVOLVE_COLUMNS), rows=rows, aborted=aborted)


@dataclass(frozen=True)
class WignerResult:
    columns: list
    rows: list
    outcome: str
    t: float


def wigner_run(cfg: ScenarioConfig, t: Optional[float] = None) -> WignerResult:
    """Wigner grid of one collapsed branch at time t (default: wigner_spec.t)."""
    spec_model = cfg.wigner_spec
    t_eval = spec_model.t if t is None else float(t)
    if not cfg.grid.t_start <= t_eval <= cfg.grid.t_end:
        raise ValueError(
            f"wigner time {t_eval:g} lies outside the scenario grid "
            f"[{cfg.grid.t_start:g}, {cfg.grid.t_end:g}]"
        )
    params = cfg.params.to_phys()
    dims = cfg.dims.to_dims()
    h = squeeze_superposition_hamiltonian(params, dims)
    psi0 = initial_joint_state(cfg)
    u = propagator(h, t_eval)
    state = JointState(dims=dims, amplitudes=u @ psi0.amplitudes)
    _, collapsed = measure_qubit(state, spec_model.outcome)
    grid = wigner(collapsed, spec_model.to_spec())
    rows = []
    for i, x in enumerate(grid.xs):
        for j, p in enumerate(grid.ps):
            rows.append([float(x), float(p), float(grid.values[i, j])])
    return WignerResult(
        columns=list(WIGNER_COLUMNS), rows=rows, outcome=spec_model.outcome, t=t_eval
    )


@dataclass(frozen=True)
class SweepResult:
    columns: list
    rows: list


def preparation_time(params: PhysParams, r_target: float) -> float:
    """Analytic time to reach squeeze magnitude r: t* = r / (2 xi^2 / hbar)."""
    return r_target / (2.0 * squeeze_rate(params))


def _variance_crossing_time(params: PhysParams, dims: HilbertDims, r_target: float):
    """First grid time where the stripped-generator vacuum crosses the target variance.

    Returns (t_cross, dt).  Independent check of ``preparation_time``: evolve
    the vacuum under the pure two-photon generator and watch the minimum
    quadrature variance cross e^(-2 r_target)/4.
    """
    t_star = preparation_time(params, r_target)
    a = annihilation(dims)
    gen = squeeze_rate(params) * (a @ a + (a @ a).conj().T)
    vac = np.zeros(dims.n_fock, dtype=complex)
    vac[0] = 1.0
    grid = TimeGrid(t_start=0.0, t_end=1.2 * t_star, n_points=241)
    traj = evolve(gen, FieldState(dims=dims, amplitudes=vac), grid)
    threshold = math.exp(-2.0 * r_target) / 4.0
    dt = float(traj.times[1] - traj.times[0])
    for t, state in zip(traj.times, traj.states):
        if quadrature_stats(state).min_var_over_rotations <= threshold:
            return float(t), dt
    return None, dt


def sweep_run(cfg: ScenarioConfig) -> SweepResult:
    """Preparation-time and chain-residual columns for each swept beta."""
    base = cfg.params
    dims = cfg.dims.to_dims()
    r_target = cfg.sweep_spec.r_target
    rows = []
    for beta in cfg.sweep_spec.values:
        params = PhysParams(
            hbar_omega=base.hbar_omega,
            e_j=base.e_j,
            e_z=base.e_z,
            beta=float(beta),
            gamma_flux=base.gamma_flux,
        )
        xi2 = squeeze_coefficient(params)
        t_star = preparation_time(params, r_target)
        t_cross, dt = _variance_crossing_time(params, dims, r_target)
        if t_cross is None or abs(t_cross - t_star) > 2.0 * dt:
            raise RuntimeError(
                f"variance crossing {t_cross} disagrees with analytic t*={t_star:.6g} "
                f"beyond 2 grid steps (dt={dt:.3g}) at beta={beta}"
            )
        _, jc_rel = jc_dropped_residual(params, RESIDUAL_DIMS)
        try:
            rot_rel = rotation_residual_relative(params, RESIDUAL_DIMS)
        except (EpsilonTooLarge, ResonanceSingularity):
            rot_rel = None  # outside the small-rotation premise; cell left empty
        rows.append([float(beta), xi2, t_star, jc_rel, rot_rel])
    return SweepResult(columns=list(SWEEP_COLUMNS), rows=rows)
