"""The verification suite: every identity in the reduction chain as a named check.

``run_verification`` executes the canonical identity grid plus the
parameter-dependent checks (at the default and deep-squeeze presets, or at a
user config's parameters) and returns a report with one residual/tolerance
line per check.  Any domain error inside a check is converted into a failed
check with the message attached, never a crash.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import __version__
from .analytics import (
    analytic_components,
    analytic_joint_state,
    fidelity,
    measure_qubit,
    squeezed_component,
)
from .config import ScenarioConfig, build_config, config_hash
from .diagnostics import (
    conjugation_residual,
    interior_unitarity_defect,
    jc_dropped_residual,
    quiet_jc_hamiltonian,
    rotation_residual,
    x_rotation_residual,
)
from .dynamics import evolve, propagator
from .errors import SqueezecatError
from .hamiltonians import (
    PhysParams,
    full_hamiltonian,
    squeeze_coefficient,
    squeeze_superposition_hamiltonian,
    transformed_hamiltonian,
)
from .hilbert import (
    SIGMA_MINUS,
    SIGMA_PLUS,
    FieldState,
    HilbertDims,
    annihilation,
    compose,
)
from .numerics import exp_i_hermitian
from .observables import quadrature_stats, wigner_point
from .runs import initial_joint_state, preparation_time, sweep_run
from .transforms import linearizing_transform, qubit_z_to_x_rotation, rotation_amplitudes

GRID_DIMS = HilbertDims(n_fock=40, guard=10)
LAW_DIMS = HilbertDims(n_fock=140, guard=20)

#: Canonical identity grid: beta x gamma x (E_z as a fraction of hbar_omega).
BETA_GRID = (0.1, 0.25, 0.3 + 0.1j, 0.45)
GAMMA_GRID = (0.0, 0.2, math.pi / 2)
EZ_FRACTIONS = (0.0, 0.1)


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: Optional[float]
    threshold: float
    comparison: str  # "<=", ">=", "<"
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerifyReport:
    version: str
    config_hash: str
    checks: tuple
    overall_pass: bool


def _result(name, value, threshold, comparison, detail=""):
    if comparison == "<=":
        ok = value <= threshold
    elif comparison == ">=":
        ok = value >= threshold
    elif comparison == "<":
        ok = value < threshold
    else:  # pragma: no cover
        raise ValueError(f"bad comparison {comparison!r}")
    return CheckResult(
        name=name, value=float(value), threshold=float(threshold),
        comparison=comparison, passed=bool(ok), detail=detail,
    )


def _guarded(name, threshold, comparison, fn, detail=""):
    """Run fn() -> value; translate domain errors into a failed check."""
    try:
        value = fn()
    except (SqueezecatError, ValueError, RuntimeError) as err:
        return CheckResult(
            name=name, value=None, threshold=float(threshold), comparison=comparison,
            passed=False, detail=f"{type(err).__name__}: {err}",
        )
    return _result(name, value, threshold, comparison, detail)


def _grid_params(beta, gamma, ez_frac, hbar_omega=10.0):
    return PhysParams(
        hbar_omega=hbar_omega, e_j=1.0, e_z=ez_frac * hbar_omega,
        beta=beta, gamma_flux=gamma,
    )


def check_conjugation_grid():
    worst = 0.0
    for beta in BETA_GRID:
        for gamma in GAMMA_GRID:
            for frac in EZ_FRACTIONS:
                res = conjugation_residual(_grid_params(beta, gamma, frac), GRID_DIMS)
                worst = max(worst, res)
    return worst


def check_unitarity_suite():
    """Interior unitarity defect over transforms and propagators on the grid."""
    worst = 0.0
    dims = GRID_DIMS
    for beta in BETA_GRID:
        for gamma in GAMMA_GRID:
            t = linearizing_transform(_grid_params(beta, gamma, 0.0), dims)
            worst = max(worst, interior_unitarity_defect(t, dims))
    a = annihilation(dims)
    counter = compose(SIGMA_PLUS, a.conj().T) + compose(SIGMA_MINUS, a)
    co = compose(SIGMA_PLUS, a) + compose(SIGMA_MINUS, a.conj().T)
    for beta in (0.1, 0.25, 0.45):
        eps1, eps2 = rotation_amplitudes(_grid_params(beta, 0.0, 0.0))
        # unitarity holds for any amplitude, so probe past the premise bound too
        worst = max(worst, interior_unitarity_defect(exp_i_hermitian(counter, eps2.imag), dims))
        worst = max(worst, interior_unitarity_defect(exp_i_hermitian(co, eps1.imag), dims))
    worst = max(worst, interior_unitarity_defect(qubit_z_to_x_rotation(dims), dims))
    for params in (_grid_params(0.25, 0.0, 0.0), _grid_params(0.25, 0.2, 0.1)):
        for builder in (full_hamiltonian, transformed_hamiltonian, quiet_jc_hamiltonian):
            worst = max(
                worst, interior_unitarity_defect(propagator(builder(params, dims), 1.3), dims)
            )
    h_ss = squeeze_superposition_hamiltonian(_grid_params(0.25, 0.0, 0.0), dims)
    worst = max(worst, interior_unitarity_defect(propagator(h_ss, 1.3), dims))
    return worst


def check_jc_dropped(params):
    dropped, _ = jc_dropped_residual(params, GRID_DIMS)
    return dropped


def check_jc_monotonic():
    """Relative dropped-term residual must fall as E_J/(hw |beta|) falls."""
    ratios = []
    for target in (0.4, 0.2, 0.1, 0.05):
        hw = 1.0 / (target * 0.25)
        params = PhysParams(hbar_omega=hw, e_j=1.0, e_z=0.0, beta=0.25, gamma_flux=0.0)
        ratios.append(jc_dropped_residual(params, GRID_DIMS)[1])
    return max(b - a for a, b in zip(ratios, ratios[1:]))


def check_rotation_bound(params, dims):
    residual, bound, _ = rotation_residual(params, dims)
    return residual / bound


def check_rotation_scaling(params, dims):
    res_full, _, _ = rotation_residual(params, dims)
    halved = PhysParams(
        hbar_omega=params.hbar_omega, e_j=params.e_j, e_z=params.e_z,
        beta=params.beta_real / 2.0, gamma_flux=params.gamma_flux,
    )
    res_half, _, _ = rotation_residual(halved, dims)
    return res_full / res_half


def check_x_rotation(params):
    return x_rotation_residual(params, GRID_DIMS)


def check_chain_fidelity(cfg, params):
    """1 - min fidelity between spectral propagation and the closed-form state."""
    dims = cfg.dims.to_dims()
    h = squeeze_superposition_hamiltonian(params, dims)
    psi0 = initial_joint_state(cfg)
    traj = evolve(h, psi0, cfg.grid.to_grid())
    worst = 0.0
    for t, state, leak in zip(traj.times, traj.states, traj.leakages):
        if leak >= 1e-8:
            continue
        ref = analytic_joint_state(cfg.gamma_amp_complex, float(t), params, dims)
        worst = max(worst, 1.0 - fidelity(state, ref))
    return worst


def check_squeezing_law(params):
    """Stripped-generator vacuum: min variance must equal e^(-2r)/4, r = 2 xi^2 t/hbar."""
    worst = 0.0
    rate = squeeze_coefficient(params)
    for r in (0.1, 0.5, 1.0):
        t = r / (2.0 * rate)
        st = squeezed_component(0.0, t, params, LAW_DIMS, squeeze_sign=1, omega_stripped=True)
        got = quadrature_stats(st).min_var_over_rotations
        worst = max(worst, abs(got - math.exp(-2.0 * r) / 4.0))
    return worst


def check_xi_squared_value(params):
    b = params.beta_real
    expected = (b * params.hbar_omega) ** 2 / (4.0 * (params.e_j + params.hbar_omega))
    return abs(squeeze_coefficient(params) - expected)


def check_collapse(cfg, params):
    """Probability completeness and collapsed-branch identity along the grid."""
    dims = cfg.dims.to_dims()
    h = squeeze_superposition_hamiltonian(params, dims)
    psi0 = initial_joint_state(cfg)
    traj = evolve(h, psi0, cfg.grid.to_grid())
    worst = 0.0
    for t, state in zip(traj.times, traj.states):
        p_g = float(np.sum(np.abs(state.qubit_block("g")) ** 2))
        p_e = float(np.sum(np.abs(state.qubit_block("e")) ** 2))
        worst = max(worst, abs(p_g + p_e - 1.0))
        prob_g, collapsed = measure_qubit(state, "g")
        comps = analytic_components(cfg.gamma_amp_complex, float(t), params, dims)
        phi_plus_norm = comps.phi_plus.norm
        if phi_plus_norm > 1e-7:
            ref = FieldState(dims=dims, amplitudes=comps.phi_plus.amplitudes / phi_plus_norm)
            worst = max(worst, 1.0 - fidelity(collapsed, ref))
        if t == 0.0:
            worst = max(worst, abs(prob_g - 1.0))
    return worst


def check_wigner_vacuum():
    dims = HilbertDims(n_fock=40, guard=8)
    vac = np.zeros(40, dtype=complex)
    vac[0] = 1.0
    val = wigner_point(FieldState(dims=dims, amplitudes=vac), 0.0, 0.0)
    return abs(val - 2.0 / math.pi)


def check_wigner_negativity(cfg, params):
    """Grid minimum of the collapsed-g Wigner function at squeeze target r = 0.4."""
    t = preparation_time(params, 0.4)
    from .runs import wigner_run  # local import to avoid cycle at module load

    local = cfg.model_copy(
        update={"grid": cfg.grid.model_copy(update={"t_end": max(cfg.grid.t_end, t)})}
    )
    result = wigner_run(local, t=t)
    return min(row[2] for row in result.rows)


def check_t_star_scaling(cfg):
    """t*(beta) * beta^2 must be constant across the sweep (quadratic speedup)."""
    result = sweep_run(cfg)
    products = [row[0] ** 2 * row[2] for row in result.rows]
    ref = products[0]
    return max(abs(p / ref - 1.0) for p in products)


def run_verification(cfg: Optional[ScenarioConfig] = None) -> VerifyReport:
    """Run every check; with a config, parameter checks run at its values."""
    if cfg is None:
        targets = [
            ("default", build_config(preset="default")),
            ("deep-squeeze", build_config(preset="deep-squeeze")),
        ]
        report_cfg = build_config()
    else:
        targets = [("config", cfg)]
        report_cfg = cfg

    checks = [
        _guarded("conjugation_identity_grid", 1e-6, "<=", check_conjugation_grid,
                 "max relative interior residual over beta x gamma x E_z grid, N=40 G=10"),
        _guarded("unitarity_suite", 1e-8, "<=", check_unitarity_suite,
                 "max interior unitarity defect over transforms, rotations, propagators"),
        _guarded("jc_reduction_monotonic", 0.0, "<=", check_jc_monotonic,
                 "successive differences of relative dropped-term residual along the regime scan"),
        _guarded("wigner_vacuum_anchor", 1e-6, "<=", check_wigner_vacuum,
                 "|W(0,0) - 2/pi| for the vacuum"),
    ]

    for label, target_cfg in targets:
        params = target_cfg.params.to_phys()
        dims_grid = GRID_DIMS
        checks.extend(
            [
                _guarded(f"jc_dropped_norm[{label}]", 1.5 * params.e_j, "<=",
                         lambda p=params: check_jc_dropped(p),
                         "spectral norm of dropped terms on Fock levels n <= 10"),
                _guarded(f"rotation_residual_bound[{label}]", 1.0, "<=",
                         lambda p=params, d=dims_grid: check_rotation_bound(p, d),
                         "residual / [4 (|eps1|+|eps2|)^2 ||H_JC||_F]"),
                _guarded(f"rotation_quadratic_scaling[{label}]", 3.5, ">=",
                         lambda p=params, d=dims_grid: check_rotation_scaling(p, d),
                         "residual shrink factor when beta is halved"),
                _guarded(f"x_rotation_exact[{label}]", 1e-10, "<=",
                         lambda p=params: check_x_rotation(p),
                         "relative residual of the sigma_z -> sigma_x rotation"),
                _guarded(f"chain_fidelity[{label}]", 1e-8, "<=",
                         lambda c=target_cfg, p=params: check_chain_fidelity(c, p),
                         "1 - min fidelity, propagator vs closed form, leakage-gated"),
                _guarded(f"squeezing_law[{label}]", 1e-6, "<=",
                         lambda p=params: check_squeezing_law(p),
                         "max |min variance - e^(-2r)/4| at r in {0.1, 0.5, 1.0}"),
                _guarded(f"xi_squared_value[{label}]", 1e-12, "<=",
                         lambda p=params: check_xi_squared_value(p),
                         "squeeze coefficient vs direct arithmetic"),
                _guarded(f"collapse_consistency[{label}]", 1e-10, "<=",
                         lambda c=target_cfg, p=params: check_collapse(c, p),
                         "max of probability-sum defect, collapsed-branch infidelity, p_g(0) defect"),
            ]
        )

    head_label, head_cfg = targets[0]
    head_params = head_cfg.params.to_phys()
    checks.append(
        _guarded(f"wigner_cat_negativity[{head_label}]", 0.0, "<",
                 lambda: check_wigner_negativity(head_cfg, head_params),
                 "grid minimum of collapsed-g Wigner at squeeze target r = 0.4")
    )
    checks.append(
        _guarded(f"t_star_scaling[{head_label}]", 1e-6, "<=",
                 lambda: check_t_star_scaling(head_cfg),
                 "relative spread of t*(beta) * beta^2 across the sweep")
    )

    return VerifyReport(
        version=__version__,
        config_hash=config_hash(report_cfg),
        checks=tuple(checks),
        overall_pass=all(c.passed for c in checks),
    )
