"""Exact time evolution through spectral propagators, with leakage monitoring."""

from dataclasses import dataclass

import numpy as np

from .errors import LeakageAbort
from .hamiltonians import HBAR
from .hilbert import FieldState, HilbertDims, JointState, leakage
from .numerics import SpectralDecomposition, func_of_hermitian, hermitian_eig

LEAKAGE_BUDGET = 1e-6


@dataclass(frozen=True)
class TimeGrid:
    """Uniform time grid in units of hbar/E_J."""

    t_start: float
    t_end: float
    n_points: int

    def __post_init__(self):
        if self.t_end < self.t_start:
            raise ValueError("t_end must be >= t_start")
        if self.n_points < 1:
            raise ValueError("n_points must be >= 1")
        if self.n_points == 1 and self.t_end != self.t_start:
            raise ValueError("a single-point grid requires t_start == t_end")

    @property
    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.n_points)


@dataclass(frozen=True)
class Trajectory:
    """States along a time grid; truncated (aborted=True) once leakage crosses budget."""

    times: np.ndarray
    states: tuple
    leakages: np.ndarray
    aborted: bool = False


def propagator(h, t: float, decomposition: SpectralDecomposition | None = None) -> np.ndarray:
    """U(t) = exp(-i H t / hbar) for Hermitian H, via spectral decomposition."""
    dec = decomposition if decomposition is not None else hermitian_eig(h)
    return func_of_hermitian(dec, lambda w: np.exp(-1j * w * t / HBAR))


def _wrap_like(template, amplitudes, dims: HilbertDims):
    if isinstance(template, JointState):
        return JointState(dims=dims, amplitudes=amplitudes)
    return FieldState(dims=dims, amplitudes=amplitudes)


def evolve(h, psi0, grid: TimeGrid) -> Trajectory:
    """Evolve psi0 (FieldState or JointState) along the grid under Hermitian h.

    One spectral decomposition of h is reused for every time point, so each
    state is the exact (to rounding) propagated vector rather than a stepped
    approximation.  Raises LeakageAbort -- carrying the flagged partial
    trajectory in ``.trajectory`` -- at the first grid point whose guard-band
    population exceeds 1e-6.
    """
    dims = psi0.dims
    vec0 = psi0.amplitudes
    if h.shape[0] != vec0.shape[0]:
        raise ValueError(f"Hamiltonian dim {h.shape[0]} does not match state dim {vec0.shape[0]}")
    dec = hermitian_eig(h)
    coeffs = dec.eigenvectors.conj().T @ vec0
    times = grid.times
    states, leaks = [], []
    for k, t in enumerate(times):
        vec = dec.eigenvectors @ (np.exp(-1j * dec.eigenvalues * t / HBAR) * coeffs)
        state = _wrap_like(psi0, vec, dims)
        lk = leakage(state)
        states.append(state)
        leaks.append(lk)
        if lk > LEAKAGE_BUDGET:
            partial = Trajectory(
                times=times[: k + 1],
                states=tuple(states),
                leakages=np.array(leaks),
                aborted=True,
            )
            raise LeakageAbort(
                partial,
                f"leakage {lk:.3e} exceeded budget {LEAKAGE_BUDGET} at t={t:g} "
                f"(point {k + 1}/{len(times)})",
            )
    return Trajectory(times=times, states=tuple(states), leakages=np.array(leaks))
