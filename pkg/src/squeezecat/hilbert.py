"""Truncated Fock space, qubit space, and the elementary operators and states.

Conventions fixed here and used everywhere else:

* Fock levels run 0..N-1; the top G levels form the guard band and are never
  trusted by identity checks.
* Qubit basis order is (|e>, |g>) with sigma_z|e> = +|e>.
* Joint vectors are ordered qubit-slowest: index q*N + n.
* Quadratures are X = (a + a^dag)/2, P = (a - a^dag)/(2i), so the vacuum has
  variance 1/4 in each.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import TruncationLeakage
from .numerics import exp_i_hermitian

NORM_TOL = 1e-10

# Pauli operators in the (|e>, |g>) ordering.
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=complex)   # |e><g|
SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=complex)  # |g><e|
QUBIT_IDENTITY = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class HilbertDims:
    """Fock truncation N plus guard band G (top levels treated as untrusted)."""

    n_fock: int
    guard: int = 0

    def __post_init__(self):
        if self.n_fock < 8:
            raise ValueError(f"n_fock must be >= 8, got {self.n_fock}")
        if not 0 <= self.guard < self.n_fock:
            raise ValueError(f"guard must satisfy 0 <= guard < n_fock, got {self.guard}")

    @property
    def interior(self) -> int:
        """Number of trusted Fock levels (below the guard band)."""
        return self.n_fock - self.guard


def _check_norm(amps, kind):
    nrm = float(np.linalg.norm(amps))
    if abs(nrm - 1.0) > NORM_TOL:
        raise ValueError(f"{kind} amplitudes have norm {nrm!r}, expected 1 within {NORM_TOL}")


@dataclass(frozen=True)
class FieldState:
    """Complex amplitude vector on the truncated Fock space.

    ``normalized=False`` marks intermediate states (e.g. superposition
    components carrying their own weights) that are exempt from the unit-norm
    invariant.
    """

    dims: HilbertDims
    amplitudes: np.ndarray
    normalized: bool = True

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (self.dims.n_fock,):
            raise ValueError(f"expected {self.dims.n_fock} amplitudes, got shape {amps.shape}")
        if self.normalized:
            _check_norm(amps, "FieldState")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True)
class JointState:
    """Qubit (x) field state, qubit index slowest, qubit order (|e>, |g>)."""

    dims: HilbertDims
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (2 * self.dims.n_fock,):
            raise ValueError(
                f"expected {2 * self.dims.n_fock} amplitudes, got shape {amps.shape}"
            )
        _check_norm(amps, "JointState")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    def qubit_block(self, outcome: str) -> np.ndarray:
        """Field amplitudes paired with qubit outcome 'e' or 'g' (unnormalized)."""
        n = self.dims.n_fock
        if outcome == "e":
            return self.amplitudes[:n]
        if outcome == "g":
            return self.amplitudes[n:]
        raise ValueError(f"outcome must be 'e' or 'g', got {outcome!r}")


def annihilation(dims: HilbertDims) -> np.ndarray:
    """Field annihilation operator: <n-1|a|n> = sqrt(n)."""
    return np.diag(np.sqrt(np.arange(1, dims.n_fock, dtype=float)), 1).astype(complex)


def creation(dims: HilbertDims) -> np.ndarray:
    return annihilation(dims).conj().T


def number_operator(dims: HilbertDims) -> np.ndarray:
    return np.diag(np.arange(dims.n_fock, dtype=float)).astype(complex)


def field_identity(dims: HilbertDims) -> np.ndarray:
    return np.eye(dims.n_fock, dtype=complex)


def parity(dims: HilbertDims) -> np.ndarray:
    """Photon-number parity, diagonal entries (-1)^n."""
    return np.diag((-1.0) ** np.arange(dims.n_fock)).astype(complex)


def compose(qubit_op, field_op) -> np.ndarray:
    """Tensor product qubit_op (x) field_op, qubit index slowest."""
    qubit_op = np.asarray(qubit_op, dtype=complex)
    field_op = np.asarray(field_op, dtype=complex)
    if qubit_op.shape != (2, 2):
        raise ValueError(f"qubit operator must be 2x2, got {qubit_op.shape}")
    if field_op.ndim != 2 or field_op.shape[0] != field_op.shape[1]:
        raise ValueError(f"field operator must be square, got {field_op.shape}")
    return np.kron(qubit_op, field_op)


def coherent_amplitudes(amp: complex, n_levels: int) -> np.ndarray:
    """First n_levels coefficients e^(-|amp|^2/2) amp^n / sqrt(n!)."""
    steps = np.concatenate(
        [[1.0 + 0j], amp / np.sqrt(np.arange(1, n_levels, dtype=float))]
    )
    return np.exp(-0.5 * abs(amp) ** 2) * np.cumprod(steps)


def coherent_state(amp: complex, dims: HilbertDims) -> FieldState:
    """Truncated coherent state, renormalized after truncation.

    Raises TruncationLeakage when the exact (untruncated) population at or
    above Fock level N - G exceeds 1e-10; the guard band then cannot vouch
    for the state.
    """
    n = dims.n_fock
    lam = abs(amp) ** 2
    tail = _poisson_tail(lam, n - dims.guard)
    if tail > 1e-10:
        raise TruncationLeakage(
            f"coherent amplitude {amp!r} leaks {tail:.3e} past Fock level "
            f"{n - dims.guard} (budget 1e-10); increase n_fock"
        )
    amps = coherent_amplitudes(amp, n)
    amps = amps / np.linalg.norm(amps)
    return FieldState(dims=dims, amplitudes=amps)


def _poisson_tail(lam: float, start: int) -> float:
    """P(X >= start) for X ~ Poisson(lam), summed upward until terms vanish."""
    if lam == 0.0:
        return 0.0 if start > 0 else 1.0
    # log of the first term, then forward recurrence term_{k+1} = term_k * lam/(k+1)
    log_term = -lam + start * np.log(lam) - _log_factorial(start)
    term = float(np.exp(log_term))
    total = 0.0
    k = start
    while term > total * 1e-18 + 1e-300:
        total += term
        k += 1
        term *= lam / k
        if k > start + 10_000:  # pragma: no cover - unreachable for sane lam
            break
    return total


def _log_factorial(n: int) -> float:
    return float(np.sum(np.log(np.arange(1, n + 1)))) if n > 0 else 0.0


def displacement(alpha: complex, dims: HilbertDims, max_abs: float = 3.0) -> np.ndarray:
    """Displacement operator exp(alpha a^dag - alpha* a) by spectral exponentiation.

    ``max_abs`` bounds |alpha| to keep the truncated operator honest; callers
    that police truncation another way (e.g. the Wigner trust region) may
    raise it explicitly.
    """
    if abs(alpha) > max_abs:
        raise ValueError(
            f"|alpha| = {abs(alpha):.3f} exceeds the displacement bound {max_abs}"
        )
    if dims.guard < 4:
        raise ValueError("displacement requires a guard band of at least 4 levels")
    a = annihilation(dims)
    gen = -1j * (alpha * a.conj().T - np.conj(alpha) * a)  # Hermitian generator
    return exp_i_hermitian(gen)


def leakage(state) -> float:
    """Total population in the top G Fock levels (both qubit branches for joint states)."""
    dims = state.dims
    n, g = dims.n_fock, dims.guard
    if g == 0:
        return 0.0
    amps = state.amplitudes
    if isinstance(state, JointState):
        mask = np.zeros(2 * n, dtype=bool)
        mask[n - g:n] = True
        mask[2 * n - g:] = True
        return float(np.sum(np.abs(amps[mask]) ** 2))
    return float(np.sum(np.abs(amps[n - g:]) ** 2))


def interior_indices(dims: HilbertDims, joint: bool) -> np.ndarray:
    keep = np.arange(dims.interior)
    if joint:
        return np.concatenate([keep, keep + dims.n_fock])
    return keep


def interior_block(m, dims: HilbertDims) -> np.ndarray:
    """Submatrix on trusted Fock levels; accepts field (N) or joint (2N) matrices."""
    m = np.asarray(m)
    if m.shape[0] == dims.n_fock:
        ix = interior_indices(dims, joint=False)
    elif m.shape[0] == 2 * dims.n_fock:
        ix = interior_indices(dims, joint=True)
    else:
        raise ValueError(f"matrix of shape {m.shape} matches neither field nor joint size")
    return m[np.ix_(ix, ix)]
