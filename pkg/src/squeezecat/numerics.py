"""Dense complex linear algebra: Hermitian spectral decompositions and matrix functions.

Every operator function in the package (cosines of field operators, unitary
propagators, displacement and rotation exponentials) is evaluated through one
code path: diagonalize a Hermitian matrix, apply the scalar function to the
eigenvalues, and reassemble.  This keeps unitaries unitary to rounding and
removes series-truncation error as a confound.

All functions are pure; inputs are never mutated.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NonHermitianError

HERMITICITY_RTOL = 1e-10


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending) and eigenvector columns of a Hermitian matrix."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self):
        return self.eigenvalues.shape[0]


def _as_square_complex(m):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("matrix contains non-finite entries")
    return m


def hermiticity_defect(m):
    """Frobenius norm of (M - M^dagger), the raw Hermiticity defect."""
    m = np.asarray(m, dtype=complex)
    return float(np.linalg.norm(m - m.conj().T))


def hermitian_eig(m) -> SpectralDecomposition:
    """Spectral decomposition of a Hermitian matrix.

    Eigenvalues are returned in ascending order.  Each eigenvector is phase
    fixed so that its first component above 1e-12 of the column maximum is
    real and positive; this makes repeated runs (and degenerate subspaces as
    LAPACK returns them) reproducible for regression baselines.

    Raises
    ------
    NonHermitianError
        If ||M - M^dagger||_F > 1e-10 * ||M||_F.
    ValueError
        For non-square or non-finite input.
    """
    m = _as_square_complex(m)
    defect = hermiticity_defect(m)
    tol = HERMITICITY_RTOL * max(float(np.linalg.norm(m)), 1.0)
    if defect > tol:
        raise NonHermitianError(defect, tol)
    w, v = np.linalg.eigh(m)
    v = _fix_phases(v)
    w = w.copy()
    w.setflags(write=False)
    v.setflags(write=False)
    return SpectralDecomposition(eigenvalues=w, eigenvectors=v)


def _fix_phases(v):
    v = np.ascontiguousarray(v)
    mags = np.abs(v)
    cutoff = 1e-12 * mags.max(axis=0, keepdims=True)
    first = np.argmax(mags > cutoff, axis=0)
    pivots = v[first, np.arange(v.shape[1])]
    phases = np.where(np.abs(pivots) > 0, pivots / np.abs(np.where(pivots == 0, 1, pivots)), 1.0)
    return v * phases.conj()


def func_of_hermitian(m, fn) -> np.ndarray:
    """Apply a scalar function to a Hermitian matrix via its spectrum.

    ``fn`` maps the (real) eigenvalue array to function values; the result is
    V f(lambda) V^dagger.
    """
    dec = m if isinstance(m, SpectralDecomposition) else hermitian_eig(m)
    v = dec.eigenvectors
    return (v * fn(dec.eigenvalues)) @ v.conj().T


def exp_i_hermitian(m, scale=1.0) -> np.ndarray:
    """exp(i * scale * M) for Hermitian M; unitary to rounding."""
    return func_of_hermitian(m, lambda w: np.exp(1j * scale * w))


def exp_hermitian(m, scale=1.0) -> np.ndarray:
    """exp(scale * M) for Hermitian M (real scale)."""
    return func_of_hermitian(m, lambda w: np.exp(scale * w))


def cos_hermitian(m) -> np.ndarray:
    return func_of_hermitian(m, np.cos)


def sin_hermitian(m) -> np.ndarray:
    return func_of_hermitian(m, np.sin)


def matrix_norms(m):
    """(Frobenius, spectral) norms of an arbitrary complex matrix.

    The spectral norm comes from the largest eigenvalue of M^dagger M, so it
    shares the determinism of ``hermitian_eig`` rather than an SVD backend.
    """
    m = np.asarray(m, dtype=complex)
    fro = float(np.linalg.norm(m))
    if fro == 0.0:
        return 0.0, 0.0
    gram = m.conj().T @ m
    gram = 0.5 * (gram + gram.conj().T)  # scrub rounding asymmetry
    w = hermitian_eig(gram).eigenvalues
    return fro, float(np.sqrt(max(w[-1], 0.0)))
