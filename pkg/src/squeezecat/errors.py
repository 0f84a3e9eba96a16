"""Exception and warning types shared across the package."""


class SqueezecatError(Exception):
    """Base class for all package-specific errors."""


class NonHermitianError(SqueezecatError):
    """Input matrix fails the Hermiticity tolerance of a spectral routine."""

    def __init__(self, defect, tolerance):
        self.defect = defect
        self.tolerance = tolerance
        super().__init__(
            f"matrix is not Hermitian: defect {defect:.3e} exceeds tolerance {tolerance:.3e}"
        )


class TruncationLeakage(SqueezecatError):
    """A state places too much population in (or beyond) the guard band."""


class TrustRegionViolation(SqueezecatError):
    """A phase-space grid extends past the region the truncation can represent."""


class ResonanceSingularity(SqueezecatError):
    """Parameter combination sits on the E_J = hbar*omega (or squared) pole."""


class EpsilonTooLarge(SqueezecatError):
    """A rotation amplitude violates the small-rotation premise |eps| < 0.2."""


class ZeroProbabilityCollapse(SqueezecatError):
    """Requested measurement outcome has vanishing probability."""


class LeakageAbort(SqueezecatError):
    """Time evolution crossed the leakage budget; carries the partial trajectory."""

    def __init__(self, trajectory, message="leakage budget exceeded during evolution"):
        self.trajectory = trajectory
        super().__init__(message)


class RegimeViolation(UserWarning):
    """A scenario runs outside a regime inequality (warning, not an error)."""
