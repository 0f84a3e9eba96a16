"""squeezecat: simulate and verify the preparation of squeezed-state superpositions.

A truncated-Fock-space simulator for a cavity mode coupled to a
superconducting charge qubit through a flux-tunable cosine interaction.  The
package builds every Hamiltonian in the linearization chain from the full
nonlinear model down to the exactly solvable squeeze-superposition form,
cross-validates each reduction step numerically, and exposes the runs through
a FastAPI service plus a thin command-line client.
"""

__version__ = "0.1.0"

from .hamiltonians import (  # noqa: F401
    DeviceParams,
    PhysParams,
    default_params,
    deep_squeeze_params,
    derive_params,
    squeeze_coefficient,
    squeeze_rate,
)
from .hilbert import FieldState, HilbertDims, JointState  # noqa: F401
