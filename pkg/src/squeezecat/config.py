"""Scenario configuration: one JSON document drives every command.

Validation is strict -- unknown keys are a hard error -- and every field has
a default, so ``{}`` is the default scenario.  Two presets exist:

* ``default``      -- hbar_omega = 10 E_J, beta = 0.25, N = 80, G = 12
* ``deep-squeeze`` -- the same with hbar_omega = 50 E_J

The config hash (sha256 of the canonical JSON dump) is embedded in every
output file so results can be traced back to their exact inputs.
"""

import hashlib
import json
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .dynamics import TimeGrid
from .hamiltonians import PhysParams
from .hilbert import HilbertDims
from .observables import WignerSpec

PRESETS = {
    "default": {},
    "deep-squeeze": {"params": {"hbar_omega": 50.0}},
}


class ParamsModel(BaseModel):
    """Model parameters in units of E_J (energies) and hbar/E_J (times)."""

    model_config = ConfigDict(extra="forbid")

    hbar_omega: float = Field(default=10.0, gt=0)
    e_j: float = 1.0
    e_z: float = 0.0
    beta: float = 0.25
    gamma_flux: float = 0.0

    def to_phys(self) -> PhysParams:
        return PhysParams(
            hbar_omega=self.hbar_omega,
            e_j=self.e_j,
            e_z=self.e_z,
            beta=self.beta,
            gamma_flux=self.gamma_flux,
        )


class DimsModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n_fock: int = Field(default=80, ge=8)
    guard: int = Field(default=12, ge=0)

    def to_dims(self) -> HilbertDims:
        return HilbertDims(n_fock=self.n_fock, guard=self.guard)


class GridModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    t_start: float = 0.0
    t_end: float = 3.0
    n_points: int = Field(default=61, ge=1)

    def to_grid(self) -> TimeGrid:
        return TimeGrid(t_start=self.t_start, t_end=self.t_end, n_points=self.n_points)


class WignerSpecModel(BaseModel):
    """Phase-space grid plus which collapsed branch to image at which time."""

    model_config = ConfigDict(extra="forbid")

    x_min: float = -4.0
    x_max: float = 4.0
    p_min: float = -4.0
    p_max: float = 4.0
    resolution: int = Field(default=81, ge=2)
    t: float = 1.408
    outcome: Literal["g", "e"] = "g"

    def to_spec(self) -> WignerSpec:
        return WignerSpec(
            x_min=self.x_min,
            x_max=self.x_max,
            p_min=self.p_min,
            p_max=self.p_max,
            resolution=self.resolution,
        )


class SweepSpecModel(BaseModel):
    """Values of one parameter to sweep plus the squeeze-magnitude target."""

    model_config = ConfigDict(extra="forbid")

    parameter: Literal["beta"] = "beta"
    values: list[float] = Field(default_factory=lambda: [0.05, 0.1, 0.25, 0.4, 0.5])
    r_target: float = Field(default=0.5, gt=0)

    @field_validator("values")
    @classmethod
    def _nonempty(cls, v):
        if not v:
            raise ValueError("sweep values must be non-empty")
        return v


class ScenarioConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    params: ParamsModel = Field(default_factory=ParamsModel)
    gamma_amp: Union[float, tuple[float, float]] = 1.0
    dims: DimsModel = Field(default_factory=DimsModel)
    grid: GridModel = Field(default_factory=GridModel)
    outputs: list[Literal["timeseries", "wigner", "sweep"]] = Field(
        default_factory=lambda: ["timeseries"]
    )
    wigner_spec: WignerSpecModel = Field(default_factory=WignerSpecModel)
    sweep_spec: SweepSpecModel = Field(default_factory=SweepSpecModel)

    @property
    def gamma_amp_complex(self) -> complex:
        if isinstance(self.gamma_amp, (tuple, list)):
            return complex(self.gamma_amp[0], self.gamma_amp[1])
        return complex(self.gamma_amp)


def deep_merge(base: dict, override: dict) -> dict:
    """Recursively overlay ``override`` onto ``base`` (dicts merged, rest replaced)."""
    out = dict(base)
    for key, val in override.items():
        if isinstance(val, dict) and isinstance(out.get(key), dict):
            out[key] = deep_merge(out[key], val)
        else:
            out[key] = val
    return out


def build_config(file_dict: Optional[dict] = None, preset: str = "default") -> ScenarioConfig:
    """Overlay a config dict onto a preset and validate strictly."""
    if preset not in PRESETS:
        raise ValueError(f"unknown preset {preset!r}; choose from {sorted(PRESETS)}")
    merged = deep_merge(PRESETS[preset], file_dict or {})
    return ScenarioConfig.model_validate(merged)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False)


def config_hash(cfg: ScenarioConfig) -> str:
    return hashlib.sha256(canonical_json(cfg.model_dump(mode="json")).encode()).hexdigest()


def params_hash(cfg: ScenarioConfig) -> str:
    return hashlib.sha256(canonical_json(cfg.params.model_dump(mode="json")).encode()).hexdigest()
