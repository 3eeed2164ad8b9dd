"""Physical experiment parameters and their dimensionless reduction.

Everything downstream depends on only two numbers: the waist ratio
``gamma = w_p / w_s`` and the crystal length in units of the pump Rayleigh
range, ``l_r = L / z_R`` with ``z_R = pi w_p^2 / lambda``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError

__all__ = [
    "ExperimentConfig",
    "DimensionlessParams",
    "XiParam",
    "reduce",
    "xi",
]


def _require_positive(name: str, value: float, allow_zero: bool = False) -> None:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ValidationError(f"{name} must be a real number, got {value!r}")
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}")
    if value < 0 or (value == 0 and not allow_zero):
        bound = "nonnegative" if allow_zero else "positive"
        raise ValidationError(f"{name} must be {bound}, got {value!r}")


@dataclass(frozen=True)
class ExperimentConfig:
    """Generation and detection parameters of a down-conversion setup.

    Lengths are in meters.  The signal and idler detection modes share a
    single waist.  A zero crystal length is accepted as the degenerate
    thin-crystal limit.
    """

    pump_waist_m: float
    wavelength_m: float
    crystal_length_m: float
    detection_waist_m: float

    def __post_init__(self):
        _require_positive("pump_waist_m", self.pump_waist_m)
        _require_positive("wavelength_m", self.wavelength_m)
        _require_positive("crystal_length_m", self.crystal_length_m, allow_zero=True)
        _require_positive("detection_waist_m", self.detection_waist_m)

    @property
    def pump_wavenumber(self) -> float:
        """k_p = 2 pi / lambda (the wavelength is taken as supplied)."""
        return 2.0 * math.pi / self.wavelength_m


@dataclass(frozen=True)
class DimensionlessParams:
    """The reduced parameter pair (gamma, l_r).

    ``rayleigh_range_m`` is populated only when the instance was derived
    from a physical :class:`ExperimentConfig`.
    """

    gamma: float
    l_r: float
    rayleigh_range_m: float | None = None

    def __post_init__(self):
        _require_positive("gamma", self.gamma)
        _require_positive("l_r", self.l_r, allow_zero=True)
        if self.rayleigh_range_m is not None:
            _require_positive("rayleigh_range_m", self.rayleigh_range_m)


@dataclass(frozen=True)
class XiParam:
    """The complex parameter (i + l_r) / (i - 2 gamma^2 l_r).

    Equals exactly 1 at l_r = 0; the denominator modulus is >= 1 for all
    real inputs, so the value is always finite.
    """

    value: complex


def reduce(config: ExperimentConfig) -> DimensionlessParams:
    """Reduce physical parameters to (gamma, l_r) plus the Rayleigh range."""
    gamma = config.pump_waist_m / config.detection_waist_m
    z_r = math.pi * config.pump_waist_m**2 / config.wavelength_m
    l_r = config.crystal_length_m / z_r
    return DimensionlessParams(gamma=gamma, l_r=l_r, rayleigh_range_m=z_r)


def xi(params: DimensionlessParams) -> XiParam:
    """Evaluate xi = (i + l_r) / (i - 2 gamma^2 l_r)."""
    return XiParam(value=_xi_value(params.gamma, params.l_r))


def _xi_value(gamma: float, l_r: float) -> complex:
    if l_r == 0.0:
        return complex(1.0, 0.0)
    return (1j + l_r) / (1j - 2.0 * gamma * gamma * l_r)
