"""Parameter and result records shared by the closed-form model, the oracle and the sweeps.

All rates and frequencies are expressed in units of a reference decay rate (``gamma = 1``).
Susceptibilities are expressed in units of ``alpha = N p^2 / (eps0 hbar)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from lambda_disperse.types import Scheme

DEFAULT_RABI = 0.01
DEFAULT_NU_P = 1.0 / (2.0 * math.pi)
WEAK_PROBE_FRACTION = 0.1


class SystemParams(BaseModel):
    """Rates and energies of one Lambda or V configuration.

    For the V scheme ``gamma1`` is the common upper-level decay rate and ``gamma2`` is ignored;
    ``omega`` is then the upper-level splitting.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    scheme: Scheme = Scheme.LAMBDA
    gamma1: float = Field(1.0, gt=0.0, allow_inf_nan=False)
    gamma2: float = Field(1.0, gt=0.0, allow_inf_nan=False)
    r1: float = Field(0.0, ge=0.0, allow_inf_nan=False)
    r2: float = Field(0.0, ge=0.0, allow_inf_nan=False)
    omega: float = Field(1.0, ge=0.0, allow_inf_nan=False)
    omega_p_rabi: float = Field(DEFAULT_RABI, ge=0.0, allow_inf_nan=False)
    alpha: float = Field(1.0, gt=0.0, allow_inf_nan=False)
    nu_p: float = Field(DEFAULT_NU_P, gt=0.0, allow_inf_nan=False)

    @model_validator(mode="after")
    def _vee_is_symmetric(self) -> Self:
        if self.scheme == Scheme.VEE and self.r1 != self.r2:
            raise ValueError(f"V scheme requires r1 == r2 (got r1={self.r1}, r2={self.r2})")
        return self

    @property
    def weak_probe_limit(self) -> float:
        decays = (self.gamma1,) if self.scheme == Scheme.VEE else (self.gamma1, self.gamma2)
        return WEAK_PROBE_FRACTION * min(decays)

    @property
    def is_weak_probe(self) -> bool:
        return self.omega_p_rabi <= self.weak_probe_limit

    @property
    def is_symmetric(self) -> bool:
        if self.scheme == Scheme.VEE:
            return self.r1 == self.r2
        return self.r1 == self.r2 and self.gamma1 == self.gamma2

    @property
    def gamma(self) -> float:
        """Common decay rate (gamma for Lambda, gamma' for V)."""
        return self.gamma1

    @property
    def rate(self) -> float:
        """Common pump rate R of a symmetric configuration."""
        return self.r1

    def replace(self, **changes: Any) -> SystemParams:
        """Return a re-validated copy with some fields changed."""
        return type(self).model_validate(self.model_dump() | changes)

    @classmethod
    def symmetric(cls, rate: float, omega: float, gamma: float = 1.0, scheme: Scheme = Scheme.LAMBDA, **kwargs: Any) -> SystemParams:
        """Build a configuration with equal pump rates and equal decay rates."""
        return cls(scheme=scheme, gamma1=gamma, gamma2=gamma, r1=rate, r2=rate, omega=omega, **kwargs)


@dataclass(frozen=True, slots=True)
class EffectiveRates:
    """Coherence decay rates.

    ``gamma_r`` is the common Lorentzian half width of a symmetric configuration and is NaN otherwise.
    """

    gamma31: float
    gamma32: float
    gamma21: float
    gamma_r: float


@dataclass(frozen=True, slots=True)
class Populations:
    rho11: float
    rho22: float
    rho33: float

    def __post_init__(self) -> None:
        for name in ("rho11", "rho22", "rho33"):
            value = getattr(self, name)
            if not -1e-12 <= value <= 1.0 + 1e-12:
                raise ValueError(f"{name}={value} outside [0, 1]")

    @property
    def total(self) -> float:
        return self.rho11 + self.rho22 + self.rho33


@dataclass(frozen=True, slots=True)
class SusceptibilitySample:
    """Probe response at one detuning; ``chi_re``, ``chi_im`` and ``slope`` are in units of alpha."""

    delta_p: float
    chi_re: float
    chi_im: float
    slope: float

    @property
    def chi(self) -> complex:
        return complex(self.chi_re, self.chi_im)

    def scaled(self, alpha: float) -> SusceptibilitySample:
        """Multiply the response by the susceptibility scale."""
        return SusceptibilitySample(self.delta_p, alpha * self.chi_re, alpha * self.chi_im, alpha * self.slope)
