"""Closed-form weak-probe response of the incoherently pumped three-level atom.

The Lambda scheme is evaluated from the steady-state populations and probe coherences;
the symmetric Lambda and the V scheme also have two-Lorentzian closed forms.
"""

from __future__ import annotations

import logging
import math
import warnings

from lambda_disperse.exceptions import DegenerateInputWarning, SchemeError, WeakProbeError
from lambda_disperse.params import EffectiveRates, Populations, SusceptibilitySample, SystemParams
from lambda_disperse.types import RegimeClass, Scheme

logger = logging.getLogger(__name__)

SATURATION_TOLERANCE = 1e-12
SLOPE_TOLERANCE = 1e-12


def effective_rates(params: SystemParams) -> EffectiveRates:
    """Coherence decay rates of the configuration."""
    gamma21 = 0.5 * (params.r1 + params.r2)
    if params.scheme == Scheme.VEE:
        gamma_r = 0.5 * (params.gamma + params.rate)
        return EffectiveRates(gamma31=gamma_r, gamma32=gamma_r, gamma21=gamma21, gamma_r=gamma_r)

    gamma31 = 0.5 * (params.gamma1 + params.gamma2 + params.r1)
    gamma32 = 0.5 * (params.gamma1 + params.gamma2 + params.r2)
    gamma_r = params.gamma + 0.5 * params.rate if params.is_symmetric else math.nan
    return EffectiveRates(gamma31=gamma31, gamma32=gamma32, gamma21=gamma21, gamma_r=gamma_r)


def inversion_symmetric(r: float, gamma: float) -> float:
    """Population difference rho33 - rho11 of the symmetric Lambda scheme."""
    if r < 0.0 or gamma <= 0.0:
        raise ValueError(f"need r >= 0 and gamma > 0 (got r={r}, gamma={gamma})")
    return (r - gamma) / (r + 2.0 * gamma)


def inversion_vee(r: float, gamma: float) -> float:
    """Population prefactor of the symmetric V scheme."""
    if r < 0.0 or gamma <= 0.0:
        raise ValueError(f"need r >= 0 and gamma > 0 (got r={r}, gamma={gamma})")
    return (r - gamma) / (2.0 * r + gamma)


def population_inversion(params: SystemParams) -> float:
    """Prefactor of the two-Lorentzian closed form for a symmetric configuration."""
    _require_symmetric(params)
    if params.scheme == Scheme.VEE:
        return inversion_vee(params.rate, params.gamma)
    return inversion_symmetric(params.rate, params.gamma)


def steady_populations(params: SystemParams) -> Populations:
    """Weak-probe steady-state populations of the Lambda scheme."""
    _require_lambda(params)
    _require_weak_probe(params)
    g1, g2, r1, r2 = params.gamma1, params.gamma2, params.r1, params.r2

    denominator = r1 * r2 + r1 * g2 + r2 * g1
    if denominator == 0.0:
        message = "both pump rates are zero; returning the R1 = R2 -> 0 limit of the populations"
        logger.info(message)
        warnings.warn(message, DegenerateInputWarning, stacklevel=2)
        return Populations(rho11=g1 / (g1 + g2), rho22=g2 / (g1 + g2), rho33=0.0)

    return Populations(rho11=r2 * g1 / denominator, rho22=r1 * g2 / denominator, rho33=r1 * r2 / denominator)


def steady_coherences(params: SystemParams, delta_p: float) -> tuple[complex, complex]:
    """Probe coherences (rho31, rho32) to first order in the probe Rabi frequency."""
    term31, term32 = _response_terms(params, delta_p)
    rabi = params.omega_p_rabi
    return rabi * term31, rabi * term32


def susceptibility(params: SystemParams, delta_p: float) -> SusceptibilitySample:
    """Susceptibility of the (possibly asymmetric) Lambda scheme from the steady-state coherences.

    Positive ``chi_im`` is attenuation, negative ``chi_im`` is gain.
    """
    term31, term32 = _response_terms(params, delta_p)
    chi = term31 + term32
    return SusceptibilitySample(delta_p=delta_p, chi_re=chi.real, chi_im=chi.imag, slope=dispersion_slope(params, delta_p))


def susceptibility_symmetric(params: SystemParams, delta_p: float) -> SusceptibilitySample:
    """Two-Lorentzian closed form for equal pump rates and equal decay rates (Lambda)."""
    _require_lambda(params)
    _require_symmetric(params)
    _require_weak_probe(params)
    prefactor = inversion_symmetric(params.rate, params.gamma)
    width = params.gamma + 0.5 * params.rate
    return _two_lorentzian(prefactor, width, params.omega, delta_p)


def susceptibility_vee(params: SystemParams, delta_p: float) -> SusceptibilitySample:
    """Two-Lorentzian closed form of the symmetric V scheme."""
    if params.scheme != Scheme.VEE:
        raise SchemeError(f"V-scheme closed form called with scheme={params.scheme}")
    _require_weak_probe(params)
    prefactor = inversion_vee(params.rate, params.gamma)
    width = 0.5 * (params.gamma + params.rate)
    return _two_lorentzian(prefactor, width, params.omega, delta_p)


def susceptibility_closed_form(params: SystemParams, delta_p: float) -> SusceptibilitySample:
    """Pick the closed form that applies to ``params``."""
    if params.scheme == Scheme.VEE:
        return susceptibility_vee(params, delta_p)
    if params.is_symmetric:
        return susceptibility_symmetric(params, delta_p)
    return susceptibility(params, delta_p)


def dispersion_slope(params: SystemParams, delta_p: float) -> float:
    """Analytic derivative of Re(chi)/alpha with respect to the probe detuning."""
    if params.scheme == Scheme.VEE or params.is_symmetric:
        prefactor = population_inversion(params)
        width = effective_rates(params).gamma_r
        return _two_lorentzian(prefactor, width, params.omega, delta_p).slope

    term31, term32 = _response_terms(params, delta_p)
    rates = effective_rates(params)
    denominator31 = complex(delta_p + 0.5 * params.omega, rates.gamma31)
    denominator32 = complex(delta_p - 0.5 * params.omega, rates.gamma32)
    return -(term31 / denominator31 + term32 / denominator32).real


def group_index(params: SystemParams) -> float:
    """Group index minus one at zero probe detuning, in units of alpha.

    The detuning is an angular frequency and ``nu_p`` an ordinary one, so the frequency derivative
    of the dispersion is 2 pi times its detuning derivative.
    """
    _require_symmetric(params)
    sample = susceptibility_closed_form(params, 0.0)
    return 2.0 * math.pi * sample.chi_re + 2.0 * math.pi * params.nu_p * (2.0 * math.pi * sample.slope)


def classify_regime(params: SystemParams) -> RegimeClass:
    """Sub/superluminal and absorption/gain class from the response at zero detuning."""
    if abs(population_inversion(params)) < SATURATION_TOLERANCE:
        return RegimeClass.SATURATED

    sample = susceptibility_closed_form(params, 0.0)
    # a vanishing slope is not anomalous dispersion
    superluminal = sample.slope < 0.0 and abs(sample.slope) >= SLOPE_TOLERANCE
    absorbing = sample.chi_im > 0.0
    match (superluminal, absorbing):
        case (True, True):
            return RegimeClass.SUPERLUMINAL_ABSORPTION
        case (True, False):
            return RegimeClass.SUPERLUMINAL_GAIN
        case (False, True):
            return RegimeClass.SUBLUMINAL_ABSORPTION
        case _:
            return RegimeClass.SUBLUMINAL_GAIN


def _two_lorentzian(prefactor: float, width: float, splitting: float, delta_p: float) -> SusceptibilitySample:
    upper = delta_p + 0.5 * splitting
    lower = delta_p - 0.5 * splitting
    width2 = width * width
    denominator_upper = upper * upper + width2
    denominator_lower = lower * lower + width2

    chi_re = prefactor * (upper / denominator_upper + lower / denominator_lower)
    chi_im = -prefactor * (width / denominator_upper + width / denominator_lower)
    slope = prefactor * ((width2 - upper * upper) / denominator_upper**2 + (width2 - lower * lower) / denominator_lower**2)
    return SusceptibilitySample(delta_p=delta_p, chi_re=chi_re, chi_im=chi_im, slope=slope)


def _response_terms(params: SystemParams, delta_p: float) -> tuple[complex, complex]:
    """Per-transition contributions to chi/alpha, i.e. rho3j / Omega_p."""
    populations = steady_populations(params)
    rates = effective_rates(params)
    term31 = (populations.rho33 - populations.rho11) / complex(delta_p + 0.5 * params.omega, rates.gamma31)
    term32 = (populations.rho33 - populations.rho22) / complex(delta_p - 0.5 * params.omega, rates.gamma32)
    return term31, term32


def _require_lambda(params: SystemParams) -> None:
    if params.scheme != Scheme.LAMBDA:
        raise SchemeError(f"operation needs the Lambda scheme (got {params.scheme})")


def _require_symmetric(params: SystemParams) -> None:
    if not params.is_symmetric:
        raise SchemeError(f"operation needs equal pump and decay rates (r1={params.r1}, r2={params.r2}, gamma1={params.gamma1}, gamma2={params.gamma2})")


def _require_weak_probe(params: SystemParams) -> None:
    if not params.is_weak_probe:
        raise WeakProbeError(f"probe Rabi frequency {params.omega_p_rabi} exceeds the weak-probe limit {params.weak_probe_limit}")
