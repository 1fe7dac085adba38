from __future__ import annotations

import math
from enum import StrEnum

from lambda_disperse.scan import DEFAULT_REGIME_POINTS, DEFAULT_SPECTRUM_POINTS, DEFAULT_TOLERANCE, DEFAULT_VALIDATION_POINTS, FIGURE_OMEGAS, GROUP_INDEX_OMEGAS, VALIDATION_RATES
from lambda_disperse.types import OutputFormat, Scheme

APP_NAME = "lambda-disperse"


class RichHelpPanel(StrEnum):
    MODEL = "Model Parameters"
    GRID = "Grid"
    OUTPUT = "Output"
    OTHER = "Other Options"


class EnvVarName(StrEnum):
    """Environment variable names for CLI configuration."""

    THREADS = "LAMBDA_DISPERSE_THREADS"
    OUTPUT_FORMAT = "LAMBDA_DISPERSE_OUTPUT_FORMAT"
    LOG_LEVEL = "LAMBDA_DISPERSE_LOG_LEVEL"


def _join(values: tuple[float, ...]) -> str:
    return ",".join(f"{value:g}" for value in values)


# Documented default of every flag; model parameters are in units of the reference decay rate
MODEL_DEFAULTS: dict[str, object] = {
    "scheme": Scheme.LAMBDA.value,
    "gamma1": 1.0,
    "gamma2": 1.0,
    "r1": 0.0,
    "r2": 0.0,
    "omega": 1.0,
    "omega_p_rabi": 0.01,
    "alpha": 1.0,
    "nu_p": 1.0 / (2.0 * math.pi),
}

GRID_DEFAULTS: dict[str, object] = {
    "delta_min": -10.0,
    "delta_max": 10.0,
    "points": DEFAULT_SPECTRUM_POINTS,
    "r_min": 0.0,
    "r_max": 6.0,
    "r_points": DEFAULT_REGIME_POINTS,
    "omega_min": 0.0,
    "omega_max": 10.0,
    "omega_points": DEFAULT_REGIME_POINTS,
    "gi_r_max": 8.0,
    "gi_r_points": 161,
    "gi_omegas": _join(GROUP_INDEX_OMEGAS),
    "validate_rates": _join(VALIDATION_RATES),
    "validate_omegas": _join(FIGURE_OMEGAS),
    "validate_points": DEFAULT_VALIDATION_POINTS,
    "tolerance": DEFAULT_TOLERANCE,
}

DEFAULT_FORMAT = OutputFormat.CSV
