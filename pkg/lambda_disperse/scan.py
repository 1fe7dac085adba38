"""Parameter sweeps: detuning spectra, (R, omega) regime maps, group-index curves and the
closed-form versus density-matrix validation report.

Grid points are independent; they are evaluated on a thread pool and assembled in index order,
so results do not depend on the number of workers.
"""

from __future__ import annotations

import logging
import math
import os
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import TypeVar

import numpy as np

from lambda_disperse.exceptions import GridError, LambdaDisperseError
from lambda_disperse.model import classify_regime, group_index, susceptibility_closed_form, susceptibility_symmetric
from lambda_disperse.oracle import susceptibility_numeric
from lambda_disperse.params import SusceptibilitySample, SystemParams
from lambda_disperse.types import RegimeClass, Scheme

logger = logging.getLogger(__name__)

T = TypeVar("T")
U = TypeVar("U")

# Parameter sets of the dispersion/absorption figures and of the group-index figure
FIGURE_RATES: tuple[float, ...] = (0.0, 0.8, 1.3, 2.3)
FIGURE_OMEGAS: tuple[float, ...] = (1.0, 8.0)
GROUP_INDEX_OMEGAS: tuple[float, ...] = (1.0, 2.0, 8.0)
# Exact zero pump is left out: the lower levels then relax only through the probe
VALIDATION_RATES: tuple[float, ...] = (0.8, 1.3, 2.3)

DEFAULT_SPECTRUM_POINTS = 1601
DEFAULT_REGIME_POINTS = 200
DEFAULT_VALIDATION_POINTS = 161
DEFAULT_TOLERANCE = 1e-3


@dataclass(frozen=True)
class SpectrumSeries:
    params: SystemParams
    grid: tuple[float, ...]
    samples: tuple[SusceptibilitySample, ...]

    def __post_init__(self) -> None:
        _check_increasing(self.grid, "detuning grid")
        if len(self.samples) != len(self.grid):
            raise GridError(f"{len(self.samples)} samples for {len(self.grid)} grid points")


@dataclass(frozen=True)
class RegimeGrid:
    """Regime classes over an (R, omega) grid, stored row-major: omega rows, R columns."""

    params: SystemParams
    r_axis: tuple[float, ...]
    omega_axis: tuple[float, ...]
    cells: tuple[RegimeClass, ...]

    def __post_init__(self) -> None:
        _check_increasing(self.r_axis, "R axis")
        _check_increasing(self.omega_axis, "omega axis")
        if len(self.cells) != len(self.r_axis) * len(self.omega_axis):
            raise GridError(f"{len(self.cells)} cells for a {len(self.r_axis)}x{len(self.omega_axis)} grid")

    def cell(self, i_r: int, i_omega: int) -> RegimeClass:
        return self.cells[i_omega * len(self.r_axis) + i_r]

    def rows(self) -> Iterable[tuple[float, float, RegimeClass]]:
        """(r, omega, class) triples in storage order."""
        for i_omega, omega in enumerate(self.omega_axis):
            for i_r, r in enumerate(self.r_axis):
                yield r, omega, self.cell(i_r, i_omega)


@dataclass(frozen=True)
class GroupIndexCurve:
    params: SystemParams
    omega: float
    r_axis: tuple[float, ...]
    values: tuple[float, ...]
    predicted_sign_changes: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if len(self.values) != len(self.r_axis):
            raise GridError(f"{len(self.values)} values for {len(self.r_axis)} pump rates")
        if not all(math.isfinite(value) for value in self.values):
            raise GridError(f"non-finite group index on the omega={self.omega} curve")


@dataclass(frozen=True)
class ValidationCase:
    case_id: int
    params: SystemParams
    delta_p: float
    chi_analytic: complex | None = None
    chi_numeric: complex | None = None
    abs_error: float | None = None
    failure: str | None = None


@dataclass(frozen=True)
class ValidationReport:
    """Closed form versus oracle comparison; ``max_error`` is infinite when any case failed."""

    cases: tuple[ValidationCase, ...]
    tolerance: float
    max_error: float = 0.0
    passed: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "passed", self.max_error <= self.tolerance)

    @property
    def failures(self) -> tuple[ValidationCase, ...]:
        return tuple(case for case in self.cases if case.failure is not None)


def resolve_workers(workers: int | None) -> int:
    """Thread count for a sweep; ``None`` or 0 means every available core."""
    if workers is None or workers <= 0:
        return os.cpu_count() or 1
    return workers


def parallel_map(func: Callable[[T], U], items: Sequence[T], workers: int | None = None) -> list[U]:
    """Apply ``func`` to every item, returning results in input order."""
    count = min(resolve_workers(workers), max(1, len(items)))
    if count == 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=count) as executor:
        return list(executor.map(func, items))


def uniform_grid(start: float, stop: float, n_points: int, minimum_points: int = 2) -> tuple[float, ...]:
    """Evenly spaced grid; points within rounding of zero are set to exactly zero."""
    if n_points < minimum_points:
        raise GridError(f"need at least {minimum_points} grid points (got {n_points})")
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise GridError("grid bounds must be finite")
    if n_points == 1:
        return (float(start),)
    if not start < stop:
        raise GridError(f"grid start {start} must be below stop {stop}")
    grid = np.linspace(start, stop, n_points)
    grid[np.abs(grid) < 1e-12 * (stop - start)] = 0.0
    return tuple(float(value) for value in grid)


def spectrum_scan(params: SystemParams, delta_min: float, delta_max: float, n_points: int, workers: int | None = None) -> SpectrumSeries:
    """Closed-form susceptibility over a uniform detuning grid."""
    grid = uniform_grid(delta_min, delta_max, n_points)
    logger.info(f"Spectrum scan: {n_points} detunings in [{delta_min}, {delta_max}], scheme={params.scheme}")
    samples = parallel_map(lambda delta_p: susceptibility_closed_form(params, delta_p), grid, workers)
    return SpectrumSeries(params=params, grid=grid, samples=tuple(samples))


def boundary_predicates(r: float, omega: float, gamma: float = 1.0, scheme: Scheme = Scheme.LAMBDA) -> RegimeClass:
    """Regime class from the signs of (R - gamma) and (2 gamma_r - omega) alone.

    For the Lambda scheme 2 gamma_r - omega = 2 gamma + R - omega.
    """
    width = gamma + 0.5 * r if scheme == Scheme.LAMBDA else 0.5 * (gamma + r)
    inversion_sign = np.sign(r - gamma)
    separation_sign = np.sign(2.0 * width - omega)
    if inversion_sign == 0:
        return RegimeClass.SATURATED
    superluminal = inversion_sign * separation_sign < 0
    if inversion_sign < 0:
        return RegimeClass.SUPERLUMINAL_ABSORPTION if superluminal else RegimeClass.SUBLUMINAL_ABSORPTION
    return RegimeClass.SUPERLUMINAL_GAIN if superluminal else RegimeClass.SUBLUMINAL_GAIN


def regime_map(
    r_min: float,
    r_max: float,
    n_r: int,
    omega_min: float,
    omega_max: float,
    n_omega: int,
    gamma: float = 1.0,
    base: SystemParams | None = None,
    workers: int | None = None,
) -> RegimeGrid:
    """Classify every (R, omega) cell of a uniform grid at fixed decay rate ``gamma``.

    ``base`` supplies the scheme and the remaining parameters; its rates are overridden per cell.
    """
    r_axis = uniform_grid(r_min, r_max, n_r, minimum_points=1)
    omega_axis = uniform_grid(omega_min, omega_max, n_omega, minimum_points=1)
    template = (base or SystemParams()).replace(gamma1=gamma, gamma2=gamma)
    logger.info(f"Regime map: {n_r}x{n_omega} cells, scheme={template.scheme}")

    points = [(r, omega) for omega in omega_axis for r in r_axis]
    cells = parallel_map(lambda point: classify_regime(template.replace(r1=point[0], r2=point[0], omega=point[1])), points, workers)
    return RegimeGrid(params=template, r_axis=r_axis, omega_axis=omega_axis, cells=tuple(cells))


def group_index_scan(
    omega_list: Sequence[float],
    r_min: float,
    r_max: float,
    n_r: int,
    nu_p: float,
    gamma: float = 1.0,
    base: SystemParams | None = None,
    workers: int | None = None,
) -> list[GroupIndexCurve]:
    """Group index minus one versus pump rate, one curve per splitting."""
    r_axis = uniform_grid(r_min, r_max, n_r)
    template = (base or SystemParams()).replace(gamma1=gamma, gamma2=gamma, nu_p=nu_p)
    logger.info(f"Group-index scan: {len(omega_list)} curves x {n_r} rates")

    curves = []
    for omega in omega_list:
        values = parallel_map(lambda r, omega=omega: group_index(template.replace(r1=r, r2=r, omega=omega)), r_axis, workers)
        curves.append(
            GroupIndexCurve(
                params=template.replace(omega=omega),
                omega=float(omega),
                r_axis=r_axis,
                values=tuple(values),
                predicted_sign_changes=predicted_sign_changes(omega, gamma, template.scheme),
            )
        )
    return curves


def predicted_sign_changes(omega: float, gamma: float = 1.0, scheme: Scheme = Scheme.LAMBDA) -> tuple[float, ...]:
    """Pump rates where the group index changes sign: R = gamma and, when positive, the rate with 2 gamma_r = omega."""
    boundary = omega - 2.0 * gamma if scheme == Scheme.LAMBDA else omega - gamma
    changes = {gamma}
    if boundary > 0.0:
        changes.add(boundary)
    return tuple(sorted(changes))


def figure_cases(base: SystemParams | None = None, rates: Sequence[float] = FIGURE_RATES, omegas: Sequence[float] = FIGURE_OMEGAS) -> list[SystemParams]:
    """Symmetric parameter sets of the dispersion/absorption figures."""
    template = base or SystemParams()
    return [template.replace(r1=rate, r2=rate, omega=omega) for omega in omegas for rate in rates]


def validate_run(param_cases: Sequence[SystemParams], delta_grid: Sequence[float], tolerance: float = DEFAULT_TOLERANCE, workers: int | None = None) -> ValidationReport:
    """Compare the symmetric closed form with the density-matrix oracle over cases x detunings.

    A case that cannot be evaluated is recorded with its failure message and makes the report fail.
    """
    if not tolerance > 0.0:
        raise ValueError(f"tolerance must be positive (got {tolerance})")

    jobs = [(case_id, params, float(delta_p)) for case_id, params in enumerate(param_cases) for delta_p in delta_grid]
    logger.info(f"Validation: {len(param_cases)} parameter sets x {len(delta_grid)} detunings")
    cases = tuple(parallel_map(_validate_point, jobs, workers))

    if any(case.failure is not None for case in cases):
        max_error = math.inf
    else:
        max_error = max((case.abs_error for case in cases if case.abs_error is not None), default=0.0)
    report = ValidationReport(cases=cases, tolerance=tolerance, max_error=max_error)
    logger.info(f"Validation max error {report.max_error:.3e} (tolerance {tolerance:.1e}): {'pass' if report.passed else 'fail'}")
    return report


def _validate_point(job: tuple[int, SystemParams, float]) -> ValidationCase:
    case_id, params, delta_p = job
    try:
        analytic = susceptibility_symmetric(params, delta_p).chi
        numeric = susceptibility_numeric(params, delta_p).chi
    except (LambdaDisperseError, ValueError) as exc:
        logger.warning(f"Validation case {case_id} at delta_p={delta_p} failed: {exc}")
        return ValidationCase(case_id=case_id, params=params, delta_p=delta_p, failure=str(exc))
    return ValidationCase(
        case_id=case_id,
        params=params,
        delta_p=delta_p,
        chi_analytic=analytic,
        chi_numeric=numeric,
        abs_error=abs(analytic - numeric),
    )


def _check_increasing(values: Sequence[float], name: str) -> None:
    if any(b <= a for a, b in zip(values, values[1:], strict=False)):
        raise GridError(f"{name} must be strictly increasing")
