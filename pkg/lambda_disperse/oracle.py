"""Independent density-matrix evaluation of the Lambda scheme.

The equations of motion are used with the probe terms kept exactly, so the numeric steady
state differs from the weak-probe closed forms only at second order in the Rabi frequency.
Levels |1>, |2>, |3> map to matrix indices 0, 1, 2.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from scipy.linalg import null_space

from lambda_disperse.exceptions import IntegrationError, NonUniqueSteadyStateError, SchemeError, StepSizeError, WeakProbeError
from lambda_disperse.model import effective_rates
from lambda_disperse.params import Populations, SusceptibilitySample, SystemParams
from lambda_disperse.types import Scheme

logger = logging.getLogger(__name__)

DIMENSION = 3
TRACE_TOLERANCE = 1e-10
HERMITICITY_TOLERANCE = 1e-12
DIAGONAL_TOLERANCE = 1e-10
DRIFT_LIMIT = 1e-8
STEP_FRACTION = 0.01
FINITE_DIFFERENCE_STEP = 1e-4
RESIDUAL_TOLERANCE = 1e-12


@dataclass(frozen=True)
class DensityMatrix:
    """3x3 complex density matrix."""

    rho: np.ndarray

    def __post_init__(self) -> None:
        matrix = np.asarray(self.rho, dtype=complex)
        if matrix.shape != (DIMENSION, DIMENSION):
            raise ValueError(f"density matrix must be {DIMENSION}x{DIMENSION}, got shape {matrix.shape}")
        object.__setattr__(self, "rho", matrix)

    @classmethod
    def from_populations(cls, rho11: float, rho22: float, rho33: float) -> DensityMatrix:
        return cls(np.diag([rho11, rho22, rho33]).astype(complex))

    @classmethod
    def ground(cls) -> DensityMatrix:
        return cls.from_populations(1.0, 0.0, 0.0)

    @classmethod
    def from_vec(cls, vec: np.ndarray) -> DensityMatrix:
        return cls(np.asarray(vec, dtype=complex).reshape(DIMENSION, DIMENSION))

    @property
    def vec(self) -> np.ndarray:
        return self.rho.reshape(-1).copy()

    @property
    def populations(self) -> Populations:
        diagonal = np.real(np.diag(self.rho))
        return Populations(rho11=float(diagonal[0]), rho22=float(diagonal[1]), rho33=float(diagonal[2]))

    def coherence(self, i: int, j: int) -> complex:
        """Element rho_ij with 1-based level labels."""
        return complex(self.rho[i - 1, j - 1])

    @property
    def trace_error(self) -> float:
        return abs(complex(np.trace(self.rho)) - 1.0)

    @property
    def hermiticity_error(self) -> float:
        return float(np.max(np.abs(self.rho - self.rho.conj().T)))

    def check(
        self,
        trace_tolerance: float = TRACE_TOLERANCE,
        hermiticity_tolerance: float = HERMITICITY_TOLERANCE,
        diagonal_tolerance: float = DIAGONAL_TOLERANCE,
    ) -> list[str]:
        """Describe every violated density-matrix invariant; empty when the state is valid."""
        problems = []
        if self.trace_error > trace_tolerance:
            problems.append(f"trace off by {self.trace_error:.3e}")
        if self.hermiticity_error > hermiticity_tolerance:
            problems.append(f"non-Hermitian by {self.hermiticity_error:.3e}")
        diagonal = np.diag(self.rho)
        if np.min(diagonal.real) < -diagonal_tolerance:
            problems.append(f"negative population {np.min(diagonal.real):.3e}")
        if np.max(np.abs(diagonal.imag)) > hermiticity_tolerance:
            problems.append("complex population")
        return problems


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    rhos: np.ndarray

    def __post_init__(self) -> None:
        if len(self.times) != len(self.rhos):
            raise ValueError("times and states differ in length")
        if np.any(np.diff(self.times) <= 0.0):
            raise ValueError("trajectory times must be strictly increasing")

    @property
    def states(self) -> list[DensityMatrix]:
        return [DensityMatrix(rho) for rho in self.rhos]

    @property
    def final(self) -> DensityMatrix:
        return DensityMatrix(self.rhos[-1])

    @property
    def max_trace_error(self) -> float:
        return float(np.max(np.abs(np.trace(self.rhos, axis1=1, axis2=2) - 1.0)))

    @property
    def max_hermiticity_error(self) -> float:
        return float(np.max(np.abs(self.rhos - np.conj(np.swapaxes(self.rhos, 1, 2)))))


def eom_rhs(params: SystemParams, rho: DensityMatrix, delta_p: float) -> np.ndarray:
    """Time derivative of the density matrix under the rotating-wave equations of motion.

    The upper-level population is evolved explicitly as minus the sum of the lower ones, so the
    derivative is traceless for any input. Conjugate elements follow the conjugated equations,
    which keeps the map complex-linear.
    """
    _require_lambda(params)
    rates = effective_rates(params)
    rabi = params.omega_p_rabi
    upper = delta_p + 0.5 * params.omega
    lower = delta_p - 0.5 * params.omega
    (p11, p12, p13), (p21, p22, p23), (p31, p32, p33) = rho.rho

    d11 = 1j * rabi * p31 - 1j * rabi * p13 + params.gamma1 * p33 - params.r1 * p11
    d22 = 1j * rabi * p32 - 1j * rabi * p23 + params.gamma2 * p33 - params.r2 * p22
    d33 = -(d11 + d22)
    d21 = (1j * params.omega - rates.gamma21) * p21 + 1j * rabi * p31 - 1j * rabi * p23
    d12 = (-1j * params.omega - rates.gamma21) * p12 - 1j * rabi * p13 + 1j * rabi * p32
    d31 = (1j * upper - rates.gamma31) * p31 + 1j * rabi * p21 - 1j * rabi * (p33 - p11)
    d13 = (-1j * upper - rates.gamma31) * p13 - 1j * rabi * p12 + 1j * rabi * (p33 - p11)
    d32 = (1j * lower - rates.gamma32) * p32 + 1j * rabi * p12 - 1j * rabi * (p33 - p22)
    d23 = (-1j * lower - rates.gamma32) * p23 - 1j * rabi * p21 + 1j * rabi * (p33 - p22)

    return np.array([[d11, d12, d13], [d21, d22, d23], [d31, d32, d33]], dtype=complex)


def liouvillian(params: SystemParams, delta_p: float) -> np.ndarray:
    """Generator matrix acting on the row-major vectorised density matrix."""
    size = DIMENSION * DIMENSION
    generator = np.empty((size, size), dtype=complex)
    for k in range(size):
        unit = np.zeros(size, dtype=complex)
        unit[k] = 1.0
        generator[:, k] = eom_rhs(params, DensityMatrix.from_vec(unit), delta_p).reshape(-1)
    return generator


def rk4_step(rhs: Callable[[np.ndarray], np.ndarray], y: np.ndarray, dt: float) -> np.ndarray:
    """Advance ``y`` by one classical fourth-order Runge-Kutta step of an autonomous system."""
    k1 = rhs(y)
    k2 = rhs(y + 0.5 * dt * k1)
    k3 = rhs(y + 0.5 * dt * k2)
    k4 = rhs(y + dt * k3)
    return y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def max_stable_step(params: SystemParams, delta_p: float) -> float:
    """Largest time step accepted by :func:`integrate`."""
    rates = effective_rates(params)
    fastest = max(
        params.gamma1,
        params.gamma2,
        params.r1,
        params.r2,
        params.omega_p_rabi,
        rates.gamma31,
        rates.gamma32,
        rates.gamma21,
        abs(params.omega),
        abs(delta_p),
    )
    return STEP_FRACTION / fastest


def integrate(
    params: SystemParams,
    rho0: DensityMatrix,
    delta_p: float,
    t_end: float,
    dt: float,
    record_every: int = 1,
) -> Trajectory:
    """Fixed-step RK4 integration of the equations of motion from ``rho0`` up to ``t_end``.

    The step is shrunk so that an integer number of steps ends exactly at ``t_end``. Every
    ``record_every``-th state is kept, plus the initial and final ones.

    Raises:
        StepSizeError: ``dt`` exceeds :func:`max_stable_step` or ``t_end`` is not positive.
        IntegrationError: trace or Hermiticity drifted by more than 1e-8.
    """
    limit = max_stable_step(params, delta_p)
    if t_end <= 0.0:
        raise StepSizeError(f"t_end must be positive (got {t_end})")
    if dt <= 0.0 or dt > limit * (1.0 + 1e-12):
        raise StepSizeError(f"dt={dt} outside (0, {limit:.6g}] for these rates")
    if record_every < 1:
        raise StepSizeError(f"record_every must be >= 1 (got {record_every})")

    n_steps = max(1, math.ceil(t_end / dt - 1e-9))
    step = t_end / n_steps
    generator = liouvillian(params, delta_p)
    logger.debug(f"Integrating {n_steps} RK4 steps of {step:.3e} (delta_p={delta_p})")

    def rhs(y: np.ndarray) -> np.ndarray:
        return generator @ y

    y = rho0.vec
    times = [0.0]
    rhos = [rho0.rho.copy()]
    for index in range(1, n_steps + 1):
        y = rk4_step(rhs, y, step)
        _check_drift(y, index * step)
        if index % record_every == 0 or index == n_steps:
            times.append(index * step)
            rhos.append(y.reshape(DIMENSION, DIMENSION).copy())

    return Trajectory(times=np.asarray(times), rhos=np.asarray(rhos))


def steady_state_numeric(params: SystemParams, delta_p: float) -> DensityMatrix:
    """Stationary state of the full equations of motion from the null space of the generator.

    Raises:
        NonUniqueSteadyStateError: the generator has a degenerate null space, e.g. both pumps
            and the probe are switched off.
    """
    _require_lambda(params)
    if params.r1 == 0.0 and params.r2 == 0.0 and params.omega_p_rabi == 0.0:
        raise NonUniqueSteadyStateError("both pump rates and the probe are zero; every lower-level mixture is stationary")

    generator = liouvillian(params, delta_p)
    kernel = null_space(generator)
    if kernel.shape[1] != 1:
        raise NonUniqueSteadyStateError(f"generator null space has dimension {kernel.shape[1]}")

    vec = kernel[:, 0]
    trace = vec[0] + vec[4] + vec[8]
    rho = (vec / trace).reshape(DIMENSION, DIMENSION)
    rho = 0.5 * (rho + rho.conj().T)

    stacked = np.vstack([generator, _trace_row()])
    target = np.zeros(stacked.shape[0], dtype=complex)
    target[-1] = 1.0
    residual = np.linalg.norm(stacked @ rho.reshape(-1) - target) / (np.linalg.norm(stacked) * np.linalg.norm(rho) + 1.0)
    if residual > RESIDUAL_TOLERANCE:
        logger.warning(f"Steady-state residual {residual:.3e} above {RESIDUAL_TOLERANCE:.0e} (delta_p={delta_p})")
    return DensityMatrix(rho)


def steady_populations_numeric(params: SystemParams, delta_p: float = 0.0) -> Populations:
    return steady_state_numeric(params, delta_p).populations


def susceptibility_numeric(params: SystemParams, delta_p: float, step: float = FINITE_DIFFERENCE_STEP) -> SusceptibilitySample:
    """chi/alpha = (rho31 + rho32) / Omega_p from the numeric steady state.

    The slope is a central finite difference of the real part with half-width ``step``.
    """
    if params.omega_p_rabi <= 0.0:
        raise SchemeError("numeric susceptibility needs a nonzero probe Rabi frequency")
    if not params.is_weak_probe:
        raise WeakProbeError(f"probe Rabi frequency {params.omega_p_rabi} exceeds the weak-probe limit {params.weak_probe_limit}")

    chi = _chi_numeric(params, delta_p)
    slope = (_chi_numeric(params, delta_p + step).real - _chi_numeric(params, delta_p - step).real) / (2.0 * step)
    return SusceptibilitySample(delta_p=delta_p, chi_re=chi.real, chi_im=chi.imag, slope=slope)


def _chi_numeric(params: SystemParams, delta_p: float) -> complex:
    state = steady_state_numeric(params, delta_p)
    return (state.coherence(3, 1) + state.coherence(3, 2)) / params.omega_p_rabi


def _check_drift(y: np.ndarray, time: float) -> None:
    trace_error = abs(y[0] + y[4] + y[8] - 1.0)
    matrix = y.reshape(DIMENSION, DIMENSION)
    hermiticity_error = float(np.max(np.abs(matrix - matrix.conj().T)))
    if trace_error > DRIFT_LIMIT or hermiticity_error > DRIFT_LIMIT:
        raise IntegrationError(f"invariant drift at t={time:.6g}: trace error {trace_error:.3e}, Hermiticity error {hermiticity_error:.3e}")


def _trace_row() -> np.ndarray:
    row = np.zeros((1, DIMENSION * DIMENSION), dtype=complex)
    row[0, [0, 4, 8]] = 1.0
    return row


def _require_lambda(params: SystemParams) -> None:
    if params.scheme != Scheme.LAMBDA:
        raise SchemeError(f"the density-matrix oracle covers the Lambda scheme only (got {params.scheme})")
