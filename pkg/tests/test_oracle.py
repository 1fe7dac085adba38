"""Tests for the density-matrix equations of motion and the numeric steady state."""
# ruff: noqa: S101  # asserts are intended in tests

import math

import numpy as np
import pytest

from lambda_disperse.exceptions import NonUniqueSteadyStateError, SchemeError, StepSizeError, WeakProbeError
from lambda_disperse.model import steady_populations, susceptibility_symmetric
from lambda_disperse.oracle import (
    DensityMatrix,
    Trajectory,
    eom_rhs,
    integrate,
    liouvillian,
    max_stable_step,
    rk4_step,
    steady_populations_numeric,
    steady_state_numeric,
    susceptibility_numeric,
)
from lambda_disperse.params import SystemParams
from lambda_disperse.types import Scheme


def _random_state(rng: np.random.Generator) -> DensityMatrix:
    matrix = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    rho = matrix @ matrix.conj().T
    return DensityMatrix(rho / np.trace(rho).real)


class TestDensityMatrix:
    """Tests for the density matrix record."""

    @staticmethod
    def test_ground_state_is_valid() -> None:
        state = DensityMatrix.ground()
        assert state.check() == []
        assert state.populations.rho11 == 1.0
        assert state.coherence(3, 1) == 0

    @staticmethod
    def test_vec_round_trip() -> None:
        state = _random_state(np.random.default_rng(1))
        assert np.array_equal(DensityMatrix.from_vec(state.vec).rho, state.rho)

    @staticmethod
    def test_check_reports_violations() -> None:
        rho = np.diag([0.7, 0.5, -0.1]).astype(complex)
        rho[0, 1] = 0.2
        problems = DensityMatrix(rho).check()
        assert any("trace" in problem for problem in problems)
        assert any("non-Hermitian" in problem for problem in problems)
        assert any("negative population" in problem for problem in problems)

    @staticmethod
    def test_rejects_wrong_shape() -> None:
        with pytest.raises(ValueError, match="3x3"):
            DensityMatrix(np.eye(2))

    @staticmethod
    def test_trajectory_requires_increasing_times() -> None:
        rhos = np.array([np.eye(3), np.eye(3)], dtype=complex)
        with pytest.raises(ValueError, match="increasing"):
            Trajectory(times=np.array([1.0, 1.0]), rhos=rhos)


class TestEquationsOfMotion:
    """Tests for the right-hand side and the generator matrix."""

    @staticmethod
    def test_saturated_mixture_is_stationary() -> None:
        params = SystemParams.symmetric(1.0, 1.0, omega_p_rabi=0.0)
        derivative = eom_rhs(params, DensityMatrix.from_populations(1 / 3, 1 / 3, 1 / 3), 0.0)
        assert np.allclose(np.diag(derivative), 0.0, atol=1e-15)

    @staticmethod
    def test_pure_decay_from_upper_level() -> None:
        params = SystemParams(gamma1=0.7, gamma2=1.3, omega_p_rabi=0.0)
        derivative = eom_rhs(params, DensityMatrix.from_populations(0.0, 0.0, 1.0), 0.0)
        assert derivative[0, 0] == pytest.approx(0.7)
        assert derivative[1, 1] == pytest.approx(1.3)
        assert derivative[2, 2] == pytest.approx(-2.0)

    @staticmethod
    def test_derivative_is_traceless_and_hermitian() -> None:
        rng = np.random.default_rng(42)
        params = SystemParams(gamma1=1.0, gamma2=0.6, r1=0.4, r2=1.9, omega=3.0, omega_p_rabi=0.05)
        for _ in range(1000):
            derivative = eom_rhs(params, _random_state(rng), rng.uniform(-5.0, 5.0))
            assert abs(np.trace(derivative)) <= 1e-13
            assert np.max(np.abs(derivative - derivative.conj().T)) <= 1e-13

    @staticmethod
    def test_liouvillian_reproduces_rhs() -> None:
        params = SystemParams.symmetric(2.3, 8.0)
        state = _random_state(np.random.default_rng(3))
        generator = liouvillian(params, 0.7)
        assert generator.shape == (9, 9)
        assert np.allclose(generator @ state.vec, eom_rhs(params, state, 0.7).reshape(-1), atol=1e-14)

    @staticmethod
    def test_rejects_vee() -> None:
        with pytest.raises(SchemeError):
            eom_rhs(SystemParams.symmetric(1.0, 1.0, scheme=Scheme.VEE), DensityMatrix.ground(), 0.0)

    @staticmethod
    def test_rk4_step_order() -> None:
        y = rk4_step(lambda value: -value, np.array([1.0]), 0.1)
        assert y[0] == pytest.approx(math.exp(-0.1), abs=1e-7)


class TestIntegrate:
    """Tests for fixed-step time integration."""

    @staticmethod
    def test_step_size_limit() -> None:
        params = SystemParams.symmetric(2.0, 8.0)
        assert max_stable_step(params, 0.0) == pytest.approx(0.01 / 8.0)
        with pytest.raises(StepSizeError):
            integrate(params, DensityMatrix.ground(), 0.0, t_end=1.0, dt=0.01)
        with pytest.raises(StepSizeError):
            integrate(params, DensityMatrix.ground(), 0.0, t_end=0.0, dt=0.001)

    @staticmethod
    def test_steady_state_persists() -> None:
        params = SystemParams.symmetric(2.0, 1.0)
        steady = steady_state_numeric(params, 0.3)
        trajectory = integrate(params, steady, 0.3, t_end=5.0, dt=max_stable_step(params, 0.3), record_every=100)
        assert np.max(np.abs(trajectory.final.rho - steady.rho)) <= 1e-8

    @staticmethod
    def test_pumped_relaxation_without_probe() -> None:
        params = SystemParams.symmetric(2.0, 1.0, omega_p_rabi=0.0)
        trajectory = integrate(params, DensityMatrix.ground(), 0.0, t_end=20.0, dt=max_stable_step(params, 0.0), record_every=100)
        assert trajectory.times[-1] == pytest.approx(20.0)
        assert trajectory.final.populations.rho33 == pytest.approx(4.0 / (4.0 + 4.0), abs=1e-10)
        assert trajectory.max_trace_error <= 1e-10

    @staticmethod
    def test_long_run_conserves_invariants_and_reaches_steady_state() -> None:
        params = SystemParams.symmetric(2.3, 1.0)
        trajectory = integrate(params, DensityMatrix.ground(), 0.0, t_end=100.0, dt=max_stable_step(params, 0.0))
        assert trajectory.max_trace_error <= 1e-10
        assert trajectory.max_hermiticity_error <= 1e-12
        assert all(state.check() == [] for state in trajectory.states[::1000])
        steady = steady_state_numeric(params, 0.0)
        assert np.max(np.abs(trajectory.final.rho - steady.rho)) <= 1e-8

    @staticmethod
    def test_linear_solve_matches_long_time_limit() -> None:
        rng = np.random.default_rng(11)
        for _ in range(5):
            params = SystemParams(
                gamma1=rng.uniform(0.8, 1.2),
                gamma2=rng.uniform(0.8, 1.2),
                r1=rng.uniform(1.0, 3.0),
                r2=rng.uniform(1.0, 3.0),
                omega=rng.uniform(0.0, 2.0),
            )
            delta_p = rng.uniform(-1.0, 1.0)
            trajectory = integrate(params, DensityMatrix.ground(), delta_p, t_end=80.0, dt=max_stable_step(params, delta_p), record_every=1000)
            steady = steady_state_numeric(params, delta_p)
            assert np.max(np.abs(trajectory.final.rho - steady.rho)) <= 1e-8


class TestSteadyState:
    """Tests for the null-space steady state and the numeric susceptibility."""

    @staticmethod
    def test_pumped_populations_without_probe() -> None:
        populations = steady_populations_numeric(SystemParams.symmetric(2.0, 1.0, omega_p_rabi=0.0))
        assert populations.rho11 == pytest.approx(0.25, abs=1e-12)
        assert populations.rho22 == pytest.approx(0.25, abs=1e-12)
        assert populations.rho33 == pytest.approx(0.5, abs=1e-12)

    @staticmethod
    def test_state_is_valid_density_matrix() -> None:
        state = steady_state_numeric(SystemParams(r1=0.3, r2=2.0, gamma2=0.5, omega=4.0), 1.5)
        assert state.check() == []

    @staticmethod
    def test_probe_shifts_populations_at_second_order() -> None:
        params = SystemParams.symmetric(1.3, 1.0)
        state = steady_state_numeric(params, 0.0)
        closed = steady_populations(params)
        assert abs(state.coherence(3, 1)) > 0.0
        assert abs(state.populations.rho11 - closed.rho11) <= 10 * params.omega_p_rabi**2

    @staticmethod
    def test_undriven_unpumped_system_is_not_unique() -> None:
        with pytest.raises(NonUniqueSteadyStateError):
            steady_state_numeric(SystemParams(omega_p_rabi=0.0), 0.0)

    @staticmethod
    def test_saturation_has_no_response() -> None:
        sample = susceptibility_numeric(SystemParams.symmetric(1.0, 8.0), 0.4)
        assert abs(sample.chi) <= 1e-3 * 0.01

    @staticmethod
    @pytest.mark.parametrize("rate", [0.8, 1.3, 2.3])
    @pytest.mark.parametrize("omega", [1.0, 8.0])
    def test_matches_closed_form(rate: float, omega: float) -> None:
        params = SystemParams.symmetric(rate, omega)
        for delta_p in (-6.0, -4.0, -0.5, 0.0, 0.5, 4.0, 9.0):
            numeric = susceptibility_numeric(params, delta_p)
            closed = susceptibility_symmetric(params, delta_p)
            assert abs(numeric.chi - closed.chi) <= 1e-3
            assert numeric.slope == pytest.approx(closed.slope, abs=1e-2)

    @staticmethod
    def test_deviation_scales_with_probe_squared() -> None:
        detunings = (-2.0, -1.0, 0.0, 0.5, 1.0, 3.0)

        def max_error(rabi: float) -> float:
            params = SystemParams.symmetric(0.8, 1.0, omega_p_rabi=rabi)
            return max(abs(susceptibility_numeric(params, d).chi - susceptibility_symmetric(params, d).chi) for d in detunings)

        assert max_error(0.01) >= 3.0 * max_error(0.005)

    @staticmethod
    def test_zero_pump_is_optically_pumped() -> None:
        # without pumps the lower levels relax only through the probe
        params = SystemParams.symmetric(0.0, 1.0)
        at_center = susceptibility_numeric(params, 0.0).chi - susceptibility_symmetric(params, 0.0).chi
        off_center = susceptibility_numeric(params, 0.5).chi - susceptibility_symmetric(params, 0.5).chi
        assert abs(at_center) <= 1e-3
        assert abs(off_center) > 1e-2

    @staticmethod
    def test_requires_probe() -> None:
        with pytest.raises(SchemeError):
            susceptibility_numeric(SystemParams.symmetric(1.3, 1.0, omega_p_rabi=0.0), 0.0)
        with pytest.raises(WeakProbeError):
            susceptibility_numeric(SystemParams.symmetric(1.3, 1.0, omega_p_rabi=0.5), 0.0)
