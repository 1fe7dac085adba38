"""Tests for parameter sweeps and the validation report."""
# ruff: noqa: S101  # asserts are intended in tests

import math

import numpy as np
import pytest

from lambda_disperse.exceptions import GridError
from lambda_disperse.params import SystemParams
from lambda_disperse.scan import (
    DEFAULT_VALIDATION_POINTS,
    FIGURE_OMEGAS,
    FIGURE_RATES,
    VALIDATION_RATES,
    SpectrumSeries,
    boundary_predicates,
    figure_cases,
    group_index_scan,
    parallel_map,
    predicted_sign_changes,
    regime_map,
    resolve_workers,
    spectrum_scan,
    uniform_grid,
    validate_run,
)
from lambda_disperse.types import RegimeClass, Scheme


class TestGrid:
    """Tests for grids and the worker pool."""

    @staticmethod
    def test_odd_grid_contains_zero() -> None:
        grid = uniform_grid(-10.0, 10.0, 1601)
        assert len(grid) == 1601
        assert grid[800] == 0.0
        assert grid[0] == -10.0
        assert grid[-1] == 10.0

    @staticmethod
    @pytest.mark.parametrize(("start", "stop", "points"), [(1.0, 1.0, 5), (2.0, 1.0, 5), (0.0, 1.0, 1), (0.0, math.inf, 5)])
    def test_invalid_grid(start: float, stop: float, points: int) -> None:
        with pytest.raises(GridError):
            uniform_grid(start, stop, points)

    @staticmethod
    def test_single_point_axis() -> None:
        assert uniform_grid(3.0, 3.0, 1, minimum_points=1) == (3.0,)

    @staticmethod
    def test_parallel_map_keeps_order() -> None:
        items = list(range(100))
        assert parallel_map(lambda value: value * value, items, workers=4) == [value * value for value in items]
        assert parallel_map(lambda value: value, [], workers=4) == []

    @staticmethod
    def test_resolve_workers() -> None:
        assert resolve_workers(3) == 3
        assert resolve_workers(0) >= 1
        assert resolve_workers(None) >= 1


class TestSpectrumScan:
    """Tests for detuning spectra."""

    @staticmethod
    def test_single_absorption_peak_with_anomalous_slope() -> None:
        series = spectrum_scan(SystemParams.symmetric(0.0, 1.0), -3.0, 3.0, 601)
        center = 300
        assert series.grid[center] == 0.0
        assert series.samples[center].slope < 0.0
        im_chi = [sample.chi_im for sample in series.samples]
        assert int(np.argmax(im_chi)) == center
        assert all(value > 0.0 for value in im_chi)

    @staticmethod
    def test_gain_doublet() -> None:
        series = spectrum_scan(SystemParams.symmetric(2.3, 8.0), -10.0, 10.0, 1601)
        im_chi = np.array([sample.chi_im for sample in series.samples])
        assert np.all(im_chi < 0.0)
        interior = np.arange(1, len(im_chi) - 1)
        minima = interior[(im_chi[interior] < im_chi[interior - 1]) & (im_chi[interior] < im_chi[interior + 1])]
        locations = sorted(series.grid[index] for index in minima)
        assert len(locations) == 2
        assert locations[0] == pytest.approx(-4.0, abs=0.1)
        assert locations[1] == pytest.approx(4.0, abs=0.1)

    @staticmethod
    def test_saturated_spectrum_is_zero() -> None:
        series = spectrum_scan(SystemParams.symmetric(1.0, 8.0), -10.0, 10.0, 101)
        assert all(sample.chi == 0 and sample.slope == 0 for sample in series.samples)

    @staticmethod
    def test_vee_and_asymmetric_spectra() -> None:
        vee = spectrum_scan(SystemParams.symmetric(2.0, 8.0, scheme=Scheme.VEE), -10.0, 10.0, 11)
        assert vee.samples[5].chi_im == pytest.approx(-0.6 / 18.25)
        asymmetric = spectrum_scan(SystemParams(r1=0.5, r2=2.0, omega=3.0), -5.0, 5.0, 11)
        assert len(asymmetric.samples) == 11

    @staticmethod
    def test_rejects_bad_grid() -> None:
        with pytest.raises(GridError):
            spectrum_scan(SystemParams(), 1.0, -1.0, 11)
        with pytest.raises(GridError):
            spectrum_scan(SystemParams(), -1.0, 1.0, 1)

    @staticmethod
    def test_series_invariants() -> None:
        series = spectrum_scan(SystemParams(), -1.0, 1.0, 3)
        with pytest.raises(GridError):
            SpectrumSeries(params=series.params, grid=series.grid, samples=series.samples[:2])
        with pytest.raises(GridError):
            SpectrumSeries(params=series.params, grid=(0.0, 0.0, 1.0), samples=series.samples)

    @staticmethod
    def test_worker_count_does_not_change_result() -> None:
        params = SystemParams.symmetric(1.3, 8.0)
        assert spectrum_scan(params, -10.0, 10.0, 401, workers=1) == spectrum_scan(params, -10.0, 10.0, 401, workers=4)


class TestRegimeMap:
    """Tests for the (R, omega) regime map."""

    @staticmethod
    def test_named_cells() -> None:
        grid = regime_map(0.0, 6.0, 13, 0.0, 10.0, 21)
        assert grid.r_axis[1] == 0.5
        assert grid.omega_axis[2] == 1.0
        assert grid.cell(1, 2) == RegimeClass.SUPERLUMINAL_ABSORPTION
        assert grid.cell(4, 16) == RegimeClass.SUPERLUMINAL_GAIN
        assert grid.cell(2, 0) == RegimeClass.SATURATED

    @staticmethod
    def test_row_major_layout() -> None:
        grid = regime_map(0.0, 6.0, 4, 0.0, 10.0, 3)
        rows = list(grid.rows())
        assert len(rows) == len(grid.cells) == 12
        assert [r for r, _, _ in rows[:4]] == list(grid.r_axis)
        assert all(omega == grid.omega_axis[0] for _, omega, _ in rows[:4])

    @staticmethod
    def test_matches_boundary_predicates() -> None:
        grid = regime_map(0.0, 6.0, 200, 0.0, 10.0, 200)
        r_step = grid.r_axis[1] - grid.r_axis[0]
        omega_step = grid.omega_axis[1] - grid.omega_axis[0]
        mismatches = 0
        for r, omega, cls in grid.rows():
            if cls == boundary_predicates(r, omega):
                continue
            touches_boundary = abs(r - 1.0) <= r_step or abs(omega - 2.0 - r) <= r_step + omega_step
            assert touches_boundary, f"class {cls} at r={r}, omega={omega}"
            mismatches += 1
        assert mismatches <= 2 * 200

    @staticmethod
    def test_flip_across_resolved_line() -> None:
        grid = regime_map(2.0, 2.0, 1, 3.9, 4.1, 2)
        assert grid.cell(0, 0) == RegimeClass.SUBLUMINAL_GAIN
        assert grid.cell(0, 1) == RegimeClass.SUPERLUMINAL_GAIN

    @staticmethod
    def test_refinement_keeps_far_cells() -> None:
        coarse = regime_map(0.0, 6.0, 31, 0.0, 10.0, 31)
        fine = regime_map(0.0, 6.0, 61, 0.0, 10.0, 61)
        diagonal = math.hypot(coarse.r_axis[1] - coarse.r_axis[0], coarse.omega_axis[1] - coarse.omega_axis[0])
        for i_omega, omega in enumerate(coarse.omega_axis):
            for i_r, r in enumerate(coarse.r_axis):
                if abs(r - 1.0) <= diagonal or abs(omega - 2.0 - r) / math.sqrt(2.0) <= diagonal:
                    continue
                assert fine.cell(2 * i_r, 2 * i_omega) == coarse.cell(i_r, i_omega)

    @staticmethod
    def test_vee_map_uses_vee_boundary() -> None:
        grid = regime_map(2.0, 2.0, 1, 2.9, 3.1, 2, base=SystemParams(scheme=Scheme.VEE))
        assert grid.params.scheme == Scheme.VEE
        assert grid.cell(0, 0) == boundary_predicates(2.0, 2.9, scheme=Scheme.VEE) == RegimeClass.SUBLUMINAL_GAIN
        assert grid.cell(0, 1) == boundary_predicates(2.0, 3.1, scheme=Scheme.VEE) == RegimeClass.SUPERLUMINAL_GAIN

    @staticmethod
    def test_worker_count_does_not_change_result() -> None:
        assert regime_map(0.0, 6.0, 30, 0.0, 10.0, 30, workers=1) == regime_map(0.0, 6.0, 30, 0.0, 10.0, 30, workers=4)


class TestGroupIndexScan:
    """Tests for group-index curves."""

    @staticmethod
    def test_figure_curves() -> None:
        curves = group_index_scan([1.0, 2.0, 8.0], 0.0, 8.0, 161, nu_p=1.0 / (2.0 * math.pi))
        assert [curve.omega for curve in curves] == [1.0, 2.0, 8.0]
        step = curves[0].r_axis[1] - curves[0].r_axis[0]

        narrow = curves[0]
        for r, value in zip(narrow.r_axis, narrow.values, strict=True):
            if r < 1.0 - step:
                assert value < 0.0
            elif r > 1.0 + step:
                assert value > 0.0

        wide = curves[2]
        for r, value in zip(wide.r_axis, wide.values, strict=True):
            if 1.0 + step <= r <= 6.0 - step:
                assert value < 0.0
            elif r < 1.0 - step or r > 6.0 + step:
                assert value > 0.0
        assert wide.values[10] > 0.0  # R = 0.5

    @staticmethod
    def test_predicted_sign_changes() -> None:
        assert predicted_sign_changes(8.0) == (1.0, 6.0)
        assert predicted_sign_changes(1.0) == (1.0,)
        assert predicted_sign_changes(2.0) == (1.0,)
        assert predicted_sign_changes(8.0, scheme=Scheme.VEE) == (1.0, 7.0)
        curves = group_index_scan([8.0], 0.0, 8.0, 11, nu_p=1.0)
        assert curves[0].predicted_sign_changes == (1.0, 6.0)

    @staticmethod
    def test_worker_count_does_not_change_result() -> None:
        args = ([1.0, 8.0], 0.0, 8.0, 81, 1.0 / (2.0 * math.pi))
        assert group_index_scan(*args, workers=1) == group_index_scan(*args, workers=4)


class TestValidateRun:
    """Tests for closed form versus oracle validation."""

    @staticmethod
    def test_figure_sets_pass() -> None:
        cases = figure_cases(rates=VALIDATION_RATES)
        report = validate_run(cases, uniform_grid(-10.0, 10.0, DEFAULT_VALIDATION_POINTS), tolerance=1e-3)
        assert report.passed
        assert 0.0 < report.max_error <= 1e-3
        assert len(report.cases) == len(cases) * DEFAULT_VALIDATION_POINTS
        assert report.failures == ()

    @staticmethod
    def test_strong_probe_fails() -> None:
        cases = figure_cases(SystemParams(omega_p_rabi=0.1), rates=VALIDATION_RATES)
        report = validate_run(cases, uniform_grid(-10.0, 10.0, 21), tolerance=1e-3)
        assert not report.passed
        assert report.max_error > 1e-3

    @staticmethod
    def test_empty_case_list_passes() -> None:
        report = validate_run([], uniform_grid(-1.0, 1.0, 5))
        assert report.passed
        assert report.max_error == 0.0

    @staticmethod
    def test_failures_are_recorded() -> None:
        report = validate_run([SystemParams(r1=1.0, r2=2.0), SystemParams.symmetric(1.3, 1.0)], [0.0, 1.0])
        assert not report.passed
        assert math.isinf(report.max_error)
        assert [case.case_id for case in report.failures] == [0, 0]
        assert all(case.abs_error is not None for case in report.cases if case.case_id == 1)

    @staticmethod
    def test_rejects_non_positive_tolerance() -> None:
        with pytest.raises(ValueError, match="tolerance"):
            validate_run([], [0.0], tolerance=0.0)

    @staticmethod
    def test_figure_cases() -> None:
        cases = figure_cases()
        assert len(cases) == len(FIGURE_RATES) * len(FIGURE_OMEGAS)
        assert (cases[0].rate, cases[0].omega) == (0.0, 1.0)
        assert (cases[-1].rate, cases[-1].omega) == (2.3, 8.0)

    @staticmethod
    def test_worker_count_does_not_change_result() -> None:
        cases = figure_cases(rates=(1.3,), omegas=(1.0,))
        assert validate_run(cases, [-1.0, 0.0, 1.0], workers=1) == validate_run(cases, [-1.0, 0.0, 1.0], workers=3)
