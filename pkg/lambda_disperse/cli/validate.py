from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer
from rich.progress import Progress, SpinnerColumn, TextColumn

from lambda_disperse.cli import app, arguments, console
from lambda_disperse.cli.config import RunConfig, build_run_config
from lambda_disperse.cli.utils import configure_logging, dispatch, parse_float_list
from lambda_disperse.scan import figure_cases, uniform_grid, validate_run
from lambda_disperse.types import Command, OutputFormat
from lambda_disperse.utils import emit


def run_validate(config: RunConfig) -> int:
    """Exit status 0 when every case agrees within the tolerance, 1 otherwise."""
    grid = config.grid
    cases = figure_cases(config.params, rates=grid.rates, omegas=grid.omegas)
    deltas = uniform_grid(grid.delta_min, grid.delta_max, grid.points, minimum_points=1)

    with Progress(SpinnerColumn(), TextColumn("[progress.description]{task.description}"), console=console, transient=True) as progress:
        task = progress.add_task(f"Integrating {len(cases)} parameter sets x {len(deltas)} detunings...", total=None)
        report = validate_run(cases, deltas, tolerance=grid.tolerance, workers=config.threads)
        progress.update(task, completed=True)

    emit(report, config.output_format, config.output, params=config.params)

    if report.passed:
        console.print(f"[green]PASS[/green] max |chi_a - chi_n| = {report.max_error:.3e} <= {report.tolerance:.1e}", highlight=False)
        return 0
    console.print(f"[red]FAIL[/red] max |chi_a - chi_n| = {report.max_error:.3e} > {report.tolerance:.1e}", highlight=False)
    for case in report.failures[:5]:
        console.print(f"  case {case.case_id} at delta_p={case.delta_p:g}: {case.failure or f'{case.abs_error:.3e}'}", highlight=False)
    return 1


@app.command(name="validate")
def validate(
    ctx: typer.Context,
    config_file: Path | None = arguments.ConfigOpt,
    gamma: float | None = arguments.GammaOpt,
    omega_p: float | None = arguments.RabiOpt,
    rates: str = arguments.ValidateRatesOpt,
    omegas: str = arguments.ValidateOmegasOpt,
    delta_min: float = arguments.DeltaMinOpt,
    delta_max: float = arguments.DeltaMaxOpt,
    points: int = arguments.ValidatePointsOpt,
    tolerance: float = arguments.ToleranceOpt,
    output: Path | None = arguments.OutputOpt,
    output_format: OutputFormat = arguments.FormatOpt,
    threads: int = arguments.ThreadsOpt,
    verbose: bool = arguments.VerboseOpt,
    version: Annotated[bool | None, arguments.VersionOpt] = None,
) -> RunConfig | None:
    """Compare the symmetric closed form against the density-matrix steady state.

    Every combination of --rates and --omegas is checked over the detuning grid.
    Exits with 0 when all cases agree within --tolerance and 1 otherwise.
    """
    configure_logging(verbose)
    config = build_run_config(
        Command.VALIDATE,
        model_options={"scheme": "lambda", "gamma": gamma, "omega_p_rabi": omega_p},
        grid={
            "rates": parse_float_list(rates, "--rates"),
            "omegas": parse_float_list(omegas, "--omegas"),
            "delta_min": delta_min,
            "delta_max": delta_max,
            "points": points,
            "tolerance": tolerance,
        },
        config_file=config_file,
        output=output,
        output_format=output_format,
        threads=threads,
    )
    return dispatch(ctx, config, run_validate)
