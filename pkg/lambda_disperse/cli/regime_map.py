from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer

from lambda_disperse.cli import app, arguments, console
from lambda_disperse.cli.config import RunConfig, build_run_config
from lambda_disperse.cli.utils import configure_logging, dispatch
from lambda_disperse.scan import regime_map as classify_grid
from lambda_disperse.types import Command, OutputFormat, RegimeClass, Scheme
from lambda_disperse.utils import emit


def run_regime_map(config: RunConfig) -> int:
    grid = config.grid
    result = classify_grid(
        grid.r_min,
        grid.r_max,
        grid.r_points,
        grid.omega_min,
        grid.omega_max,
        grid.omega_points,
        gamma=config.params.gamma1,
        base=config.params,
        workers=config.threads,
    )
    counts = {regime: result.cells.count(regime) for regime in RegimeClass}
    console.print(
        "[dim]" + ", ".join(f"{regime}: {count}" for regime, count in counts.items() if count) + "[/dim]",
        highlight=False,
    )
    emit(result, config.output_format, config.output, params=result.params)
    return 0


@app.command(name="regime-map")
def regime_map(
    ctx: typer.Context,
    config_file: Path | None = arguments.ConfigOpt,
    scheme: Scheme | None = arguments.SchemeOpt,
    gamma: float | None = arguments.GammaOpt,
    omega_p: float | None = arguments.RabiOpt,
    r_min: float = arguments.RMinOpt,
    r_max: float = arguments.RMaxOpt,
    r_points: int = arguments.RPointsOpt,
    omega_min: float = arguments.OmegaMinOpt,
    omega_max: float = arguments.OmegaMaxOpt,
    omega_points: int = arguments.OmegaPointsOpt,
    output: Path | None = arguments.OutputOpt,
    output_format: OutputFormat = arguments.FormatOpt,
    threads: int = arguments.ThreadsOpt,
    verbose: bool = arguments.VerboseOpt,
    version: Annotated[bool | None, arguments.VersionOpt] = None,
) -> RunConfig | None:
    """Classify every (pump rate, splitting) cell of a symmetric system into a dispersion regime.

    Columns: r, omega, class; rows run over the pump rate fastest.
    """
    configure_logging(verbose)
    config = build_run_config(
        Command.REGIME_MAP,
        model_options={"scheme": scheme, "gamma": gamma, "omega_p_rabi": omega_p},
        grid={
            "r_min": r_min,
            "r_max": r_max,
            "r_points": r_points,
            "omega_min": omega_min,
            "omega_max": omega_max,
            "omega_points": omega_points,
        },
        config_file=config_file,
        output=output,
        output_format=output_format,
        threads=threads,
    )
    return dispatch(ctx, config, run_regime_map)
