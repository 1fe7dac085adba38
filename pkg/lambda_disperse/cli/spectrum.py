from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer

from lambda_disperse.cli import app, arguments
from lambda_disperse.cli.config import RunConfig, build_run_config
from lambda_disperse.cli.utils import configure_logging, dispatch
from lambda_disperse.scan import spectrum_scan
from lambda_disperse.types import Command, OutputFormat, Scheme
from lambda_disperse.utils import emit


def run_spectrum(config: RunConfig) -> int:
    grid = config.grid
    series = spectrum_scan(config.params, grid.delta_min, grid.delta_max, grid.points, workers=config.threads)
    emit(series, config.output_format, config.output, params=config.params)
    return 0


@app.command(name="spectrum")
def spectrum(
    ctx: typer.Context,
    config_file: Path | None = arguments.ConfigOpt,
    scheme: Scheme | None = arguments.SchemeOpt,
    gamma: float | None = arguments.GammaOpt,
    gamma1: float | None = arguments.Gamma1Opt,
    gamma2: float | None = arguments.Gamma2Opt,
    rate: float | None = arguments.RateOpt,
    r1: float | None = arguments.R1Opt,
    r2: float | None = arguments.R2Opt,
    omega: float | None = arguments.OmegaOpt,
    omega_p: float | None = arguments.RabiOpt,
    alpha: float | None = arguments.AlphaOpt,
    delta_min: float = arguments.DeltaMinOpt,
    delta_max: float = arguments.DeltaMaxOpt,
    points: int = arguments.PointsOpt,
    output: Path | None = arguments.OutputOpt,
    output_format: OutputFormat = arguments.FormatOpt,
    threads: int = arguments.ThreadsOpt,
    verbose: bool = arguments.VerboseOpt,
    version: Annotated[bool | None, arguments.VersionOpt] = None,
) -> RunConfig | None:
    """Closed-form probe susceptibility and dispersion slope over a detuning grid.

    Columns: delta_p, re_chi, im_chi, slope. The Lambda scheme accepts unequal pump and decay
    rates; the vee scheme needs R1 = R2. The probe must be weak.
    """
    configure_logging(verbose)
    config = build_run_config(
        Command.SPECTRUM,
        model_options={
            "scheme": scheme,
            "gamma": gamma,
            "gamma1": gamma1,
            "gamma2": gamma2,
            "rate": rate,
            "r1": r1,
            "r2": r2,
            "omega": omega,
            "omega_p_rabi": omega_p,
            "alpha": alpha,
        },
        grid={"delta_min": delta_min, "delta_max": delta_max, "points": points},
        config_file=config_file,
        output=output,
        output_format=output_format,
        threads=threads,
    )
    return dispatch(ctx, config, run_spectrum)
