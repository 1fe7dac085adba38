from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer

from lambda_disperse.cli import app, arguments, console
from lambda_disperse.cli.config import RunConfig, build_run_config
from lambda_disperse.cli.utils import configure_logging, dispatch, parse_float_list
from lambda_disperse.scan import group_index_scan
from lambda_disperse.types import Command, OutputFormat, Scheme
from lambda_disperse.utils import emit


def run_group_index(config: RunConfig) -> int:
    grid = config.grid
    curves = group_index_scan(
        grid.omegas,
        grid.r_min,
        grid.r_max,
        grid.r_points,
        nu_p=config.params.nu_p,
        gamma=config.params.gamma1,
        base=config.params,
        workers=config.threads,
    )
    for curve in curves:
        changes = ", ".join(f"{rate:g}" for rate in curve.predicted_sign_changes)
        console.print(f"[dim]omega={curve.omega:g}: sign changes expected at R = {changes}[/dim]", highlight=False)
    emit(curves, config.output_format, config.output, params=config.params)
    return 0


@app.command(name="group-index")
def group_index(
    ctx: typer.Context,
    config_file: Path | None = arguments.ConfigOpt,
    scheme: Scheme | None = arguments.SchemeOpt,
    gamma: float | None = arguments.GammaOpt,
    omega_p: float | None = arguments.RabiOpt,
    alpha: float | None = arguments.AlphaOpt,
    nu_p: float | None = arguments.NuPOpt,
    omegas: str = arguments.OmegasOpt,
    r_min: float = arguments.RMinOpt,
    r_max: float = arguments.GroupIndexRMaxOpt,
    r_points: int = arguments.GroupIndexRPointsOpt,
    output: Path | None = arguments.OutputOpt,
    output_format: OutputFormat = arguments.FormatOpt,
    threads: int = arguments.ThreadsOpt,
    verbose: bool = arguments.VerboseOpt,
    version: Annotated[bool | None, arguments.VersionOpt] = None,
) -> RunConfig | None:
    """Group index minus one versus pump rate for each splitting in --omegas.

    Columns: omega, r, ng_minus_1.
    """
    configure_logging(verbose)
    config = build_run_config(
        Command.GROUP_INDEX,
        model_options={"scheme": scheme, "gamma": gamma, "omega_p_rabi": omega_p, "alpha": alpha, "nu_p": nu_p},
        grid={"omegas": parse_float_list(omegas, "--omegas"), "r_min": r_min, "r_max": r_max, "r_points": r_points},
        config_file=config_file,
        output=output,
        output_format=output_format,
        threads=threads,
    )
    return dispatch(ctx, config, run_group_index)
