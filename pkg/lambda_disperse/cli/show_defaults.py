"""Show documented defaults of model parameters, grids and environment variables."""

from __future__ import annotations

import os

from rich.table import Table

from lambda_disperse.cli import app, console
from lambda_disperse.cli.constants import DEFAULT_FORMAT, GRID_DEFAULTS, MODEL_DEFAULTS, EnvVarName


def _format(value: object) -> str:
    return f"{value:g}" if isinstance(value, float) else str(value)


@app.command(name="show-defaults")
def show_defaults() -> None:
    """Display default model parameters, grid settings and environment overrides."""
    model_table = Table(title="Model Parameters", show_header=True, header_style="bold magenta")
    model_table.add_column("Parameter", style="cyan", no_wrap=True)
    model_table.add_column("Default", style="green")
    for name, value in MODEL_DEFAULTS.items():
        model_table.add_row(name, _format(value))

    grid_table = Table(title="Grid Defaults", show_header=True, header_style="bold magenta")
    grid_table.add_column("Setting", style="cyan", no_wrap=True)
    grid_table.add_column("Default", style="green")
    for name, value in GRID_DEFAULTS.items():
        grid_table.add_row(name, _format(value))

    env_table = Table(title="Environment Variables", show_header=True, header_style="bold magenta")
    env_table.add_column("Variable", style="blue", no_wrap=True)
    env_table.add_column("Default", style="green")
    env_table.add_column("Override Value", style="yellow")
    fallbacks = {EnvVarName.THREADS: "0 (all cores)", EnvVarName.OUTPUT_FORMAT: DEFAULT_FORMAT.value, EnvVarName.LOG_LEVEL: "WARNING"}
    for name in EnvVarName:
        env_table.add_row(name.value, fallbacks[name], os.getenv(name) or "-")

    console.print(model_table)
    console.print(grid_table)
    console.print(env_table)
