"""Validated run configuration built from command-line flags and parameter files."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from pathlib import Path
from typing import Any, Self

import click
import typer
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from lambda_disperse.cli.constants import APP_NAME, MODEL_DEFAULTS
from lambda_disperse.params import SystemParams
from lambda_disperse.types import Command, OutputFormat
from lambda_disperse.utils import load_params_file

logger = logging.getLogger(__name__)

PARSE_ONLY_KEY = "parse_only"


class _Grid(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class SpectrumGrid(_Grid):
    delta_min: float
    delta_max: float
    points: int = Field(ge=2)

    @model_validator(mode="after")
    def _ordered(self) -> Self:
        if not self.delta_min < self.delta_max:
            raise ValueError(f"--delta-min ({self.delta_min}) must be below --delta-max ({self.delta_max})")
        return self


class RegimeGridSpec(_Grid):
    r_min: float = Field(ge=0.0)
    r_max: float = Field(ge=0.0)
    r_points: int = Field(ge=1)
    omega_min: float = Field(ge=0.0)
    omega_max: float = Field(ge=0.0)
    omega_points: int = Field(ge=1)

    @model_validator(mode="after")
    def _ordered(self) -> Self:
        for name, low, high, count in (("r", self.r_min, self.r_max, self.r_points), ("omega", self.omega_min, self.omega_max, self.omega_points)):
            if (count > 1 and not low < high) or (count == 1 and low != high):
                raise ValueError(f"invalid {name} range [{low}, {high}] for {count} points")
        return self


class GroupIndexGrid(_Grid):
    omegas: tuple[float, ...] = Field(min_length=1)
    r_min: float = Field(ge=0.0)
    r_max: float = Field(ge=0.0)
    r_points: int = Field(ge=2)

    @model_validator(mode="after")
    def _ordered(self) -> Self:
        if not self.r_min < self.r_max:
            raise ValueError(f"--r-min ({self.r_min}) must be below --r-max ({self.r_max})")
        if any(omega < 0.0 for omega in self.omegas):
            raise ValueError("splittings must be non-negative")
        return self


class ValidationGrid(_Grid):
    rates: tuple[float, ...]
    omegas: tuple[float, ...]
    delta_min: float
    delta_max: float
    points: int = Field(ge=1)
    tolerance: float = Field(gt=0.0)

    @model_validator(mode="after")
    def _ordered(self) -> Self:
        if (self.points > 1 and not self.delta_min < self.delta_max) or (self.points == 1 and self.delta_min != self.delta_max):
            raise ValueError(f"invalid detuning range [{self.delta_min}, {self.delta_max}] for {self.points} points")
        if any(value < 0.0 for value in (*self.rates, *self.omegas)):
            raise ValueError("rates and splittings must be non-negative")
        return self


GRID_TYPES: dict[Command, type[_Grid]] = {
    Command.SPECTRUM: SpectrumGrid,
    Command.REGIME_MAP: RegimeGridSpec,
    Command.GROUP_INDEX: GroupIndexGrid,
    Command.VALIDATE: ValidationGrid,
}


class RunConfig(BaseModel):
    """Everything one CLI invocation needs: command, model parameters, grid and output."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    params: SystemParams
    grid: SpectrumGrid | RegimeGridSpec | GroupIndexGrid | ValidationGrid
    output: Path | None = None
    output_format: OutputFormat = OutputFormat.CSV
    threads: int = Field(0, ge=0)

    @model_validator(mode="after")
    def _grid_matches_command(self) -> Self:
        expected = GRID_TYPES[self.command]
        if not isinstance(self.grid, expected):
            raise ValueError(f"{self.command} needs a {expected.__name__}, got {type(self.grid).__name__}")
        return self


def merge_model_options(config_file: Path | None, overrides: dict[str, Any]) -> dict[str, Any]:
    """Documented defaults, then the parameter file, then explicit flags.

    ``gamma`` and ``rate`` set both decay rates and both pump rates unless the per-channel
    value is given at the same level.
    """
    merged: dict[str, Any] = dict(MODEL_DEFAULTS)
    layers = [load_params_file(config_file)] if config_file is not None else []
    layers.append({key: value for key, value in overrides.items() if value is not None})
    for layer in layers:
        layer = dict(layer)
        if (gamma := layer.pop("gamma", None)) is not None:
            layer.setdefault("gamma1", gamma)
            layer.setdefault("gamma2", gamma)
        if (rate := layer.pop("rate", None)) is not None:
            layer.setdefault("r1", rate)
            layer.setdefault("r2", rate)
        merged.update(layer)
    return merged


def build_run_config(
    command: Command,
    model_options: dict[str, Any],
    grid: dict[str, Any],
    config_file: Path | None = None,
    output: Path | None = None,
    output_format: OutputFormat = OutputFormat.CSV,
    threads: int = 0,
) -> RunConfig:
    """Assemble and validate a RunConfig.

    Raises:
        typer.BadParameter: the combination of flags or the parameter file is invalid.
    """
    try:
        params = SystemParams.model_validate(merge_model_options(config_file, model_options))
        return RunConfig(
            command=command,
            params=params,
            grid=GRID_TYPES[command].model_validate(grid),
            output=output,
            output_format=output_format,
            threads=threads,
        )
    except ValidationError as exc:
        problems = "; ".join(f"{'.'.join(str(part) for part in error['loc']) or 'params'}: {error['msg']}" for error in exc.errors())
        raise typer.BadParameter(problems) from exc
    except (OSError, ValueError) as exc:
        raise typer.BadParameter(str(exc)) from exc


def is_parse_only(ctx: typer.Context | None) -> bool:
    return ctx is not None and isinstance(ctx.obj, dict) and bool(ctx.obj.get(PARSE_ONLY_KEY))


def parse_args(argv: Sequence[str]) -> RunConfig:
    """Parse a command line into a RunConfig without running anything.

    Raises:
        SystemExit: code 2 with a usage message on standard error for invalid arguments; the
            code of ``--help``/``--version`` otherwise.
    """
    from lambda_disperse.cli import app  # noqa: PLC0415

    command = typer.main.get_command(app)
    try:
        result = command.main(args=list(argv), prog_name=APP_NAME, standalone_mode=False, obj={PARSE_ONLY_KEY: True})
    except click.UsageError as exc:
        exc.show()
        raise SystemExit(exc.exit_code) from exc

    if isinstance(result, RunConfig):
        return result
    raise SystemExit(result if isinstance(result, int) else 0)
