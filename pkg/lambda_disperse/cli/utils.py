from __future__ import annotations

import logging
import os
from collections.abc import Callable

import typer
from rich.logging import RichHandler

from lambda_disperse.cli import console
from lambda_disperse.cli.config import RunConfig, is_parse_only
from lambda_disperse.cli.constants import EnvVarName
from lambda_disperse.exceptions import LambdaDisperseError

logger = logging.getLogger(__name__)

_LOG_FORMAT = "%(message)s"


def configure_logging(verbose: bool = False) -> None:
    """Route package logs to a RichHandler on standard error.

    ``--verbose`` selects DEBUG; otherwise ``LAMBDA_DISPERSE_LOG_LEVEL`` or WARNING applies.
    """
    level_name = "DEBUG" if verbose else os.getenv(EnvVarName.LOG_LEVEL, "WARNING").upper()
    level = logging.getLevelName(level_name)
    if not isinstance(level, int):
        level = logging.WARNING

    package_logger = logging.getLogger("lambda_disperse")
    package_logger.setLevel(level)
    if not any(isinstance(handler, RichHandler) for handler in package_logger.handlers):
        handler = RichHandler(console=console, show_path=verbose, rich_tracebacks=verbose)
        handler.setFormatter(logging.Formatter(_LOG_FORMAT))
        package_logger.addHandler(handler)
    package_logger.propagate = False


def parse_float_list(value: str, option_name: str) -> tuple[float, ...]:
    """Split a comma-separated option value into floats.

    Raises:
        typer.BadParameter: an entry is not a number.
    """
    items = [item.strip() for item in value.split(",") if item.strip()]
    try:
        return tuple(float(item) for item in items)
    except ValueError as exc:
        raise typer.BadParameter(f"expected comma-separated numbers, got {value!r}", param_hint=option_name) from exc


def dispatch(ctx: typer.Context, config: RunConfig, runner: Callable[[RunConfig], int]) -> RunConfig | None:
    """Return ``config`` when only parsing, otherwise run it and exit with the runner's status.

    Precondition failures (a ValueError such as a strong probe) exit with 2, other failures with 1
    and an interrupt with 130.
    """
    if is_parse_only(ctx):
        return config

    logger.debug(f"Running {config.command} with {config.params.model_dump(mode='json')}")
    try:
        code = runner(config)
    except KeyboardInterrupt:
        console.print("\n[yellow]Cancelled by user.[/yellow]")
        raise typer.Exit(130) from None
    except ValueError as exc:
        console.print(f"[red]Error:[/red] {exc}")
        console.print(f"[dim]Try '{ctx.command_path} --help' for help.[/dim]")
        raise typer.Exit(2) from exc
    except (LambdaDisperseError, OSError) as exc:
        console.print(f"[red]Error:[/red] {exc}")
        raise typer.Exit(1) from exc

    if code:
        raise typer.Exit(code)
    return None
