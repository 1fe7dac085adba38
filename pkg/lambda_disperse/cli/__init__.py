"""CLI package exposing commands and app."""

import click
import typer
from dotenv import load_dotenv
from rich.console import Console

app = typer.Typer(
    name="lambda-disperse",
    help="Lambda Disperse - Probe susceptibility, dispersion regimes and group index of an incoherently pumped three-level atom.",
    add_completion=False,
    context_settings={"help_option_names": ["-h", "--help"]},
)

# Standard output carries the data; messages, tables and logs go to standard error
console = Console(stderr=True)

load_dotenv()


@app.callback(invoke_without_command=True)
def main(ctx: typer.Context) -> None:
    """Lambda Disperse - Probe susceptibility, dispersion regimes and group index of an incoherently pumped three-level atom."""
    if ctx.invoked_subcommand is None and not ctx.resilient_parsing:
        raise click.UsageError("Missing command.", ctx)


# Import all command modules to register commands - must happen after app creation
from lambda_disperse.cli import group_index, regime_map, show_defaults, spectrum, validate, ver  # noqa: E402, F401

__all__ = ["app", "console"]
