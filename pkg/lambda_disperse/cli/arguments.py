from __future__ import annotations

import typer

from lambda_disperse import __version__
from lambda_disperse.cli import console
from lambda_disperse.cli.constants import APP_NAME, GRID_DEFAULTS, MODEL_DEFAULTS, EnvVarName, RichHelpPanel
from lambda_disperse.types import OutputFormat


def version_callback(value: bool = True) -> None:
    """Print version and exit."""
    if value:
        console.print(f"{APP_NAME} v{__version__}")
        raise typer.Exit()


def _model(help_text: str, key: str) -> str:
    return f"{help_text} [default: {MODEL_DEFAULTS[key]:g}]" if isinstance(MODEL_DEFAULTS[key], float) else f"{help_text} [default: {MODEL_DEFAULTS[key]}]"


# Model parameters: None means "not given", so a --config file or the documented default applies
ConfigOpt = typer.Option(None, "--config", "-c", help="YAML, TOML or JSON parameter file (a JSON output file is accepted)", rich_help_panel=RichHelpPanel.MODEL)
SchemeOpt = typer.Option(None, "--scheme", help=_model("Level scheme: lambda or vee", "scheme"), case_sensitive=False, rich_help_panel=RichHelpPanel.MODEL)
GammaOpt = typer.Option(None, "--gamma", min=0.0, min_open=True, help="Set both decay rates gamma1 = gamma2", rich_help_panel=RichHelpPanel.MODEL)
Gamma1Opt = typer.Option(None, "--gamma1", min=0.0, min_open=True, help=_model("Decay rate |3> -> |1> (V: common upper-level decay)", "gamma1"), rich_help_panel=RichHelpPanel.MODEL)
Gamma2Opt = typer.Option(None, "--gamma2", min=0.0, min_open=True, help=_model("Decay rate |3> -> |2>", "gamma2"), rich_help_panel=RichHelpPanel.MODEL)
RateOpt = typer.Option(None, "--rate", "-r", min=0.0, help="Set both incoherent pump rates R1 = R2", rich_help_panel=RichHelpPanel.MODEL)
R1Opt = typer.Option(None, "--r1", min=0.0, help=_model("Pump rate on the |1> <-> |3> channel", "r1"), rich_help_panel=RichHelpPanel.MODEL)
R2Opt = typer.Option(None, "--r2", min=0.0, help=_model("Pump rate on the |2> <-> |3> channel", "r2"), rich_help_panel=RichHelpPanel.MODEL)
OmegaOpt = typer.Option(None, "--omega", "-w", min=0.0, help=_model("Lower-level (V: upper-level) splitting", "omega"), rich_help_panel=RichHelpPanel.MODEL)
RabiOpt = typer.Option(None, "--omega-p", min=0.0, help=_model("Probe Rabi frequency", "omega_p_rabi"), rich_help_panel=RichHelpPanel.MODEL)
AlphaOpt = typer.Option(None, "--alpha", min=0.0, min_open=True, help=_model("Susceptibility scale N p^2 / (eps0 hbar)", "alpha"), rich_help_panel=RichHelpPanel.MODEL)
NuPOpt = typer.Option(None, "--nu-p", min=0.0, min_open=True, help=_model("Probe carrier frequency in the group index", "nu_p"), rich_help_panel=RichHelpPanel.MODEL)

# Grid options
DeltaMinOpt = typer.Option(GRID_DEFAULTS["delta_min"], "--delta-min", help="Lowest probe detuning", rich_help_panel=RichHelpPanel.GRID)
DeltaMaxOpt = typer.Option(GRID_DEFAULTS["delta_max"], "--delta-max", help="Highest probe detuning", rich_help_panel=RichHelpPanel.GRID)
PointsOpt = typer.Option(GRID_DEFAULTS["points"], "--points", "-n", min=2, help="Number of detunings (odd counts include zero)", rich_help_panel=RichHelpPanel.GRID)
ValidatePointsOpt = typer.Option(GRID_DEFAULTS["validate_points"], "--points", "-n", min=1, help="Number of detunings", rich_help_panel=RichHelpPanel.GRID)
RMinOpt = typer.Option(GRID_DEFAULTS["r_min"], "--r-min", min=0.0, help="Lowest pump rate", rich_help_panel=RichHelpPanel.GRID)
RMaxOpt = typer.Option(GRID_DEFAULTS["r_max"], "--r-max", min=0.0, help="Highest pump rate", rich_help_panel=RichHelpPanel.GRID)
RPointsOpt = typer.Option(GRID_DEFAULTS["r_points"], "--r-points", min=1, help="Number of pump rates", rich_help_panel=RichHelpPanel.GRID)
OmegaMinOpt = typer.Option(GRID_DEFAULTS["omega_min"], "--omega-min", min=0.0, help="Lowest splitting", rich_help_panel=RichHelpPanel.GRID)
OmegaMaxOpt = typer.Option(GRID_DEFAULTS["omega_max"], "--omega-max", min=0.0, help="Highest splitting", rich_help_panel=RichHelpPanel.GRID)
OmegaPointsOpt = typer.Option(GRID_DEFAULTS["omega_points"], "--omega-points", min=1, help="Number of splittings", rich_help_panel=RichHelpPanel.GRID)
GroupIndexRMaxOpt = typer.Option(GRID_DEFAULTS["gi_r_max"], "--r-max", min=0.0, help="Highest pump rate", rich_help_panel=RichHelpPanel.GRID)
GroupIndexRPointsOpt = typer.Option(GRID_DEFAULTS["gi_r_points"], "--r-points", min=2, help="Number of pump rates", rich_help_panel=RichHelpPanel.GRID)
OmegasOpt = typer.Option(GRID_DEFAULTS["gi_omegas"], "--omegas", help="Comma-separated splittings, one curve each", rich_help_panel=RichHelpPanel.GRID)
ValidateRatesOpt = typer.Option(GRID_DEFAULTS["validate_rates"], "--rates", help="Comma-separated pump rates of the validation cases", rich_help_panel=RichHelpPanel.GRID)
ValidateOmegasOpt = typer.Option(GRID_DEFAULTS["validate_omegas"], "--omegas", help="Comma-separated splittings of the validation cases", rich_help_panel=RichHelpPanel.GRID)
ToleranceOpt = typer.Option(GRID_DEFAULTS["tolerance"], "--tolerance", "-t", min=0.0, min_open=True, help="Largest accepted |chi_analytic - chi_numeric| (alpha units)", rich_help_panel=RichHelpPanel.GRID)

# Output options
OutputOpt = typer.Option(None, "--output", "-o", help="Output file path ('-' or omitted: standard output)", rich_help_panel=RichHelpPanel.OUTPUT)
FormatOpt = typer.Option(
    OutputFormat.CSV,
    "--format",
    "-f",
    envvar=EnvVarName.OUTPUT_FORMAT,
    help=f"Output format: {', '.join(f.value for f in OutputFormat)}",
    case_sensitive=False,
    rich_help_panel=RichHelpPanel.OUTPUT,
)
ThreadsOpt = typer.Option(0, "--threads", min=0, envvar=EnvVarName.THREADS, help="Sweep worker threads (0: all cores)", rich_help_panel=RichHelpPanel.OTHER)

# Common options with rich_help_panel grouping
VerboseOpt = typer.Option(False, "--verbose", "-v", help="Verbose output", rich_help_panel=RichHelpPanel.OTHER)
VersionOpt = typer.Option(
    "--version",
    callback=version_callback,
    is_eager=True,
    help="Show version and exit.",
    rich_help_panel=RichHelpPanel.OTHER,
)
