from __future__ import annotations

from lambda_disperse.cli import app
from lambda_disperse.cli.arguments import version_callback


@app.command(name="version")
def version() -> None:
    """Show version and exit."""
    version_callback(True)
