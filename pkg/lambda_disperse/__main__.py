"""Main entry point for running the CLI as a module."""

from lambda_disperse.cli import app

if __name__ == "__main__":
    app()
