"""nilgraph command line."""

from nilgraph.cli.main import app

__all__ = ["app"]
