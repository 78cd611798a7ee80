"""
accel-ent CLI - Command-line interface for accel-ent.

A typer application with global output options and one subcommand per
computation, plus ``figures`` for reproducing every figure table.
"""

__all__ = []
