"""
accel-ent CLI commands.

Each module defines one ``*_command`` function (or a sub-application)
registered on the main app in :mod:`accel_ent.cli.main`.
"""

__all__ = []
