"""
Sweep definition loaders.
"""

from accel_ent.curves.loaders.yaml_sweep import load_sweep

__all__ = [
    "load_sweep",
]
