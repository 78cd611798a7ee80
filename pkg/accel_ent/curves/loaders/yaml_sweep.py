"""
YAML sweep loader.

Reads :class:`SweepSpec` definitions from YAML files so that figure runs
and ad-hoc scans can be reproduced from a checked-in file.
"""

from pathlib import Path
from typing import Any

import yaml

from accel_ent.bogoliubov import R_MAX_FERMION, R_MAX_SCALAR
from accel_ent.curves.sweeps import SweepKind, SweepSpec
from accel_ent.errors import ParameterDomainError
from accel_ent.utilities import even_grid

_UPPER_BOUNDS = {
    SweepKind.FERMION: R_MAX_FERMION,
    SweepKind.SCALAR: R_MAX_SCALAR,
}


def _bound(value: Any, kind: SweepKind) -> float:
    if isinstance(value, str) and value.strip().lower() == "max":
        if kind not in _UPPER_BOUNDS:
            raise ParameterDomainError(f"'max' is not defined for {kind.value} sweeps")
        return _UPPER_BOUNDS[kind]
    return float(value)


def _grid(data: Any, kind: SweepKind) -> tuple[float, ...]:
    if isinstance(data, list):
        return tuple(float(v) for v in data)
    if isinstance(data, dict):
        start = _bound(data.get("start", 0.0), kind)
        stop = _bound(data.get("stop", "max"), kind)
        if kind is SweepKind.PAIRS:
            return tuple(float(m) for m in range(int(start), int(stop) + 1))
        points = int(data.get("points", 101))
        return tuple(float(v) for v in even_grid(start, stop, points))
    raise ParameterDomainError(
        "grid must be a list of values or a {start, stop, points} mapping",
        f"got: {data!r}",
    )


def load_sweep(path: Path | str) -> SweepSpec:
    """
    Load a sweep definition from a YAML file.

    Parameters
    ----------
    path : Path | str
        Path to the YAML file.

    Returns
    -------
    SweepSpec
        Validated sweep definition.

    Raises
    ------
    ParameterDomainError
        If the file is malformed or a value is out of range.

    Notes
    -----
    YAML format:
    ```yaml
    name: "encp_1_m2"
    kind: "scalar"          # fermion, scalar or pairs
    scenario: "one"         # one or both
    epsilon: 1.0e-12
    M: 2                    # omit for unrestricted scalar series
    grid:
      start: 0.0
      stop: max             # upper end of the legal range
      points: 101
    ```
    A grid can also be a plain list of values. ``pairs`` sweeps use
    ``start``/``stop`` as the range of ``M``.
    """
    path = Path(path)

    with path.open() as f:
        data = yaml.safe_load(f)
    if not isinstance(data, dict):
        raise ParameterDomainError(f"sweep file {path} does not hold a mapping")

    try:
        kind = SweepKind.parse(data.get("kind", "scalar"))
    except ValueError as e:
        raise ParameterDomainError(str(e), f"file: {path}") from e

    M = data.get("M")
    try:
        return SweepSpec(
            kind=kind,
            grid=_grid(data.get("grid", {}), kind),
            scenario=data.get("scenario", "one"),
            epsilon=float(data.get("epsilon", 1e-12)),
            M=None if M is None else int(M),
            name=data.get("name", path.stem),
        )
    except ParameterDomainError as e:
        e.add_note(f"file: {path}")
        raise
    except ValueError as e:
        raise ParameterDomainError(str(e), f"file: {path}") from e


__all__ = ["load_sweep"]
