"""
Column tables produced by sweeps, with CSV and JSON writers.

CSV layout::

    # key: value          (metadata, keys sorted)
    col_a,col_b,...
    0.10000000000000001,1,...

Floats are written with 17 significant digits and JSON floats use
``repr``, so both formats parse back to the same values and repeated runs
produce identical bytes.
"""

import json
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from accel_ent.curves.models import TablePayload


class OutputFormat(Enum):
    """Serialization format of a table."""

    CSV = "csv"
    JSON = "json"

    @classmethod
    def parse(cls, value: "str | OutputFormat") -> "OutputFormat":
        """
        Parse ``"csv"`` or ``"json"``.

        Raises
        ------
        ValueError
            If the format is unknown.
        """
        if isinstance(value, OutputFormat):
            return value
        for member in cls:
            if member.value == value.strip().lower():
                return member
        valid = ", ".join(f"'{m.value}'" for m in cls)
        raise ValueError(f"Unknown format: '{value}'. Valid: {valid}")

    @property
    def suffix(self) -> str:
        return f".{self.value}"


def format_value(value: float) -> str:
    """17-significant-digit text of ``value``."""
    return format(float(value), ".17g")


@dataclass(frozen=True)
class CurveTable:
    """
    Named table of float columns.

    Parameters
    ----------
    name : str
        Identifier, used as file stem by :meth:`write`.
    columns : tuple[str, ...]
        Column names.
    rows : tuple[tuple[float, ...], ...]
        Data rows in grid order.
    metadata : Mapping[str, str]
        Header entries (sweep parameters, tolerances, cutoffs).
    """

    name: str
    columns: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...] = ()
    metadata: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if len(set(self.columns)) != len(self.columns):
            raise ValueError(f"Duplicate column names in table '{self.name}'")
        width = len(self.columns)
        for index, row in enumerate(self.rows):
            if len(row) != width:
                raise ValueError(
                    f"Row {index} of table '{self.name}' has {len(row)} values, "
                    f"expected {width}"
                )
        object.__setattr__(
            self, "rows", tuple(tuple(float(v) for v in row) for row in self.rows)
        )
        object.__setattr__(
            self, "metadata", {str(k): str(v) for k, v in self.metadata.items()}
        )

    @classmethod
    def from_records(
        cls,
        name: str,
        records: Iterable[Mapping[str, float]],
        metadata: Mapping[str, object] | None = None,
    ) -> "CurveTable":
        """Build a table from dict rows that share the same keys, in key order."""
        records = list(records)
        columns = tuple(records[0]) if records else ()
        rows = tuple(tuple(record[c] for c in columns) for record in records)
        meta = {k: str(v) for k, v in (metadata or {}).items()}
        return cls(name=name, columns=columns, rows=rows, metadata=meta)

    def __len__(self) -> int:
        return len(self.rows)

    def column(self, name: str) -> list[float]:
        """Values of one column."""
        try:
            index = self.columns.index(name)
        except ValueError:
            raise KeyError(f"Table '{self.name}' has no column '{name}'") from None
        return [row[index] for row in self.rows]

    def select(self, columns: Iterable[str]) -> "CurveTable":
        """Copy keeping only ``columns``, in the given order."""
        columns = tuple(columns)
        for name in columns:
            if name not in self.columns:
                raise KeyError(f"Table '{self.name}' has no column '{name}'")
        indices = [self.columns.index(name) for name in columns]
        rows = tuple(tuple(row[i] for i in indices) for row in self.rows)
        return CurveTable(self.name, columns, rows, dict(self.metadata))

    def with_metadata(self, **entries: object) -> "CurveTable":
        """Copy with extra header entries."""
        merged = {**self.metadata, **{k: str(v) for k, v in entries.items()}}
        return CurveTable(self.name, self.columns, self.rows, merged)

    def to_csv(self) -> str:
        """CSV text with the ``#`` metadata header."""
        lines = [f"# {key}: {self.metadata[key]}" for key in sorted(self.metadata)]
        lines.append(",".join(self.columns))
        lines.extend(",".join(format_value(v) for v in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    def to_payload(self) -> TablePayload:
        return TablePayload(
            name=self.name,
            metadata=dict(self.metadata),
            columns=list(self.columns),
            rows=[list(row) for row in self.rows],
        )

    def to_json(self) -> str:
        """JSON text with sorted keys and indent 2."""
        payload = self.to_payload().model_dump()
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def render(self, fmt: OutputFormat | str = OutputFormat.CSV) -> str:
        """Text of the table in ``fmt``."""
        match OutputFormat.parse(fmt):
            case OutputFormat.CSV:
                return self.to_csv()
            case OutputFormat.JSON:
                return self.to_json()

    def write(
        self, path: Path | str, fmt: OutputFormat | str = OutputFormat.CSV
    ) -> Path:
        """
        Write the table to ``path``.

        A directory path receives ``<name>.<fmt>``. Parent directories are
        created as needed.
        """
        fmt = OutputFormat.parse(fmt)
        path = Path(path)
        if path.is_dir():
            path = path / f"{self.name}{fmt.suffix}"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.render(fmt))
        return path

    @classmethod
    def from_json(cls, text: str) -> "CurveTable":
        """Parse text written by :meth:`to_json`."""
        payload = TablePayload.model_validate_json(text)
        return cls(
            name=payload.name,
            columns=tuple(payload.columns),
            rows=tuple(tuple(row) for row in payload.rows),
            metadata=payload.metadata,
        )

    @classmethod
    def from_csv(cls, text: str, name: str = "") -> "CurveTable":
        """Parse text written by :meth:`to_csv`."""
        metadata: dict[str, str] = {}
        body: list[str] = []
        for line in text.splitlines():
            if line.startswith("# "):
                key, _, value = line[2:].partition(": ")
                metadata[key] = value
            elif line:
                body.append(line)
        columns = tuple(body[0].split(","))
        rows = tuple(tuple(float(v) for v in line.split(",")) for line in body[1:])
        return cls(name=name, columns=columns, rows=rows, metadata=metadata)

    def max_abs(self, name: str) -> float:
        """Largest modulus in a column (0 for an empty table)."""
        return max((abs(v) for v in self.column(name)), default=0.0)

    def allclose(self, other: "CurveTable", tolerance: float = 0.0) -> bool:
        """Same columns and values within ``tolerance``."""
        if self.columns != other.columns or len(self) != len(other):
            return False
        return all(
            math.isclose(a, b, rel_tol=0.0, abs_tol=tolerance)
            for row_a, row_b in zip(self.rows, other.rows, strict=True)
            for a, b in zip(row_a, row_b, strict=True)
        )


def combine(
    name: str,
    tables: Sequence[CurveTable],
    suffixes: Sequence[str],
    metadata: Mapping[str, object] | None = None,
) -> CurveTable:
    """
    Join tables that share their first (grid) column side by side.

    Every other column of ``tables[i]`` is renamed with ``suffixes[i]``.

    Raises
    ------
    ValueError
        If the grid columns differ.
    """
    if len(tables) != len(suffixes) or not tables:
        raise ValueError("combine needs one suffix per table")
    key = tables[0].columns[0]
    grid = tables[0].column(key)
    columns = [key]
    for table, suffix in zip(tables, suffixes, strict=True):
        if table.columns[0] != key or table.column(key) != grid:
            raise ValueError(
                f"Table '{table.name}' is not on the grid of '{tables[0].name}'"
            )
        columns.extend(f"{c}{suffix}" for c in table.columns[1:])
    rows = tuple(
        (grid[i], *(v for table in tables for v in table.rows[i][1:]))
        for i in range(len(grid))
    )
    merged: dict[str, str] = {}
    for table, suffix in zip(tables, suffixes, strict=True):
        merged.update({f"{k}{suffix}": v for k, v in table.metadata.items()})
    merged.update({k: str(v) for k, v in (metadata or {}).items()})
    return CurveTable(name=name, columns=tuple(columns), rows=rows, metadata=merged)


def stack(
    name: str,
    tables: Sequence[CurveTable],
    metadata: Mapping[str, object] | None = None,
) -> CurveTable:
    """
    Concatenate the rows of tables with identical columns.

    Raises
    ------
    ValueError
        If the column sets differ.
    """
    if not tables:
        raise ValueError("stack needs at least one table")
    columns = tables[0].columns
    for table in tables[1:]:
        if table.columns != columns:
            raise ValueError(f"Table '{table.name}' has different columns")
    merged: dict[str, str] = {}
    for table in tables:
        merged.update(table.metadata)
    merged.update({k: str(v) for k, v in (metadata or {}).items()})
    rows = tuple(row for table in tables for row in table.rows)
    return CurveTable(name=name, columns=columns, rows=rows, metadata=merged)


__all__ = ["CurveTable", "OutputFormat", "combine", "format_value", "stack"]
