"""
Pydantic models for serialized curve tables.
"""

from pydantic import BaseModel, Field


class TablePayload(BaseModel):
    """
    JSON form of a :class:`accel_ent.curves.table.CurveTable`.

    Parameters
    ----------
    name : str
        Table (figure) identifier, e.g. ``"bfacc"``.
    metadata : dict[str, str]
        Parameters the table was produced with.
    columns : list[str]
        Column names in output order.
    rows : list[list[float]]
        Data rows, one value per column.

    Examples
    --------
    >>> payload = TablePayload(name="t", metadata={}, columns=["x"], rows=[[0.5]])
    >>> payload.rows
    [[0.5]]
    """

    name: str = Field(description="Table identifier")
    metadata: dict[str, str] = Field(
        default_factory=dict, description="Parameters echoed from the sweep"
    )
    columns: list[str] = Field(min_length=1, description="Column names")
    rows: list[list[float]] = Field(default_factory=list, description="Data rows")


__all__ = ["TablePayload"]
