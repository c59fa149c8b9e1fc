"""Rectangular result tables with a metadata header, written as CSV or JSON.

CSV layout::

    # key: value          (metadata, one line per key, values JSON-encoded)
    col_a,col_b           (header)
    unit_a,unit_b         (units)
    1.0,2.5               (data)

Floats are written with ``repr`` so output is exact and byte-stable.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Any, Sequence

__all__ = ["SweepTable", "read_metadata"]

Cell = Any  # float | int | str | None


def _cell_text(value: Cell) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass
class SweepTable:
    columns: list[str]
    units: list[str]
    rows: list[list[Cell]] = field(default_factory=list)
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.columns) != len(self.units):
            raise ValueError("columns and units must have the same length")
        for row in self.rows:
            self._check(row)

    def _check(self, row: Sequence[Cell]) -> None:
        if len(row) != len(self.columns):
            raise ValueError(f"row has {len(row)} cells, table has {len(self.columns)} columns")
        for value in row:
            if isinstance(value, float) and not math.isfinite(value):
                raise ValueError(f"non-finite value in sweep output: {row}")

    def append(self, row: Sequence[Cell]) -> None:
        self._check(row)
        self.rows.append(list(row))

    def column(self, name: str) -> list[Cell]:
        i = self.columns.index(name)
        return [row[i] for row in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        for key, value in self.metadata.items():
            text = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
            buf.write(f"# {key}: {text}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        writer.writerow(self.units)
        for row in self.rows:
            writer.writerow([_cell_text(v) for v in row])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "metadata": self.metadata,
            "columns": self.columns,
            "units": self.units,
            "rows": self.rows,
        }
        return json.dumps(doc, indent=2, sort_keys=False, allow_nan=False) + "\n"

    def render(self, fmt: str = "csv") -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown output format {fmt!r}")


def read_metadata(text: str) -> dict[str, Any]:
    """Recover the metadata block from CSV or JSON output produced above."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return json.loads(stripped)["metadata"]
    meta: dict[str, Any] = {}
    for line in text.splitlines():
        if not line.startswith("#"):
            break
        key, _, value = line[1:].strip().partition(": ")
        try:
            meta[key] = json.loads(value)
        except json.JSONDecodeError:
            meta[key] = value
    return meta
