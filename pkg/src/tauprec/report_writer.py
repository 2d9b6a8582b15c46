"""Writers for the CSV, report and plot-script outputs."""
import csv
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Union

import numpy as np

from tauprec.constants import CSV_FMT, SCHEMA_VERSION

PathLike = Union[str, Path]


@dataclass
class RunOutput:
    """Files written by a run and the headline metrics of its report."""

    files: List[Path] = field(default_factory=list)
    metrics: Dict[str, Any] = field(default_factory=dict)


def schema_line(name: str) -> str:
    return f"# schema={name} v{SCHEMA_VERSION}"


def _prepare(path: PathLike) -> Path:
    path = Path(path)
    os.makedirs(path.parent, exist_ok=True)
    return path


def _split_complex(columns: Mapping[str, Any]) -> Dict[str, np.ndarray]:
    out = {}
    for name, column in columns.items():
        column = np.asarray(column)
        if np.iscomplexobj(column):
            out[f"{name}_re"] = column.real
            out[f"{name}_im"] = column.imag
        else:
            out[name] = column.astype(float)
    return out


def write_csv(path: PathLike, name: str, columns: Mapping[str, Any]) -> Path:
    """Write numeric columns of equal length.

    The file starts with the schema line and the column names; complex
    columns become ``<name>_re`` and ``<name>_im``.

    Args:
        path (PathLike): Output file.
        name (str): Schema name.
        columns (Mapping[str, Any]): Column name to values.

    Returns:
        Path: The written file.
    """
    path = _prepare(path)
    split = _split_complex(columns)
    lengths = {len(v) for v in split.values()}
    if len(lengths) > 1:
        raise ValueError(f"columns of unequal lengths {sorted(lengths)}")
    data = np.column_stack(list(split.values())) if split else np.empty((0, 0))

    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(schema_line(name) + "\n")
        f.write(",".join(split) + "\n")
        if data.size:
            np.savetxt(f, data, fmt=CSV_FMT, delimiter=",")
    return path


def _cell(value: Any) -> str:
    if value is None:
        return "n/a"
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return CSV_FMT % value
    return str(value)


def write_table(path: PathLike, name: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    """Write a table with mixed text and numeric cells; ``None`` becomes ``n/a``."""
    path = _prepare(path)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(schema_line(name) + "\n")
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(v) for v in row])
    return path


def write_report(path: PathLike, metrics: Mapping[str, Any]) -> Path:
    """Write ``key = value`` lines."""
    path = _prepare(path)
    with open(path, "w", encoding="utf-8") as f:
        for key, value in metrics.items():
            f.write(f"{key} = {_cell(value)}\n")
    return path


def write_plot_script(
    path: PathLike,
    csv_name: str,
    x_column: int,
    y_columns: List[int],
    title: str,
    labels: Optional[List[str]] = None,
) -> Path:
    """Write a gnuplot script that plots columns of a CSV written next to it."""
    path = _prepare(path)
    labels = labels or [f"column {c}" for c in y_columns]
    curves = ", \\\n     ".join(
        f"'{csv_name}' using {x_column}:{c} with points title '{label}'"
        for c, label in zip(y_columns, labels)
    )
    lines = [
        "set datafile separator ','",
        "set datafile commentschars '#'",
        f"set title '{title}'",
        "set key outside",
        f"plot {curves}",
        "pause -1",
    ]
    # The first data line holds the column names.
    lines.insert(2, "set key autotitle columnhead")
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")
    return path
