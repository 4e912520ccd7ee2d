"""CSV datasets with a commented provenance header.

Numbers are written with 12 significant digits and a '.' decimal point
regardless of locale, so reruns with the same inputs are byte-identical.
"""

import csv
import io
import math
import sys
from collections.abc import Iterable, Sequence
from pathlib import Path

Cell = float | int | str | None

SIGNIFICANT_DIGITS = 12


def format_cell(value: Cell) -> str:
    """Render one CSV cell.

    None becomes an empty cell and -0.0 is written as 0.

    Examples:
        >>> format_cell(1 / 3)
        '0.333333333333'
        >>> format_cell(None)
        ''
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if value == 0:
            value = 0.0
        return f"{value:.{SIGNIFICANT_DIGITS}g}"
    return value


def render_dataset(
    header: Sequence[str], columns: Sequence[str], rows: Iterable[Sequence[Cell]]
) -> str:
    """Header comment lines, the column names, then one line per row.

    Raises:
        ValueError: If a row does not have one cell per column
    """
    buffer = io.StringIO()
    for line in header:
        buffer.write(line if line.startswith("#") else f"# {line}")
        buffer.write("\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for index, row in enumerate(rows):
        if len(row) != len(columns):
            raise ValueError(f"row {index} has {len(row)} cells, expected {len(columns)}")
        writer.writerow([format_cell(cell) for cell in row])
    return buffer.getvalue()


def write_dataset(text: str, output: str) -> None:
    """Write to stdout for "-", otherwise to the named file (parents created)."""
    if output == "-":
        sys.stdout.write(text)
        return
    path = Path(output)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")
