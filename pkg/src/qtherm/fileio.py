"""CSV readers and number formatting for the command-line tools.

Input files hold one real value per line (probabilities or energies),
UTF-8 with LF or CRLF endings.  An optional header row names the columns;
multi-column files (such as the solver's own CSV output) are supported by
selecting a column by name.  Blank lines and lines starting with ``#`` are
skipped.  Parse failures raise :class:`ParseError` carrying the 1-based
line number.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .entropy import as_distribution
from .errors import ParseError
from .maxent import as_spectrum


def format_float(x: float) -> str:
    """Render a double with 17 significant digits (round-trip exact)."""
    return format(float(x), ".17g")


def read_column(path, column: str) -> np.ndarray:
    """Read one numeric column from a CSV file.

    Headerless single-column files are accepted directly; files with a
    header row must contain ``column``.
    """
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    rows: list[tuple[int, list[str]]] = []
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, [cell.strip() for cell in stripped.split(",")]))
    if not rows:
        raise ParseError(f"no data rows in {path}")

    first_line, first_cells = rows[0]
    header = None
    if not _all_numeric(first_cells):
        header = first_cells
        rows = rows[1:]
        if not rows:
            raise ParseError("header present but no data rows", line=first_line)

    if header is None:
        index = 0
        if any(len(cells) != 1 for _, cells in rows):
            raise ParseError(
                f"multi-column file without a header naming {column!r}",
                line=rows[0][0],
            )
    else:
        if column not in header:
            raise ParseError(
                f"no column named {column!r} in header {header!r}",
                line=first_line,
            )
        index = header.index(column)

    values = []
    for lineno, cells in rows:
        if index >= len(cells):
            raise ParseError(f"row has {len(cells)} columns, need {index + 1}",
                             line=lineno)
        try:
            values.append(float(cells[index]))
        except ValueError:
            raise ParseError(f"not a number: {cells[index]!r}", line=lineno) from None
    return np.asarray(values, dtype=float)


def _all_numeric(cells: list[str]) -> bool:
    for cell in cells:
        try:
            float(cell)
        except ValueError:
            return False
    return True


def read_distribution(path) -> np.ndarray:
    """Read and validate a probability vector (column ``p``)."""
    return as_distribution(read_column(path, "p"))


def read_spectrum(path) -> np.ndarray:
    """Read and validate an energy spectrum (column ``E``)."""
    return as_spectrum(read_column(path, "E"))
