"""Dataset ingestion from delimited text, plus column access and export.

CSV reads honor RFC-4180-style quoting; tab-separated files are read
without quoting.  Delimiter and header row are auto-detected unless
forced.  Decimal separator is '.' only.
"""

import csv
import io
import re

from . import errors
from .bignum import PrecisionContext, format_decimal, parse_decimal
from .linalg import NumVector

_NUMERIC_RE = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)")


class Column:
    __slots__ = ("header", "data", "numeric")

    def __init__(self, header: str, data, numeric: bool):
        self.header = header
        self.data = data  # list of scalars, or list of str for text columns
        self.numeric = numeric


class Dataset:
    __slots__ = ("name", "columns", "row_count")

    def __init__(self, name: str, columns: list[Column], row_count: int):
        self.name = name
        self.columns = columns
        self.row_count = row_count

    @property
    def col_count(self) -> int:
        return len(self.columns)

    def __repr__(self):
        return f"Dataset({self.name!r}, {self.row_count}x{self.col_count})"


def _is_numeric_cell(cell: str) -> bool:
    return bool(_NUMERIC_RE.fullmatch(cell.strip()))


def _detect_delimiter(first_line: str) -> str:
    return "\t" if first_line.count("\t") > first_line.count(",") else ","


def import_dataset(path: str, name: str, ctx: PrecisionContext, *,
                   delimiter: str | None = None,
                   header: bool | None = None) -> Dataset:
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            text = fh.read()
    except OSError as exc:
        raise errors.IoError(f"cannot read {path}: {exc}") from None
    return parse_dataset(text, name, ctx, delimiter=delimiter, header=header)


def parse_dataset(text: str, name: str, ctx: PrecisionContext, *,
                  delimiter: str | None = None,
                  header: bool | None = None) -> Dataset:
    stripped = text.strip("\n\r ")
    if not stripped:
        raise errors.FormatError("empty dataset file")
    if delimiter is None:
        delimiter = _detect_delimiter(stripped.splitlines()[0])
    if delimiter == "\t":
        reader = csv.reader(io.StringIO(stripped), delimiter="\t",
                            quoting=csv.QUOTE_NONE)
    else:
        reader = csv.reader(io.StringIO(stripped), delimiter=delimiter)
    rows = [row for row in reader if row]
    if not rows:
        raise errors.FormatError("empty dataset file")
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise errors.FormatError(
                f"ragged input: row {i + 1} has {len(row)} cells, expected {width}")
    if header is None:
        header = any(not _is_numeric_cell(c) for c in rows[0])
    if header:
        headers, body = [c.strip() for c in rows[0]], rows[1:]
    else:
        headers, body = [f"c{i}" for i in range(width)], rows
    if not body:
        raise errors.FormatError("dataset has a header row but no data rows")

    columns = []
    for j in range(width):
        cells = [row[j].strip() for row in body]
        if all(_is_numeric_cell(c) for c in cells):
            data = [parse_decimal(c, ctx) for c in cells]
            columns.append(Column(headers[j], data, True))
        else:
            columns.append(Column(headers[j], cells, False))
    return Dataset(name, columns, len(body))


def dataset_column(d: Dataset, index: int, ctx: PrecisionContext) -> NumVector:
    """Column by 0-based index, copied out as a vector."""
    if not isinstance(index, int):
        raise errors.EvalTypeError("column index must be an integer")
    if not 0 <= index < d.col_count:
        raise errors.ColumnIndexError(
            f"column {index} out of range (valid 0..{d.col_count - 1})")
    col = d.columns[index]
    if not col.numeric:
        raise errors.EvalTypeError(
            f"column {index} ({col.header!r}) is not numeric")
    return NumVector(list(col.data), ctx)


def export_dataset(d: Dataset, path: str, digits: int) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow([c.header for c in d.columns])
            for i in range(d.row_count):
                writer.writerow([
                    format_decimal(c.data[i], digits) if c.numeric else c.data[i]
                    for c in d.columns])
    except OSError as exc:
        raise errors.IoError(f"cannot write {path}: {exc}") from None
