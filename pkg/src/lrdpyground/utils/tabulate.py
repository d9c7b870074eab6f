"""Format tabular data into a text table for print.

The :func:`tabulate` function takes a :class:`pyarrow.Table` or
:class:`pyarrow.RecordBatch` and formats it into a text table.
Numeric columns are right aligned and their floats printed with 6
significant digits, long strings are truncated and only the first
``max_rows`` rows are displayed.
The function is used by the command line to display summaries of results.

Example:

    >>> import pyarrow as pa
    >>> data = {
    ...     "n": [1024, 1024, 4096],
    ...     "statistic": ["ks[mean]", "ks_known", "ks[mean]"],
    ...     "median": [0.5, 1.25, None],
    ... }
    >>> print(tabulate(pa.table(data)))
       n | statistic | median
    ---- | --------- | ------
    1024 | ks[mean]  |    0.5
    1024 | ks_known  |   1.25
    4096 | ks[mean]  |
"""

from typing import Any

import pyarrow as pa


def tabulate(data: pa.Table | pa.RecordBatch, max_rows: int = 40) -> str:
    """Format a Table or RecordBatch into a text table.

    Will produce a string like::

           n | statistic |   median
        ---- | --------- | --------
        1024 | ks[mean]  | 0.512047
        4096 | ks[mean]  | 0.370013
    """
    cols = data.column_names
    numeric = [is_numeric(field.type) for field in data.schema]
    rows = [
        [format_value(row[c]) for c in cols] for row in data.slice(length=max_rows).to_pylist()
    ]

    widths = [max([len(col)] + [len(row[idx]) for row in rows]) for idx, col in enumerate(cols)]
    lines = [
        render_row(cols, widths, numeric),
        " | ".join("-" * width for width in widths),
    ]
    lines.extend(render_row(row, widths, numeric) for row in rows)
    if data.num_rows > max_rows:
        lines.append(f"... and {data.num_rows - max_rows} more rows")
    return "\n".join(lines)


def is_numeric(datatype: pa.DataType) -> bool:
    """Whether values of ``datatype`` are right aligned."""
    return pa.types.is_integer(datatype) or pa.types.is_floating(datatype)


def render_row(cells: list[str], widths: list[int], numeric: list[bool]) -> str:
    """Pad each cell to the width of its column, trailing blanks removed."""
    padded = [
        cell.rjust(width) if right else cell.ljust(width)
        for cell, width, right in zip(cells, widths, numeric)
    ]
    return " | ".join(padded).rstrip()


def format_value(v: Any) -> str:
    """Format a value to be printed in the table.

    Floats get 6 significant digits, missing values
    are left blank and long strings are truncated.

    >>> format_value(0.123456789), format_value(None), format_value(True)
    ('0.123457', '', 'true')
    """
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.6g}"

    v = str(v)
    if len(v) > 40:
        v = v[:37] + "..."
    return v
