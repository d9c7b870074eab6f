"""Reading and writing result artifacts.

Bulk numeric data is stored as CSV through :mod:`pyarrow.csv`, structured
summaries as JSON documents that always carry the hash of the
configuration that produced them and the version of the package.
"""

import json
import os
import pathlib
from typing import Any

import pyarrow as pa
import pyarrow.csv

from ..exceptions import ConfigError
from ..version import __version__

__all__ = ("write_csv", "read_csv", "write_json", "stamp", "dumps")


def write_csv(table: pa.Table, path: str | os.PathLike[str]) -> pathlib.Path:
    """Write a table as CSV with a plain ``a,b,c`` header line.

    Parent directories are created when missing.
    """
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("wb") as output:
        output.write((",".join(table.column_names) + "\n").encode("utf-8"))
        pyarrow.csv.write_csv(
            table, output, write_options=pyarrow.csv.WriteOptions(include_header=False)
        )
    return path


def read_csv(path: str | os.PathLike[str]) -> pa.Table:
    """Read a CSV file written by :func:`write_csv`.

    A file that does not parse as CSV raises a
    :class:`~lrdpyground.exceptions.ConfigError` naming it.
    """
    try:
        return pyarrow.csv.read_csv(str(path))
    except pa.ArrowInvalid as err:
        raise ConfigError("", f"{path} is not a valid CSV file: {err}") from None


def stamp(document: dict[str, Any], config_hash: str | None) -> dict[str, Any]:
    """Add the configuration hash and the package version to a JSON document.

    >>> stamp({"a": 1}, "abc")["config_hash"]
    'abc'
    """
    return {**document, "config_hash": config_hash, "tool_version": __version__}


def dumps(document: dict[str, Any]) -> str:
    """Serialize a document with sorted keys, so equal documents are equal text."""
    return json.dumps(document, indent=2, sort_keys=True, allow_nan=False)


def write_json(document: dict[str, Any], path: str | os.PathLike[str]) -> pathlib.Path:
    """Write a JSON document, parent directories are created when missing."""
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(document) + "\n", encoding="utf-8")
    return path
