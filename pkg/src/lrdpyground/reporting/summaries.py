"""Grouped summaries of result tables.

Monte Carlo results are reported through robust summaries of each
statistic at every sample size: medians for the checks, a set of
quantiles for the command line summaries.

Tables are grouped by a key column and every group is reduced by a set
of aggregations. Each aggregation computes a partial result on a chunk
of rows, and the partial results are then combined, so tables made of
multiple record batches never need to be concatenated::

    n, stat
    64, 3.0
    64, 1.0
    256, 2.0

grouped by ``n`` with the median of ``stat`` gives::

    n, median
    64, 2.0
    256, 2.0

>>> table = pa.table({"n": [64, 64, 256], "stat": [3.0, 1.0, 2.0]})
>>> GroupedSummary("n", {"median": MedianAggregation("stat")}).apply(table).to_pydict()
{'n': [64, 256], 'median': [2.0, 2.0]}
"""

import abc
from collections.abc import Iterable, Sequence
from typing import Any

import numpy as np
import pyarrow as pa
import pyarrow.compute as pc

__all__ = (
    "Aggregation",
    "CountAggregation",
    "MeanAggregation",
    "QuantileAggregation",
    "MedianAggregation",
    "GroupedSummary",
    "median_by_n",
    "statistic_columns",
    "quantile_summary",
    "SUMMARY_QUANTILES",
)

SUMMARY_QUANTILES = (0.05, 0.25, 0.5, 0.75, 0.95)


class Aggregation(abc.ABC):
    """Base class for aggregations.

    Every aggregation computes any intermediate result it needs
    on a single chunk of data and provides a reduce method
    to combine the intermediate results into a final value.
    """

    def __init__(self, column: str) -> None:
        """
        :param column: The column to aggregate.
        """
        self.column = column

    def __str__(self) -> str:
        return f"{self.__class__.__name__}({self.column})"

    __repr__ = __str__

    @abc.abstractmethod
    def compute_chunk(self, batch: pa.RecordBatch) -> Any:
        """Compute the partial result on a single chunk of data."""
        ...

    @abc.abstractmethod
    def reduce(self, chunks: list[Any]) -> Any:
        """Combine the partial results into the final value."""
        ...


class CountAggregation(Aggregation):
    """Number of non null values, the sum of the counts of each chunk."""

    def compute_chunk(self, batch: pa.RecordBatch) -> Any:
        """Count the non null values of the chunk."""
        return pc.count(batch.column(self.column)).as_py()

    def reduce(self, chunks: list[Any]) -> int:
        """Sum the counts."""
        return int(sum(chunks))


class MeanAggregation(Aggregation):
    """Mean of the non null values, from the counts and sums of each chunk."""

    def compute_chunk(self, batch: pa.RecordBatch) -> Any:
        """Count and sum of the chunk."""
        column = batch.column(self.column)
        return (pc.count(column).as_py(), pc.sum(column).as_py() or 0.0)

    def reduce(self, chunks: list[Any]) -> float | None:
        """Total sum over total count."""
        count = sum(chunk[0] for chunk in chunks)
        total = sum(chunk[1] for chunk in chunks)
        return total / count if count else None


class QuantileAggregation(Aggregation):
    """Quantile of the non null values.

    Quantiles cannot be combined from partial quantiles,
    so every chunk forwards its values and the reduction
    computes the quantile on all of them.
    """

    def __init__(self, column: str, q: float) -> None:
        """
        :param column: The column to aggregate.
        :param q: The level of the quantile, in ``[0, 1]``.
        """
        super().__init__(column)
        self.q = q

    def __str__(self) -> str:
        return f"{self.__class__.__name__}({self.column}, q={self.q})"

    __repr__ = __str__

    def compute_chunk(self, batch: pa.RecordBatch) -> Any:
        """The values of the chunk, nulls dropped."""
        return pc.drop_null(batch.column(self.column))

    def reduce(self, chunks: list[Any]) -> float | None:
        """Linearly interpolated quantile of all the values."""
        values = pa.concat_arrays([chunk.cast(pa.float64()) for chunk in chunks])
        if len(values) == 0:
            return None
        return pc.quantile(values, q=self.q, interpolation="linear")[0].as_py()


class MedianAggregation(QuantileAggregation):
    """Median of the non null values."""

    def __init__(self, column: str) -> None:
        """
        :param column: The column to aggregate.
        """
        super().__init__(column, 0.5)


class GroupedSummary:
    """Group a table by a key column and aggregate each group.

    :param key: The column to group by.
    :param aggregations: The aggregations to compute, in the form
                         ``{"new_column_name": Aggregation}``.
    """

    def __init__(self, key: str, aggregations: dict[str, Aggregation]) -> None:
        """
        :param key: The column to group by.
        :param aggregations: The aggregations to compute.
        """
        self.key = key
        self.aggregations = aggregations

    def __str__(self) -> str:
        return f"GroupedSummary(key={self.key}, aggregations={self.aggregations})"

    def apply(self, table: pa.Table) -> pa.Table:
        """Compute the aggregations of each group, sorted by key."""
        chunks_data: dict[Any, dict[str, list[Any]]] = {}
        for batch in table.to_batches():
            # Dictionary encoding gives the distinct keys and,
            # for each row, the position of its key among them.
            encoded = pc.dictionary_encode(batch.column(self.key))
            for position, key_value in enumerate(encoded.dictionary.to_pylist()):
                rows = pc.filter(batch, pc.equal(encoded.indices, position))
                group = chunks_data.setdefault(key_value, {})
                for name, aggregation in self.aggregations.items():
                    group.setdefault(name, []).append(aggregation.compute_chunk(rows))

        keys = sorted(chunks_data)
        columns: dict[str, list[Any]] = {self.key: keys}
        for name, aggregation in self.aggregations.items():
            columns[name] = [aggregation.reduce(chunks_data[key][name]) for key in keys]
        return pa.table(columns)


def statistic_columns(
    table: pa.Table, exclude: Iterable[str] = ("n", "index", "seed")
) -> list[str]:
    """Floating point columns of ``table`` other than ``exclude``."""
    excluded = set(exclude)
    return [
        field.name
        for field in table.schema
        if field.name not in excluded and pa.types.is_floating(field.type)
    ]


def median_by_n(table: pa.Table, columns: Sequence[str] | None = None) -> pa.Table:
    """Tidy table of the median and count of each statistic at each ``n``.

    >>> table = pa.table({"n": [8, 8, 16], "index": [0, 1, 0], "ks": [1.0, 3.0, 0.5]})
    >>> median_by_n(table).to_pydict()
    {'n': [8, 16], 'statistic': ['ks', 'ks'], 'median': [2.0, 0.5], 'count': [2, 1]}

    :param table: A results table with an ``n`` column.
    :param columns: The statistics to summarize, every floating point column by default.
    """
    if columns is None:
        columns = statistic_columns(table)
    parts = []
    for column in columns:
        summary = GroupedSummary(
            "n",
            {"median": MedianAggregation(column), "count": CountAggregation(column)},
        ).apply(table)
        parts.append(
            pa.table(
                {
                    "n": summary.column("n"),
                    "statistic": pa.array([column] * summary.num_rows, type=pa.string()),
                    "median": summary.column("median").cast(pa.float64()),
                    "count": summary.column("count").cast(pa.int64()),
                }
            )
        )
    if not parts:
        return pa.table(
            {
                "n": pa.array([], type=pa.int64()),
                "statistic": pa.array([], type=pa.string()),
                "median": pa.array([], type=pa.float64()),
                "count": pa.array([], type=pa.int64()),
            }
        )
    return pa.concat_tables(parts).sort_by([("n", "ascending"), ("statistic", "ascending")])


def quantile_summary(
    values: np.ndarray | Sequence[float], levels: Sequence[float] = SUMMARY_QUANTILES
) -> dict[str, float | None]:
    """Quantiles of a sample keyed like ``q05``, ``q50``, ``q95``.

    >>> quantile_summary([1.0, 2.0, 3.0, 4.0, 5.0], levels=(0.25, 0.5))
    {'q25': 2.0, 'q50': 3.0}
    """
    table = pa.table({"key": [0] * len(values), "value": pa.array(values, type=pa.float64())})
    aggregations: dict[str, Aggregation] = {
        f"q{round(level * 100):02d}": QuantileAggregation("value", level) for level in levels
    }
    if len(values) == 0:
        return {name: None for name in aggregations}
    summary = GroupedSummary("key", aggregations).apply(table)
    return {name: summary.column(name)[0].as_py() for name in aggregations}
