"""Result tables and summaries.

Everything an experiment produces is a :class:`pyarrow.Table`: simulated
paths, one row per replication of an experiment, process traces and the
medians of each statistic by sample size. The reporting package
summarizes those tables and stores them, CSV for the tables and JSON for
the summaries:

>>> import pyarrow as pa
>>> from lrdpyground.reporting import median_by_n
>>> results = pa.table({"n": [64, 64, 256, 256], "ks": [1.0, 2.0, 0.5, 1.5]})
>>> median_by_n(results).column("median").to_pylist()
[1.5, 1.0]
"""

from .io import dumps, read_csv, stamp, write_csv, write_json
from .summaries import (
    SUMMARY_QUANTILES,
    Aggregation,
    CountAggregation,
    GroupedSummary,
    MeanAggregation,
    MedianAggregation,
    QuantileAggregation,
    median_by_n,
    statistic_columns,
    quantile_summary,
)

__all__ = (
    "dumps",
    "read_csv",
    "stamp",
    "write_csv",
    "write_json",
    "SUMMARY_QUANTILES",
    "Aggregation",
    "CountAggregation",
    "GroupedSummary",
    "MeanAggregation",
    "MedianAggregation",
    "QuantileAggregation",
    "median_by_n",
    "statistic_columns",
    "quantile_summary",
)
