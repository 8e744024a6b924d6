"""Brute-force oracle: count statistics by enumerating whole groups.

This module never touches the recursion code.  It enumerates every
element of Z_r wr S_n, computes each statistic from its definition
(through stats.summarize, which re-asserts the decomposition identity on
every element) and tallies exact counts:

* joint table of (color sum, exc_A),
* joint table of (number of nonzero colors, exc_A),
* the distribution of exc, tallied directly rather than derived.

Work can be split across processes: the enumeration order groups
elements by the first window value, so the n slices are disjoint,
cover the group, and merge by plain addition.
"""

from __future__ import annotations

import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

from .perm import GroupParams, enumerate_group
from .stats import summarize
from .tables import JointTable

#: Group orders above this raise eyebrows; enumeration proceeds after a warning.
FEASIBILITY_LIMIT = 10**8


@dataclass
class OracleReport:
    """Tallies from one full enumeration of Z_r wr S_n."""

    r: int
    n: int
    size: int
    joint_by_csum: JointTable
    joint_by_colored_count: JointTable
    exc_row: list[int]
    elapsed_seconds: float


class TableDiff(NamedTuple):
    """One disagreeing cell between two joint tables."""

    i: int
    k: int
    left: int
    right: int


def _count_slice(r: int, n: int, first_value: int | None):
    """Tally one enumeration slice; returns plain dicts and a list."""
    by_csum: dict[tuple[int, int], int] = {}
    by_colored: dict[tuple[int, int], int] = {}
    exc_row = [0] * (r * n)
    params = GroupParams(r, n)
    for p in enumerate_group(params, first_value=first_value):
        s = summarize(p)
        key = (s.csum, s.exc_A)
        by_csum[key] = by_csum.get(key, 0) + 1
        colored = n - p.colors.count(0)
        key = (colored, s.exc_A)
        by_colored[key] = by_colored.get(key, 0) + 1
        exc_row[s.exc] += 1
    return by_csum, by_colored, exc_row


def brute_tables(r: int, n: int, workers: int | None = None) -> OracleReport:
    """Enumerate Z_r wr S_n and tally all three distributions.

    ``workers`` > 1 splits the enumeration by first window value across
    that many processes (capped at n); the result is identical to the
    serial one.  Emits a RuntimeWarning when the group order exceeds
    FEASIBILITY_LIMIT, then proceeds.
    """
    params = GroupParams(r, n)
    size = params.size
    if size > FEASIBILITY_LIMIT:
        warnings.warn(
            f"enumerating Z_{r} wr S_{n} means {size} elements, "
            f"above the feasibility limit {FEASIBILITY_LIMIT}",
            RuntimeWarning,
            stacklevel=2,
        )
    started = time.perf_counter()
    if workers is not None and workers > 1 and n > 1:
        slices = []
        with ProcessPoolExecutor(max_workers=min(workers, n)) as pool:
            slices = list(
                pool.map(_count_slice, [r] * n, [n] * n, range(1, n + 1))
            )
    else:
        slices = [_count_slice(r, n, None)]

    by_csum: dict[tuple[int, int], int] = {}
    by_colored: dict[tuple[int, int], int] = {}
    exc_row = [0] * (r * n)
    for slice_csum, slice_colored, slice_exc in slices:
        for key, count in slice_csum.items():
            by_csum[key] = by_csum.get(key, 0) + count
        for key, count in slice_colored.items():
            by_colored[key] = by_colored.get(key, 0) + count
        for k, count in enumerate(slice_exc):
            exc_row[k] += count
    elapsed = time.perf_counter() - started

    table_csum = JointTable(r, n)
    for (i, k), count in by_csum.items():
        table_csum.add(i, k, count)
    table_colored = JointTable(r, n)
    for (i, k), count in by_colored.items():
        table_colored.add(i, k, count)
    return OracleReport(
        r=r,
        n=n,
        size=size,
        joint_by_csum=table_csum,
        joint_by_colored_count=table_colored,
        exc_row=exc_row,
        elapsed_seconds=elapsed,
    )


def compare(left: JointTable, right: JointTable) -> list[TableDiff]:
    """Cells where two same-shape tables disagree, sorted by (i, k).

    An empty list means the tables are identical.  Tables for different
    (r, n) cannot be meaningfully compared and raise ValueError.
    """
    if left.r != right.r or left.n != right.n:
        raise ValueError(
            f"table shapes differ: (r={left.r}, n={left.n}) vs (r={right.r}, n={right.n})"
        )
    diffs = []
    for (i, k), count in left.items():
        other = right.get(i, k)
        if count != other:
            diffs.append(TableDiff(i, k, count, other))
    return diffs
