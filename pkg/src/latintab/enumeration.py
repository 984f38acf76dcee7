"""Exhaustive generation of Latin fillings and Wide Partition Conjecture checks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice

from .partition_core import Partition, is_wide, partitions_up_to
from .tableau import LatinTableau, _trusted

MAX_WPC_BOXES = 64


def _fillings(shape: Partition, bottom_up: bool = False):
    # Cells in row-major order; smallest legal entry first gives lexicographic output.
    # Bottom-up order visits the short, most constrained rows first; used only
    # where order does not matter.
    row_order = range(len(shape) - 1, -1, -1) if bottom_up else range(len(shape))
    cells = [(i, j) for i in row_order for j in range(shape[i])]
    ncols = shape[0] if shape else 0
    row_free = [set(range(1, n + 1)) for n in shape]
    col_used = [set() for _ in range(ncols)]
    grid = [[0] * n for n in shape]
    last = len(cells)

    def rec(k):
        if k == last:
            yield tuple(tuple(r) for r in grid)
            return
        i, j = cells[k]
        free, used = row_free[i], col_used[j]
        for v in sorted(free - used):
            free.discard(v)
            used.add(v)
            grid[i][j] = v
            yield from rec(k + 1)
            used.discard(v)
            free.add(v)

    yield from rec(0)


def enumerate_fillings(shape):
    """Yield every Latin tableau of ``shape`` once, in lexicographic order of fillings."""
    shape = Partition(shape)
    for rows in _fillings(shape):
        yield _trusted(rows, shape)


def count_fillings(shape) -> int:
    return sum(1 for _ in _fillings(Partition(shape)))


def is_fillable(shape) -> bool:
    return any(True for _ in islice(_fillings(Partition(shape), bottom_up=True), 1))


def first_filling(shape) -> LatinTableau | None:
    """The lexicographically smallest filling, if any."""
    return next(iter(enumerate_fillings(shape)), None)


@dataclass(frozen=True)
class WpcRecord:
    shape: Partition
    wide: bool
    fillable: bool
    filling_count: int | None  # None unless a full count was requested

    @property
    def consistent(self) -> bool:
        return self.wide == self.fillable


def verify_wpc(shape, count: bool = False) -> WpcRecord:
    """Compare wideness with fillability.  Fillability stops at the first filling
    unless ``count`` asks for the full enumeration."""
    shape = Partition(shape)
    wide = is_wide(shape)
    if count:
        n = count_fillings(shape)
        return WpcRecord(shape, wide, n > 0, n)
    fillable = is_fillable(shape)
    return WpcRecord(shape, wide, fillable, None)


def verify_wpc_range(max_boxes: int, count: bool = False, jobs: int = 1) -> list[WpcRecord]:
    """One record per partition with at most ``max_boxes`` boxes."""
    if max_boxes > MAX_WPC_BOXES:
        raise ValueError(f"max_boxes is bounded by {MAX_WPC_BOXES}")
    shapes = list(partitions_up_to(max_boxes))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        from functools import partial

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(partial(verify_wpc, count=count), shapes, chunksize=8))
    return [verify_wpc(s, count=count) for s in shapes]
