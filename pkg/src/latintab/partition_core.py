"""Partitions, Young-diagram geometry, dominance order and wideness."""

from __future__ import annotations

from collections import Counter
from itertools import accumulate, product
from math import comb

from .errors import PartitionError


class Partition(tuple):
    """A non-increasing tuple of positive integers.

    Doubles as the shape of a Young diagram: ``parts[i]`` is the number of
    boxes in row ``i`` (0-based internally).
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise PartitionError(f"part {i + 1} must be a positive integer, got {p!r}", index=i + 1)
            if i and p > parts[i - 1]:
                raise PartitionError(
                    f"parts must be non-increasing: part {i + 1} ({p}) exceeds part {i} ({parts[i - 1]})",
                    index=i + 1,
                )
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return ",".join(map(str, self))

    @property
    def total(self) -> int:
        return sum(self)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)


def parse_shape(text: str) -> Partition:
    """Parse ``"4,3,3"`` into a partition.

    Diagnostics name the offending 1-based index.
    """
    text = text.strip()
    if not text:
        raise PartitionError("empty shape")
    parts = []
    for i, tok in enumerate(text.split(",")):
        tok = tok.strip()
        try:
            parts.append(int(tok))
        except ValueError:
            raise PartitionError(f"part {i + 1} is not an integer: {tok!r}", index=i + 1) from None
    return Partition(parts)


def transpose(shape) -> Partition:
    shape = Partition(shape)
    if not shape:
        return Partition()
    return Partition(sum(1 for p in shape if p > j) for j in range(shape[0]))


def dominates(mu, nu) -> bool:
    """True iff every prefix sum of ``mu`` is at least that of ``nu``."""
    mu, nu = Partition(mu), Partition(nu)
    if mu.total != nu.total:
        raise PartitionError(
            f"dominance compares partitions of the same n, got {mu.total} and {nu.total}"
        )
    length = max(len(mu), len(nu))
    pm = accumulate(tuple(mu) + (0,) * (length - len(mu)))
    pn = accumulate(tuple(nu) + (0,) * (length - len(nu)))
    return all(a >= b for a, b in zip(pm, pn))


def subpartitions(shape) -> set[Partition]:
    """All value-distinct partitions obtained by deleting some parts (never all)."""
    counts = sorted(Counter(Partition(shape)).items(), reverse=True)
    out = set()
    for keep in product(*(range(k + 1) for _, k in counts)):
        parts = [v for (v, _), n in zip(counts, keep) for _ in range(n)]
        if parts:
            out.add(Partition(parts))
    return out


def is_wide(shape) -> bool:
    return all(dominates(mu, transpose(mu)) for mu in subpartitions(shape))


def _max_multiplicity(parts) -> int:
    return max(Counter(parts).values(), default=0)


def is_squareable(shape) -> bool:
    """No three rows and no three columns of the same length."""
    shape = Partition(shape)
    return _max_multiplicity(shape) < 3 and _max_multiplicity(transpose(shape)) < 3


def same_length_pairs(shape) -> tuple[int, int]:
    """``(a, b)``: number of pairs of equal-length rows and of equal-length columns."""
    shape = Partition(shape)
    a = sum(comb(k, 2) for k in Counter(shape).values())
    b = sum(comb(k, 2) for k in Counter(transpose(shape)).values())
    return a, b


def partitions_of(n: int):
    """Partitions of ``n`` in reverse lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if n == 0:
        yield Partition()
        return

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, n):
        yield Partition(parts)


def partitions_up_to(max_boxes: int):
    """All partitions with 1..max_boxes boxes, grouped by size."""
    for n in range(1, max_boxes + 1):
        yield from partitions_of(n)


def staircase(n: int) -> Partition:
    return Partition(range(n, 0, -1))
