from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from hypothesis import strategies as st

from latintab.enumeration import enumerate_fillings
from latintab.partition_core import Partition, partitions_up_to
from latintab.tableau import apply, generators, validate


def T(text: str):
    """Compact form "312,12" to a validated tableau."""
    rows = [[int(c) for c in r] for r in text.split(",")]
    return validate([len(r) for r in rows], rows)


def brute_force_fillings(shape):
    """Every Latin filling, by filtering the product of all row permutations."""
    out = []
    for rows in product(*(permutations(range(1, n + 1)) for n in shape)):
        cols_ok = all(
            len({r[j] for r in rows if len(r) > j}) == sum(1 for r in rows if len(r) > j)
            for j in range(shape[0])
        )
        if cols_ok:
            out.append(rows)
    return sorted(out)


def naive_component(t):
    """Orbit by repeated application of legal transforms, as a set of row tuples."""
    gens = generators(t.shape)
    seen = {t.rows}
    todo = [t]
    while todo:
        u = todo.pop()
        for g in gens:
            v = apply(g, u)
            if v.rows not in seen:
                seen.add(v.rows)
                todo.append(v)
    return seen


def naive_neighbours(t):
    return {apply(g, t).rows for g in generators(t.shape)} - {t.rows}


@lru_cache(maxsize=None)
def fillings_of(shape):
    return tuple(enumerate_fillings(shape))


SMALL_FILLABLE = tuple(s for s in partitions_up_to(7) if fillings_of(s))


@st.composite
def partitions(draw, max_boxes=12):
    n = draw(st.integers(1, max_boxes))
    parts = []
    left = n
    while left:
        cap = min(left, parts[-1]) if parts else left
        p = draw(st.integers(1, cap))
        parts.append(p)
        left -= p
    return Partition(parts)


@st.composite
def tableaux(draw, shapes=SMALL_FILLABLE):
    shape = draw(st.sampled_from(shapes))
    fills = fillings_of(shape)
    return fills[draw(st.integers(0, len(fills) - 1))]
