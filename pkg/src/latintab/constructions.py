"""Named tableau families: cube tableaux, the symmetric block family, and the triangle catalog."""

from __future__ import annotations

from dataclasses import dataclass, field

from .partition_core import Partition, staircase
from .tableau import LatinTableau, validate

_SMALL_TD = {
    0: ((1,),),
    1: ((1, 2),),
    2: ((3, 1, 2), (1, 2)),
    3: ((2, 4, 3, 1), (4, 3, 1, 2), (3, 1, 2), (1, 2)),
}


def _even_row(k: int) -> tuple[int, ...]:
    # 2k-1, 2k-3, ..., 3, 1, 2, 4, ..., 2k
    return tuple(range(2 * k - 1, 0, -2)) + tuple(range(2, 2 * k + 1, 2))


def build_Td(d: int) -> LatinTableau:
    """A tableau whose isotopy graph is the ``d``-dimensional cube.

    Even ``d >= 4``: ``d/2`` rows of lengths ``d, d-2, ..., 2``.  Odd ``d > 3``:
    one extra top row of length ``d - 1`` above the even tableau for ``d - 1``.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    if d in _SMALL_TD:
        rows = _SMALL_TD[d]
    elif d % 2 == 0:
        rows = tuple(_even_row(k) for k in range(d // 2, 0, -1))
    else:
        top = (d - 1,) + tuple(range(d - 2, 0, -2)) + tuple(range(2, d - 2, 2))
        rows = (top,) + build_Td(d - 1).rows
    return validate([len(r) for r in rows], rows)


def symmetric_family_shape(k: int) -> Partition:
    """``(2k, 2k, 2k-2, 2k-2, ..., 2, 2)``."""
    return Partition(n for m in range(k, 0, -1) for n in (2 * m, 2 * m))


def build_symmetric_family(k: int) -> LatinTableau:
    """Filling of ``(2k, 2k, ..., 2, 2)`` whose 2x2 blocks all read ``x y / y x``.

    A pair of rows of length ``2m`` reads ``2m, 2m-1, ..., 1`` over
    ``2m-1, 2m, ..., 1, 2``.  For ``k = 1`` the filling is ``12 / 21``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return validate((2, 2), ((1, 2), (2, 1)))
    rows = []
    for m in range(k, 0, -1):
        top = tuple(range(2 * m, 0, -1))
        rows.append(top)
        rows.append(tuple(x for i in range(0, 2 * m, 2) for x in (top[i + 1], top[i])))
    return validate(symmetric_family_shape(k), rows)


def staircase_filling(n: int) -> LatinTableau:
    """Lexicographically first filling of the staircase ``(n, n-1, ..., 1)``."""
    from .enumeration import first_filling

    return first_filling(staircase(n))


@dataclass(frozen=True)
class CatalogEntry:
    """One triangle example.

    ``raw`` keeps the example as printed (``...`` marks extendable rows);
    ``tableau`` is the chosen finite instance.  ``key_rows``/``key_cols`` are
    the 1-based rows and columns whose swaps span the advertised triangle.
    """

    name: str
    raw: str
    tableau: LatinTableau
    key_rows: tuple[int, int]
    key_cols: tuple[int, int]
    expected: dict = field(default_factory=lambda: {"has_triangle": True, "clique_number": 4})
    note: str = ""


def _entry(name, raw, rows, key_rows, key_cols, note=""):
    rows = tuple(tuple(int(c) for c in r) for r in rows.split(","))
    t = validate([len(r) for r in rows], rows)
    return CatalogEntry(name, raw, t, key_rows, key_cols, note=note)


def appendix_catalog() -> list[CatalogEntry]:
    """Every printed triangle example, instantiated at its smallest extension."""
    return [
        _entry("(4,4,2,2) split", "3412...,4321,12,21", "3412,4321,12,21", (3, 4), (3, 4)),
        _entry(
            "(6,6,2,2) split",
            "534...12...,34......21,12,21",
            "534612,346521,12,21",
            (3, 4),
            (5, 6),
            note="the gaps are filled with 6 and 5 so that rows 1-2 have length 6",
        ),
        _entry("(3,3,2) block", "231,312,12", "231,312,12", (1, 2), (1, 2)),
        _entry("(4,4,3,2) block", "3412,4321,123,21", "3412,4321,123,21", (1, 2), (1, 2)),
        _entry("(3,3) block", "213,321", "213,321", (1, 2), (2, 3)),
        _entry("(3,3,1) block", "213,321,1", "213,321,1", (1, 2), (2, 3)),
        _entry("(4,4,3) block", "2143,3412,123", "2143,3412,123", (1, 2), (2, 3)),
        _entry("(4,4) block", "3412,4321", "3412,4321", (1, 2), (3, 4)),
        _entry("(4,4,1) block", "3412,4321,1", "3412,4321,1", (1, 2), (3, 4)),
        _entry("(4,4,2) block", "3412,4321,12", "3412,4321,12", (1, 2), (3, 4)),
        _entry("(4,4,2,1) block", "3412,4321,21,1", "3412,4321,21,1", (1, 2), (3, 4)),
        _entry("(4,2,2) block", "3412...,12,21", "3412,12,21", (2, 3), (1, 2)),
        _entry("(3,3,3) block", "132...,213,321", "132,213,321", (2, 3), (2, 3)),
        _entry("(4,3,3,1) block", "4321...,213,321,1", "4321,213,321,1", (2, 3), (2, 3)),
        _entry("(4,4,4,3) block", "4213...,2341,1432,312", "4213,2341,1432,312", (2, 3), (2, 3)),
        _entry("(4,4,4) block", "1234...,3412,4321", "1234,3412,4321", (2, 3), (3, 4)),
        _entry("(4,4,4,2) block", "1234...,3412,4321,21", "1234,3412,4321,21", (2, 3), (3, 4)),
        _entry(
            "(5,4,4,2,1) block", "52341...,3412,4321,21,1", "52341,3412,4321,21,1", (2, 3), (3, 4)
        ),
        _entry(
            "(6,4,4,2,2) block",
            "563412...,3412,4321,21,12",
            "563412,3412,4321,21,12",
            (2, 3),
            (3, 4),
            note="printed twice in the source list; kept once",
        ),
        _entry("(5,4,2,2) block", "34521...,4321...,12,21", "34521,4321,12,21", (3, 4), (1, 2)),
        _entry("(4,4,4,4) square", "1234,2143,3412,4321", "1234,2143,3412,4321", (3, 4), (3, 4)),
        _entry("(5,4,4,4) block", "52341...,2143...,3412,4321", "52341,2143,3412,4321", (3, 4), (3, 4)),
        _entry(
            "(5,4,4,4,1) block",
            "52341...,2143...,3412,4321,1",
            "52341,2143,3412,4321,1",
            (3, 4),
            (3, 4),
        ),
        _entry("(5,5,4,4,2) block", "25341,51432,3412,4321,12", "25341,51432,3412,4321,12", (3, 4), (3, 4)),
        _entry(
            "(6,4,4,4,2) block",
            "563412...,2143...,3412,4321,12",
            "563412,2143,3412,4321,12",
            (3, 4),
            (3, 4),
        ),
        _entry(
            "(6,5,4,4,2,1) block",
            "653421...,52431...,3412,4321,21,1",
            "653421,52431,3412,4321,21,1",
            (3, 4),
            (3, 4),
        ),
        _entry(
            "(6,6,4,4,2,2) block",
            "653421,564312,3412,4321,21,12",
            "653421,564312,3412,4321,21,12",
            (3, 4),
            (3, 4),
        ),
        _entry(
            "(7,6,4,4,2,2) block",
            "6534721...,564321...,3412,4321,21,12",
            "6534721,564321,3412,4321,21,12",
            (3, 4),
            (3, 4),
        ),
    ]
