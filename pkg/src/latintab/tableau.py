"""Latin tableaux and the elementary transformations acting on them.

A Latin tableau of shape ``lam`` fills row ``i`` with a permutation of
``1..lam[i]`` so that no column repeats an entry.  Rows, columns and entry
values are numbered from 1 in everything user-visible; the row tuples are
0-indexed Python sequences as usual.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from operator import itemgetter

from .errors import ColumnRepeat, IllegalTransform, RowNotPermutation, ShapeMismatch
from .partition_core import Partition, transpose

ROW, COL, ENT = "r", "c", "s"
KINDS = (ROW, COL, ENT)
_KIND_RANK = {k: i for i, k in enumerate(KINDS)}

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LatinTableau:
    """A validated Latin filling.  Construct through :func:`validate`."""

    rows: Rows
    shape: Partition = field(compare=False, repr=False)

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def __str__(self):
        return ",".join("".join(map(str, r)) if max(r) < 10 else " ".join(map(str, r)) for r in self.rows)

    def __lt__(self, other):
        return self.rows < other.rows

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def column(self, j: int) -> tuple[int, ...]:
        """Entries of 1-based column ``j``, top to bottom."""
        return tuple(r[j - 1] for r in self.rows if len(r) >= j)


def _trusted(rows: Rows, shape: Partition | None = None) -> LatinTableau:
    if shape is None:
        shape = Partition(len(r) for r in rows)
    return LatinTableau(rows, shape)


def validate(shape, rows) -> LatinTableau:
    """Check a raw filling against ``shape`` and return it as a tableau."""
    shape = Partition(shape)
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    if len(rows) != len(shape):
        raise ShapeMismatch(
            min(len(rows), len(shape)) + 1,
            f"shape has {len(shape)} rows but the filling has {len(rows)}",
        )
    for i, (r, n) in enumerate(zip(rows, shape), start=1):
        if len(r) != n:
            raise ShapeMismatch(i, f"row {i} has {len(r)} entries, shape requires {n}")
        if sorted(r) != list(range(1, n + 1)):
            raise RowNotPermutation(i, r)
    for j in range(shape[0] if shape else 0):
        seen = {}
        for i, r in enumerate(rows):
            if len(r) <= j:
                break
            v = r[j]
            if v in seen:
                raise ColumnRepeat(j + 1, v, (seen[v] + 1, i + 1))
            seen[v] = i
    return _trusted(rows, shape)


def content(tableau: LatinTableau) -> Partition:
    """Multiplicities of the entries 1, 2, ...; always the transpose of the shape."""
    counts = Counter(tableau.flat)
    return Partition(counts[v] for v in range(1, max(counts, default=0) + 1))


@dataclass(frozen=True, order=False)
class ElementaryTransform:
    """Transposition of two rows (``r``), columns (``c``) or entry values (``s``).

    ``p < q`` are 1-based.
    """

    kind: str
    p: int
    q: int

    def __post_init__(self):
        if self.kind not in _KIND_RANK:
            raise ValueError(f"unknown transform kind {self.kind!r}")
        if not 1 <= self.p < self.q:
            raise ValueError(f"transform pair must satisfy 1 <= p < q, got ({self.p},{self.q})")

    def __str__(self):
        return f"{self.kind}({self.p},{self.q})"

    def sort_key(self):
        return (_KIND_RANK[self.kind], self.p, self.q)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def is_legal(self, shape) -> bool:
        shape = Partition(shape)
        lengths = shape if self.kind == ROW else transpose(shape)
        # entry i occurs lam'_i times, so entry legality is read off the transpose
        return self.q <= len(lengths) and lengths[self.p - 1] == lengths[self.q - 1]

    def act(self, rows: Rows) -> Rows:
        """Apply to raw rows without any legality check."""
        p, q = self.p - 1, self.q - 1
        if self.kind == ROW:
            out = list(rows)
            out[p], out[q] = out[q], out[p]
            return tuple(out)
        if self.kind == COL:
            out = []
            for r in rows:
                if len(r) > q:
                    r = list(r)
                    r[p], r[q] = r[q], r[p]
                    r = tuple(r)
                out.append(r)
            return tuple(out)
        a, b = self.p, self.q
        return tuple(tuple(b if x == a else a if x == b else x for x in r) for r in rows)


def parse_transform(text: str) -> ElementaryTransform:
    """Parse ``"c(1,2)"``; pairs given in either order are normalized."""
    s = text.strip().replace(" ", "")
    if len(s) < 6 or s[0] not in _KIND_RANK or s[1] != "(" or s[-1] != ")":
        raise ValueError(f"cannot parse transform {text!r}")
    try:
        p, q = (int(x) for x in s[2:-1].split(","))
    except ValueError:
        raise ValueError(f"cannot parse transform {text!r}") from None
    return ElementaryTransform(s[0], min(p, q), max(p, q))


@lru_cache(maxsize=None)
def _generators(shape: Partition) -> tuple[ElementaryTransform, ...]:
    cols = transpose(shape)
    out = []
    for kind, lengths in ((ROW, shape), (COL, cols), (ENT, cols)):
        for i, j in combinations(range(len(lengths)), 2):
            if lengths[i] == lengths[j]:
                out.append(ElementaryTransform(kind, i + 1, j + 1))
    return tuple(out)


def flatten(rows) -> tuple[int, ...]:
    return tuple(x for r in rows for x in r)


def unflatten(flat, shape: Partition) -> Rows:
    out = []
    k = 0
    for n in shape:
        out.append(tuple(flat[k:k + n]))
        k += n
    return tuple(out)


def _position_perm(shape: Partition, t: ElementaryTransform) -> list[int]:
    # image[k] = flat[perm[k]]
    offsets = [0]
    for n in shape:
        offsets.append(offsets[-1] + n)
    perm = list(range(offsets[-1]))
    p, q = t.p - 1, t.q - 1
    if t.kind == ROW:
        for j in range(shape[p]):
            perm[offsets[p] + j], perm[offsets[q] + j] = offsets[q] + j, offsets[p] + j
    else:
        for i, n in enumerate(shape):
            if n > q:
                perm[offsets[i] + p], perm[offsets[i] + q] = offsets[i] + q, offsets[i] + p
    return perm


def _value_table(t: ElementaryTransform, top: int) -> list[int]:
    table = list(range(top + 1))
    table[t.p], table[t.q] = t.q, t.p
    return table


def _position_map(shape: Partition, t: ElementaryTransform):
    return itemgetter(*_position_perm(shape, t))


def _value_map(t: ElementaryTransform, top: int):
    get = tuple(_value_table(t, top)).__getitem__
    return lambda flat: tuple(map(get, flat))


@lru_cache(maxsize=None)
def flat_actions(shape: Partition) -> tuple[tuple[ElementaryTransform, object], ...]:
    """Generators paired with functions acting on row-major flat fillings.

    Row and column swaps become position permutations, entry swaps value maps.
    """
    shape = Partition(shape)
    out = []
    for t in _generators(shape):
        fn = _value_map(t, shape[0]) if t.kind == ENT else _position_map(shape, t)
        out.append((t, fn))
    return tuple(out)


def generators(shape) -> list[ElementaryTransform]:
    """Every legal transposition: rows, then columns, then entries, each lexicographic."""
    return list(_generators(Partition(shape)))


def apply(t: ElementaryTransform, tableau: LatinTableau) -> LatinTableau:
    if not t.is_legal(tableau.shape):
        raise IllegalTransform(f"{t} is not defined for shape {tableau.shape}")
    return _trusted(t.act(tableau.rows), tableau.shape)


def apply_word(word, tableau: LatinTableau) -> LatinTableau:
    """Apply transforms left to right: the first element acts first."""
    for t in word:
        tableau = apply(t, tableau)
    return tableau
