"""Isotopy graphs: orbit components under elementary transformations and their invariants.

Vertices of a component are tableaux reachable from a basepoint; two vertices
are joined by a single edge carrying every transformation that relates them.
"""

from __future__ import annotations

from array import array
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from math import factorial, prod

import numpy as np

from .errors import (
    ComponentTooLarge,
    CliqueTheoremViolation,
    CriterionMismatch,
    InexactDivision,
    NonRegularComponent,
)
from .partition_core import Partition, is_squareable, same_length_pairs, transpose
from .tableau import (
    COL,
    ENT,
    ROW,
    ElementaryTransform,
    LatinTableau,
    _generators,
    _position_perm,
    _trusted,
    _value_table,
    flat_actions,
    unflatten,
)

DEFAULT_CAP = 2**20
BRUTE_FORCE_CLIQUE_LIMIT = 4096


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    labels: tuple[ElementaryTransform, ...]

    @property
    def kinds(self) -> frozenset[str]:
        return frozenset(t.kind for t in self.labels)


@dataclass(frozen=True, eq=False)
class IsotopyGraph:
    """One connected component.  Vertex ids are BFS discovery ranks (0-based).

    ``fillings[u]`` is vertex ``u`` as a row-major flat filling and
    ``images[u, k]`` the id of the vertex reached from ``u`` by
    ``generators[k]``; edges and their label sets are derived from these.
    """

    shape: Partition
    generators: tuple[ElementaryTransform, ...]
    fillings: np.ndarray = field(repr=False)
    images: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.fillings)

    @cached_property
    def flat_vertices(self) -> tuple[tuple[int, ...], ...]:
        return tuple(map(tuple, self.fillings.tolist()))

    @cached_property
    def vertices(self) -> tuple[LatinTableau, ...]:
        return tuple(_trusted(unflatten(f, self.shape), self.shape) for f in self.flat_vertices)

    @property
    def basepoint(self) -> LatinTableau:
        return self.vertices[0]

    @cached_property
    def index(self) -> dict[LatinTableau, int]:
        return {t: i for i, t in enumerate(self.vertices)}

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        gens = self.generators
        out = []
        for u, row in enumerate(self.images.tolist()):
            by_target: dict[int, list[ElementaryTransform]] = {}
            for k, v in enumerate(row):
                if v > u:
                    by_target.setdefault(v, []).append(gens[k])
            out.extend(Edge(u, v, tuple(ls)) for v, ls in sorted(by_target.items()))
        return tuple(out)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) - {u} for u, row in enumerate(self.images.tolist()))

    @cached_property
    def edge_map(self) -> dict[tuple[int, int], Edge]:
        return {(e.u, e.v): e for e in self.edges}

    def edge(self, u: int, v: int) -> Edge | None:
        return self.edge_map.get((u, v) if u < v else (v, u))

    def degrees(self) -> np.ndarray:
        n, g = self.images.shape
        if g == 0:
            return np.zeros(n, dtype=np.int64)
        s = np.sort(self.images, axis=1)
        distinct = 1 + (s[:, 1:] != s[:, :-1]).sum(axis=1)
        loops = (self.images == np.arange(n)[:, None]).any(axis=1)
        return distinct - loops


def _component_scalar(start, shape, cap):
    actions = flat_actions(shape)
    index = {start: 0}
    order = [start]
    images = array("i")
    head = 0
    while head < len(order):
        flat = order[head]
        head += 1
        row = []
        for _, fn in actions:
            nxt = fn(flat)
            v = index.get(nxt)
            if v is None:
                if len(order) >= cap:
                    raise ComponentTooLarge(cap)
                v = index[nxt] = len(order)
                order.append(nxt)
            row.append(v)
        images.extend(row)
    table = np.frombuffer(images, dtype=np.int32).reshape(len(order), len(actions))
    return np.array(order, dtype=np.int16).reshape(len(order), len(start)), table


_CHUNK = 1 << 15


def _component_vectorized(start, shape, cap, bits):
    gens = _generators(shape)
    n = len(start)
    top = shape[0]
    # one fancy-index per generator: positions for r/c, a value table for s
    perms = [np.arange(n) if g.kind == ENT else np.array(_position_perm(shape, g)) for g in gens]
    tables = [np.array(_value_table(g, top), dtype=np.int16) if g.kind == ENT else None for g in gens]
    weights = (np.int64(1) << (bits * np.arange(n, dtype=np.int64)))

    def keys(arr):
        return arr.astype(np.int64) @ weights

    fill = [np.array([start], dtype=np.int16)]
    total = 1
    known_keys = keys(fill[0])
    known_ids = np.zeros(1, dtype=np.int64)
    image_rows = []
    head = 0
    all_fill = fill[0]
    while head < total:
        if head >= len(all_fill):
            all_fill = np.concatenate(fill)
            fill = [all_fill]
        block = all_fill[head:min(total, head + _CHUNK)]
        head += len(block)
        cand = np.empty((len(block), len(gens), n), dtype=np.int16)
        for k, (perm, table) in enumerate(zip(perms, tables)):
            cand[:, k, :] = table[block] if table is not None else block[:, perm]
        cand = cand.reshape(-1, n)
        ck = keys(cand)
        # sorted needles make the binary searches cache friendly
        srt = np.argsort(ck)
        pos = np.empty(len(ck), dtype=np.int64)
        pos[srt] = np.searchsorted(known_keys, ck[srt])
        pos[pos == len(known_keys)] = 0
        found = known_keys[pos] == ck
        fresh = np.flatnonzero(~found)
        ids = np.empty(len(ck), dtype=np.int64)
        ids[found] = known_ids[pos[found]]
        if len(fresh):
            uk, first, inverse = np.unique(ck[fresh], return_index=True, return_inverse=True)
            # new vertices get ids in order of first appearance, as in a scalar queue
            rank = np.empty(len(uk), dtype=np.int64)
            rank[np.argsort(first, kind="stable")] = np.arange(len(uk))
            if total + len(uk) > cap:
                raise ComponentTooLarge(cap)
            ids[fresh] = total + rank[inverse]
            new_fill = np.empty((len(uk), n), dtype=np.int16)
            new_fill[rank] = cand[fresh[first]]
            fill.append(new_fill)
            merged = np.concatenate([known_keys, uk])
            order = np.argsort(merged, kind="stable")
            known_keys = merged[order]
            known_ids = np.concatenate([known_ids, total + rank])[order]
            total += len(uk)
        image_rows.append(ids.reshape(len(block), len(gens)).astype(np.int32))
    fillings = np.concatenate(fill) if len(fill) > 1 else fill[0]
    return fillings, np.concatenate(image_rows)


def component(tableau: LatinTableau, cap: int = DEFAULT_CAP) -> IsotopyGraph:
    """Breadth-first closure of ``tableau`` under the generators of its shape.

    The queue is processed in discovery order and generators in their
    canonical order, so vertex ids are reproducible.
    """
    shape = tableau.shape
    gens = _generators(shape)
    start = tableau.flat
    if not gens:
        return IsotopyGraph(shape, gens, np.array([start], dtype=np.int16), np.zeros((1, 0), dtype=np.int32))
    bits = max(shape[0].bit_length(), 1)
    if bits * len(start) <= 63:
        fillings, images = _component_vectorized(start, shape, cap, bits)
    else:
        fillings, images = _component_scalar(start, shape, cap)
    return IsotopyGraph(shape, gens, fillings, images)


def full_graph(shape, cap: int = DEFAULT_CAP) -> list[IsotopyGraph]:
    """All components of the isotopy graph of ``shape``, ordered by their minimal filling."""
    from .enumeration import enumerate_fillings

    seen = set()
    out = []
    for t in enumerate_fillings(shape):
        if t.flat in seen:
            continue
        g = component(t, cap=cap)
        seen.update(g.flat_vertices)
        out.append(g)
    return out


# --- degrees -----------------------------------------------------------------


@lru_cache(maxsize=None)
def _entry_swaps(shape) -> dict:
    return {(g.p, g.q): fn for g, fn in flat_actions(shape) if g.kind == ENT}


def symmetric_pairs(tableau: LatinTableau) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Column pairs ``(i, j)`` and entry pairs ``(x, y)`` with ``c(i,j) T == s(x,y) T``."""
    flat = tableau.flat
    ents = _entry_swaps(tableau.shape)
    out = []
    for g, fn in flat_actions(tableau.shape):
        if g.kind != COL:
            continue
        # s(x,y) must carry the entry at (1,p) to the one at (1,q)
        x, y = flat[g.p - 1], flat[g.q - 1]
        key = (min(x, y), max(x, y))
        swap = ents.get(key)
        if swap is not None and swap(flat) == fn(flat):
            out.append(((g.p, g.q), key))
    return out


def symmetric_pairs_structural(tableau: LatinTableau) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Symmetric pairs read off the shape and filling, without applying any transform.

    Columns of length one beyond the second row holding two entries that occur
    once, or columns of length two beyond the third row forming an ``x y / y x``
    block of entries that occur twice.
    """
    shape = tableau.shape
    rows = tableau.rows
    lam = tuple(shape) + (0, 0, 0)
    out = []
    # length-one columns: lam[1] < j <= lam[0]; entries > lam[1] occur once
    for i, j in combinations(range(lam[1], lam[0]), 2):
        x, y = rows[0][i], rows[0][j]
        if x > lam[1] and y > lam[1]:
            out.append(((i + 1, j + 1), (min(x, y), max(x, y))))
    # length-two columns: lam[2] < j <= lam[1]; entries in (lam[2], lam[1]] occur twice
    for i, j in combinations(range(lam[2], lam[1]), 2):
        x, y = rows[0][i], rows[0][j]
        if x > lam[2] and y > lam[2] and rows[1][i] == y and rows[1][j] == x:
            out.append(((i + 1, j + 1), (min(x, y), max(x, y))))
    return sorted(out)


def degree_formula(tableau: LatinTableau, pairs=None) -> int:
    """``a + 2b - p``; pass ``pairs`` to reuse an already computed list of symmetric pairs."""
    a, b = same_length_pairs(tableau.shape)
    if pairs is None:
        pairs = symmetric_pairs(tableau)
    return a + 2 * b - len(pairs)


def vertex_degree(graph: IsotopyGraph) -> int:
    """Common degree of all vertices; raises if the component is not regular."""
    degrees = graph.degrees()
    lo, hi = int(degrees.min()), int(degrees.max())
    if lo != hi:
        raise NonRegularComponent(f"component of {graph.basepoint} has degrees from {lo} to {hi}")
    return lo


# --- group orders ------------------------------------------------------------


def isotopy_group_order(shape) -> int:
    """Order of S_row x S_col x S_ent for ``shape``."""
    shape = Partition(shape)
    rows = prod(factorial(k) for k in Counter(shape).values())
    cols = prod(factorial(k) for k in Counter(transpose(shape)).values())
    return rows * cols * cols


def stabilizer_order(tableau: LatinTableau, graph: IsotopyGraph | None = None) -> int:
    """Order of the autotopy group of ``tableau``, by orbit-stabilizer."""
    if graph is None:
        graph = component(tableau)
    total = isotopy_group_order(tableau.shape)
    q, r = divmod(total, len(graph))
    if r:
        raise InexactDivision(f"|S| = {total} is not divisible by component size {len(graph)}")
    return q


# --- triangles and cliques ---------------------------------------------------


def find_triangles(graph: IsotopyGraph) -> list[tuple[int, int, int]]:
    """Vertex triples ``u < v < w`` that are pairwise adjacent."""
    adj = graph.adjacency
    out = []
    for u, nu in enumerate(adj):
        for v in sorted(x for x in nu if x > u):
            for w in sorted(x for x in nu & adj[v] if x > v):
                out.append((u, v, w))
    return out


CORNER_PATTERNS = ("bb/bb", "ab/ba", "ba/ab")


@dataclass(frozen=True)
class TriangleWitness:
    """Transforms ``r``, ``c``, ``s`` and the structural conditions they satisfy.

    ``outside`` -- boxes in the two rows but not the two columns, and vice
    versa, hold only the swapped entries; ``isolated`` -- the swapped entries
    occur nowhere else; ``corner`` -- the four intersection boxes match one of
    :data:`CORNER_PATTERNS` (``None`` when rows and columns do not intersect,
    in which case the condition holds vacuously).
    """

    r: ElementaryTransform
    c: ElementaryTransform
    s: ElementaryTransform
    entries_in_four: bool
    outside: bool
    isolated: bool
    corners_present: bool
    corner: str | None

    @property
    def corner_ok(self) -> bool:
        return not self.corners_present or self.corner is not None

    @property
    def structural_conditions(self) -> bool:
        """Conditions on rows/columns, isolation and corners, without ``a1, a2 <= 4``."""
        return self.outside and self.isolated and self.corner_ok

    @property
    def conditions_hold(self) -> bool:
        return self.entries_in_four and self.structural_conditions


def _corner_pattern(x, y, z, w, a, b) -> str | None:
    # x y / z w at (i1,j1) (i1,j2) / (i2,j1) (i2,j2); a = swapped entries, b = [4] minus a
    if x == w and y == z and x in b and y in b:
        return "bb/bb"
    if y == z and y in b and {x, w} == a:
        return "ab/ba"
    if x == w and x in b and {y, z} == a:
        return "ba/ab"
    return None


def triangle_conditions(tableau: LatinTableau, r, c, s) -> TriangleWitness:
    """Evaluate the structural triangle conditions for one ``(r, c, s)`` triple."""
    rows = tableau.rows
    i1, i2 = r.p - 1, r.q - 1
    j1, j2 = c.p - 1, c.q - 1
    a = {s.p, s.q}
    b = set(range(1, 5)) - a
    in_rows = {i1, i2}
    in_cols = {j1, j2}
    outside = True
    isolated = True
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            hit_r, hit_c = i in in_rows, j in in_cols
            if hit_r != hit_c and x not in a:
                outside = False
            if not hit_r and not hit_c and x in a:
                isolated = False
    corners_present = len(rows[i2]) > j2
    corner = None
    if corners_present:
        corner = _corner_pattern(rows[i1][j1], rows[i1][j2], rows[i2][j1], rows[i2][j2], a, b)
    return TriangleWitness(r, c, s, s.q <= 4, outside, isolated, corners_present, corner)


def triangle_witnesses(tableau: LatinTableau) -> list[TriangleWitness]:
    """All legal ``(r, c, s)`` with ``r c T == s T``, annotated with the structural conditions."""
    acts = flat_actions(tableau.shape)
    rs = [(g, fn) for g, fn in acts if g.kind == ROW]
    cs = [(g, fn) for g, fn in acts if g.kind == COL]
    ents = _entry_swaps(tableau.shape)
    flat = tableau.flat
    out = []
    for c, cfn in cs:
        ct = cfn(flat)
        for r, rfn in rs:
            rct = rfn(ct)
            # the first box rc changes fixes the only candidate entry swap
            k = next((k for k, (x, y) in enumerate(zip(flat, rct)) if x != y), None)
            if k is None:
                continue
            key = (min(flat[k], rct[k]), max(flat[k], rct[k]))
            swap = ents.get(key)
            if swap is not None and swap(flat) == rct:
                s = ElementaryTransform(ENT, *key)
                out.append(triangle_conditions(tableau, r, c, s))
    return out


def max_clique_size(adjacency) -> int:
    """Bron-Kerbosch with pivoting; exact, meant for small graphs."""
    best = 0 if not adjacency else 1

    def expand(size, cand, excl):
        nonlocal best
        if not cand and not excl:
            best = max(best, size)
            return
        if size + len(cand) <= best:
            return
        pivot = max(cand | excl, key=lambda v: len(adjacency[v] & cand))
        # cand and excl are private to this call, so shrink them in place
        for v in list(cand - adjacency[pivot]):
            expand(size + 1, cand & adjacency[v], excl & adjacency[v])
            cand.discard(v)
            excl.add(v)

    expand(0, set(range(len(adjacency))), set())
    return best


def clique_number(graph: IsotopyGraph, brute_force_limit: int = BRUTE_FORCE_CLIQUE_LIMIT) -> int:
    """1 if edgeless, 4 if any triangle, else 2; cross-checked by exhaustive search on small components."""
    if not graph.edges:
        fast = 1
    elif find_triangles(graph):
        fast = 4
    else:
        fast = 2
    if len(graph) <= brute_force_limit:
        exact = max_clique_size(graph.adjacency)
        if exact != fast:
            raise CliqueTheoremViolation(
                f"component of {graph.basepoint}: classification gives {fast}, exhaustive search {exact}"
            )
    return fast


# --- cubes -------------------------------------------------------------------


def cube_coordinates(graph: IsotopyGraph) -> list[int] | None:
    """Bit-vector coordinates realizing ``graph`` as a hypercube, or ``None``.

    Neighbours of the basepoint get unit vectors; every deeper vertex gets the
    union of the coordinates of its neighbours one layer up.  The result is
    accepted only if it is a bijection onto ``{0,1}^d`` under which adjacency
    is exactly Hamming distance one.
    """
    n = len(graph)
    degrees = graph.degrees()
    d = int(degrees[0])
    if n != 1 << d or (degrees != d).any():
        return None
    adj = graph.adjacency
    dist = [-1] * n
    dist[0] = 0
    coord = [0] * n
    layer = [0]
    while layer:
        nxt = []
        for u in layer:
            for v in sorted(adj[u]):
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        for v in nxt:
            ups = [w for w in adj[v] if dist[w] == dist[v] - 1]
            if dist[v] == 1:
                coord[v] = 1 << len([w for w in adj[0] if w < v])
            else:
                if len(ups) != dist[v]:
                    return None
                bits = 0
                for w in ups:
                    bits |= coord[w]
                coord[v] = bits
            if bin(coord[v]).count("1") != dist[v]:
                return None
        layer = nxt
    if len(set(coord)) != n:
        return None
    for e in graph.edges:
        x = coord[e.u] ^ coord[e.v]
        if x & (x - 1):
            return None
    # n * d / 2 edges with Hamming-one endpoints on a bijection: exactly the cube
    if len(graph.edges) != n * d // 2:
        return None
    return coord


def is_cube(graph: IsotopyGraph) -> int | None:
    """Dimension ``d`` if the component is a ``d``-cube, else ``None``."""
    if cube_coordinates(graph) is None:
        return None
    return int(graph.degrees()[0])


def label_classes_global(graph: IsotopyGraph) -> bool:
    """True when generators acting identically at the basepoint do so at every vertex.

    Holds whenever all generators commute (squareable shapes).
    """
    base = {frozenset(e.labels) for e in graph.edges if 0 in (e.u, e.v)}
    return all(frozenset(e.labels) in base for e in graph.edges)


def cube_criterion(tableau: LatinTableau, graph: IsotopyGraph | None = None, check: bool = True) -> bool:
    """Squareable shape and autotopy group of order exactly ``2**p``.

    With ``check`` the answer is compared with direct cube recognition of the
    component and any disagreement raises :class:`CriterionMismatch`.
    """
    if graph is None:
        graph = component(tableau)
    verdict = is_squareable(tableau.shape) and stabilizer_order(tableau, graph) == 2 ** len(
        symmetric_pairs(tableau)
    )
    if check:
        direct = is_cube(graph) is not None
        if direct != verdict:
            raise CriterionMismatch(
                f"{tableau}: criterion says {verdict}, cube recognition says {direct}"
            )
    return verdict


# --- report ------------------------------------------------------------------


@dataclass(frozen=True)
class AnalysisReport:
    """Invariants of the component of one tableau.

    ``degree`` is read from the graph and ``degree_formula`` is ``a + 2b - p``;
    they are reported side by side rather than reconciled.
    """

    shape: Partition
    component_size: int
    degree: int
    degree_formula: int
    symmetric_pairs: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    stabilizer_order: int
    has_triangle: bool
    clique_number: int
    cube_dimension: int | None


def analyze(tableau: LatinTableau, graph: IsotopyGraph | None = None) -> AnalysisReport:
    if graph is None:
        graph = component(tableau)
    return AnalysisReport(
        shape=tableau.shape,
        component_size=len(graph),
        degree=vertex_degree(graph),
        degree_formula=degree_formula(tableau),
        symmetric_pairs=tuple(symmetric_pairs(tableau)),
        stabilizer_order=stabilizer_order(tableau, graph),
        has_triangle=bool(find_triangles(graph)),
        clique_number=clique_number(graph),
        cube_dimension=is_cube(graph),
    )
