"""Exhaustive checking of the structural statements about isotopy graphs.

Every filling of every partition in range is visited once per component.
Failures are collected, never raised, so one bad shape does not hide others.
Components too large for a check are reported as skipped with the reason.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .enumeration import count_fillings
from .errors import ComponentTooLarge, InvariantViolation
from .isotopy_graph import (
    DEFAULT_CAP,
    IsotopyGraph,
    clique_number,
    find_triangles,
    full_graph,
    is_cube,
    isotopy_group_order,
    label_classes_global,
    symmetric_pairs,
    symmetric_pairs_structural,
    triangle_conditions,
    triangle_witnesses,
    degree_formula,
)
from .partition_core import Partition, is_squareable, partitions_up_to
from .tableau import COL, ENT, ROW, generators

CHECKS = (
    "regularity",
    "orbit-stabilizer",
    "degree-formula",
    "symmetric-pairs",
    "clique",
    "triangle",
    "same-type",
    "four-clique",
    "cube-criterion",
    "label-classes",
)
# Not a statement of record; exposes a step of the triangle argument.
OPTIONAL_CHECKS = ("entries-in-four",)
GRAPH_CHECKS = frozenset({"clique", "triangle", "same-type", "four-clique"})
DEFAULT_GRAPH_LIMIT = 50_000
SQUARE_44 = Partition((4, 4))


@dataclass(frozen=True)
class Failure:
    check: str
    shape: str
    tableau: str
    detail: str


@dataclass
class VerificationSummary:
    description: str
    checks_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    skipped: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "VerificationSummary") -> None:
        self.checks_run += other.checks_run
        self.failures.extend(other.failures)
        self.skipped.extend(other.skipped)

    def failed_shapes(self, check: str | None = None) -> list[str]:
        seen = []
        for f in self.failures:
            if (check is None or f.check == check) and f.shape not in seen:
                seen.append(f.shape)
        return seen


class _Run:
    def __init__(self, shape: Partition, out: VerificationSummary):
        self.shape = str(shape)
        self.out = out

    def check(self, name, ok, tableau="", detail=""):
        self.out.checks_run += 1
        if not ok:
            self.out.failures.append(Failure(name, self.shape, str(tableau), detail))

    def skip(self, reason):
        self.out.skipped.append((self.shape, reason))


def _vertices_in_triangles(triangles) -> set[int]:
    return {v for t in triangles for v in t}


def _conditions_imply_action(T) -> list[str]:
    """Triples meeting the structural conditions for which ``r c T != s T``."""
    gens = generators(T.shape)
    rs = [g for g in gens if g.kind == ROW]
    cs = [g for g in gens if g.kind == COL]
    ss = [g for g in gens if g.kind == ENT]
    bad = []
    for r, c, s in product(rs, cs, ss):
        w = triangle_conditions(T, r, c, s)
        if w.structural_conditions and r.act(c.act(T.rows)) != s.act(T.rows):
            bad.append(f"{r} {c} {s}")
    return bad


def _check_component(G: IsotopyGraph, checks, graph_limit: int, run: _Run) -> None:
    shape = G.shape
    base = G.basepoint
    n = len(G)
    degrees = G.degrees()
    regular = bool((degrees == degrees[0]).all()) if n else True
    if "regularity" in checks:
        run.check(
            "regularity",
            regular,
            base,
            "" if regular else f"degrees range {int(degrees.min())}..{int(degrees.max())}",
        )
    if "orbit-stabilizer" in checks:
        total = isotopy_group_order(shape)
        run.check("orbit-stabilizer", total % n == 0, base, f"|S| = {total}, component {n}")

    per_vertex = {"degree-formula", "symmetric-pairs", "cube-criterion"} & set(checks)
    if per_vertex:
        squareable = is_squareable(shape)
        cube = is_cube(G) is not None if "cube-criterion" in checks else None
        stab = isotopy_group_order(shape) // n
        for u, T in enumerate(G.vertices):
            pairs = symmetric_pairs(T)
            if "degree-formula" in checks:
                expected = degree_formula(T, pairs)
                got = int(degrees[u])
                run.check("degree-formula", got == expected, T, f"graph degree {got}, a+2b-p = {expected}")
            if "symmetric-pairs" in checks:
                structural = symmetric_pairs_structural(T)
                run.check("symmetric-pairs", sorted(pairs) == structural, T, f"{pairs} vs {structural}")
            if "cube-criterion" in checks:
                verdict = squareable and stab == 2 ** len(pairs)
                run.check(
                    "cube-criterion",
                    verdict == cube,
                    T,
                    f"criterion {verdict} (stabilizer {stab}, p = {len(pairs)}), cube {cube}",
                )

    if "label-classes" in checks and is_squareable(shape):
        run.check("label-classes", label_classes_global(G), base, "label classes differ between vertices")

    wanted = GRAPH_CHECKS & set(checks) | ({"entries-in-four"} & set(checks))
    if not wanted:
        return
    if n > graph_limit:
        run.skip(f"{', '.join(sorted(wanted))} skipped for component of {base}: {n} vertices > limit {graph_limit}")
        return

    triangles = find_triangles(G)
    if "clique" in checks:
        try:
            omega = clique_number(G)
            run.check("clique", omega in (1, 2, 4), base, f"clique number {omega}")
        except InvariantViolation as exc:
            run.check("clique", False, base, str(exc))
    if "same-type" in checks and shape != SQUARE_44:
        for tri in triangles:
            kinds = [G.edge(a, b).kinds for a, b in combinations(tri, 2)]
            clash = any(x & y for x, y in combinations(kinds, 2))
            run.check("same-type", not clash, G.vertices[tri[0]], f"triangle {tri} edge kinds {kinds}")
    if "four-clique" in checks:
        adj = G.adjacency
        for u, v, w in triangles:
            run.check("four-clique", bool(adj[u] & adj[v] & adj[w]), G.vertices[u], f"triangle {(u, v, w)}")
    if "triangle" in checks or "entries-in-four" in checks:
        in_tri = _vertices_in_triangles(triangles)
        for u, T in enumerate(G.vertices):
            wit = triangle_witnesses(T)
            if "entries-in-four" in checks:
                bad = [w for w in wit if not w.entries_in_four]
                run.check("entries-in-four", not bad, T, "; ".join(f"{w.r} {w.c} {w.s}" for w in bad))
            if "triangle" not in checks:
                continue
            has = u in in_tri
            good = any(w.structural_conditions for w in wit)
            run.check(
                "triangle",
                has == bool(wit) == good,
                T,
                f"in triangle {has}, witnesses {len(wit)}, with conditions {good}",
            )
            weak = [w for w in wit if not w.structural_conditions]
            run.check("triangle", not weak, T, "; ".join(f"{w.r} {w.c} {w.s}" for w in weak))
            bad = _conditions_imply_action(T)
            run.check("triangle", not bad, T, "conditions hold but rc(T) != s(T): " + "; ".join(bad))


def verify_shape(shape, checks=CHECKS, cap: int = DEFAULT_CAP, graph_limit: int = DEFAULT_GRAPH_LIMIT):
    """Run ``checks`` on every component of ``shape``."""
    shape = Partition(shape)
    out = VerificationSummary(str(shape))
    run = _Run(shape, out)
    try:
        comps = full_graph(shape, cap=cap)
    except ComponentTooLarge as exc:
        run.skip(f"all checks skipped: component exceeds cap {exc.cap}")
        return out
    if "orbit-stabilizer" in checks:
        # every filling lies in exactly one component
        total = count_fillings(shape)
        run.check("orbit-stabilizer", sum(map(len, comps)) == total, "", f"{total} fillings")
    for G in comps:
        _check_component(G, checks, graph_limit, run)
    return out


def _verify_one(args):
    shape, checks, cap, graph_limit = args
    return verify_shape(shape, checks, cap, graph_limit)


def verify_theorems(
    max_boxes: int,
    checks=CHECKS,
    shapes=None,
    cap: int = DEFAULT_CAP,
    graph_limit: int = DEFAULT_GRAPH_LIMIT,
    jobs: int = 1,
    min_boxes: int = 1,
) -> VerificationSummary:
    """Check every filling of every partition with ``min_boxes..max_boxes`` boxes.

    ``shapes`` (a predicate on partitions) narrows the range.  Results are
    merged in canonical shape order regardless of ``jobs``.
    """
    unknown = set(checks) - set(CHECKS) - set(OPTIONAL_CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
    todo = [s for s in partitions_up_to(max_boxes) if s.total >= min_boxes and (shapes is None or shapes(s))]
    summary = VerificationSummary(f"partitions with {min_boxes}..{max_boxes} boxes, checks: {', '.join(checks)}")
    args = [(s, tuple(checks), cap, graph_limit) for s in todo]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_one, args))
    else:
        results = map(_verify_one, args)
    for r in results:
        summary.merge(r)
    return summary
