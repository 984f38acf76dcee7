"""Text, DOT and JSON serialization.

All output is deterministic: vertex order is discovery order, keys are
written in a fixed order and no floating-point values appear anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields

from . import __version__
from .errors import ParseError
from .isotopy_graph import AnalysisReport, IsotopyGraph, analyze
from .partition_core import Partition
from .tableau import LatinTableau, validate

# --- tableau text ------------------------------------------------------------


def parse_tableau(text: str) -> LatinTableau:
    """One row per line, entries separated by spaces; blank lines ignored at the end."""
    lines = text.replace("\r\n", "\n").split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError(1, 1, "empty tableau")
    rows = []
    for ln, line in enumerate(lines, start=1):
        if not line.strip():
            raise ParseError(ln, 1, "blank line inside tableau")
        row = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col) + 1
            try:
                row.append(int(tok))
            except ValueError:
                raise ParseError(ln, col, f"not an integer: {tok!r}") from None
            col += len(tok) - 1
        if rows and len(row) > len(rows[-1]):
            raise ParseError(ln, 1, f"row {ln} is longer than row {ln - 1}; rows must be non-increasing")
        rows.append(row)
    return validate([len(r) for r in rows], rows)


def render_tableau(tableau: LatinTableau) -> str:
    return "".join(" ".join(map(str, r)) + "\n" for r in tableau.rows)


def parse_tableaux(text: str) -> list[LatinTableau]:
    """Several tableaux separated by blank lines (the ``enumerate`` output format)."""
    out = []
    for block in text.replace("\r\n", "\n").split("\n\n"):
        if block.strip():
            out.append(parse_tableau(block.strip("\n")))
    return out


# --- DOT ---------------------------------------------------------------------


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def edge_label(labels) -> str:
    return "=".join(map(str, labels))


def _dot_body(graph: IsotopyGraph, offset: int, indent: str) -> list[str]:
    out = []
    for i, T in enumerate(graph.vertices):
        text = "\n".join(" ".join(map(str, r)) for r in T.rows)
        out.append(f"{indent}v{i + offset} [label={_dot_quote(text)}];")
    for e in graph.edges:
        out.append(f"{indent}v{e.u + offset} -- v{e.v + offset} [label={_dot_quote(edge_label(e.labels))}];")
    return out


def render_dot(graph: IsotopyGraph, name: str = "isotopy") -> str:
    out = [f"graph {name} {{", *_dot_body(graph, 0, "  "), "}"]
    return "\n".join(out) + "\n"


def render_dot_many(graphs, name: str = "isotopy") -> str:
    """Several components in one undirected graph, one cluster each; ids continue across components."""
    out = [f"graph {name} {{"]
    offset = 0
    for k, G in enumerate(graphs):
        out.append(f"  subgraph cluster_{k} {{")
        out.extend(_dot_body(G, offset, "    "))
        out.append("  }")
        offset += len(G)
    out.append("}")
    return "\n".join(out) + "\n"


# --- reports -----------------------------------------------------------------


@dataclass(frozen=True)
class Report:
    """An analysis together with what produced it."""

    tool_version: str
    shape: str
    basepoint: tuple[tuple[int, ...], ...]
    analysis: AnalysisReport

    @classmethod
    def of(cls, tableau: LatinTableau, graph: IsotopyGraph | None = None) -> "Report":
        return cls(__version__, str(tableau.shape), tableau.rows, analyze(tableau, graph))

    def to_dict(self) -> dict:
        a = self.analysis
        body = {}
        for f in fields(AnalysisReport):
            v = getattr(a, f.name)
            if f.name == "shape":
                v = list(v)
            elif f.name == "symmetric_pairs":
                v = [[list(c), list(e)] for c, e in v]
            body[f.name] = v
        return {
            "tool_version": self.tool_version,
            "shape_text": self.shape,
            "basepoint": [list(r) for r in self.basepoint],
            **body,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        kw = {f.name: d[f.name] for f in fields(AnalysisReport)}
        kw["shape"] = Partition(kw["shape"])
        kw["symmetric_pairs"] = tuple((tuple(c), tuple(e)) for c, e in kw["symmetric_pairs"])
        return cls(
            d["tool_version"],
            d["shape_text"],
            tuple(tuple(r) for r in d["basepoint"]),
            AnalysisReport(**kw),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


def graph_to_dict(graph: IsotopyGraph, report: Report | None = None) -> dict:
    """``{shape, vertices, edges, report}`` with 1-based vertex indices."""
    if report is None:
        report = Report.of(graph.basepoint, graph)
    return {
        "shape": list(graph.shape),
        "vertices": [[list(r) for r in T.rows] for T in graph.vertices],
        "edges": [{"u": e.u + 1, "v": e.v + 1, "labels": [str(t) for t in e.labels]} for e in graph.edges],
        "report": report.to_dict(),
    }


def render_graph_json(graph: IsotopyGraph, report: Report | None = None) -> str:
    return json.dumps(graph_to_dict(graph, report), indent=1) + "\n"


def describe_report(report: Report) -> str:
    """Human-readable multi-line summary."""
    a = report.analysis
    pairs = ", ".join(f"c({c[0]},{c[1]})=s({e[0]},{e[1]})" for c, e in a.symmetric_pairs) or "none"
    cube = "no" if a.cube_dimension is None else f"yes, dimension {a.cube_dimension}"
    lines = [
        f"shape            {report.shape}",
        f"basepoint        {','.join(''.join(map(str, r)) if max(r) < 10 else ' '.join(map(str, r)) for r in report.basepoint)}",
        f"component size   {a.component_size}",
        f"degree           {a.degree}",
        f"a + 2b - p       {a.degree_formula}",
        f"symmetric pairs  {pairs}",
        f"stabilizer order {a.stabilizer_order}",
        f"has triangle     {'yes' if a.has_triangle else 'no'}",
        f"clique number    {a.clique_number}",
        f"cube             {cube}",
    ]
    return "\n".join(lines) + "\n"

