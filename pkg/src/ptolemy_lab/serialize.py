"""JSON and DOT wire formats shared by the CLI and the HTTP service.

Every emitter goes through ``dumps`` so the two front ends produce byte
identical output for the same request.  Parsing is strict: anything that is
not a canonically typed document is rejected with a ParseError rather than
coerced.
"""
from __future__ import annotations

import json
from typing import Any

from .errors import ParseError
from .homs import ar_quiver
from .mutation import CoverMutationReport, MutationReport
from .polygon import Pair, Polygon
from .ptolemy import (
    Diagram,
    borders_two_empty_cells,
    cell_decomposition,
    dissecting_diagonals,
    extension_closed_oracle,
    is_ptolemy,
)
from .weak_ar import WeakARTriangle, ext_projectives, left_weak_ar, right_weak_ar


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _expect_int(value: Any, what: str) -> int:
    # bool is an int subclass; true/false must not pass as vertices
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def parse_document(data: Any) -> Diagram:
    """Decoded JSON object -> Diagram, rejecting every malformed shape."""
    if not isinstance(data, dict):
        raise ParseError("document must be a JSON object")
    if "polygon_size" not in data:
        raise ParseError("document is missing polygon_size")
    size = _expect_int(data["polygon_size"], "polygon_size")
    if size < 4:
        raise ParseError(f"polygon_size must be at least 4, got {size}")
    raw = data.get("diagonals")
    if not isinstance(raw, list):
        raise ParseError("diagonals must be a list of vertex pairs")
    polygon = Polygon(size)
    seen: set[Pair] = set()
    for item in raw:
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"diagonal entries must be two-element lists, got {item!r}")
        u = _expect_int(item[0], "vertex")
        v = _expect_int(item[1], "vertex")
        if not (0 <= u < size and 0 <= v < size):
            raise ParseError(f"vertex out of range for a {size}-gon: {item!r}")
        try:
            d = polygon.diagonal(u, v)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        if d in seen:
            raise ParseError(f"duplicate diagonal {sorted(item)}")
        seen.add(d)
    return Diagram(polygon, frozenset(seen))


def parse_diagonal(polygon: Polygon, data: Any) -> Pair:
    """Decoded JSON pair -> canonical diagonal of the given polygon."""
    if not isinstance(data, list) or len(data) != 2:
        raise ParseError(f"diagonal must be a two-element list, got {data!r}")
    u = _expect_int(data[0], "vertex")
    v = _expect_int(data[1], "vertex")
    if not (0 <= u < polygon.size and 0 <= v < polygon.size):
        raise ParseError(f"vertex out of range for a {polygon.size}-gon: {data!r}")
    try:
        return polygon.diagonal(u, v)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def loads_document(text: str) -> Diagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return parse_document(data)


def document_dict(diagram: Diagram) -> dict[str, Any]:
    return {
        "polygon_size": diagram.polygon.size,
        "diagonals": [list(d) for d in diagram.sorted_diagonals()],
    }


def triangle_dict(polygon: Polygon, triangle: WeakARTriangle) -> dict[str, Any]:
    """Wire form of a weak triangle; zero (edge) summands are omitted."""
    return {
        "direction": triangle.direction.value,
        "outside": list(triangle.outside),
        "middle": [
            list(b) for b in sorted(triangle.middles) if polygon.is_diagonal(b)
        ],
        "member": list(triangle.member),
    }


def analysis_report(diagram: Diagram) -> dict[str, Any]:
    """Full diagram analysis as one JSON-ready dict.

    The Ptolemy verdict and the extension-closure oracle are computed
    independently and both emitted; they can only disagree on a broken
    build, so disagreement aborts instead of emitting a contradiction.
    """
    direct = is_ptolemy(diagram)
    oracle = extension_closed_oracle(diagram)
    if direct != oracle:
        raise RuntimeError(
            f"closure routes diverge on {diagram.sorted_diagonals()}: "
            f"connectors={direct}, middles={oracle}"
        )
    polygon = diagram.polygon
    projectives = sorted(ext_projectives(diagram))
    return {
        "ptolemy": direct,
        "extension_closed": oracle,
        "dissecting": [list(d) for d in sorted(dissecting_diagonals(diagram))],
        "cells": [
            {"vertices": list(cell.vertices), "kind": cell.kind.value}
            for cell in cell_decomposition(diagram).cells
        ],
        "ext_projectives": [list(d) for d in projectives],
        "weak_ar_left": [
            triangle_dict(polygon, left_weak_ar(diagram, c)) for c in projectives
        ],
        "weak_ar_right": [
            triangle_dict(polygon, right_weak_ar(diagram, c)) for c in projectives
        ],
        "mutable_two_empty_cells": [
            list(c) for c in projectives if borders_two_empty_cells(diagram, c)
        ],
    }


def cover_report_dict(report: CoverMutationReport) -> dict[str, Any]:
    return {
        "cover_subcategory": [list(d) for d in report.cover_subcategory],
        "cover_summands": [list(d) for d in report.cover_summands],
        "cover_in_subcategory": report.cover_in_subcategory,
        "cover_is_precover": report.cover_is_precover,
        "cover_is_right_minimal": report.cover_is_right_minimal,
        "cocone_of_cover": list(report.cocone_of_cover),
        "equals_inserted": report.equals_inserted,
        "reason": report.reason,
    }


def mutation_report_dict(report: MutationReport) -> dict[str, Any]:
    cover = report.cover_mutation
    return {
        "input": document_dict(report.input),
        "removed": list(report.removed),
        "inserted": list(report.inserted),
        "result": document_dict(report.result),
        "extension_closed": report.extension_closed,
        "criterion_two_empty_cells": report.criterion_two_empty_cells,
        "inserted_ext_projective_in_result": report.inserted_ext_projective_in_result,
        "cover_mutation": cover_report_dict(cover) if cover is not None else None,
    }


def quiver_dict(size: int) -> dict[str, Any]:
    quiver = ar_quiver(Polygon(size))
    return {
        "polygon_size": size,
        "nodes": [list(d) for d in sorted(quiver.nodes)],
        "arrows": [
            [list(src), list(dst)] for src, dst in sorted(quiver.arrows)
        ],
    }


def quiver_dot(size: int) -> str:
    """The same quiver as GraphViz input; node ids are "u_v", labels "u-v"."""
    quiver = ar_quiver(Polygon(size))
    lines = ["digraph ar_quiver {"]
    for u, v in sorted(quiver.nodes):
        lines.append(f'  "{u}_{v}" [label="{u}-{v}"];')
    for (u, v), (x, y) in sorted(quiver.arrows):
        lines.append(f'  "{u}_{v}" -> "{x}_{y}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
