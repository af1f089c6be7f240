"""File formats and JSON (de)serialization.

Rationals are rendered as "p/q" strings ("p" for integers); never decimals.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .building import BuildingSet, Graph, make_building_set
from .errors import ParseError, RemovahedraError
from .geometry import HPolytope, Point
from .minkowski import MinkowskiWeights
from .nested import BTree, BTreeNode, NestedSet


def rational_str(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid rational {s!r}: {exc}") from None


def point_json(point: Point) -> list[str]:
    return [rational_str(x) for x in point]


# -- building set files -------------------------------------------------------


def parse_building_json(text: str) -> BuildingSet:
    """{"ground": ["1","2",...], "blocks": [["1"],["1","2"],...]}"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("top-level value must be an object")
    for key in ("ground", "blocks"):
        if key not in data:
            raise ParseError(f"missing key {key!r}")
    ground = data["ground"]
    blocks = data["blocks"]
    if not isinstance(ground, list) or not all(isinstance(g, str) for g in ground):
        raise ParseError('"ground" must be a list of strings')
    if not isinstance(blocks, list):
        raise ParseError('"blocks" must be a list of lists of strings')
    parsed = []
    for i, blk in enumerate(blocks):
        if not isinstance(blk, list) or not all(isinstance(e, str) for e in blk):
            raise ParseError(f'"blocks"[{i}] must be a list of strings')
        parsed.append(blk)
    return make_building_set(ground, parsed)


def building_json(b: BuildingSet) -> dict[str, Any]:
    return {
        "ground": list(b.ground),
        "blocks": [list(b.sorted_elems(m)) for m in b.masks],
    }


def parse_graph_text(text: str) -> Graph:
    """First line: whitespace-separated vertex names; then one edge "u v" per
    line.  Blank lines and #-comments are ignored."""
    lines = text.splitlines()
    vertices = None
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if vertices is None:
            vertices = line.split()
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected an edge 'u v', got {line!r}", line=lineno)
        edges.append(parts)
    if vertices is None:
        raise ParseError("empty graph file")
    try:
        return Graph(vertices, edges)
    except RemovahedraError as exc:
        raise ParseError(str(exc)) from None


# -- nested sets and trees ----------------------------------------------------


def nested_json(n: NestedSet) -> dict[str, Any]:
    b = n.owner
    return {"nested": [list(b.sorted_elems(m)) for m in n.masks]}


def tree_json(t: BTree) -> dict[str, Any]:
    b = t.owner

    def node(v: BTreeNode) -> dict[str, Any]:
        out: dict[str, Any] = {"label": list(b.sorted_elems(v.label))}
        if v.children:
            kids = sorted(v.children, key=lambda c: b.key(c.descendant))
            out["children"] = [node(c) for c in kids]
        return out

    return {"tree": node(t.root)}


# -- polytope descriptions ----------------------------------------------------


def hrep_json(p: HPolytope) -> dict[str, Any]:
    return {
        "sum": rational_str(p.sum_rhs),
        "constraints": [
            {"block": list(block), "rhs": rational_str(rhs)}
            for block, rhs in p.constraint_blocks()
        ],
    }


def vrep_json(entries: list[tuple[BTree, Point]]) -> dict[str, Any]:
    return {
        "vertices": [
            {"tree": tree_json(t)["tree"], "point": point_json(pt)}
            for t, pt in entries
        ]
    }


def weights_json(w: MinkowskiWeights) -> dict[str, Any]:
    return {
        "weights": [
            {"block": list(block), "y": rational_str(y)}
            for block, y in w.items_by_block()
        ]
    }
