"""JSON, DOT and ASCII renderings of a QuotientGraph."""

from __future__ import annotations

import json

from .quotient import GAMMA, QuotientGraph, Vertex, VertexLabel


def _lab_dict(v: VertexLabel) -> dict:
    return {"n": v.n, "primed": v.primed}


def to_dict(g: QuotientGraph) -> dict:
    return {
        "q": g.q,
        "d": g.d,
        "variant": g.variant,
        "window": g.window,
        "vertices": [
            {
                "n": v.label.n,
                "primed": v.label.primed,
                "stabilizer_order": v.stabilizer_order,
                "stabilizer_inherited": v.inherited,
                "frontier": v.frontier,
            }
            for v in sorted(g.vertices.values(), key=lambda v: v.label)
        ],
        "edges": [
            {"a": _lab_dict(a), "b": _lab_dict(b), "mult": k}
            for (a, b), k in sorted(g.edges.items())
        ],
    }


def to_json(g: QuotientGraph) -> str:
    return json.dumps(to_dict(g), indent=2)


def from_dict(data: dict) -> QuotientGraph:
    g = QuotientGraph(data["q"], data["d"], data["variant"], data["window"])
    for v in data["vertices"]:
        lab = VertexLabel(v["n"], v["primed"])
        g.vertices[lab] = Vertex(lab, v["stabilizer_order"], v["frontier"], v.get("stabilizer_inherited", False))
    for e in data["edges"]:
        a = VertexLabel(e["a"]["n"], e["a"]["primed"])
        b = VertexLabel(e["b"]["n"], e["b"]["primed"])
        k = int(e["mult"])
        if k < 1:
            raise ValueError(f"edge multiplicity must be >= 1, got {k}")
        if a == b and g.variant == GAMMA:
            raise ValueError("loops are only allowed in gamma-tilde output")
        g.edges[tuple(sorted((a, b)))] = k
    g._check()
    return g


def from_json(text: str) -> QuotientGraph:
    return from_dict(json.loads(text))


def _dot_id(v: VertexLabel) -> str:
    return f'"X{v.n}p"' if v.primed else f'"X{v.n}"'


def to_dot(g: QuotientGraph) -> str:
    """One edge statement per bundle, labelled with its multiplicity."""
    lines = [f"graph quotient_q{g.q}_d{g.d} {{", f'  label="{g.variant} q={g.q} d={g.d} window={g.window}";']
    for v in sorted(g.vertices.values(), key=lambda v: v.label):
        style = ", style=dashed" if v.frontier else ""
        lines.append(f'  {_dot_id(v.label)} [label="{v.label}"{style}];')
    for (a, b), k in sorted(g.edges.items()):
        lines.append(f'  {_dot_id(a)} -- {_dot_id(b)} [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _chains(g: QuotientGraph) -> list[list[VertexLabel]]:
    d = g.d
    even = g.d % 2 == 0
    starts = [v for v in sorted(g.vertices) if v.n < d]
    rows = []
    for s in starts:
        row, cur = [], s
        while cur in g.vertices:
            row.append(cur)
            primed = (not cur.primed) if (even and g.variant == GAMMA) else cur.primed
            cur = VertexLabel(cur.n + d, primed)
        rows.append(row)
    return rows


def to_ascii(g: QuotientGraph) -> str:
    """Chain rows X_r - X_{r+d} - ... followed by the remaining bundles."""
    out = [f"{g.variant} quotient, q={g.q}, d={g.d}, window={g.window}"]
    chain_edges = set()
    out.append("chains:")
    for row in _chains(g):
        text = " - ".join(str(v) for v in row)
        if row and g.vertices[row[-1]].frontier:
            text += " ..."
        out.append("  " + text)
        chain_edges |= {tuple(sorted(p)) for p in zip(row, row[1:])}
    out.append("bundles:")
    for (a, b), k in sorted(g.edges.items()):
        if (a, b) in chain_edges and k == 1:
            continue
        out.append(f"  {a} -- {b}" + (f"  x{k}" if k > 1 else ""))
    return "\n".join(out) + "\n"
