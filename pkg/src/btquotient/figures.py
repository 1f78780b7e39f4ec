"""Published drawings of the quotient for d = 1..7, transcribed as edge lists.

Each drawing shows a finite piece of the Gamma quotient; edges leaving the
drawn piece are dotted there and not listed here.  Multiplicities are
functions of q.  The d = 6 drawing is kept as printed, although it does not
agree with the theorem's edge counts; :func:`compare_figure` reports where.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quotient import GAMMA, VertexLabel, build_quotient


def _lab(s: str) -> VertexLabel:
    return VertexLabel(int(s[1:].rstrip("'")), s.endswith("'"))


def _one(q):
    return 1


@dataclass(frozen=True)
class Figure:
    d: int
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, object], ...]

    def labels(self) -> set[VertexLabel]:
        return {_lab(v) for v in self.vertices}

    def edge_counts(self, q: int) -> dict[tuple[VertexLabel, VertexLabel], int]:
        out = {}
        for u, v, mult in self.edges:
            out[tuple(sorted((_lab(u), _lab(v))))] = mult(q)
        return out


def _path(*names):
    return tuple((a, b, _one) for a, b in zip(names, names[1:]))


FIGURES = {
    1: Figure(1, ("X0", "X1", "X2", "X3", "X4"), _path("X0", "X1", "X2", "X3", "X4")),
    2: Figure(
        2,
        ("X4", "X2'", "X0", "X0'", "X2", "X4'"),
        _path("X4", "X2'", "X0", "X0'", "X2", "X4'"),
    ),
    3: Figure(
        3,
        ("X8", "X5", "X2", "X1", "X4", "X7", "X0", "X3", "X6"),
        _path("X8", "X5", "X2", "X1", "X4", "X7") + _path("X1", "X0", "X3", "X6"),
    ),
    4: Figure(
        4,
        ("X10'", "X6", "X2'", "X2", "X6'", "X10", "X8", "X4'", "X0", "X0'", "X4", "X8'"),
        _path("X10'", "X6", "X2'", "X2", "X6'", "X10")
        + _path("X2", "X0'", "X4", "X8'")
        + _path("X2'", "X0", "X4'", "X8")
        + (("X0", "X0'", lambda q: q),),
    ),
    5: Figure(
        5,
        ("X13", "X8", "X3", "X2", "X7", "X12", "X10", "X5", "X0", "X1", "X6", "X11",
         "X4", "X9", "X14"),
        _path("X13", "X8", "X3", "X2", "X7", "X12")
        + _path("X14", "X9", "X4", "X1", "X6", "X11")
        + _path("X3", "X0", "X5", "X10")
        + (("X0", "X1", lambda q: q ** 2), ("X1", "X2", lambda q: q + 1)),
    ),
    6: Figure(
        6,
        ("X14'", "X8", "X2'", "X4", "X10'", "X16", "X12", "X6'", "X0", "X0'", "X6", "X12'",
         "X16'", "X10", "X4'", "X2", "X8'", "X14"),
        _path("X2", "X4'") + _path("X2'", "X4")
        + _path("X4", "X10'", "X16") + _path("X2'", "X8", "X14'")
        + _path("X0'", "X6", "X12'") + _path("X0", "X6'", "X12")
        + _path("X2", "X8'", "X14") + _path("X4'", "X10", "X16'")
        + (
            ("X4", "X0'", lambda q: q ** 2),
            ("X0'", "X2", lambda q: q ** 4),
            ("X4'", "X0", lambda q: q ** 2),
            ("X0", "X2'", lambda q: q ** 4),
            ("X4", "X4'", lambda q: q + 1),
            ("X0'", "X0", lambda q: q ** 3 - q ** 2 + q),
        ),
    ),
    7: Figure(
        7,
        ("X19", "X12", "X5", "X2", "X9", "X16", "X14", "X7", "X0", "X3", "X10", "X17",
         "X15", "X8", "X1", "X4", "X11", "X18", "X20", "X13", "X6"),
        _path("X19", "X12", "X5") + _path("X2", "X9", "X16")
        + _path("X14", "X7", "X0") + _path("X3", "X10", "X17")
        + _path("X15", "X8", "X1") + _path("X4", "X11", "X18")
        + _path("X20", "X13", "X6", "X1")
        + _path("X3", "X4") + _path("X0", "X5", "X2")
        + (
            ("X2", "X3", lambda q: q + 1),
            ("X4", "X1", lambda q: q + 1),
            ("X1", "X0", lambda q: q ** 4),
            ("X2", "X1", lambda q: q ** 3 + q ** 2),
            ("X3", "X0", lambda q: q ** 2),
        ),
    ),
}


def compare_figure(d: int, q: int) -> list[dict]:
    """Differences between the drawing for d and the built Gamma quotient.

    Only edges with both ends among the drawn vertices are compared.  Returns
    one record per disagreeing vertex pair; an empty list means agreement.
    """
    fig = FIGURES[d]
    labels = fig.labels()
    window = max(v.n for v in labels)
    g = build_quotient(q, d, max(window, d), GAMMA)
    missing = labels - set(g.vertices)
    if missing:
        raise AssertionError(f"drawn vertices missing from the quotient: {sorted(missing)}")
    drawn = fig.edge_counts(q)
    built = g.induced(labels)
    out = []
    for e in sorted(set(drawn) | set(built)):
        if drawn.get(e, 0) != built.get(e, 0):
            out.append({"pair": f"{e[0]}-{e[1]}", "figure": drawn.get(e, 0), "theorem": built.get(e, 0)})
    return out
