"""Closed-form quotient graphs of PGL_2(O_{p}) acting on the Bruhat-Tits tree.

``GammaTilde`` is the quotient by the stabilizer of y_0 in PGL_2(k[t, 1/f]);
for odd d it coincides with ``Gamma``.  For even d its vertices are the X_n
with n even and ``Gamma`` is its bipartite double cover, with a primed copy
X_n' of every vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

GAMMA = "gamma"
GAMMA_TILDE = "gamma-tilde"
VARIANTS = (GAMMA, GAMMA_TILDE)


class VertexLabel(NamedTuple):
    n: int
    primed: bool = False

    def __str__(self):
        return f"X{self.n}'" if self.primed else f"X{self.n}"


@dataclass(frozen=True)
class Vertex:
    label: VertexLabel
    stabilizer_order: int
    frontier: bool = False
    inherited: bool = False


def _key(e):
    return tuple(sorted(e))


@dataclass
class QuotientGraph:
    q: int
    d: int
    variant: str
    window: int
    vertices: dict[VertexLabel, Vertex] = field(default_factory=dict)
    edges: dict[tuple[VertexLabel, VertexLabel], int] = field(default_factory=dict)

    def multiplicity(self, a: VertexLabel, b: VertexLabel) -> int:
        return self.edges.get(_key((a, b)), 0)

    @property
    def frontier(self) -> set[VertexLabel]:
        return {v.label for v in self.vertices.values() if v.frontier}

    def loops(self) -> dict[VertexLabel, int]:
        return {a: k for (a, b), k in self.edges.items() if a == b}

    def total_edges(self) -> int:
        return sum(self.edges.values())

    def degree(self, v: VertexLabel) -> int:
        """Edge ends at v, a loop counted once."""
        return sum(k for e, k in self.edges.items() if v in e)

    def is_bipartite_by_prime(self) -> bool:
        return all(a.primed != b.primed for a, b in self.edges)

    def induced(self, labels) -> dict[tuple[VertexLabel, VertexLabel], int]:
        labels = set(labels)
        return {e: k for e, k in self.edges.items() if e[0] in labels and e[1] in labels}

    def _check(self):
        for (a, b), k in self.edges.items():
            if k <= 0:
                raise AssertionError(f"nonpositive multiplicity on {a}-{b}")
            if a not in self.vertices or b not in self.vertices:
                raise AssertionError(f"edge {a}-{b} leaves the window")
        if self.d % 2 and self.loops():
            raise AssertionError("odd d produced a loop")
        if self.variant == GAMMA and self.d % 2 == 0 and not self.is_bipartite_by_prime():
            raise AssertionError("Gamma quotient for even d is not bipartite")


def loop_multiplicity(q: int, d: int) -> int:
    """Edges X_0 - X_0' for even d (loops at X_0 in the GammaTilde quotient)."""
    if d % 2:
        raise ValueError("no X_0 loop bundle for odd d")
    if d == 2:
        return 1
    num = q * (q ** (d - 3) + 1)
    if num % (q + 1):
        raise AssertionError(f"q+1 does not divide q^(d-3)+1 for q={q}, d={d}")
    return num // (q + 1)


def closed_form_multiplicity(q: int, d: int, a: int, b: int) -> int:
    """Number of quotient edges between X_a and X_b, each unordered pair once."""
    if a < 0 or b < 0:
        raise ValueError("vertex indices are nonnegative")
    a, b = min(a, b), max(a, b)
    if (a + b - d) % 2:
        return 0
    if b - a == d or a + b == d:
        return 1
    if a + b > d:
        return 0
    l = (d - a - b) // 2
    if a >= 1:
        return q ** (2 * l - 1) + q ** (2 * l - 2)
    if b > 0:
        return q ** (2 * l - 2)
    return loop_multiplicity(q, d)


def stabilizer_order(q: int, n: int) -> int:
    return q * (q - 1) * (q + 1) if n == 0 else (q - 1) * q ** (n + 1)


def _gamma_tilde(q: int, d: int, N: int) -> QuotientGraph:
    step = 2 if d % 2 == 0 else 1
    g = QuotientGraph(q, d, GAMMA_TILDE, N)
    labels = [VertexLabel(n) for n in range(0, N + 1, step)]
    for v in labels:
        g.vertices[v] = Vertex(v, stabilizer_order(q, v.n), frontier=v.n + d > N)
    for i, u in enumerate(labels):
        for v in labels[i:]:
            k = closed_form_multiplicity(q, d, u.n, v.n)
            if k:
                g.edges[(u, v)] = k
    return g


def build_quotient(q: int, d: int, window: int, variant: str = GAMMA) -> QuotientGraph:
    """Quotient graph with vertices X_0 .. X_window (and primed copies).

    Vertices n with n + d > window are flagged as frontier: their chain edge
    to X_{n+d} leaves the window.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if d < 1:
        raise ValueError("d must be >= 1")
    if window < d:
        raise ValueError(f"window {window} is smaller than d = {d}")
    g = _gamma_tilde(q, d, window)
    if variant == GAMMA:
        if d % 2:
            g.variant = GAMMA
        else:
            g = double_cover(g)
    g._check()
    return g


def double_cover(g: QuotientGraph) -> QuotientGraph:
    """Bipartite double cover of an even-d GammaTilde quotient.

    {X_a, X_b} with a != b lifts to {X_a, X_b'} and {X_a', X_b}; a loop
    bundle at X_a becomes the single bundle {X_a, X_a'} with the same count.
    """
    if g.d % 2:
        raise ValueError("double cover is only defined for even d")
    if g.variant != GAMMA_TILDE:
        raise ValueError("double cover expects a GammaTilde quotient")
    h = QuotientGraph(g.q, g.d, GAMMA, g.window)
    for v in g.vertices.values():
        for primed in (False, True):
            lab = VertexLabel(v.label.n, primed)
            h.vertices[lab] = Vertex(lab, v.stabilizer_order, v.frontier, inherited=True)
    for (a, b), k in g.edges.items():
        a0, b1 = VertexLabel(a.n), VertexLabel(b.n, True)
        h.edges[_key((a0, b1))] = k
        if a != b:
            a1, b0 = VertexLabel(a.n, True), VertexLabel(b.n)
            h.edges[_key((a1, b0))] = k
    return h


def collapse(h: QuotientGraph) -> QuotientGraph:
    """Inverse of :func:`double_cover`: forget primes."""
    if h.variant != GAMMA or h.d % 2:
        raise ValueError("collapse expects an even-d Gamma quotient")
    g = QuotientGraph(h.q, h.d, GAMMA_TILDE, h.window)
    for v in h.vertices.values():
        lab = VertexLabel(v.label.n)
        g.vertices[lab] = Vertex(lab, v.stabilizer_order, v.frontier)
    for (a, b), k in h.edges.items():
        e = _key((VertexLabel(a.n), VertexLabel(b.n)))
        prev = g.edges.setdefault(e, k)
        if prev != k:
            raise AssertionError(f"lifts of {e} disagree: {prev} vs {k}")
    return g
