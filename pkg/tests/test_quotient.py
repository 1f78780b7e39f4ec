import pytest

from btquotient.figures import FIGURES, compare_figure
from btquotient.quotient import (
    GAMMA,
    GAMMA_TILDE,
    VertexLabel,
    build_quotient,
    closed_form_multiplicity,
    collapse,
    double_cover,
    loop_multiplicity,
    stabilizer_order,
)

X = VertexLabel


def Xp(n):
    return VertexLabel(n, True)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_closed_form_examples(q):
    assert closed_form_multiplicity(q, 7, 2, 3) == q + 1
    assert closed_form_multiplicity(q, 7, 0, 1) == q ** 4
    assert closed_form_multiplicity(q, 7, 1, 2) == q ** 3 + q ** 2
    assert closed_form_multiplicity(q, 5, 0, 1) == q ** 2
    assert closed_form_multiplicity(q, 5, 1, 2) == q + 1
    assert closed_form_multiplicity(q, 6, 0, 0) == q ** 3 - q ** 2 + q
    assert closed_form_multiplicity(q, 4, 0, 0) == q
    assert closed_form_multiplicity(q, 2, 0, 0) == 1


def test_closed_form_chain_and_zero_cases():
    assert closed_form_multiplicity(2, 3, 4, 1) == 1  # chain
    assert closed_form_multiplicity(2, 3, 1, 2) == 1  # n + m = d
    assert closed_form_multiplicity(2, 3, 0, 0) == 0  # parity
    assert closed_form_multiplicity(2, 4, 2, 4) == 0  # n + m > d, off chain
    assert closed_form_multiplicity(3, 6, 1, 3) == closed_form_multiplicity(3, 6, 3, 1)
    with pytest.raises(ValueError):
        closed_form_multiplicity(2, 3, -1, 0)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
@pytest.mark.parametrize("d", [4, 6, 8, 10])
def test_loop_multiplicity_is_integral(q, d):
    # q^(d-3) + 1 is divisible by q + 1 because d - 3 is odd
    assert loop_multiplicity(q, d) * (q + 1) == q * (q ** (d - 3) + 1)


def test_loop_multiplicity_rejects_odd():
    with pytest.raises(ValueError):
        loop_multiplicity(2, 5)


def test_stabilizer_orders():
    assert stabilizer_order(2, 0) == 6
    assert stabilizer_order(3, 2) == 54


@pytest.mark.parametrize("d", [1, 3, 5, 7])
def test_odd_d_has_no_loops_and_single_sheet(d):
    g = build_quotient(2, d, 2 * d + 2)
    assert not g.loops()
    assert all(not v.primed for v in g.vertices)
    assert g.variant == GAMMA
    assert len(g.vertices) == 2 * d + 3


@pytest.mark.parametrize("d", [2, 4, 6, 8])
def test_even_d_gamma_is_bipartite(d):
    g = build_quotient(3, d, 2 * d + 2)
    assert g.is_bipartite_by_prime()
    assert all(v.n % 2 == 0 for v in g.vertices)
    assert g.multiplicity(X(0), Xp(0)) == loop_multiplicity(3, d)


def test_gamma_tilde_loops_beyond_base_vertex():
    # a + b = d puts a loop at X_{d/2} when d/2 is even
    g = build_quotient(2, 4, 10, GAMMA_TILDE)
    assert g.loops() == {X(0): 2, X(2): 1}
    h = build_quotient(2, 4, 10)
    assert h.multiplicity(X(2), Xp(2)) == 1


@pytest.mark.parametrize("q,d", [(2, 2), (3, 4), (2, 6), (4, 8)])
def test_double_cover_round_trip(q, d):
    g = build_quotient(q, d, 3 * d, GAMMA_TILDE)
    h = double_cover(g)
    assert h == build_quotient(q, d, 3 * d)
    back = collapse(h)
    assert back.edges == g.edges
    assert set(back.vertices) == set(g.vertices)
    # each non-loop bundle lifts twice, each loop once
    loops = sum(g.loops().values())
    assert h.total_edges() == 2 * g.total_edges() - loops


def test_double_cover_marks_inherited_stabilizers():
    h = build_quotient(2, 4, 8)
    assert all(v.inherited for v in h.vertices.values())
    assert not any(v.inherited for v in build_quotient(2, 3, 8).vertices.values())


def test_frontier_flags():
    g = build_quotient(2, 3, 8)
    assert g.frontier == {X(6), X(7), X(8)}
    assert g.multiplicity(X(5), X(8)) == 1


def test_build_rejects_bad_input():
    with pytest.raises(ValueError):
        build_quotient(2, 5, 4)
    with pytest.raises(ValueError):
        build_quotient(2, 5, 10, "gamma-hat")
    with pytest.raises(ValueError):
        double_cover(build_quotient(2, 3, 6, GAMMA_TILDE))


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 7])
def test_golden_figures(q, d):
    assert compare_figure(d, q) == []
    fig = FIGURES[d]
    g = build_quotient(q, d, max(v.n for v in fig.labels()))
    assert fig.labels() <= set(g.vertices)


@pytest.mark.parametrize("q", [2, 3])
def test_d6_figure_differences(q):
    diffs = {r["pair"]: (r["figure"], r["theorem"]) for r in compare_figure(6, q)}
    assert diffs == {
        "X0-X2'": (q ** 4, q ** 2),
        "X0-X4'": (q ** 2, 1),
        "X0'-X2": (q ** 4, q ** 2),
        "X0'-X4": (q ** 2, 1),
        "X2-X2'": (0, q + 1),
        "X4-X4'": (q + 1, 0),
    }
    g = build_quotient(q, 6, 16)
    assert g.multiplicity(X(0), Xp(0)) == q ** 3 - q ** 2 + q
