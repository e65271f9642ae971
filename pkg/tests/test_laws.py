import math

import pytest

from randcomplex.laws import (
    DegreeLaw,
    degree_law,
    edge_degree_zero_bound,
    intersection_parameters,
    link_exponent_matrix,
    link_parameters,
    links_intersection_parameters,
    preset,
    restriction_parameters,
)
from randcomplex.measure import ParameterVector

PV = ParameterVector


def test_vertex_link_law():
    out = link_parameters(PV((0.6, 0.5, 0.4)), 0)
    assert out.p == pytest.approx((0.30, 0.20))


def test_edge_link_law():
    p = PV((0.9, 0.8, 0.7, 0.6))
    out = link_parameters(p, 1)
    assert len(out) == 2
    assert out.p[0] == pytest.approx(0.9 * 0.8**2 * 0.7)
    assert out.p[1] == pytest.approx(0.8 * 0.7**2 * 0.6)


def test_two_simplex_link_law():
    p = PV((0.9, 0.8, 0.7, 0.6, 0.5))
    out = link_parameters(p, 2)
    assert len(out) == 2
    assert out.p[0] == pytest.approx(0.9 * 0.8**3 * 0.7**3 * 0.6)
    assert out.p[1] == pytest.approx(0.8 * 0.7**3 * 0.6**3 * 0.5)


def test_link_law_bounds():
    with pytest.raises(ValueError):
        link_parameters(PV((0.5, 0.5)), 1)
    with pytest.raises(ValueError):
        link_exponent_matrix(2, -1)


def test_iterated_vertex_links_match_closed_form():
    # applying the vertex-link transform k+1 times gives the k-simplex law:
    # exponents compose through Pascal's rule, exactly
    for r, k in [(3, 1), (4, 2), (5, 3), (6, 4)]:
        direct = link_exponent_matrix(r, k)
        rows = len(direct)
        iterated = [
            [1 if j == i else 0 for j in range(r + 1)] for i in range(r + 1)
        ]
        depth = r
        for _ in range(k + 1):
            step = link_exponent_matrix(depth, 0)
            iterated = [
                [
                    sum(step_row[t] * iterated[t][j] for t in range(depth + 1))
                    for j in range(r + 1)
                ]
                for step_row in step
            ]
            depth -= 1
        assert [tuple(row) for row in iterated[:rows]] == list(direct)


def test_links_intersection_law():
    p = PV((0.6, 0.5, 0.4))
    assert links_intersection_parameters(p, 1).p == link_parameters(p, 0).p
    out = links_intersection_parameters(p, 2)
    assert out.p == pytest.approx((0.6 * 0.25, 0.5 * 0.16))
    assert links_intersection_parameters(PV((1, 1, 1)), 3).p == (1.0, 1.0)
    with pytest.raises(ValueError):
        links_intersection_parameters(PV((0.5,)), 1)


def test_intersection_law():
    p = PV((0.5, 0.5))
    assert intersection_parameters(p, PV((1, 1))).p == (0.5, 0.5)
    assert intersection_parameters(p, p).p == (0.25, 0.25)
    with pytest.raises(ValueError):
        intersection_parameters(p, PV((0.5,)))


def test_one_hot_factorization():
    # intersecting the r+1 one-hot complexes recovers the full parameter vector
    p = PV((0.9, 0.6, 0.3))
    acc = PV((1.0, 1.0, 1.0))
    for i, value in enumerate(p.p):
        one_hot = PV(tuple(value if j == i else 1.0 for j in range(len(p))))
        acc = intersection_parameters(acc, one_hot)
    assert acc.p == pytest.approx(p.p)


def test_restriction_identity():
    p = PV((0.7, 0.1))
    assert restriction_parameters(p) is p
    assert restriction_parameters(PV((1.0, 1.0))).p == (1.0, 1.0)


def test_degree_law_vertex():
    law = degree_law(PV((0.5, 0.2, 1.0)), 50, 0)
    assert law.trials == 49
    assert law.success == pytest.approx(0.1)
    assert sum(law.pmf(k) for k in range(50)) == pytest.approx(1.0)


def test_degree_law_edge():
    law = degree_law(PV((0.6, 0.5, 0.4)), 20, 1)
    assert law.trials == 18
    assert law.success == pytest.approx(0.6 * 0.25 * 0.4)
    # matches the first link parameter of the edge link
    assert law.success == pytest.approx(link_parameters(PV((0.6, 0.5, 0.4)), 1).p[0])


def test_degree_law_all_ones_and_errors():
    law = degree_law(PV((1, 1, 1)), 7, 1)
    assert law.success == 1.0 and law.pmf(law.trials) == 1.0
    with pytest.raises(ValueError):
        degree_law(PV((0.5, 0.5)), 7, 1)
    with pytest.raises(ValueError):
        DegreeLaw(trials=-1, success=0.5)


def test_edge_degree_zero_specialization():
    # p1 = p2 = 1: expectation becomes C(n,2) p0^2 (1 - p0)^(n-2)
    n, p0 = 30, 0.2
    got = edge_degree_zero_bound(PV((p0, 1.0, 1.0)), n)
    assert got == pytest.approx(math.comb(n, 2) * p0**2 * (1 - p0) ** (n - 2), rel=1e-12)


def test_edge_degree_zero_value_against_mpmath():
    import mpmath

    mpmath.mp.dps = 50
    n = 100
    p0 = p1 = p2 = mpmath.mpf("0.5")
    expect = mpmath.binomial(n, 2) * p0**2 * p1 * (1 - p0 * p1**2 * p2) ** (n - 2)
    got = edge_degree_zero_bound(PV((0.5, 0.5, 0.5)), n)
    assert got == pytest.approx(float(expect), rel=1e-12)
    with pytest.raises(ValueError):
        edge_degree_zero_bound(PV((0.5, 0.5)), n)


def test_presets():
    assert preset("erdos_renyi")(0.3).p == (1.0, 0.3)
    assert preset("linial_meshulam")(0.4).p == (1.0, 1.0, 0.4)
    assert preset("meshulam_wallach")(4, 0.2).p == (1.0, 1.0, 1.0, 1.0, 0.2)
    assert preset("clique")(0.5, 4).p == (1.0, 0.5, 1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        preset("erdos_gilbert")


def test_clique_complex_link_laws():
    # links of simplexes in clique complexes stay clique-like
    p = 0.3
    clique = preset("clique")(p, 6)
    vertex_link = link_parameters(clique, 0)
    assert vertex_link.p[:2] == pytest.approx((p, p))
    assert vertex_link.p[2:] == pytest.approx((1.0,) * (len(vertex_link) - 2))
    two_link = link_parameters(clique, 2)
    assert two_link.p[0] == pytest.approx(p**3)
    assert two_link.p[1] == pytest.approx(p)
    assert two_link.p[2:] == pytest.approx((1.0,) * (len(two_link) - 2))
