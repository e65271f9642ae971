import pytest

from randcomplex import topology as tp
from randcomplex.complexes import build_complex
from randcomplex.lab import enumerate_space
from randcomplex.measure import ParameterVector
from randcomplex.sampling import SampleConfig, sample_stream
from randcomplex.topology import (
    Certificate,
    FailedCondition,
    RegimeLabel,
    RegimePoint,
    Verdict,
    all_k_tuples_have_common_neighbour,
    certify_simply_connected,
    common_neighbour_exists,
    connected_components,
    dimension,
    is_connected,
    is_isolated_subcomplex,
    isolated_vertices,
    min_edge_degree,
    pairwise_link_intersections_connected,
    regime_classify,
    verify_nerve_cover_hypotheses,
)

FULL4 = build_complex(4, 2, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
CYCLE4 = build_complex(4, 2, [(1, 2), (2, 3), (3, 4), (1, 4)])
TRIANGLE = build_complex(3, 2, [(1, 2, 3)])
HOLLOW = build_complex(3, 2, [(1, 2), (1, 3), (2, 3)])
PATH = build_complex(3, 1, [(1, 2), (2, 3)])
EMPTY = build_complex(3, 2, [])


def bfs_components(Y):
    """Oracle: plain breadth-first search on the 1-skeleton."""
    nbrs = {v: set() for v in Y.vertices()}
    for a, b in Y.face_array(1).tolist():
        nbrs[a].add(b)
        nbrs[b].add(a)
    seen, comps = set(), []
    for v in Y.vertices():
        if v in seen:
            continue
        frontier, comp = [v], {v}
        while frontier:
            u = frontier.pop()
            for w in nbrs[u]:
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    return sorted(comps)


def test_component_examples():
    assert len(connected_components(TRIANGLE)) == 1
    two_edges = build_complex(4, 1, [(1, 2), (3, 4)])
    assert len(connected_components(two_edges)) == 2
    assert connected_components(EMPTY) == []


def test_is_connected_conventions():
    assert is_connected(PATH)
    mix = build_complex(3, 1, [(1, 2), (3,)])
    assert not is_connected(mix)
    assert not is_connected(EMPTY)
    assert is_connected(build_complex(3, 1, [(2,)]))


@pytest.mark.parametrize("n,r", [(4, 2), (5, 1)])
def test_components_match_bfs_oracle(n, r):
    for Y in enumerate_space(n, r):
        assert connected_components(Y) == bfs_components(Y)


def test_isolated_vertices():
    assert isolated_vertices(build_complex(3, 1, [(2,)])) == [2]
    assert isolated_vertices(FULL4) == []
    assert isolated_vertices(build_complex(4, 1, [(1, 2), (3,), (4,)])) == [3, 4]


def test_is_isolated_subcomplex():
    two_edges = build_complex(4, 1, [(1, 2), (3, 4)])
    one_edge = build_complex(4, 1, [(1, 2)])
    assert is_isolated_subcomplex(two_edges, one_edge)
    mid = build_complex(3, 1, [(2,)])
    assert not is_isolated_subcomplex(PATH, mid)
    with pytest.raises(ValueError):
        is_isolated_subcomplex(PATH, build_complex(3, 1, [(1, 3)]))


def test_min_edge_degree():
    assert min_edge_degree(FULL4) == 2
    assert min_edge_degree(build_complex(3, 2, [(1, 2, 3)])) == 1
    assert min_edge_degree(HOLLOW) == 0
    assert min_edge_degree(build_complex(3, 2, [(1,), (2,)])) is None


def test_common_neighbour():
    starlike = build_complex(4, 1, [(1, 2), (1, 3), (1, 4)])
    assert common_neighbour_exists(starlike, (2, 3))
    assert common_neighbour_exists(FULL4, (1, 2, 3))
    tri_graph = build_complex(3, 1, [(1, 2), (1, 3), (2, 3)])
    assert not common_neighbour_exists(tri_graph, (1, 2, 3))
    with pytest.raises(ValueError):
        common_neighbour_exists(starlike, (2, 2))
    with pytest.raises(ValueError):
        common_neighbour_exists(build_complex(4, 1, [(1, 2)]), (1, 3))


def test_all_k_tuples():
    assert all_k_tuples_have_common_neighbour(FULL4, 3)
    tri_graph = build_complex(3, 1, [(1, 2), (1, 3), (2, 3)])
    assert not all_k_tuples_have_common_neighbour(tri_graph, 3)
    complete5 = build_complex(5, 1, [(i, j) for i in range(1, 6) for j in range(i + 1, 6)])
    assert all_k_tuples_have_common_neighbour(complete5, 1)
    with pytest.raises(ValueError):
        all_k_tuples_have_common_neighbour(FULL4, 0)


def test_pairwise_link_intersections():
    assert pairwise_link_intersections_connected(FULL4)
    assert not pairwise_link_intersections_connected(CYCLE4)
    single_edge = build_complex(2, 1, [(1, 2)])
    assert not pairwise_link_intersections_connected(single_edge)


def test_certificate_examples():
    cert = certify_simply_connected(FULL4)
    assert cert.verdict is Verdict.CERTIFIED
    assert cert.failed_condition is None

    cert = certify_simply_connected(CYCLE4)
    assert cert.verdict is Verdict.UNKNOWN
    assert cert.failed_condition is FailedCondition.EDGE_DEGREE

    cert = certify_simply_connected(TRIANGLE)
    assert cert.verdict is Verdict.UNKNOWN
    assert cert.failed_condition is FailedCondition.COMMON_NEIGHBOUR
    assert cert.witness == (1, 2, 3)


def test_certificate_connectivity_and_small_cases():
    cert = certify_simply_connected(EMPTY)
    assert cert.failed_condition is FailedCondition.CONNECTIVITY

    two_parts = build_complex(4, 2, [(1, 2), (3, 4)])
    cert = certify_simply_connected(two_parts)
    assert cert.failed_condition is FailedCondition.CONNECTIVITY
    assert cert.witness is not None

    point = build_complex(1, 2, [(1,)])
    assert certify_simply_connected(point).verdict is Verdict.CERTIFIED

    with pytest.raises(ValueError):
        Certificate(Verdict.CERTIFIED, FailedCondition.EDGE_DEGREE)


def test_certified_small_complexes_satisfy_nerve_hypotheses():
    hits = 0
    for Y in enumerate_space(4, 2):
        cert = certify_simply_connected(Y)
        if cert.verdict is Verdict.CERTIFIED:
            hits += 1
            check = verify_nerve_cover_hypotheses(Y)
            assert check.ok, (Y.canonical_key(), check)
    assert hits >= 2  # at least the full skeleton and a single point


def test_nerve_recheck_flags_bad_cases():
    chk = verify_nerve_cover_hypotheses(CYCLE4)
    assert not chk.ok
    assert chk.failure in ("star_intersection_disconnected", "nerve_two_skeleton_incomplete")


def test_fast_path_matches_generic(monkeypatch):
    grids = [
        (12, (0.9, 0.7, 0.5), 40),
        (16, (0.8, 0.5, 0.6), 40),
        (10, (1.0, 0.35, 0.9), 40),
        (9, (1.0, 0.9, 0.05), 40),
    ]
    for n, p, count in grids:
        config = SampleConfig(n=n, r=2, params=ParameterVector(p), seed=n, count=count)
        for Y in sample_stream(config):
            fast_cert = certify_simply_connected(Y)
            fast_check = verify_nerve_cover_hypotheses(Y)
            with monkeypatch.context() as m:
                m.setattr(tp, "_FAST_PATH_MAX_N", -1)
                slow_cert = certify_simply_connected(Y)
                slow_check = verify_nerve_cover_hypotheses(Y)
            assert fast_cert.verdict == slow_cert.verdict
            assert fast_cert.failed_condition == slow_cert.failed_condition
            assert fast_check.ok == slow_check.ok


def test_fast_path_matches_generic_enumerated(monkeypatch):
    for Y in enumerate_space(4, 2):
        fast = certify_simply_connected(Y)
        with monkeypatch.context() as m:
            m.setattr(tp, "_FAST_PATH_MAX_N", -1)
            slow = certify_simply_connected(Y)
        assert fast.verdict == slow.verdict
        assert fast.failed_condition == slow.failed_condition


def test_regime_examples():
    assert regime_classify(RegimePoint((0.0, 0.2, 0.1))) is RegimeLabel.SIMPLY_CONNECTED
    assert regime_classify(RegimePoint((0.5, 0.6, 0.0))) is RegimeLabel.DISCONNECTED
    assert regime_classify(RegimePoint((0.0, 0.5, 0.3))) is RegimeLabel.CONNECTED
    assert regime_classify(RegimePoint((0.5, 0.5, 0.0))) is RegimeLabel.BOUNDARY


def test_simply_connected_implies_connected():
    pts = [
        (a0 / 10, a1 / 10, a2 / 10)
        for a0 in range(0, 11, 2)
        for a1 in range(0, 11, 2)
        for a2 in range(0, 11, 2)
    ]
    for alpha in pts:
        label = regime_classify(RegimePoint(alpha))
        if label is RegimeLabel.SIMPLY_CONNECTED:
            assert alpha[0] + alpha[1] < 1.0


def test_regime_validation():
    with pytest.raises(ValueError):
        RegimePoint((0.1, 0.2))
    with pytest.raises(ValueError):
        RegimePoint((-0.1, 0.2, 0.3))


def test_dimension():
    assert dimension(TRIANGLE) == 2
    assert dimension(PATH) == 1
    assert dimension(EMPTY) is None
