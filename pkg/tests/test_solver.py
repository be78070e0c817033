import pytest
from hypothesis import given, settings, strategies as st

from oracles import distances, naive_pcn, nx_graph, theta_edges
from thetapack.graph import LabeledGraph, build_cycle, build_path, build_theta, distance_matrix
from thetapack.oriented import build_theta0
from thetapack.graph import weak_distance_matrix
from thetapack.solver import NodeLimitExceeded, SearchStats, SolverConfig, exists_k_coloring, pcn_exact
from thetapack.verify import verify


def test_p4_has_no_2_coloring():
    assert exists_k_coloring(distance_matrix(build_path(4)), 2) is None


def test_single_vertex():
    dm = distance_matrix(LabeledGraph(("v",), ()))
    assert exists_k_coloring(dm, 1).assignment == {"v": 1}
    assert pcn_exact(dm)[0] == 1


def test_c5_has_no_3_coloring():
    assert exists_k_coloring(distance_matrix(build_cycle(5)), 3) is None


def test_point_values():
    assert pcn_exact(distance_matrix(build_cycle(8)))[0] == 3
    assert pcn_exact(distance_matrix(build_theta((3, 3, 3))))[0] == 5
    assert pcn_exact(weak_distance_matrix(build_theta0()), lower=2)[0] == 5


def random_graphs(max_n=7):
    def build(data):
        n, edges = data
        return LabeledGraph(tuple(str(i) for i in range(n)),
                            tuple((str(a), str(b)) for a, b in sorted(edges)))
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                    .filter(lambda e: e[0] < e[1]), max_size=n * (n - 1) // 2),
        )
    ).map(build)


@settings(max_examples=40, deadline=None)
@given(random_graphs(), st.sampled_from(["ball", "mrv"]))
def test_matches_naive_enumeration(g, order):
    # disconnected graphs included; unreachable pairs never conflict
    k, col = pcn_exact(distance_matrix(g), SolverConfig(vertex_order=order))
    assert k == naive_pcn(distances(nx_graph(g.vertices, g.edges)))
    assert verify(distance_matrix(g), col).valid and col.color_count == k


@pytest.mark.parametrize("lengths", [(1, 2), (2, 2), (1, 2, 3), (2, 2, 3), (3, 3, 3), (2, 3, 3)])
def test_theta_matches_naive(lengths):
    v, e = theta_edges(lengths)
    assert pcn_exact(distance_matrix(build_theta(lengths)))[0] == naive_pcn(distances(nx_graph(v, e)))


def test_node_limit_is_not_nonexistence():
    dm = distance_matrix(build_theta((3, 3, 3, 3)))
    with pytest.raises(NodeLimitExceeded):
        exists_k_coloring(dm, 5, SolverConfig(node_limit=3))
    assert exists_k_coloring(dm, 5) is None


def test_stats_count_nodes():
    stats = SearchStats()
    exists_k_coloring(distance_matrix(build_cycle(7)), 3, stats=stats)
    assert stats.nodes > 0


@pytest.mark.parametrize("kwargs", [{"max_k": 0}, {"node_limit": 0}, {"vertex_order": "random"}])
def test_bad_config(kwargs):
    with pytest.raises(ValueError):
        SolverConfig(**kwargs)


def test_bad_k():
    with pytest.raises(ValueError):
        exists_k_coloring(distance_matrix(build_path(2)), 0)
