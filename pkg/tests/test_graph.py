import json

import pytest
from hypothesis import given, strategies as st

from oracles import distances, nx_digraph, nx_graph, theta_edges, weak_distances
from thetapack.graph import (
    UNREACHABLE, GraphError, LabeledGraph, OrientedGraph, ThetaSpec, build_cycle, build_path, build_theta,
    distance_matrix, enumerate_orientations, graph_from_json, graph_to_json, orientation_from_code,
    theta_orientation_key, weak_distance_matrix,
)


def theta_lengths(max_p=4, max_len=6):
    return st.lists(st.integers(1, max_len), min_size=2, max_size=max_p).map(sorted).filter(
        lambda ls: ls[1] >= 2)


def test_triangle_is_smallest_theta():
    g = build_theta(ThetaSpec((1, 2)))
    assert (g.n, len(g.edges)) == (3, 3)


def test_three_threes_size():
    spec = ThetaSpec((3, 3, 3))
    g = build_theta(spec)
    assert (g.n, len(g.edges)) == (8, 9)
    assert (spec.n_vertices, spec.n_edges) == (8, 9)


@pytest.mark.parametrize("lengths", [(2, 1), (1, 1, 2), (2,), (0, 3), (3, 2, 4)])
def test_invalid_specs(lengths):
    with pytest.raises(ValueError):
        ThetaSpec(lengths)


def test_parse_and_str():
    spec = ThetaSpec.parse("3, 3,5")
    assert spec.lengths == (3, 3, 5)
    assert str(spec) == "Theta[3,3,5]"
    assert spec.count(3) == 2 and spec.count(4) == 0
    with pytest.raises(ValueError):
        ThetaSpec.parse("3,x")


def test_small_distances():
    g = LabeledGraph(("u", "a", "v"), (("u", "a"), ("a", "v")))
    assert distance_matrix(g)("u", "v") == 2
    assert distance_matrix(build_theta((2, 4)))("u", "v") == 2
    assert distance_matrix(build_theta((3, 3, 3)))("x1_1", "x2_1") == 2


def test_weak_distance_examples():
    g = LabeledGraph(("u", "x", "v"), (("u", "x"), ("x", "v")))
    # u -> x <- v
    assert weak_distance_matrix(OrientedGraph(g, (0, 1)))("u", "v") == UNREACHABLE
    # u -> x -> v
    assert weak_distance_matrix(OrientedGraph(g, (0, 0)))("u", "v") == 2
    tri = LabeledGraph(("u", "v", "w"), (("u", "v"), ("v", "w"), ("w", "u")))
    assert weak_distance_matrix(OrientedGraph(tri, (0, 0, 0)))("u", "w") == 1


@given(theta_lengths())
def test_distances_match_networkx(lengths):
    g = build_theta(lengths)
    vertices, edges = theta_edges(lengths)
    assert set(g.vertices) == set(vertices)
    ref = distances(nx_graph(vertices, edges))
    dm = distance_matrix(g)
    for a in g.vertices:
        for b in g.vertices:
            assert dm(a, b) == ref[a][b]


@given(theta_lengths(max_p=3, max_len=4), st.data())
def test_weak_distances_match_networkx(lengths, data):
    g = build_theta(lengths)
    code = data.draw(st.integers(0, (1 << len(g.edges)) - 1))
    og = orientation_from_code(g, code)
    ref = weak_distances(nx_digraph(g.vertices, og.arcs()))
    dm = weak_distance_matrix(og)
    for a in g.vertices:
        for b in g.vertices:
            want = ref[a][b]
            assert dm(a, b) == (UNREACHABLE if want == float("inf") else want)


def test_orientation_counts():
    assert len(list(enumerate_orientations(build_path(2)))) == 2
    assert len(list(enumerate_orientations(build_cycle(3)))) == 8
    c4 = list(enumerate_orientations(build_theta((2, 2))))
    assert len(c4) == 16
    assert sum(og.is_directed_cycle() for og in c4) == 2


def test_orientations_in_integer_order():
    codes = [int(og.bitstring[::-1], 2) for og in enumerate_orientations(build_cycle(4))]
    assert codes == list(range(16))


def test_orientation_cap():
    with pytest.raises(GraphError):
        list(enumerate_orientations(build_cycle(30), cap=24))


def test_canonical_edge_order_walks_paths_u_to_v():
    g = build_theta((2, 3))
    assert g.edges == (("u", "x1_1"), ("x1_1", "v"), ("u", "x2_1"), ("x2_1", "x2_2"), ("x2_2", "v"))
    og = OrientedGraph.from_bitstring(g, "01000")
    assert og.arcs()[1] == ("v", "x1_1")


@given(theta_lengths(max_p=4, max_len=4), st.data())
def test_orientation_key_invariant_under_relabeling(lengths, data):
    g = build_theta(lengths)
    m = len(g.edges)
    og = orientation_from_code(g, data.draw(st.integers(0, (1 << m) - 1)))
    # swap u and v: every path is walked backwards with every bit flipped
    swapped, pos = [], 0
    for l in g.theta.lengths:
        swapped.extend(1 - b for b in reversed(og.bits[pos:pos + l]))
        pos += l
    other = OrientedGraph(g, tuple(swapped))
    assert theta_orientation_key(og) == theta_orientation_key(other)
    assert theta_orientation_key(og, weak=False) == theta_orientation_key(other, weak=False)
    flipped = OrientedGraph(g, tuple(1 - b for b in og.bits))
    assert theta_orientation_key(og) == theta_orientation_key(flipped)
    assert sorted(weak_distance_matrix(og).rows()) == sorted(weak_distance_matrix(flipped).rows())


def test_dedupe_keeps_one_per_class():
    g = build_theta((2, 2))
    reps = list(enumerate_orientations(g, dedupe=True))
    assert 1 < len(reps) < 16
    assert len({theta_orientation_key(og, weak=False) for og in reps}) == len(reps)


@given(theta_lengths(max_p=3, max_len=4), st.booleans(), st.data())
def test_json_roundtrip(lengths, oriented, data):
    g = build_theta(lengths)
    obj = g
    if oriented:
        obj = orientation_from_code(g, data.draw(st.integers(0, (1 << len(g.edges)) - 1)))
    doc = json.loads(json.dumps(graph_to_json(obj)))
    back = graph_from_json(doc)
    assert type(back) is type(obj)
    if oriented:
        assert back.bits == obj.bits and back.base.edges == g.edges
    else:
        assert back.edges == g.edges


@pytest.mark.parametrize("doc", [
    {}, {"vertices": ["a"], "edges": [["a", "b"]]}, {"vertices": ["a", "a"], "edges": []},
    {"vertices": ["a", "b"], "edges": [["a", "a"]]},
])
def test_malformed_graph_json(doc):
    with pytest.raises(GraphError):
        graph_from_json(doc)
