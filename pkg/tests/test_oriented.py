import pytest
from hypothesis import given, settings, strategies as st

from thetapack.formula import ConditionLabel
from thetapack.graph import (
    OrientedGraph, ThetaSpec, build_theta, distance_matrix, orientation_from_code, weak_distance_matrix,
)
from thetapack.oriented import (
    FIGURE_ROWS, LENGTH3_ROWS, Length3OrientationRow, build_theta0, color_oriented_theta,
    color_oriented_theta_detailed, conjecture_scan, load_length3_rows, oriented_pcn, scan_specs,
)
from thetapack.solver import exists_k_coloring, pcn_exact
from thetapack.verify import verify


def test_figure_rows_cover_all_patterns():
    assert len(LENGTH3_ROWS) == 8
    assert LENGTH3_ROWS[(0, 0, 1)].word() == "4315"
    assert LENGTH3_ROWS[(1, 0, 1)].drawing() == "4 <- 2 -> 1 <- 5"


def test_bad_row_rejected():
    rows = list(FIGURE_ROWS)
    rows[1] = Length3OrientationRow((0, 0, 1), (1, 1))
    with pytest.raises(ValueError):
        load_length3_rows(rows)
    with pytest.raises(ValueError):
        load_length3_rows(FIGURE_ROWS[:7])


def test_theta0_shape():
    t0 = build_theta0()
    assert t0.base.n == 16 and len(t0.arcs()) == 20
    assert weak_distance_matrix(t0)("u", "v") == 2
    # every path is directed one way or the other
    out, inc = t0.out_in()
    assert all(len(out[i]) == len(inc[i]) == 1 for i in range(2, 16))


def test_theta0_needs_five():
    t0 = build_theta0()
    assert exists_k_coloring(weak_distance_matrix(t0), 4) is None
    assert oriented_pcn(t0) == 5
    colored = color_oriented_theta_detailed(t0)
    assert colored.valid and colored.construction == "figure" and colored.coloring.color_count == 5


def test_all_orientations_of_2_4_4():
    g = build_theta((2, 4, 4))
    for code in range(1 << 10):
        og = orientation_from_code(g, code)
        col = color_oriented_theta(og)
        assert verify(weak_distance_matrix(og), col).valid and col.color_count <= 5


@settings(max_examples=100, deadline=None)
@given(st.integers(0, (1 << 15) - 1))
def test_five_threes_stay_within_five(code):
    # undirected this graph needs 7 colors
    og = orientation_from_code(build_theta((3, 3, 3, 3, 3)), code)
    colored = color_oriented_theta_detailed(og)
    assert colored.valid and colored.coloring.color_count <= 5


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 6), min_size=2, max_size=5).map(sorted).filter(lambda ls: ls[1] >= 2),
       st.data())
def test_orientation_never_raises_pcn(lengths, data):
    g = build_theta(lengths)
    og = orientation_from_code(g, data.draw(st.integers(0, (1 << len(g.edges)) - 1)))
    k = oriented_pcn(og)
    assert 2 <= k <= min(5, pcn_exact(distance_matrix(g))[0])


def test_scan_specs_order_and_bounds():
    specs = [s.lengths for s in scan_specs(4, 5, 3)]
    assert specs == [(4, 4), (4, 5), (5, 5), (4, 4, 4), (4, 4, 5), (4, 5, 5), (5, 5, 5)]
    assert list(scan_specs(5, 4, 3)) == []


def test_scan_empty_range():
    report = conjecture_scan(5, 4, 3)
    assert report.records == [] and report.summary()["orientations"] == 0


def test_scan_cache_does_not_change_results():
    a = conjecture_scan(2, 3, 3, cache=True)
    b = conjecture_scan(2, 3, 3, cache=False)
    assert a.to_text() == b.to_text()
    assert len(a.records) == sum(1 << s.n_edges for s in scan_specs(2, 3, 3))


def test_scan_long_paths_have_no_hits():
    # all paths of length >= 5 give undirected pcn <= 4
    for spec in scan_specs(5, 6, 3):
        assert pcn_exact(distance_matrix(build_theta(spec)))[0] <= 4
    assert conjecture_scan(5, 6, 2).hits == []


def test_scan_records_are_json_lines():
    text = conjecture_scan(4, 4, 2).to_text().splitlines()
    assert len(text) == (1 << 8) + 1
    assert text[0].startswith('{"lengths":[4,4],"arcs":"00000000","pcn":')
    assert text[-1].startswith('{"summary":')
