import pytest
from hypothesis import given, settings

from mapcolor import (
    add_edge_mn,
    base_map_5,
    build_figure1,
    check_precoloring_extension,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    count_vef,
    euler_check,
    exact_chromatic,
    flower_counterexample,
    is_planar,
    random_planar_map,
    verify_coloring,
)
from strategies import triangulations

FIVE = ("AEGHD", "BFGHC", "ABCD", "ABFE", "CDH")


def test_figure1_counts():
    fix = build_figure1()
    assert count_vef(fix.embedding) == (8, 12, 5)
    report = euler_check(fix.embedding)
    assert report.characteristic == 1 and report.expected == 1 and report.consistent
    assert sorted(len(c) for c in fix.embedding.traced_faces) == [3, 3, 4, 4, 5, 5]


def test_figure1_face_names_match_their_cycles():
    fix = build_figure1()
    assert set(fix.faces) == set(FIVE)
    for name, cycle in fix.faces.items():
        assert sorted(name) == sorted(cycle)
    assert sorted(fix.outer_face) == ["E", "F", "G"]


def test_figure1_dual_is_k5_minus_one_pair():
    dual = build_figure1().dual()
    assert dual.n_faces == 5 and dual.n_pairs == 9
    assert not dual.adjacent("ABFE", "CDH")
    others = [(a, b) for a in FIVE for b in FIVE if a < b and {a, b} != {"ABFE", "CDH"}]
    assert all(dual.adjacent(a, b) for a, b in others)


def test_add_edge_mn_breaks_the_count():
    aug = add_edge_mn(build_figure1())
    assert count_vef(aug) == (10, 13, 5)
    report = euler_check(aug)
    assert report.characteristic == 2
    assert report.expected == 1
    assert not report.consistent


def test_add_edge_mn_dual_is_complete():
    aug = add_edge_mn(build_figure1())
    dual = aug.dual()
    assert dual.n_faces == 5 and dual.is_complete()
    assert set(aug.points_on) == {"M", "N"}
    assert aug.added_lines == (("M", "N"),)


def test_base_map_5():
    m, col = base_map_5()
    assert m.faces == ("A", "B", "C", "D", "E")
    assert m.n_pairs == 9 and not m.adjacent("D", "E")
    assert col.is_total_for(m) and verify_coloring(m, col)
    assert col.color_of("D") == col.color_of("E") == 3


def test_complete_families():
    k4 = complete_graph(4)
    assert k4.n_faces == 4 and k4.is_complete()
    k23 = complete_bipartite(2, 3)
    assert k23.n_faces == 5 and k23.n_pairs == 6
    assert not k23.adjacent("L1", "L2") and k23.adjacent("L1", "R3")
    with pytest.raises(ValueError):
        complete_graph(0)


def test_complete_multipartite_structure():
    m = complete_multipartite(1, 2, 2, 1)
    assert m.n_faces == 6
    # pairs between classes only: 1*2 + 1*2 + 1*1 + 2*2 + 2*1 + 2*1
    assert m.n_pairs == 13
    assert not m.adjacent("B1", "B2")
    assert m.adjacent("A1", "D1")
    classes = {f[0] for f in m.faces}
    assert classes == {"A", "B", "C", "D"}


def test_multipartite_zero_classes():
    m = complete_multipartite(0, 2, 0, 3)
    assert m.faces == ("B1", "B2", "D1", "D2", "D3")
    assert exact_chromatic(m, 4).chi == 2  # two nonzero parts
    single = complete_multipartite(1, 0, 0, 0)
    assert single.faces == ("A1",) and single.n_pairs == 0
    assert exact_chromatic(single, 4).chi == 1
    with pytest.raises(ValueError):
        complete_multipartite(0, 0, 0, 0)


def test_multipartite_letter_coloring_is_proper():
    for dims in ((1, 1, 1, 2), (2, 2, 2, 2), (3, 1, 2, 1)):
        m = complete_multipartite(*dims)
        chi = exact_chromatic(m, 4).chi
        assert chi == 4  # four classes, each pair joined
        letters = sorted({f[0] for f in m.faces})
        col_idx = {letter: i for i, letter in enumerate(letters)}
        from mapcolor import Coloring

        col = Coloring(4, {f: col_idx[f[0]] for f in m.faces})
        assert verify_coloring(m, col) and col.is_total_for(m)


def test_random_planar_map_is_deterministic():
    a = random_planar_map(12, 99)
    b = random_planar_map(12, 99)
    c = random_planar_map(12, 100)
    assert a == b
    assert a != c
    with pytest.raises(ValueError):
        random_planar_map(3, 0)


@given(triangulations(max_faces=20))
@settings(max_examples=25, deadline=None)
def test_random_planar_map_invariants(m):
    # a triangulation keeps the planar edge budget tight
    assert m.n_pairs == 3 * m.n_faces - 6
    assert is_planar(m)
    assert exact_chromatic(m, 4).chi is not None


def test_flower_counterexample_blocks_but_map_colors():
    m, sub, precol = flower_counterexample()
    assert m.n_faces == 7
    assert precol.assigned == sub
    assert check_precoloring_extension(m, sub, precol) is None
    assert exact_chromatic(m, 4).chi == 3
    assert is_planar(m)
