import pytest

from mapcolor import (
    PlanarEmbedding,
    build_embedding,
    count_vef,
    dual_map,
    embedding_from_faces,
    euler_check,
)

TETRA_FACES = [("P", "Q", "R"), ("P", "R", "S"), ("P", "S", "Q"), ("Q", "S", "R")]

CUBE_FACES = [
    ("v0", "v3", "v2", "v1"),
    ("v4", "v5", "v6", "v7"),
    ("v0", "v1", "v5", "v4"),
    ("v1", "v2", "v6", "v5"),
    ("v2", "v3", "v7", "v6"),
    ("v3", "v0", "v4", "v7"),
]


def test_tetrahedron_counts():
    emb = embedding_from_faces(TETRA_FACES)
    assert count_vef(emb) == (4, 6, 4)
    assert sorted(len(c) for c in emb.traced_faces) == [3, 3, 3, 3]
    report = euler_check(emb)
    assert report.characteristic == 2 and report.consistent


def test_cube_counts():
    emb = embedding_from_faces(CUBE_FACES)
    assert count_vef(emb) == (8, 12, 6)
    assert all(len(c) == 4 for c in emb.traced_faces)
    assert euler_check(emb).consistent


def test_face_lengths_sum_to_twice_edges():
    for faces in (TETRA_FACES, CUBE_FACES):
        emb = embedding_from_faces(faces)
        assert sum(len(c) for c in emb.traced_faces) == 2 * emb.edge_count


def test_outer_face_removed_changes_expectation():
    emb = embedding_from_faces(TETRA_FACES, outer_face_removed=True)
    assert count_vef(emb) == (4, 6, 3)
    report = euler_check(emb)
    assert report.expected == 1
    assert report.characteristic == 1 and report.consistent


def test_traced_faces_match_input_cycles():
    emb = embedding_from_faces(TETRA_FACES)
    traced = {frozenset(c) for c in emb.traced_faces}
    assert traced == {frozenset(f) for f in TETRA_FACES}


def test_duplicate_directed_edge_rejected():
    with pytest.raises(ValueError):
        embedding_from_faces([("P", "Q", "R"), ("P", "Q", "S")])


def test_incomplete_face_set_rejected():
    # two triangles pinched at one vertex, outer face missing
    with pytest.raises(ValueError):
        embedding_from_faces([("A", "B", "C"), ("C", "D", "E")])


def test_short_cycle_rejected():
    with pytest.raises(ValueError):
        embedding_from_faces([("A",)])


def test_build_embedding_rejects_bad_rotations():
    with pytest.raises(ValueError):  # loop
        build_embedding({"A": ("A",)})
    with pytest.raises(ValueError):  # parallel edge
        build_embedding({"A": ("B", "B"), "B": ("A", "A")})
    with pytest.raises(ValueError):  # one-sided listing
        build_embedding({"A": ("B",), "B": ()})
    with pytest.raises(ValueError):  # unknown neighbor
        build_embedding({"A": ("Z",)})
    with pytest.raises(ValueError):  # disconnected
        build_embedding({"A": ("B",), "B": ("A",), "C": ("D",), "D": ("C",)})


def test_embedding_json_round_trip():
    emb = embedding_from_faces(TETRA_FACES, outer_face_removed=True)
    again = PlanarEmbedding.from_json_dict(emb.to_json_dict())
    assert again.rotation == emb.rotation
    assert again.outer_face_removed
    assert count_vef(again) == count_vef(emb)


def test_from_json_dict_requires_rotation_mapping():
    with pytest.raises(ValueError):
        PlanarEmbedding.from_json_dict({"rotation": [["A", "B"]]})


def test_count_vef_duck_types():
    class Stub:
        vertex_count = 10
        edge_count = 13
        face_count = 5
        outer_face_removed = True

    assert count_vef(Stub()) == (10, 13, 5)
    report = euler_check(Stub())
    assert report.characteristic == 2
    assert not report.consistent


def test_dual_of_tetrahedron_is_complete():
    cycles = {f"F{i}": cyc for i, cyc in enumerate(TETRA_FACES)}
    dual = dual_map(cycles)
    assert dual.n_faces == 4
    assert dual.is_complete()


def test_dual_requires_shared_edge_not_vertex():
    # two triangles meeting only at vertex X stay non-adjacent
    cycles = {"L": ("A", "B", "X"), "R": ("X", "C", "D")}
    dual = dual_map(cycles)
    assert not dual.adjacent("L", "R")
