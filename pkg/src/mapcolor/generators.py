"""Named instances and instance families.

Includes the five-face polyhedral fixture whose dual is one border short
of complete, the base five-face map with its canonical coloring, complete
4-partite families, seeded random triangulations, small complete graphs,
and the flower map whose rim precoloring cannot be extended.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Mapping

from .core import Coloring, MapGraph, build_map
from .embedding import PlanarEmbedding, dual_map, embedding_from_faces

__all__ = [
    "Figure1Fixture",
    "AugmentedEmbedding",
    "build_figure1",
    "add_edge_mn",
    "base_map_5",
    "complete_graph",
    "complete_bipartite",
    "complete_multipartite",
    "random_planar_map",
    "flower_counterexample",
]


# Boundary cycles of the five-face fixture, oriented so that every directed
# edge is used exactly once across the six cycles (outer EFG included).
_FIVE_FACE_CYCLES: dict[str, tuple[str, ...]] = {
    "AEGHD": ("A", "E", "G", "H", "D"),
    "BFGHC": ("B", "C", "H", "G", "F"),
    "ABCD": ("A", "D", "C", "B"),
    "ABFE": ("A", "B", "F", "E"),
    "CDH": ("C", "D", "H"),
}
_OUTER_CYCLE: tuple[str, ...] = ("E", "F", "G")


@dataclass(frozen=True)
class Figure1Fixture:
    """Polyhedral surface with five retained faces and the underside cut off.

    Two pentagons, two tetragons, and a triangle on eight cubic vertices;
    every pair of faces shares a border except the triangle and the second
    tetragon. The dual is therefore the complete five-face map minus one
    adjacency.
    """

    embedding: PlanarEmbedding
    faces: Mapping[str, tuple[str, ...]]
    outer_face: tuple[str, ...]

    def dual(self) -> MapGraph:
        return dual_map(self.faces)


def build_figure1() -> Figure1Fixture:
    """The five-face fixture: 8 vertices, 12 edges, 5 retained faces."""
    cycles = list(_FIVE_FACE_CYCLES.values()) + [_OUTER_CYCLE]
    emb = embedding_from_faces(cycles, outer_face_removed=True)
    return Figure1Fixture(
        embedding=emb,
        faces=dict(_FIVE_FACE_CYCLES),
        outer_face=_OUTER_CYCLE,
    )


@dataclass(frozen=True)
class AugmentedEmbedding:
    """An embedding with extra points and lines drawn onto its boundaries.

    Counts follow the drawing convention, not a re-triangulation: each
    added point is one new vertex, each added line one new edge, and the
    face count carries over unchanged from the base surface. ``joined``
    names the face pairs the added lines connect, which the dual picks up
    as new adjacencies.
    """

    base: PlanarEmbedding
    faces: Mapping[str, tuple[str, ...]]
    points_on: Mapping[str, tuple[str, str]]
    added_lines: tuple[tuple[str, str], ...]
    joined: tuple[tuple[str, str], ...]

    @property
    def vertex_count(self) -> int:
        return self.base.vertex_count + len(self.points_on)

    @property
    def edge_count(self) -> int:
        return self.base.edge_count + len(self.added_lines)

    @property
    def face_count(self) -> int:
        return self.base.face_count

    @property
    def outer_face_removed(self) -> bool:
        return self.base.outer_face_removed

    def dual(self) -> MapGraph:
        plain = dual_map(self.faces)
        return build_map(plain.faces, tuple(plain.pairs) + self.joined)


def add_edge_mn(fix: Figure1Fixture) -> AugmentedEmbedding:
    """Join the triangle's boundary to the second tetragon's with line MN.

    M sits on the C-D border, N on the A-B border, and the line M-N crosses
    the face between them. Under the drawing convention this adds two
    vertices and one edge while the face count stays put, so the Euler
    check on the result comes out inconsistent; in the dual, the triangle
    CDH and the tetragon ABFE become adjacent and all ten face pairs touch.
    """
    return AugmentedEmbedding(
        base=fix.embedding,
        faces=dict(fix.faces),
        points_on={"M": ("C", "D"), "N": ("A", "B")},
        added_lines=(("M", "N"),),
        joined=(("CDH", "ABFE"),),
    )


def base_map_5() -> tuple[MapGraph, Coloring]:
    """Five faces, every pair adjacent except D-E, with its four-coloring.

    D and E share color d; the map is the dual of the five-face fixture up
    to face naming.
    """
    faces = ("A", "B", "C", "D", "E")
    pairs = [p for p in combinations(faces, 2) if p != ("D", "E")]
    col = Coloring(4, {"A": 0, "B": 1, "C": 2, "D": 3, "E": 3})
    return build_map(faces, pairs), col


def complete_graph(n: int, prefix: str = "V") -> MapGraph:
    """Map with n faces, all pairs adjacent."""
    if n < 1:
        raise ValueError("complete graph needs at least one face")
    faces = tuple(f"{prefix}{i}" for i in range(1, n + 1))
    return build_map(faces, combinations(faces, 2))


def complete_bipartite(a: int, b: int) -> MapGraph:
    """Map with two face classes, adjacent exactly across classes."""
    if a < 1 or b < 1:
        raise ValueError("both sides need at least one face")
    left = tuple(f"L{i}" for i in range(1, a + 1))
    right = tuple(f"R{i}" for i in range(1, b + 1))
    return build_map(left + right, [(l, r) for l in left for r in right])


def complete_multipartite(i: int, j: int, k: int, l: int) -> MapGraph:
    """Faces in four letter classes; adjacent exactly across classes.

    Faces are A1..Ai, B1..Bj, C1..Ck, D1..Dl in class order. Within a
    class faces never touch; across classes they always do. Empty classes
    are fine as long as one face exists.
    """
    sizes = (i, j, k, l)
    if any(s < 0 for s in sizes):
        raise ValueError("class sizes cannot be negative")
    if sum(sizes) < 1:
        raise ValueError("at least one face is required")
    classes = [
        tuple(f"{letter}{n}" for n in range(1, size + 1))
        for letter, size in zip("ABCD", sizes)
    ]
    faces = tuple(f for cls in classes for f in cls)
    pairs = [
        (f, g)
        for x, cls_a in enumerate(classes)
        for cls_b in classes[x + 1 :]
        for f in cls_a
        for g in cls_b
    ]
    return build_map(faces, pairs)


def random_planar_map(n_faces: int, seed: int) -> MapGraph:
    """Seeded random planar triangulation with n_faces faces.

    Starts from the complete map on four faces and repeatedly inserts a new
    face into a uniformly chosen triangle, joining it to that triangle's
    three corners. Same (n_faces, seed) always yields the same map; the
    generator is the stdlib Mersenne Twister.
    """
    if n_faces < 4:
        raise ValueError("need at least 4 faces to seed the triangulation")
    rng = random.Random(seed)
    faces = tuple(f"F{i}" for i in range(n_faces))
    pairs: list[tuple[int, int]] = [(a, b) for a, b in combinations(range(4), 2)]
    triangles: list[tuple[int, int, int]] = [
        (0, 1, 2),
        (0, 1, 3),
        (0, 2, 3),
        (1, 2, 3),
    ]
    for v in range(4, n_faces):
        t = rng.randrange(len(triangles))
        a, b, c = triangles.pop(t)
        pairs.extend([(a, v), (b, v), (c, v)])
        triangles.extend([(a, b, v), (a, c, v), (b, c, v)])
    return build_map(faces, [(faces[a], faces[b]) for a, b in pairs])


def flower_counterexample() -> tuple[MapGraph, frozenset[str], Coloring]:
    """Flower map with the rim precoloring that cannot be extended.

    Center C touches five mutually untouching petals and the outer ring O;
    every petal touches O too. The precoloring fixes O and the petals so
    that all four colors appear around C, yet it is proper on the rim and
    the bare map still four-colors (indeed three-colors) easily.
    """
    petals = tuple(f"P{i}" for i in range(1, 6))
    faces = ("C", "O") + petals
    pairs = [("C", "O")] + [("C", p) for p in petals] + [("O", p) for p in petals]
    sub = frozenset(("O",) + petals)
    precol = Coloring(
        4, {"O": 0, "P1": 1, "P2": 2, "P3": 3, "P4": 1, "P5": 2}
    )
    return build_map(faces, pairs), sub, precol
