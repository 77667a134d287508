"""Rotation-system embeddings: face tracing and vertex/edge/face counts.

An embedding stores, for every vertex, the cyclic order of its neighbors.
Faces are traced by following directed edges: after arriving at v from u,
leave toward the neighbor that follows u in v's rotation. Each directed
edge lies on exactly one traced face, so face lengths sum to 2e, and
v - e + f equals 2 exactly when the rotation describes a sphere drawing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .core import MapGraph, build_map

__all__ = [
    "PlanarEmbedding",
    "build_embedding",
    "embedding_from_faces",
    "count_vef",
    "dual_map",
]


@dataclass(frozen=True)
class PlanarEmbedding:
    """Immutable rotation system over string-labeled vertices.

    ``rotation`` maps each vertex to the cyclic tuple of its neighbors.
    ``outer_face_removed`` marks surfaces with the unbounded face cut away,
    which lowers the face count (and the expected Euler characteristic) by
    one.
    """

    rotation: Mapping[str, tuple[str, ...]]
    outer_face_removed: bool = False

    def __post_init__(self) -> None:
        rot = {v: tuple(ring) for v, ring in self.rotation.items()}
        if not rot:
            raise ValueError("embedding has no vertices")
        for v, ring in rot.items():
            if not ring:
                raise ValueError(f"vertex {v!r} has no incident edges")
            if v in ring:
                raise ValueError(f"loop at vertex {v!r}")
            if len(set(ring)) != len(ring):
                raise ValueError(f"parallel edge in rotation of {v!r}")
            for u in ring:
                if u not in rot:
                    raise ValueError(f"rotation of {v!r} names unknown vertex {u!r}")
                if v not in rot[u]:
                    raise ValueError(f"edge {v!r}-{u!r} is listed only once")
        # connectivity
        start = next(iter(rot))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in rot[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != len(rot):
            raise ValueError("embedding is not connected")
        object.__setattr__(self, "rotation", rot)

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(self.rotation)

    @cached_property
    def vertex_count(self) -> int:
        return len(self.rotation)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(ring) for ring in self.rotation.values()) // 2

    @cached_property
    def edges(self) -> frozenset[frozenset[str]]:
        return frozenset(
            frozenset((v, u)) for v, ring in self.rotation.items() for u in ring
        )

    @cached_property
    def traced_faces(self) -> tuple[tuple[str, ...], ...]:
        """All face cycles, as vertex sequences, outer face included."""
        succ: dict[tuple[str, str], tuple[str, str]] = {}
        for v, ring in self.rotation.items():
            d = len(ring)
            for i, u in enumerate(ring):
                succ[(u, v)] = (v, ring[(i + 1) % d])
        faces: list[tuple[str, ...]] = []
        seen: set[tuple[str, str]] = set()
        for start in sorted(succ):
            if start in seen:
                continue
            cycle: list[str] = []
            cur = start
            while cur not in seen:
                seen.add(cur)
                cycle.append(cur[0])
                cur = succ[cur]
            faces.append(tuple(cycle))
        return tuple(faces)

    @cached_property
    def face_count(self) -> int:
        n = len(self.traced_faces)
        return n - 1 if self.outer_face_removed else n

    def to_json_dict(self) -> dict:
        return {
            "rotation": {v: list(ring) for v, ring in self.rotation.items()},
            "outer_face_removed": self.outer_face_removed,
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> PlanarEmbedding:
        try:
            rotation = data["rotation"]
            removed = bool(data.get("outer_face_removed", False))
        except (TypeError, KeyError) as exc:
            raise ValueError(f"embedding JSON needs 'rotation': {exc}")
        if not isinstance(rotation, Mapping):
            raise ValueError("'rotation' must map vertices to neighbor lists")
        return build_embedding(rotation, removed)


def build_embedding(
    rotation: Mapping[str, Sequence[str]], outer_face_removed: bool = False
) -> PlanarEmbedding:
    """Validate a rotation table and wrap it as an embedding.

    Rejects loops, parallel edges, dangling or one-sided edge references,
    isolated vertices, and disconnected graphs.
    """
    return PlanarEmbedding(
        {v: tuple(ring) for v, ring in rotation.items()}, outer_face_removed
    )


def embedding_from_faces(
    oriented_faces: Sequence[Sequence[str]], outer_face_removed: bool = False
) -> PlanarEmbedding:
    """Build the rotation system whose traced faces are exactly the input.

    Each face is a vertex cycle traversed in a fixed direction; every
    directed edge must appear in exactly one face (so the cycles close up
    into a surface). Rotations start at the alphabetically least neighbor.
    """
    succ: dict[str, dict[str, str]] = {}
    for face in oriented_faces:
        k = len(face)
        if k < 2:
            raise ValueError(f"face cycle too short: {face!r}")
        for i in range(k):
            u, v, w = face[i - 1], face[i], face[(i + 1) % k]
            at_v = succ.setdefault(v, {})
            if u in at_v:
                raise ValueError(f"directed edge {u!r}->{v!r} appears twice")
            at_v[u] = w
    rotation: dict[str, tuple[str, ...]] = {}
    for v in sorted(succ):
        corner = succ[v]
        if set(corner) != set(corner.values()):
            raise ValueError(
                f"vertex {v!r} has an edge traversed in only one direction"
            )
        start = min(corner)
        ring = [start]
        while True:
            nxt = corner[ring[-1]]
            if nxt == start:
                break
            if nxt in ring:
                raise ValueError(f"face corners at {v!r} do not close a cycle")
            ring.append(nxt)
        if len(ring) != len(corner):
            raise ValueError(f"face corners at {v!r} split into several cycles")
        rotation[v] = tuple(ring)
    return PlanarEmbedding(rotation, outer_face_removed)


def count_vef(emb) -> tuple[int, int, int]:
    """(vertices, edges, faces) of an embedding-like structure.

    Works on anything exposing vertex_count / edge_count / face_count, so
    overlays that adjust the bookkeeping are counted by their own rules.
    """
    return (emb.vertex_count, emb.edge_count, emb.face_count)


def dual_map(face_cycles: Mapping[str, Sequence[str]]) -> MapGraph:
    """Dual of a set of named boundary cycles: faces sharing a border touch.

    Two faces are adjacent exactly when their cycles share an undirected
    edge; sharing a single vertex is not enough.
    """
    edge_sets: dict[str, set[frozenset[str]]] = {}
    for name, cycle in face_cycles.items():
        k = len(cycle)
        edge_sets[name] = {frozenset((cycle[i], cycle[(i + 1) % k])) for i in range(k)}
    names = list(face_cycles)
    pairs = [
        (a, b)
        for i, a in enumerate(names)
        for b in names[i + 1 :]
        if edge_sets[a] & edge_sets[b]
    ]
    return build_map(names, pairs)
