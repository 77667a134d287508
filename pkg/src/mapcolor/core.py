"""Dual-graph view of a map: one node per face, one link per shared border.

Faces that meet only at isolated points are not linked; a border must be a
whole boundary segment for the two faces to count as touching. Labels are
strings at the surface and dense integer indices internally.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

__all__ = ["MapGraph", "Coloring", "build_map", "color_name"]


def color_name(index: int) -> str:
    """Display name for a color index: 0..3 map to a..d, then e, f, ..."""
    if index < 0:
        raise ValueError(f"negative color index: {index}")
    if index < len(string.ascii_lowercase):
        return string.ascii_lowercase[index]
    return f"c{index}"


@dataclass(frozen=True)
class MapGraph:
    """Faces plus a symmetric, irreflexive touches-along-a-border relation.

    Instances are immutable. ``pairs`` is stored canonically: each unordered
    pair once, endpoints in face-index order, pairs sorted by index. Raw
    input (duplicates, swapped endpoints) is normalized on construction.
    """

    faces: tuple[str, ...]
    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        faces = tuple(self.faces)
        if not faces:
            raise ValueError("face list is empty")
        index = {f: i for i, f in enumerate(faces)}
        if len(index) != len(faces):
            raise ValueError("duplicate face id in face list")
        canonical = set()
        for f, g in self.pairs:
            if f not in index:
                raise ValueError(f"adjacency names unknown face {f!r}")
            if g not in index:
                raise ValueError(f"adjacency names unknown face {g!r}")
            if f == g:
                raise ValueError(f"face {f!r} paired with itself")
            i, j = index[f], index[g]
            canonical.add((i, j) if i < j else (j, i))
        ordered = tuple(
            (faces[i], faces[j]) for i, j in sorted(canonical)
        )
        object.__setattr__(self, "faces", faces)
        object.__setattr__(self, "pairs", ordered)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {f: i for i, f in enumerate(self.faces)}

    @cached_property
    def _neighbor_sets(self) -> tuple[frozenset[int], ...]:
        sets: list[set[int]] = [set() for _ in self.faces]
        for f, g in self.pairs:
            i, j = self._index[f], self._index[g]
            sets[i].add(j)
            sets[j].add(i)
        return tuple(frozenset(s) for s in sets)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @property
    def n_pairs(self) -> int:
        return len(self.pairs)

    def index_of(self, face: str) -> int:
        try:
            return self._index[face]
        except KeyError:
            raise ValueError(f"unknown face {face!r}") from None

    def adjacent(self, f: str, g: str) -> bool:
        """True when f and g share a border. A face never touches itself."""
        i, j = self.index_of(f), self.index_of(g)
        return j in self._neighbor_sets[i]

    def neighbors(self, face: str) -> tuple[str, ...]:
        """Faces bordering ``face``, in face-index order."""
        i = self.index_of(face)
        return tuple(self.faces[j] for j in sorted(self._neighbor_sets[i]))

    def degree(self, face: str) -> int:
        return len(self._neighbor_sets[self.index_of(face)])

    def subgraph(self, keep: Iterable[str]) -> MapGraph:
        """Induced map on ``keep``; face order is inherited from this map."""
        kept = set(keep)
        unknown = kept - set(self.faces)
        if unknown:
            raise ValueError(f"unknown faces {sorted(unknown)!r}")
        faces = tuple(f for f in self.faces if f in kept)
        pairs = tuple((f, g) for f, g in self.pairs if f in kept and g in kept)
        return MapGraph(faces, pairs)

    def components(self) -> tuple[tuple[str, ...], ...]:
        """Connected components, each as a face tuple in index order."""
        seen: set[int] = set()
        out: list[tuple[str, ...]] = []
        for start in range(self.n_faces):
            if start in seen:
                continue
            comp = [start]
            seen.add(start)
            queue = [start]
            while queue:
                v = queue.pop()
                for w in self._neighbor_sets[v]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            out.append(tuple(self.faces[i] for i in sorted(comp)))
        return tuple(out)

    def is_complete(self) -> bool:
        n = self.n_faces
        return self.n_pairs == n * (n - 1) // 2

    def to_json_dict(self) -> dict:
        return {
            "faces": list(self.faces),
            "adjacent": [list(p) for p in self.pairs],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> MapGraph:
        try:
            faces = data["faces"]
            pairs = data["adjacent"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"map JSON needs 'faces' and 'adjacent': {exc}")
        return build_map(faces, [tuple(p) for p in pairs])


def build_map(
    faces: Sequence[str], adjacent_pairs: Iterable[tuple[str, str]]
) -> MapGraph:
    """Build a map from face labels and shared-border pairs.

    Pair order and duplicates are normalized. Raises ValueError on duplicate
    face ids, self-pairs, or pairs naming unknown faces. Disconnected maps
    are accepted.
    """
    return MapGraph(tuple(faces), tuple(adjacent_pairs))


@dataclass(frozen=True)
class Coloring:
    """Partial or total assignment of palette colors to faces.

    ``palette_size`` is the number of colors allowed; ``assignment`` maps
    face labels to color indices in ``[0, palette_size)``.
    """

    palette_size: int
    assignment: Mapping[str, int]

    def __post_init__(self) -> None:
        if self.palette_size < 1:
            raise ValueError("palette must have at least one color")
        frozen = dict(self.assignment)
        for face, color in frozen.items():
            if not 0 <= color < self.palette_size:
                raise ValueError(
                    f"face {face!r} has color {color}, palette has "
                    f"{self.palette_size}"
                )
        object.__setattr__(self, "assignment", frozen)

    def color_of(self, face: str) -> int | None:
        return self.assignment.get(face)

    @property
    def assigned(self) -> frozenset[str]:
        return frozenset(self.assignment)

    def is_total_for(self, m: MapGraph) -> bool:
        return set(self.assignment) == set(m.faces)

    def with_face(self, face: str, color: int) -> Coloring:
        merged = dict(self.assignment)
        merged[face] = color
        return Coloring(self.palette_size, merged)

    def display(self) -> dict[str, str]:
        """Assignment with letter names instead of indices."""
        return {f: color_name(c) for f, c in sorted(self.assignment.items())}

    def to_json_dict(self) -> dict:
        return {
            "palette": self.palette_size,
            "assignment": {f: self.assignment[f] for f in sorted(self.assignment)},
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> Coloring:
        try:
            return cls(int(data["palette"]), dict(data["assignment"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"coloring JSON needs 'palette' and 'assignment': {exc}")
