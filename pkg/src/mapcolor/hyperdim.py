"""Maps in other dimensions: curve segments and voxel solids.

A one-dimensional map is a curve cut into segments; its dual is a path or
a cycle. A three-dimensional map is a set of voxel regions; two regions
are adjacent when some pair of their cells shares a square face (corner
and edge contact do not count). ``check_conjecture`` compares a map's
exact chromatic number against the bound dimension + 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .coloring import exact_chromatic
from .core import MapGraph, build_map

__all__ = [
    "VoxelComplex",
    "ConjectureReport",
    "curve_map",
    "neighborly_boxes",
    "adjacency_graph",
    "check_conjecture",
]

Voxel = tuple[int, int, int]

_SIX_NEIGHBORS = (
    (1, 0, 0),
    (-1, 0, 0),
    (0, 1, 0),
    (0, -1, 0),
    (0, 0, 1),
    (0, 0, -1),
)


def curve_map(n_segments: int, closed: bool = False) -> MapGraph:
    """Segments of a subdivided curve: a path, or a cycle when closed.

    Faces are S1..Sn; consecutive segments are adjacent, and a closed curve
    also joins the last segment back to the first. Closed curves need at
    least three segments.
    """
    if n_segments < 1:
        raise ValueError("need at least one segment")
    if closed and n_segments < 3:
        raise ValueError("a closed curve needs at least 3 segments")
    faces = tuple(f"S{i}" for i in range(1, n_segments + 1))
    pairs = [(faces[i], faces[i + 1]) for i in range(n_segments - 1)]
    if closed:
        pairs.append((faces[-1], faces[0]))
    return build_map(faces, pairs)


@dataclass(frozen=True)
class VoxelComplex:
    """Disjoint, face-connected voxel regions inside an integer grid.

    ``grid`` bounds cells to 0 <= x < gx, 0 <= y < gy, 0 <= z < gz. Every
    region must be non-empty and connected through shared square faces;
    construction validates all of it.
    """

    grid: tuple[int, int, int]
    regions: Mapping[str, frozenset[Voxel]]

    def __post_init__(self) -> None:
        gx, gy, gz = self.grid
        if min(gx, gy, gz) < 1:
            raise ValueError("grid dimensions must be positive")
        frozen = {name: frozenset(tuple(v) for v in cells)
                  for name, cells in self.regions.items()}
        owner: dict[Voxel, str] = {}
        for name, cells in frozen.items():
            if not cells:
                raise ValueError(f"region {name!r} is empty")
            for x, y, z in cells:
                if not (0 <= x < gx and 0 <= y < gy and 0 <= z < gz):
                    raise ValueError(
                        f"cell {(x, y, z)} of region {name!r} is outside the grid"
                    )
                if (x, y, z) in owner:
                    raise ValueError(
                        f"cell {(x, y, z)} belongs to both "
                        f"{owner[(x, y, z)]!r} and {name!r}"
                    )
                owner[(x, y, z)] = name
            if not _face_connected(cells):
                raise ValueError(f"region {name!r} is not face-connected")
        object.__setattr__(self, "regions", frozen)
        object.__setattr__(self, "grid", (gx, gy, gz))

    def to_json_dict(self) -> dict:
        return {
            "grid": list(self.grid),
            "regions": {
                name: [list(v) for v in sorted(cells)]
                for name, cells in self.regions.items()
            },
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> VoxelComplex:
        try:
            grid = tuple(int(g) for g in data["grid"])
            regions = {
                str(name): frozenset(tuple(int(c) for c in cell) for cell in cells)
                for name, cells in data["regions"].items()
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"voxel JSON needs 'grid' and 'regions': {exc}")
        if len(grid) != 3:
            raise ValueError("'grid' must have three dimensions")
        return cls(grid, regions)  # type: ignore[arg-type]


def _face_connected(cells: frozenset[Voxel]) -> bool:
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        x, y, z = stack.pop()
        for dx, dy, dz in _SIX_NEIGHBORS:
            nb = (x + dx, y + dy, z + dz)
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def neighborly_boxes(m: int) -> VoxelComplex:
    """m solid regions in an m x 2 x m grid, every pair sharing a wall.

    Region i owns the slab at height z = i-1 (minus cells claimed by lower
    regions' towers) plus a tower column rising from its slab at x = i-1,
    y = 0. Tower i passes every higher slab at the cell next to that slab's
    full y = 1 row, so all pairs of regions meet face to face: the dual is
    the complete map on m faces.
    """
    if not 2 <= m <= 32:
        raise ValueError("m must be between 2 and 32")
    regions: dict[str, frozenset[Voxel]] = {}
    for i in range(1, m + 1):
        slab = {
            (x, y, i - 1)
            for x in range(m)
            for y in (0, 1)
            if not (y == 0 and x < i - 1)
        }
        tower = {(i - 1, 0, z) for z in range(i, m)}
        regions[f"R{i}"] = frozenset(slab | tower)
    return VoxelComplex(grid=(m, 2, m), regions=regions)


def adjacency_graph(cx: VoxelComplex) -> MapGraph:
    """Dual map of a voxel complex: regions sharing a square face touch."""
    owner: dict[Voxel, str] = {
        cell: name for name, cells in cx.regions.items() for cell in cells
    }
    names = list(cx.regions)
    idx = {name: i for i, name in enumerate(names)}
    pairs: set[tuple[str, str]] = set()
    for (x, y, z), name in owner.items():
        for dx, dy, dz in _SIX_NEIGHBORS:
            other = owner.get((x + dx, y + dy, z + dz))
            if other is not None and other != name:
                a, b = sorted((name, other), key=idx.__getitem__)
                pairs.add((a, b))
    return build_map(names, pairs)


@dataclass(frozen=True)
class ConjectureReport:
    """Chromatic number of one instance against the dimension + 2 bound."""

    dimension: int
    instance: str
    chi: int
    bound: int
    verdict: str  # "Consistent" | "Falsified"

    def to_json_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "instance": self.instance,
            "chi": self.chi,
            "bound": self.bound,
            "verdict": self.verdict,
        }


def check_conjecture(
    dimension: int, m: MapGraph, instance: str | None = None
) -> ConjectureReport:
    """Compare a map's exact chromatic number against dimension + 2.

    The claim under test: a map of n-dimensional regions never needs more
    than n + 2 colors. Falsified exactly when this instance exceeds the
    bound.
    """
    if dimension < 1:
        raise ValueError("dimension must be at least 1")
    chi = exact_chromatic(m, m.n_faces).chi
    assert chi is not None  # k_max = n always suffices
    bound = dimension + 2
    return ConjectureReport(
        dimension=dimension,
        instance=instance or f"map with {m.n_faces} faces, {m.n_pairs} adjacencies",
        chi=chi,
        bound=bound,
        verdict="Falsified" if chi > bound else "Consistent",
    )
