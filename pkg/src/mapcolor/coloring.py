"""Coloring procedures for dual-graph maps.

greedy_extend is the one-face rule: give a new face the lowest palette
color its colored neighbors leave free, and report why when none is free.
induction_color drives that rule over a whole map with chronological
backtracking, so it finds a 4-coloring whenever one exists.
exact_chromatic is the independent oracle (exhaustive, with symmetry
breaking), and check_precoloring_extension asks whether a fixed partial
coloring survives to a total one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Sequence

from .core import Coloring, MapGraph
from .planarity import KuratowskiWitness

__all__ = [
    "ExtensionOutcome",
    "ChromaticResult",
    "verify_coloring",
    "greedy_extend",
    "breadth_first_order",
    "induction_color",
    "exact_chromatic",
    "check_precoloring_extension",
]


def verify_coloring(m: MapGraph, col: Coloring) -> bool:
    """True when no two adjacent assigned faces share a color.

    Partial colorings are fine; unassigned faces constrain nothing. Raises
    ValueError if the coloring mentions a face the map lacks.
    """
    unknown = col.assigned - set(m.faces)
    if unknown:
        raise ValueError(f"coloring assigns unknown faces {sorted(unknown)!r}")
    return all(
        col.assignment[f] != col.assignment[g]
        for f, g in m.pairs
        if f in col.assignment and g in col.assignment
    )


@dataclass(frozen=True)
class ExtensionOutcome:
    """Result of extending a coloring by one face.

    Either ``color`` is the index chosen, or the face is blocked and the
    outcome carries the diagnosis: a complete-map witness on the face plus
    four mutually adjacent neighbors when one exists, and always the census
    of which neighbors hold which color.
    """

    color: int | None
    witness: KuratowskiWitness | None = None
    census: Mapping[int, tuple[str, ...]] | None = None

    @property
    def blocked(self) -> bool:
        return self.color is None


def greedy_extend(m: MapGraph, col: Coloring, face: str) -> ExtensionOutcome:
    """Color one more face with the lowest index its neighbors allow.

    Raises ValueError when the face is unknown, already colored, or the
    partial coloring is improper (a sound diagnosis needs a sound start).
    """
    m.index_of(face)
    if face in col.assignment:
        raise ValueError(f"face {face!r} is already colored")
    if not verify_coloring(m, col):
        raise ValueError("partial coloring is improper")
    neighbors = m.neighbors(face)
    present = {col.assignment[g] for g in neighbors if g in col.assignment}
    for c in range(col.palette_size):
        if c not in present:
            return ExtensionOutcome(color=c)
    census = {
        c: tuple(g for g in neighbors if col.color_of(g) == c)
        for c in sorted(present)
    }
    witness = _complete_five_witness(m, col, face) if col.palette_size == 4 else None
    return ExtensionOutcome(color=None, witness=witness, census=census)


def _complete_five_witness(
    m: MapGraph, col: Coloring, face: str
) -> KuratowskiWitness | None:
    """K5 witness on the blocked face plus four mutually adjacent neighbors."""
    colored = [g for g in m.neighbors(face) if g in col.assignment]
    for quad in combinations(colored, 4):
        if all(m.adjacent(a, b) for a, b in combinations(quad, 2)):
            branch = tuple(sorted((*quad, face), key=m.index_of))
            paths = tuple((a, b) for a, b in combinations(branch, 2))
            witness = KuratowskiWitness(kind="K5", branch=branch, paths=paths)
            witness.validate(m)
            return witness
    return None


def breadth_first_order(m: MapGraph) -> tuple[str, ...]:
    """Faces breadth-first from the lowest index, lowest-index ties first.

    Each connected component is swept in turn, starting from its lowest
    unvisited face.
    """
    idx = {f: i for i, f in enumerate(m.faces)}
    order: list[str] = []
    seen: set[str] = set()
    for start in m.faces:
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            f = queue.popleft()
            order.append(f)
            for g in sorted(m.neighbors(f), key=idx.__getitem__):
                if g not in seen:
                    seen.add(g)
                    queue.append(g)
    return tuple(order)


def _backtrack_color(
    m: MapGraph,
    order: Sequence[str],
    palette: int,
    fixed: Mapping[str, int],
    introduce_in_order: bool = False,
) -> dict[str, int] | None:
    """Chronological backtracking over colors in a fixed face order.

    ``fixed`` faces keep their colors and are never revisited. With
    ``introduce_in_order`` a face may use at most one color index above
    everything already used, which cuts palette symmetry for exact search.
    """
    idx = {f: i for i, f in enumerate(order)}
    earlier: list[list[int]] = []
    fixed_conf: list[set[int]] = []
    for pos, f in enumerate(order):
        nbrs = m.neighbors(f)
        earlier.append([idx[g] for g in nbrs if g in idx and idx[g] < pos])
        fixed_conf.append({fixed[g] for g in nbrs if g in fixed})
    n = len(order)
    colors = [-1] * n
    start = [0] * n
    used_before = [0] * (n + 1)
    base_used = max(fixed.values()) + 1 if fixed else 0
    used_before[0] = base_used
    pos = 0
    while 0 <= pos < n:
        limit = min(palette, used_before[pos] + 1) if introduce_in_order else palette
        chosen = -1
        for c in range(start[pos], limit):
            if c in fixed_conf[pos]:
                continue
            if any(colors[q] == c for q in earlier[pos]):
                continue
            chosen = c
            break
        if chosen >= 0:
            colors[pos] = chosen
            start[pos] = chosen + 1
            used_before[pos + 1] = max(used_before[pos], chosen + 1)
            pos += 1
            if pos < n:
                start[pos] = 0
        else:
            colors[pos] = -1
            start[pos] = 0
            pos -= 1
    if pos < 0:
        return None
    out = dict(fixed)
    out.update({order[p]: colors[p] for p in range(n)})
    return out


def induction_color(
    m: MapGraph, order: Sequence[str] | None = None
) -> Coloring | None:
    """Four-color the whole map by repeated lowest-free-color extension.

    Faces are taken breadth-first from the lowest-indexed one unless an
    explicit order is supplied; when a face blocks, the search backtracks
    chronologically to the latest revisable choice. The search is complete:
    None comes back only when no proper 4-coloring exists at all.
    """
    if order is None:
        order = breadth_first_order(m)
    else:
        order = tuple(order)
        if sorted(order) != sorted(m.faces):
            raise ValueError("order must list every face exactly once")
    found = _backtrack_color(m, order, palette=4, fixed={})
    return Coloring(4, found) if found is not None else None


class ChromaticResult(NamedTuple):
    """chi is None when every k <= k_max fails; witness realizes chi."""

    chi: int | None
    witness: Coloring | None


def exact_chromatic(m: MapGraph, k_max: int) -> ChromaticResult:
    """Smallest k <= k_max that properly colors the map, with a witness.

    Exhaustive backtracking per k, highest-degree faces first, palette
    symmetry broken by introducing color indices in order (the first face
    always takes color 0).
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    order = sorted(m.faces, key=lambda f: (-m.degree(f), m.index_of(f)))
    for k in range(1, k_max + 1):
        found = _backtrack_color(m, order, palette=k, fixed={}, introduce_in_order=True)
        if found is not None:
            return ChromaticResult(k, Coloring(k, found))
    return ChromaticResult(None, None)


def check_precoloring_extension(
    m: MapGraph, sub: Iterable[str], precol: Coloring
) -> Coloring | None:
    """Extend a fixed proper coloring of ``sub`` to the whole map, if possible.

    The precoloring must assign exactly the faces of ``sub`` and be proper
    on the induced submap (ValueError otherwise). Returns a total coloring
    extending it, or None when exhaustive search rules every extension out.
    """
    sub = frozenset(sub)
    unknown = sub - set(m.faces)
    if unknown:
        raise ValueError(f"subgraph names unknown faces {sorted(unknown)!r}")
    if col_faces := (precol.assigned ^ sub):
        raise ValueError(
            f"precoloring must assign exactly the subgraph faces; "
            f"mismatch on {sorted(col_faces)!r}"
        )
    if sub and not verify_coloring(m.subgraph(sub), precol):
        raise ValueError("precoloring is improper on the subgraph")
    order = tuple(f for f in breadth_first_order(m) if f not in sub)
    found = _backtrack_color(m, order, precol.palette_size, dict(precol.assignment))
    return Coloring(precol.palette_size, found) if found is not None else None
