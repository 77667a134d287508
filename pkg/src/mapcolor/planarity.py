"""Planarity at desk scale.

The boolean decision runs Demoucron-style face embedding on each
biconnected block (with the e <= 3v-6 bound as a pre-filter). Witnesses
are found separately, by bounded subdivision search: pick branch vertices
in descending-degree order, then connect every required pair with
internally disjoint paths, shortest candidates first, backtracking on
failure. The two halves are independent, so the boolean stays cheap and
the witness search only ever runs on graphs already known non-planar.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .core import MapGraph
from .embedding import count_vef

__all__ = [
    "EulerReport",
    "KuratowskiWitness",
    "FiveFaceReport",
    "euler_check",
    "edge_bound_filter",
    "is_planar",
    "find_kuratowski",
    "verify_five_face_colorability",
]


@dataclass(frozen=True)
class EulerReport:
    """Vertex/edge/face counts with the characteristic they produce.

    ``expected`` is 2 for a full sphere drawing and 1 when the outer face
    was cut away; ``consistent`` records whether the counts meet it.
    """

    v: int
    e: int
    f: int
    characteristic: int
    expected: int
    consistent: bool

    def to_json_dict(self) -> dict:
        return {
            "v": self.v,
            "e": self.e,
            "f": self.f,
            "characteristic": self.characteristic,
            "expected": self.expected,
            "consistent": self.consistent,
        }


def euler_check(emb) -> EulerReport:
    """Count v, e, f on an embedding-like structure and test v - e + f."""
    v, e, f = count_vef(emb)
    expected = 1 if emb.outer_face_removed else 2
    characteristic = v - e + f
    return EulerReport(v, e, f, characteristic, expected, characteristic == expected)


def edge_bound_filter(m: MapGraph) -> bool:
    """True when e <= 3v - 6 holds, a necessary condition for planarity."""
    if m.n_faces < 3:
        raise ValueError("edge bound needs at least 3 faces")
    return m.n_pairs <= 3 * m.n_faces - 6


# ---------------------------------------------------------------------------
# boolean decision


def _int_adjacency(m: MapGraph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in m.faces]
    idx = {f: i for i, f in enumerate(m.faces)}
    for f, g in m.pairs:
        i, j = idx[f], idx[g]
        adj[i].add(j)
        adj[j].add(i)
    return adj


def _biconnected_blocks(n: int, adj: list[set[int]]) -> list[set[frozenset[int]]]:
    """Edge sets of the biconnected blocks (Hopcroft-Tarjan, iterative)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[set[frozenset[int]]] = []
    estack: list[frozenset[int]] = []
    timer = 0
    for root in range(n):
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, None, iter(sorted(adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] >= disc[pv]:
                        block: set[frozenset[int]] = set()
                        edge = frozenset((pv, v))
                        while estack:
                            e = estack.pop()
                            block.add(e)
                            if e == edge:
                                break
                        blocks.append(block)
                continue
            if w == parent:
                continue
            if w in disc:
                if disc[w] < disc[v]:
                    estack.append(frozenset((v, w)))
                    low[v] = min(low[v], disc[w])
                continue
            disc[w] = low[w] = timer
            timer += 1
            estack.append(frozenset((v, w)))
            stack.append((w, v, iter(sorted(adj[w]))))
    return blocks


def _some_cycle(adj: dict[int, set[int]]) -> list[int]:
    """Any cycle in a biconnected graph with >= 3 vertices."""
    start = min(adj)
    parent: dict[int, int | None] = {start: None}
    pos = {start: 0}
    path = [start]
    stack = [(start, iter(sorted(adj[start])))]
    while stack:
        v, it = stack[-1]
        w = next(it, None)
        if w is None:
            stack.pop()
            del pos[v]
            path.pop()
            continue
        if w == parent[v]:
            continue
        if w in pos:
            return path[pos[w] :]
        if w in parent:
            continue
        parent[w] = v
        pos[w] = len(path)
        path.append(w)
        stack.append((w, iter(sorted(adj[w]))))
    raise ValueError("graph is acyclic")


def _bridge_pieces(
    adj: dict[int, set[int]],
    in_h: set[int],
    h_edges: set[frozenset[int]],
) -> list[tuple[frozenset[int], set[int]]]:
    """Bridges of the embedded subgraph: (attachment vertices, interior)."""
    pieces: list[tuple[frozenset[int], set[int]]] = []
    seen: set[int] = set()
    for v in sorted(adj):
        if v in in_h or v in seen:
            continue
        comp = {v}
        queue = [v]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if y in in_h or y in comp:
                    continue
                comp.add(y)
                queue.append(y)
        seen |= comp
        att = {u for x in comp for u in adj[x] if u in in_h}
        pieces.append((frozenset(att), comp))
    for u in sorted(in_h):
        for v in sorted(adj[u]):
            if v in in_h and u < v and frozenset((u, v)) not in h_edges:
                pieces.append((frozenset((u, v)), set()))
    return pieces


def _cross_path(
    adj: dict[int, set[int]], att: frozenset[int], interior: set[int]
) -> list[int]:
    """A path between two attachments running through the bridge interior."""
    if not interior:
        a, b = sorted(att)
        return [a, b]
    a = min(att)
    parent: dict[int, int] = {}
    queue = deque(
        x for x in sorted(adj[a]) if x in interior
    )
    for x in queue:
        parent[x] = a
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y in att and y != a:
                path = [y, x]
                while path[-1] != a:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            if y in interior and y not in parent:
                parent[y] = x
                queue.append(y)
    raise ValueError("bridge has a single reachable attachment")


def _planar_block(block_edges: set[frozenset[int]], full_adj: list[set[int]]) -> bool:
    """Demoucron face embedding on one biconnected block.

    Grows a plane subgraph face by face: start from a cycle, then repeatedly
    pick a bridge (preferring one with a unique admissible face), route a
    path of it across an admissible face, and split that face in two. A
    bridge with no admissible face certifies non-planarity.
    """
    vertices = sorted({v for e in block_edges for v in e})
    n = len(vertices)
    if n < 5:
        return True
    m = len(block_edges)
    if m > 3 * n - 6:
        return False
    adj = {
        v: {u for u in full_adj[v] if frozenset((u, v)) in block_edges}
        for v in vertices
    }
    cycle = _some_cycle(adj)
    faces: list[list[int]] = [list(cycle), list(reversed(cycle))]
    in_h = set(cycle)
    h_edges = {
        frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))
    }
    while len(h_edges) < m:
        chosen = None
        for att, interior in _bridge_pieces(adj, in_h, h_edges):
            admissible = [i for i, f in enumerate(faces) if att <= set(f)]
            if not admissible:
                return False
            if len(admissible) == 1:
                chosen = (att, interior, admissible[0])
                break
            if chosen is None:
                chosen = (att, interior, admissible[0])
        att, interior, fi = chosen
        path = _cross_path(adj, att, interior)
        face = faces[fi]
        i, j = face.index(path[0]), face.index(path[-1])
        inner = path[1:-1]
        if i <= j:
            seg1 = face[i : j + 1]
            seg2 = face[j:] + face[: i + 1]
        else:
            seg1 = face[i:] + face[: j + 1]
            seg2 = face[j : i + 1]
        faces[fi] = seg1 + inner[::-1]
        faces.append(seg2 + inner)
        in_h.update(inner)
        h_edges.update(frozenset(p) for p in zip(path, path[1:]))
    return True


def is_planar(m: MapGraph) -> bool:
    """Whether the map's adjacency graph embeds in the plane.

    Decided block by block; a graph is planar exactly when every
    biconnected block is.
    """
    adj = _int_adjacency(m)
    return all(
        _planar_block(block, adj) for block in _biconnected_blocks(m.n_faces, adj)
    )


# ---------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True)
class KuratowskiWitness:
    """A subdivision of K5 or K3,3 located inside a host map.

    ``branch`` lists the branch faces: all five for K5; for K33 the first
    three form one side and the last three the other. ``paths`` are the
    connecting face paths, one per required branch pair, internally disjoint
    from each other and from the branch set.
    """

    kind: str
    branch: tuple[str, ...]
    paths: tuple[tuple[str, ...], ...]

    def required_pairs(self) -> set[frozenset[str]]:
        if self.kind == "K5":
            return {frozenset(p) for p in itertools.combinations(self.branch, 2)}
        left, right = self.branch[:3], self.branch[3:]
        return {frozenset((a, b)) for a in left for b in right}

    def validate(self, m: MapGraph) -> None:
        """Raise ValueError unless this witness certifies m non-planar."""
        if self.kind not in ("K5", "K33"):
            raise ValueError(f"unknown witness kind {self.kind!r}")
        want = 5 if self.kind == "K5" else 6
        if len(self.branch) != want or len(set(self.branch)) != want:
            raise ValueError(f"{self.kind} needs {want} distinct branch faces")
        required = self.required_pairs()
        if len(self.paths) != len(required):
            raise ValueError(
                f"{self.kind} needs {len(required)} paths, got {len(self.paths)}"
            )
        covered: set[frozenset[str]] = set()
        interior_seen: set[str] = set()
        branch_set = set(self.branch)
        for path in self.paths:
            if len(path) < 2:
                raise ValueError(f"path too short: {path!r}")
            ends = frozenset((path[0], path[-1]))
            if ends not in required:
                raise ValueError(f"path joins a non-required pair: {path!r}")
            if ends in covered:
                raise ValueError(f"branch pair joined twice: {path!r}")
            covered.add(ends)
            if len(set(path)) != len(path):
                raise ValueError(f"path repeats a face: {path!r}")
            for face in path[1:-1]:
                if face in branch_set:
                    raise ValueError(f"path runs through branch face {face!r}")
                if face in interior_seen:
                    raise ValueError(f"paths share interior face {face!r}")
                interior_seen.add(face)
            for a, b in zip(path, path[1:]):
                if not m.adjacent(a, b):
                    raise ValueError(f"{a!r} and {b!r} are not adjacent in the map")
        if covered != required:
            raise ValueError("some branch pair is not joined")

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "branch": list(self.branch),
            "paths": [list(p) for p in self.paths],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> KuratowskiWitness:
        try:
            return cls(
                str(data["kind"]),
                tuple(data["branch"]),
                tuple(tuple(p) for p in data["paths"]),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"witness JSON needs kind/branch/paths: {exc}")


def _simple_paths(
    adj: list[set[int]], a: int, b: int, blocked: set[int]
) -> Iterator[list[int]]:
    """Simple a-b paths whose interior avoids ``blocked``, near-shortest first.

    Neighbors are expanded in order of hop distance to b, so the shortest
    route comes out first and detours follow under backtracking.
    """
    dist = {b: 0}
    queue = deque([b])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist and (y == a or y not in blocked):
                dist[y] = dist[x] + 1
                queue.append(y)
    if a not in dist:
        return

    far = len(adj) + 1

    def walk(v: int, seen: set[int], path: list[int]) -> Iterator[list[int]]:
        for w in sorted(adj[v], key=lambda x: (dist.get(x, far), x)):
            if w == b:
                yield path + [b]
            elif w not in blocked and w not in seen and w in dist:
                seen.add(w)
                yield from walk(w, seen, path + [w])
                seen.remove(w)

    yield from walk(a, {a}, [a])


def _link_pairs(
    adj: list[set[int]],
    branch: tuple[int, ...],
    pairs: list[tuple[int, int]],
) -> list[list[int]] | None:
    """Internally disjoint paths joining every pair, or None."""
    branch_set = set(branch)
    used: set[int] = set()
    chosen: list[list[int]] = []

    def attempt(i: int) -> bool:
        if i == len(pairs):
            return True
        a, b = pairs[i]
        blocked = (branch_set - {a, b}) | used
        for path in _simple_paths(adj, a, b, blocked):
            interior = path[1:-1]
            used.update(interior)
            chosen.append(path)
            if attempt(i + 1):
                return True
            used.difference_update(interior)
            chosen.pop()
        return False

    return chosen if attempt(0) else None


def _search_k5(adj: list[set[int]]) -> tuple[tuple[int, ...], list[list[int]]] | None:
    degree = [len(s) for s in adj]
    cand = sorted(
        (v for v in range(len(adj)) if degree[v] >= 4),
        key=lambda v: (-degree[v], v),
    )
    if len(cand) < 5:
        return None
    for branch in itertools.combinations(cand, 5):
        pairs = list(itertools.combinations(branch, 2))
        paths = _link_pairs(adj, branch, pairs)
        if paths is not None:
            return branch, paths
    return None


def _search_k33(adj: list[set[int]]) -> tuple[tuple[int, ...], list[list[int]]] | None:
    degree = [len(s) for s in adj]
    cand = sorted(
        (v for v in range(len(adj)) if degree[v] >= 3),
        key=lambda v: (-degree[v], v),
    )
    if len(cand) < 6:
        return None
    for six in itertools.combinations(cand, 6):
        # fixing six[0] on the left halves the partition count
        for rest in itertools.combinations(six[1:], 2):
            left = (six[0],) + rest
            right = tuple(v for v in six if v not in left)
            pairs = [(a, b) for a in left for b in right]
            paths = _link_pairs(adj, six, pairs)
            if paths is not None:
                return left + right, paths
    return None


def find_kuratowski(m: MapGraph, kind: str | None = None) -> KuratowskiWitness | None:
    """Locate a K5 or K3,3 subdivision, or return None on planar input.

    With ``kind`` given, only that shape is searched for (a non-planar map
    can lack one kind; it never lacks both). Returned witnesses are
    validated against the map before they leave.
    """
    if kind not in (None, "K5", "K33"):
        raise ValueError(f"kind must be 'K5' or 'K33', not {kind!r}")
    if kind is None and is_planar(m):
        return None
    adj = _int_adjacency(m)
    kinds = ("K5", "K33") if kind is None else (kind,)
    for k in kinds:
        found = _search_k5(adj) if k == "K5" else _search_k33(adj)
        if found is not None:
            branch, paths = found
            witness = KuratowskiWitness(
                kind=k,
                branch=tuple(m.faces[v] for v in branch),
                paths=tuple(tuple(m.faces[v] for v in p) for p in paths),
            )
            witness.validate(m)
            return witness
    if kind is None:
        raise RuntimeError("non-planar map yielded no witness; search is broken")
    return None


# ---------------------------------------------------------------------------
# exhaustion over five-face maps


@dataclass(frozen=True)
class FiveFaceReport:
    """Census of all labeled five-face maps: chromatic counts and planarity.

    ``holds`` records the headline fact: no planar five-face map needs five
    colors, and the single map that does (the complete one) is non-planar.
    """

    total: int
    chromatic_counts: Mapping[int, int]
    five_chromatic_count: int
    five_chromatic_planar_count: int
    five_chromatic_is_complete: bool
    holds: bool

    def to_json_dict(self) -> dict:
        return {
            "total": self.total,
            "chromatic_counts": {str(k): v for k, v in sorted(self.chromatic_counts.items())},
            "five_chromatic_count": self.five_chromatic_count,
            "five_chromatic_planar_count": self.five_chromatic_planar_count,
            "five_chromatic_is_complete": self.five_chromatic_is_complete,
            "holds": self.holds,
        }


def verify_five_face_colorability() -> FiveFaceReport:
    """Check every one of the 1024 labeled five-face maps.

    For each adjacency pattern on faces A..E this computes the exact
    chromatic number and, for the five-chromatic ones, the planarity
    verdict. Exhaustive, so the result is a finite proof at this size.
    """
    from .coloring import exact_chromatic  # deferred: coloring imports this module

    faces = ("A", "B", "C", "D", "E")
    all_pairs = list(itertools.combinations(faces, 2))
    counts: Counter[int] = Counter()
    five_chromatic: list[MapGraph] = []
    planar_five = 0
    for mask in range(1 << len(all_pairs)):
        pairs = tuple(p for i, p in enumerate(all_pairs) if mask >> i & 1)
        m = MapGraph(faces, pairs)
        chi = exact_chromatic(m, 5).chi
        counts[chi] += 1
        if chi == 5:
            five_chromatic.append(m)
            if is_planar(m):
                planar_five += 1
    is_complete = len(five_chromatic) == 1 and five_chromatic[0].is_complete()
    return FiveFaceReport(
        total=1 << len(all_pairs),
        chromatic_counts=dict(counts),
        five_chromatic_count=len(five_chromatic),
        five_chromatic_planar_count=planar_five,
        five_chromatic_is_complete=is_complete,
        holds=(len(five_chromatic) == 1 and planar_five == 0 and is_complete),
    )
