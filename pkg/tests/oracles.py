"""Independent brute-force oracles the implementation is judged against.

Nothing here shares code with the package: chromatic numbers come from
full assignment enumeration, and planarity comes from matching a catalog
of K5/K33 subdivision patterns as subgraphs, which is decisive for hosts
of up to seven faces (a subdivision needs five or six branch faces, so
every possible pattern at that size is in the catalog).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product

from mapcolor import MapGraph


def chromatic_by_enumeration(m: MapGraph, k_max: int) -> int | None:
    """Smallest k <= k_max admitting a proper coloring, by trying all k^f."""
    n = m.n_faces
    idx = {f: i for i, f in enumerate(m.faces)}
    edges = [(idx[f], idx[g]) for f, g in m.pairs]
    for k in range(1, k_max + 1):
        for assignment in product(range(k), repeat=n):
            if all(assignment[a] != assignment[b] for a, b in edges):
                return k
    return None


def _subdivide(base_n: int, base_edges: list[tuple[int, int]], extra: int):
    """All ways to sprinkle ``extra`` new vertices onto the base edges."""
    patterns = []
    for chosen in combinations_with_replacement(range(len(base_edges)), extra):
        counts = [0] * len(base_edges)
        for e in chosen:
            counts[e] += 1
        edges: list[tuple[int, int]] = []
        nxt = base_n
        for (a, b), c in zip(base_edges, counts):
            chain = [a] + list(range(nxt, nxt + c)) + [b]
            nxt += c
            edges.extend(zip(chain, chain[1:]))
        patterns.append((nxt, tuple(sorted(tuple(sorted(e)) for e in edges))))
    return patterns


def _canonical(n: int, edges: tuple[tuple[int, int], ...]) -> tuple:
    """Isomorphism signature by minimizing the edge list over relabelings."""
    best = None
    for perm in permutations(range(n)):
        relabeled = tuple(
            sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges)
        )
        if best is None or relabeled < best:
            best = relabeled
    return (n, best)


@lru_cache(maxsize=None)
def _catalog(max_n: int) -> tuple[tuple[int, tuple[tuple[int, int], ...]], ...]:
    """Every K5/K33 subdivision shape with at most max_n vertices, deduped."""
    k5_edges = list(combinations(range(5), 2))
    k33_edges = [(a, b) for a in range(3) for b in range(3, 6)]
    seen = {}
    for base_n, base_edges in ((5, k5_edges), (6, k33_edges)):
        for extra in range(0, max_n - base_n + 1):
            for n, edges in _subdivide(base_n, base_edges, extra):
                seen.setdefault(_canonical(n, edges), (n, edges))
    return tuple(sorted(seen.values(), key=lambda p: (p[0], len(p[1]))))


def _embeds_as_subgraph(
    pat_n: int,
    pat_edges: tuple[tuple[int, int], ...],
    host_adj: list[set[int]],
) -> bool:
    """Injective vertex map carrying every pattern edge onto a host edge."""
    host_n = len(host_adj)
    if pat_n > host_n:
        return False
    pat_adj: list[set[int]] = [set() for _ in range(pat_n)]
    for a, b in pat_edges:
        pat_adj[a].add(b)
        pat_adj[b].add(a)
    order = sorted(range(pat_n), key=lambda v: -len(pat_adj[v]))
    assign = [-1] * pat_n
    used = [False] * host_n

    def place(i: int) -> bool:
        if i == pat_n:
            return True
        pv = order[i]
        need = len(pat_adj[pv])
        placed = [assign[u] for u in pat_adj[pv] if assign[u] != -1]
        for hv in range(host_n):
            if used[hv] or len(host_adj[hv]) < need:
                continue
            if all(p in host_adj[hv] for p in placed):
                assign[pv] = hv
                used[hv] = True
                if place(i + 1):
                    return True
                assign[pv] = -1
                used[hv] = False
        return False

    return place(0)


def planar_by_catalog(m: MapGraph) -> bool:
    """Planarity for maps of at most 7 faces, by subdivision-pattern search."""
    n = m.n_faces
    if n > 7:
        raise ValueError("the pattern catalog is complete only up to 7 faces")
    idx = {f: i for i, f in enumerate(m.faces)}
    adj: list[set[int]] = [set() for _ in range(n)]
    for f, g in m.pairs:
        adj[idx[f]].add(idx[g])
        adj[idx[g]].add(idx[f])
    n_edges = m.n_pairs
    for pat_n, pat_edges in _catalog(7):
        if pat_n <= n and len(pat_edges) <= n_edges:
            if _embeds_as_subgraph(pat_n, pat_edges, adj):
                return False
    return True
