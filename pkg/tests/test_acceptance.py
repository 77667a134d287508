"""Acceptance gate: the nine headline checks, each with a runtime budget.

Each test prints one line naming its criterion and timing; the assertions
pin the substance (exact counts, verdicts, witnesses) and the budget.
"""

import random
import time
from itertools import combinations

from mapcolor import (
    Coloring,
    add_edge_mn,
    adjacency_graph,
    base_map_5,
    build_figure1,
    build_map,
    check_conjecture,
    check_precoloring_extension,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    count_vef,
    curve_map,
    edge_bound_filter,
    euler_check,
    exact_chromatic,
    find_kuratowski,
    flower_counterexample,
    greedy_extend,
    induction_color,
    is_planar,
    neighborly_boxes,
    random_planar_map,
    run_claim,
    verify_coloring,
    verify_five_face_colorability,
)
from oracles import chromatic_by_enumeration


def report(criterion, elapsed, budget, detail):
    print(f"criterion {criterion} PASS ({elapsed:.2f}s < {budget:.0f}s): {detail}")
    assert elapsed < budget


def test_criterion_1_five_face_euler_counts():
    t0 = time.perf_counter()
    fix = build_figure1()
    base = euler_check(fix.embedding)
    assert count_vef(fix.embedding) == (8, 12, 5)
    assert base.characteristic == 1 and base.consistent
    aug = add_edge_mn(fix)
    crossed = euler_check(aug)
    assert count_vef(aug) == (10, 13, 5)
    assert crossed.characteristic == 2 and not crossed.consistent
    report(1, time.perf_counter() - t0, 1, "(8,12,5) ok; joined (10,13,5) breaks")


def test_criterion_2_exhaustive_five_face_maps():
    t0 = time.perf_counter()
    names = ["A", "B", "C", "D", "E"]
    universe = list(combinations(names, 2))
    five_chromatic = []
    planar_five_chromatic = 0
    for mask in range(1 << 10):
        m = build_map(names, [p for i, p in enumerate(universe) if mask >> i & 1])
        if exact_chromatic(m, 5).chi == 5:
            five_chromatic.append(m)
            if is_planar(m):
                planar_five_chromatic += 1
    assert planar_five_chromatic == 0
    assert len(five_chromatic) == 1
    assert five_chromatic[0].is_complete()
    assert verify_five_face_colorability().holds
    report(2, time.perf_counter() - t0, 10, "1024 maps: only the complete one needs 5")


def test_criterion_3_extension_classes():
    t0 = time.perf_counter()
    m, col = base_map_5()
    neighborhoods = {
        0: ("B", "C", "D", "E"),
        1: ("A", "C", "D", "E"),
        2: ("A", "B", "D", "E"),
        3: ("A", "B", "C"),
    }
    for expected_color, adj in neighborhoods.items():
        grown = build_map(list(m.faces) + ["F"], list(m.pairs) + [(f, "F") for f in adj])
        out = greedy_extend(grown, col, "F")
        assert out.color == expected_color
    full = build_map(list(m.faces) + ["F"], list(m.pairs) + [(f, "F") for f in m.faces])
    blocked = greedy_extend(full, col, "F")
    assert blocked.blocked
    assert blocked.witness is not None and blocked.witness.kind == "K5"
    blocked.witness.validate(full)
    assert set(blocked.witness.branch) == {"A", "B", "C", "D", "F"}
    assert blocked.census is not None and sorted(blocked.census) == [0, 1, 2, 3]
    report(3, time.perf_counter() - t0, 1, "classes a/b/c/d; full contact blocks with K5")


def test_criterion_4_blocked_rim_but_colorable_map():
    t0 = time.perf_counter()
    m, sub, precol = flower_counterexample()
    assert check_precoloring_extension(m, sub, precol) is None
    chi = exact_chromatic(m, 4).chi
    assert chi is not None and chi <= 4
    report(4, time.perf_counter() - t0, 1, f"rim blocks, yet the bare map has chi={chi}")


def test_criterion_5_random_corpus_four_colors():
    t0 = time.perf_counter()
    rng = random.Random(0)
    colored = 0
    for i in range(200):
        size = 6 + (i % 25)
        m = random_planar_map(size, rng.getrandbits(63))
        assert exact_chromatic(m, 4).chi is not None
        col = induction_color(m)
        assert col is not None and col.is_total_for(m) and verify_coloring(m, col)
        colored += 1
    assert colored == 200
    report(5, time.perf_counter() - t0, 60, "200/200 corpus maps four-colored both ways")


def test_criterion_6_kuratowski_witnesses():
    t0 = time.perf_counter()
    per_graph = []

    def timed(m):
        t = time.perf_counter()
        w = find_kuratowski(m)
        per_graph.append(time.perf_counter() - t)
        return w

    w5 = timed(complete_graph(5))
    assert w5 is not None and w5.kind == "K5"
    w5.validate(complete_graph(5))
    w33 = timed(complete_bipartite(3, 3))
    assert w33 is not None and w33.kind == "K33"
    w33.validate(complete_bipartite(3, 3))

    outer = [f"P{i}" for i in range(5)]
    inner = [f"Q{i}" for i in range(5)]
    petersen = build_map(
        outer + inner,
        [(outer[i], outer[(i + 1) % 5]) for i in range(5)]
        + [(inner[i], inner[(i + 2) % 5]) for i in range(5)]
        + [(outer[i], inner[i]) for i in range(5)],
    )
    wp = timed(petersen)
    assert wp is not None and wp.kind == "K33"
    wp.validate(petersen)
    t = time.perf_counter()
    assert find_kuratowski(petersen, kind="K5") is None
    per_graph.append(time.perf_counter() - t)

    assert timed(complete_graph(4)) is None
    base, _ = base_map_5()
    assert timed(base) is None
    assert max(per_graph) < 1
    report(6, time.perf_counter() - t0, 6, "witness kinds and absences all as pinned")


def test_criterion_7_dimension_sweep():
    t0 = time.perf_counter()
    for n in range(1, 13):
        assert check_conjecture(1, curve_map(n)).verdict == "Consistent"
        if n >= 3:
            assert check_conjecture(1, curve_map(n, closed=True)).verdict == "Consistent"
    assert run_claim("Conjecture6_1_n1").verdict == "Verified"
    boxes = adjacency_graph(neighborly_boxes(6))
    assert boxes.is_complete() and boxes.n_faces == 6
    falsified = check_conjecture(3, boxes)
    assert falsified.chi == 6 and falsified.bound == 5
    assert falsified.verdict == "Falsified"
    assert run_claim("Conjecture6_1_n3").verdict == "Falsified"
    report(7, time.perf_counter() - t0, 5, "curves hold to 12 segments; 6 boxes break 5")


def test_criterion_8_multipartite_family():
    t0 = time.perf_counter()
    near_k5 = complete_multipartite(1, 1, 1, 2)
    assert is_planar(near_k5)
    assert exact_chromatic(near_k5, 4).chi == 4
    blown = complete_multipartite(2, 2, 2, 2)
    assert blown.n_pairs == 24 and not edge_bound_filter(blown)  # 24 > 3*8-6
    assert not is_planar(blown)
    tested = 0
    for i in range(0, 13):
        for j in range(0, 13 - i):
            for k in range(0, 13 - i - j):
                for l in range(0, 13 - i - j - k):
                    if i + j + k + l == 0:
                        continue
                    m = complete_multipartite(i, j, k, l)
                    col = Coloring(4, {f: "ABCD".index(f[0]) for f in m.faces})
                    assert verify_coloring(m, col) and col.is_total_for(m)
                    tested += 1
    report(8, time.perf_counter() - t0, 5, f"letter coloring proper on {tested} maps")


def test_criterion_9_exact_matches_enumeration():
    t0 = time.perf_counter()
    rng = random.Random(20240817)
    for _ in range(500):
        n = rng.randrange(1, 9)
        names = [f"F{i}" for i in range(n)]
        universe = list(combinations(names, 2))
        m = build_map(names, [p for p in universe if rng.random() < 0.5])
        assert exact_chromatic(m, 4).chi == chromatic_by_enumeration(m, 4)
    report(9, time.perf_counter() - t0, 30, "500 maps: exact equals full enumeration")
