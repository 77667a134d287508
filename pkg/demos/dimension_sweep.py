"""
How many colors per dimension?
==============================

Segments of a curve need few colors; boxes in space need many. The rule
under test says regions of dimension n never need more than n + 2 colors.
It survives every curve here and dies at six boxes.
"""

from mapcolor import adjacency_graph, check_conjecture, curve_map, neighborly_boxes

print("dimension 1: segments along a curve (bound 3)")
for n in (2, 5, 8, 12):
    open_r = check_conjecture(1, curve_map(n))
    print(f"  open, {n:2d} segments: chi={open_r.chi}  {open_r.verdict}")
for n in (3, 5, 12):
    closed_r = check_conjecture(1, curve_map(n, closed=True))
    print(f"  closed, {n:2d} segments: chi={closed_r.chi}  {closed_r.verdict}")

print("\ndimension 3: boxes arranged so every two share a wall (bound 5)")
for m in range(2, 9):
    cx = neighborly_boxes(m)
    graph = adjacency_graph(cx)
    r = check_conjecture(3, graph, f"{m} boxes")
    gx, gy, gz = cx.grid
    note = "  <- first failure" if r.verdict == "Falsified" and m == 6 else ""
    print(
        f"  {m} boxes in a {gx}x{gy}x{gz} grid: "
        f"complete={graph.is_complete()} chi={r.chi}  {r.verdict}{note}"
    )

print("\nevery two boxes share a wall, so m boxes need m colors:")
print("the bound n + 2 = 5 cannot survive past five boxes.")
