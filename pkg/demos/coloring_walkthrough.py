"""
Growing a coloring one face at a time
=====================================

Start from five faces where only D and E stay apart, colored a,b,c,d,d.
A sixth face F then arrives with different neighborhoods: as long as F
misses at least one old face, the lowest free color works. Touching all
five blocks the extension and the diagnosis is a complete five-face
cluster. A fixed rim coloring can block even a map that colors easily.
"""

from mapcolor import (
    base_map_5,
    build_map,
    check_precoloring_extension,
    exact_chromatic,
    flower_counterexample,
    greedy_extend,
    induction_color,
    verify_coloring,
)

m, col = base_map_5()
print("base map:", ", ".join(m.faces), "with D and E apart")
print("coloring:", col.display())

print("\nattach F to four different neighborhoods:")
for adj in (("B", "C", "D", "E"), ("A", "C", "D", "E"), ("A", "B", "D", "E"), ("A", "B", "C")):
    grown = build_map(list(m.faces) + ["F"], list(m.pairs) + [(x, "F") for x in adj])
    out = greedy_extend(grown, col, "F")
    missed = [x for x in m.faces if x not in adj]
    print(f"  F touches {','.join(adj):10s} misses {','.join(missed):4s} -> F gets {out.color}")

print("\nattach F to all five:")
full = build_map(list(m.faces) + ["F"], list(m.pairs) + [(x, "F") for x in m.faces])
out = greedy_extend(full, col, "F")
print(f"  blocked: {out.blocked}")
print(f"  colors on the neighbors: {dict(sorted(out.census.items()))}")
print(f"  witness: {'-'.join(out.witness.branch)} form a complete five-face cluster")

print("\nno choice of order rescues a full cluster:")
col6 = induction_color(full)
verdict = "found a coloring" if col6 else "no 4-coloring exists"
print(f"  complete search over the six-face map: {verdict}")

flower_map, rim, rim_coloring = flower_counterexample()
print("\nthe flower: center C, ring O, five petals")
print("rim precoloring:", rim_coloring.display())
extended = check_precoloring_extension(flower_map, rim, rim_coloring)
print(f"extends to the center? {extended is not None}")
chi, witness = exact_chromatic(flower_map, 4)
print(f"yet the bare map needs only {chi} colors: {witness.display()}")
print(f"proper: {verify_coloring(flower_map, witness)}")
