"""
Counting a five-face surface, then breaking the count
=====================================================

A polyhedral surface with its underside cut away leaves five faces drawn
on eight corners. Tracing the rotation system recovers every boundary
cycle, and v - e + f lands on 1 exactly because one face is missing.
Drawing one extra line across a face is enough to wreck the identity.
"""

from mapcolor import add_edge_mn, build_figure1, count_vef, euler_check

fix = build_figure1()

print("face boundaries, by name:")
for name, cycle in sorted(fix.faces.items()):
    print(f"  {name:6s} = {'-'.join(cycle)}")
print(f"  (outer) = {'-'.join(fix.outer_face)}  [cut away, not counted]")

v, e, f = count_vef(fix.embedding)
report = euler_check(fix.embedding)
print(f"\ncounts: v={v} e={e} f={f}")
print(f"characteristic v-e+f = {report.characteristic}, expected {report.expected}")
print(f"consistent: {report.consistent}")

print("\nevery pair of faces shares a border except one:")
dual = fix.dual()
for a in dual.faces:
    for b in dual.faces:
        if a < b and not dual.adjacent(a, b):
            print(f"  {a} and {b} stay apart")

print("\nnow join that pair with a line M-N drawn across the map...")
aug = add_edge_mn(fix)
v2, e2, f2 = count_vef(aug)
report2 = euler_check(aug)
print(f"counts become: v={v2} e={e2} f={f2}  (two new points, one new line)")
print(f"characteristic v-e+f = {report2.characteristic}, expected {report2.expected}")
print(f"consistent: {report2.consistent}")
print("\nso the fully-adjacent five-face map admits no such drawing:")
print(f"its dual is complete: {aug.dual().is_complete()}")
