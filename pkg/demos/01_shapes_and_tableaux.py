"""Skew diagrams, checkerboard fillings and the named shape families.

Run:  python demos/01_shapes_and_tableaux.py
"""

from smzv import (FamilySpec, SkewShape, checkerboard_fill,
                  is_checkerboardable, is_ribbon, iter_skew_shapes, make_family)

print("A skew diagram and its conjugate")
s = SkewShape((5, 4, 3), (3, 1))
print(f"  {s!r}  ->  {s.conjugate()!r}")
print(f"  corners: {sorted(s.corners())}")
print()

print("Checkerboard filling: alternating entries, the larger one on every corner")
t = checkerboard_fill(s, 1, 3)
print(t.pretty())
print(f"  admissible: {t.admissible()}   diagonal-constant: {t.diagonal_constant()}")
print()

print("Shapes with corners on both diagonal parities admit no such filling:")
try:
    checkerboard_fill(SkewShape((3, 1)), 1, 3)
except Exception as exc:
    print(f"  (3,1): {exc}")
print()

print("The primitive strip families (fill (1,3) shown)")
for kind, n in (("S", 3), ("Sstar", 3), ("A", 3), ("B", 3), ("L", 2), ("Lstar", 2)):
    t = make_family(FamilySpec(kind, (n,), (1, 3)))
    print(f"{kind}({n}), shape {t.shape!r}, ribbon={is_ribbon(t.shape)}")
    print("   " + t.pretty().replace("\n", "\n   "))
print()

print("Hooks need opposite parities of arm and leg; anti-hooks always work")
print("  hook(4,3):")
print("   " + make_family(FamilySpec("hook", (4, 3), (1, 3))).pretty().replace("\n", "\n   "))
print("  antihook(4,3):")
print("   " + make_family(FamilySpec("antihook", (4, 3), (1, 3))).pretty().replace("\n", "\n   "))
print()

counts = {}
for n in range(1, 9):
    shapes = list(iter_skew_shapes(n))
    counts[n] = (len(shapes), sum(1 for x in shapes if is_checkerboardable(x)))
print("Skew shapes up to translation, by cell count (total / checkerboardable):")
for n, (a, b) in counts.items():
    print(f"  <= {n} cells: {a:6d} / {b}")
