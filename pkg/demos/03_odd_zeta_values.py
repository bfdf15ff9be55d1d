"""Closed forms at the (1,3) fill: the strip families evaluate to odd zeta
values and powers of pi, giving new series representations of zeta(4n+1)
and zeta(4n+3).

Run:  python demos/03_odd_zeta_values.py
"""

from smzv import FamilySpec, make_family, primitive_13, smzv_numeric, zeta_int

M, DPS = 50_000, 40

print("Strip families at fill (1,3) and their closed forms")
for kind, fam, ns in (("S", "S", (1, 2)), ("A", "A", (1, 2)), ("B", "B", (0, 1, 2))):
    for n in ns:
        closed = primitive_13(kind, n) if not (kind == "S" and n == 0) else None
        t = make_family(FamilySpec(fam, (n,), (1, 3)))
        est = smzv_numeric(t, M, DPS)
        ref = closed.eval_hp(DPS)
        print(f"  {kind}({n}) = {closed!r}")
        print(f"    numeric {est.value.str_digits(18)}  closed {ref.str_digits(18)}"
              f"  |diff| < bound {est.error_bound.str_digits(3)}:"
              f" {bool(abs(est.value - ref) < est.error_bound)}")
print()

print("So zeta(9) can be summed as 8 * [order-2 strip-with-foot], for instance:")
t = make_family(FamilySpec("A", (2,), (1, 3)))
est = smzv_numeric(t, M, DPS)
print(f"  8 * A(2) = {(8 * est.value).str_digits(18)}")
print(f"  zeta(9)  = {zeta_int(9, DPS).str_digits(18)}")
print()

print("The L and Y columns/rows mix odd zetas with pi powers:")
for kind, n in (("L", 2), ("Lstar", 2), ("Y", 1), ("Ystar", 1)):
    print(f"  {kind}({n}) = {primitive_13(kind, n)!r}")
