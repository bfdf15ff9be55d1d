"""Staircase shapes evaluate to determinants in the two-diagonal strip
values; over the staircase-minus-staircase family these become Hankel
determinants, and at fill (1,3) Hankel determinants of odd zeta values.

Run:  python demos/04_hankel_determinants.py
"""

from smzv import (FamilySpec, make_family, smzv_numeric, stair_data,
                  stair_eval, stair_hankel, stair_hankel_13)

print("Index data for the order-5 staircase with (2,2,1) removed")
sd = stair_data(5, (2, 2, 1))
print(f"  J0={sd.J0}  J1={sd.J1}  m={sd.m}  sign exponent l={sd.l}")
print(f"  value = {stair_eval(5, (2, 2, 1), 1, 3)!r}")
print()

print("Both determinant routes agree symbolically (direct vs conjugate inner shape)")
for mu in ((), (1,), (2, 1), (2, 2)):
    d = stair_eval(5, mu, 1, 3, route="direct")
    c = stair_eval(5, mu, 1, 3, route="conjugate")
    print(f"  mu={mu}: {'agree' if d == c else 'DISAGREE'}")
print()

print("Hankel gallery for the order-5 staircase over smaller staircases")
for n in range(0, 5):
    print(f"  n={n}:  {stair_hankel(5, n)!r}")
print()

print("At fill (1,3): Hankel determinants of odd zeta values")
for n in range(0, 5):
    e = stair_hankel_13(5, n)
    print(f"  n={n}:  {e!r}")
    print(f"         = {e.eval_hp(40).str_digits(25)}")
print()

print("Numeric confirmation for the full order-3 staircase")
t = make_family(FamilySpec("stair", (3, ()), (1, 3)))
est = smzv_numeric(t, 50_000, 40)
closed = stair_hankel_13(3, 0).eval_hp(40)
print(f"  numeric {est.value.str_digits(18)}  vs closed {closed.str_digits(18)}")
print(f"  agree within bound {est.error_bound.str_digits(3)}:"
      f" {bool(abs(est.value - closed) < est.error_bound)}")
