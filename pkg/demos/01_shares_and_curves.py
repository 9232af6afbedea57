"""Worst-case and best-case share bounds, and the monotone guarantee.

Walks the closed-form pieces of the tight share for two agents, shows how a
finite object budget changes the value, and prints a small slice of the curve
data that the `fairchores experiment curve` command emits.
"""

from fractions import Fraction as F

from fairchores import (
    curve_samples,
    guarantee,
    hill_share,
    mms_lower_bound,
    natural_object_count,
    theoretical_ratio,
)

print("tight worst-case share for two agents, unrestricted object count")
for a in (F(1, 5), F(1, 4), F(7, 27), F(27, 100), F(2, 7), F(3, 10), F(1, 3), F(2, 5)):
    print(f"  alpha = {str(a):>7}  share = {hill_share(2, a)}")

print()
print("the same alpha under different object budgets (alpha = 3/10)")
for m in range(4, 9):
    print(f"  m = {m}  share = {hill_share(2, F(3, 10), m)}")
print(f"  constant from m = {natural_object_count(F(3, 10))} onward")

print()
print("lower bound, guarantee, and the worst/best ratio")
for a in (F(1, 6), F(3, 10), F(1, 3), F(3, 5)):
    print(f"  alpha = {str(a):>4}:  lower {mms_lower_bound(2, a)},"
          f"  guarantee {guarantee(2, a)},  ratio {theoretical_ratio(2, a)}")

print()
print("curve rows (alpha, upper, lower, guarantee, ratio) for n = 3")
for row in curve_samples(3, [F(j, 12) for j in range(1, 12)]):
    print(" ", row)
