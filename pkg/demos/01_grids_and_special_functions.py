"""Grids, falling factorials and Taylor monomials.

Everything in this library lives on a unit-step grid with a real base
point.  The generalized falling function t^[r] = Gamma(t+1)/Gamma(t-r+1)
plays the role of the power t^r; its gamma-pole conventions (exact zeros
below, polynomial continuation at integer orders) are what make the
solution series later on terminate after finitely many terms.

Run:  python demos/01_grids_and_special_functions.py
"""

import numpy as np

from hilfer_dfc import (
    Grid,
    GridFn,
    delta_sum,
    falling_factorial,
    jump_backward,
    jump_forward,
    taylor_monomial,
)

print("A grid is (base, count); points are base + k with drift-free indexing:")
g = Grid(0.3, 10)
print(f"  Grid(0.3, 10).points = {g.points}")
print(f"  index_of(5.3) = {g.index_of(5.3)}")
print(f"  jump_forward(0.3) = {jump_forward(0.3)}, jump_backward(1.3) = {jump_backward(1.3)}")

print("\nFalling factorials:")
print(f"  5^[2]    = {falling_factorial(5.0, 2.0):.1f}        (5*4)")
print(f"  3.5^[.5] = {falling_factorial(3.5, 0.5):.6f}  (Gamma(4.5)/Gamma(4))")
print(f"  2^[5]    = {falling_factorial(2.0, 5.0):.1f}         (gamma pole below -> exact 0)")
print(f" -1^[2]    = {falling_factorial(-1.0, 2.0):.1f}         (polynomial continuation (-1)(-2))")

print("\nTaylor monomials h_r(t, s) = (t-s)^[r]/Gamma(r+1):")
print(f"  h_1(t, s) = t - s:        h_1(4.7, 1.2) = {taylor_monomial(1.0, 4.7, 1.2):.2f}")
print(f"  h_0 = 1:                  h_0(9.9, 0.0) = {taylor_monomial(0.0, 9.9, 0.0):.2f}")
print(f"  h_0.5(2.5, 0) = 15/8:     {taylor_monomial(0.5, 2.5, 0.0):.6f}")

print("\nDelta definite sums (empty sum convention):")
f = GridFn.from_callable(Grid(0.0, 10), lambda x: x)
print(f"  sum of x over [0, 4) = {delta_sum(f, 0.0, 4.0):.1f}  (0+1+2+3)")
print(f"  sum over an empty range = {delta_sum(f, 3.0, 3.0):.1f}")

print("\nTelescoping: summing the forward difference recovers endpoint values:")
big_f = GridFn.from_callable(Grid(0.0, 8), lambda x: x**2)
diffs = GridFn(Grid(0.0, 7), np.diff(big_f.values))
print(f"  sum of deltas over [0,7) = {delta_sum(diffs, 0.0, 7.0):.1f}")
print(f"  F(7) - F(0)              = {big_f(7.0) - big_f(0.0):.1f}")
