"""Exact maximization of the density quadratic over a simplex.

The counting argument behind the tiling upper bound aggregates pairwise
edge bounds into one quadratic-plus-linear objective in four block
densities y0..y3, maximized over {y >= 0, sum(y) <= alpha}.  The punchline
is an exact identity: the maximum equals the density envelope xi(alpha).

A floating-point solver could only ever check this approximately.  Here the
candidate set (stationary points of every face restriction, plus the
polytope vertices) is solved in exact rational arithmetic, so the equality
is literal, and an independent lattice-grid search certifies the maximum
from below.
"""

from fractions import Fraction

from htiling.constructions import xi
from htiling.simplex import aggregate_psi_gap, psi, psi_star, psi_star_grid, simplex_point

print("psi*(alpha) vs xi(alpha) on a rational grid:")
for k in (0, 5, 10, 15, 20, 25, 30):
    alpha = Fraction(k, 180)
    val, arg = psi_star(alpha)
    marker = "=" if val == xi(alpha) else "DIFFERS FROM"
    print(f"  alpha={str(alpha):>6}: psi* = {str(val):>9} {marker} xi, argmax y = {tuple(map(str, arg.y))}")

print("\nThe maximizer shape flips at the kink alpha = 1/9:")
for alpha in (Fraction(1, 12), Fraction(1, 9), Fraction(1, 7)):
    _, arg = psi_star(alpha)
    print(f"  alpha={alpha}: argmax = {tuple(map(str, arg.y))}")

print("\nGrid oracle sanity (lower bounds converge from below):")
alpha = Fraction(1, 10)
star, _ = psi_star(alpha)
for steps in (5, 10, 20, 40):
    g = psi_star_grid(alpha, steps)
    print(f"  steps={steps:>3}: grid max = {str(g):>12}   gap = {float(star - g):.5f}")

print("\nFinite-size aggregation bound vs the objective (block scale n):")
alpha = Fraction(1, 10)
y = simplex_point([0, Fraction(1, 40), Fraction(1, 40), Fraction(1, 20)], alpha)
for n in (50, 500, 5000):
    gap, slack = aggregate_psi_gap(y, n, alpha)
    print(f"  n={n:>5}: correction = {str(gap):>10} (slack to the stated envelope: {str(slack):>10})")
print("  objective itself:", psi(alpha, y))
