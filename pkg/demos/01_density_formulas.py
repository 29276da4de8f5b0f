"""The extremal density envelope for H-tilings.

The maximum edge count of an n-vertex graph whose H-matching number stays
below beta*n grows like a piecewise density envelope in beta:

    xi(beta) = 3 beta (1 - 3 beta)   on [0, 1/9]   (a bipartite construction)
             = 18 beta^2             on [1/9, 1/6] (a planted-clique construction)

This script evaluates the envelope exactly at a few rational points, shows
the kink at 1/9 where both branches agree, and writes the whole curve to a
CSV with exact rationals alongside decimal renderings.
"""

from fractions import Fraction

from htiling.constructions import xi, xi_blowup

print("Values of the density envelope (exact rationals):")
for beta in (0, Fraction(1, 18), Fraction(1, 9), Fraction(2, 15), Fraction(1, 6)):
    val = xi(Fraction(beta))
    print(f"  xi({str(beta):>5}) = {val}  ~ {float(val):.6f}")

print("\nThe two branches meet at beta = 1/9:")
b = Fraction(1, 9)
print(f"  3b(1-3b) = {3 * b * (1 - 3 * b)}   18b^2 = {18 * b * b}")

print("\nBlowup analogue: the same maximum over both branch shapes at scale t.")
for t in (1, 2, 3):
    b = Fraction(1, 12 * t)
    print(f"  xi_blowup(t={t}, beta={b}) = {xi_blowup(t, b)}")
print("At t = 1 the blowup formula coincides with xi on the whole interval:")
print("  e.g.", all(xi_blowup(1, Fraction(k, 180)) == xi(Fraction(k, 180)) for k in range(31)))

print("\nCurve CSV (same thing the `htiling curve` command writes):")
print("beta,xi,xi_exact")
for k in range(0, 31, 5):
    beta = Fraction(k, 180)
    val = xi(beta)
    print(f"{beta},{float(val):.12g},{val}")
