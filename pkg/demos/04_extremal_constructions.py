"""Extremal constructions and the conjecture refutation, at finite scale.

The planted-set construction plants a set V1 and keeps exactly the edges
meeting V1 in at least i vertices.  The natural conjecture says such
constructions (over i) are asymptotically extremal for tiling any spanning
subgraph of a complete bipartite pattern.  For the tree H they are not:
with i = 1 the construction packs MORE disjoint H-copies than its planted
size suggests, because H touches the planted set with only its two centres.

Three fixed scenarios make this concrete.  The first two constructions
respect the nu < beta*n ceiling; the i = 1 instance meets beta*n exactly,
which is the finite-scale witness of the refutation.  By contrast, a plain
complete bipartite graph achieves a HIGHER edge density at small beta while
keeping its tiling number low -- that is the true extremal shape there.
"""

from fractions import Fraction

from htiling.constructions import (
    bipartite_lower_spec,
    build_construction,
    construction_edge_count,
    gnib_spec,
    refutation_demo,
    xi,
)
from htiling.graphs import format_edge_list

print("Materialized constructions and their closed-form edge counts:")
for spec in (
    bipartite_lower_spec(18, Fraction(1, 9)),
    gnib_spec(20, Fraction(1, 10), i=1),
    gnib_spec(24, Fraction(1, 8), i=2),
):
    g = build_construction(spec)
    assert g.edge_count == construction_edge_count(spec)
    print(f"  {spec.describe()}: |V1| = {spec.part_size()}, edges = {g.edge_count}")

print("\nDensity comparison at beta = 1/12 (below the kink):")
beta, n = Fraction(1, 12), 120
bip = construction_edge_count(bipartite_lower_spec(n, beta))
planted = construction_edge_count(gnib_spec(n, beta, i=2))
print(f"  complete bipartite: {bip} edges   planted clique: {planted} edges")
print(f"  envelope xi({beta}) * n^2 = {float(xi(beta) * n * n):.0f}")

print("\nRefutation scenarios (exact tiling numbers):")
for r in refutation_demo():
    spec = r["spec"]
    name = spec["kind"] + (f"(i={spec['i']})" if "i" in spec else "")
    verdict = "holds" if r["holds"] else "FAILS"
    print(f"  {name:<22} n={spec['n']:>2} beta={spec['beta']:>4}:  nu = {r['nu']} vs beta*n = {r['beta_n']}  -> bound {verdict}")

print("\nEdge-list output of the witness construction (first lines):")
text = format_edge_list(build_construction(gnib_spec(20, Fraction(1, 10), i=1)))
print("\n".join("  " + ln for ln in text.splitlines()[:5]), "\n  ...")
