"""Patterns, blowups, explicit tiling schedules, and the exact solver.

Three facts drive the tiling machinery:

* the 6-blowup of a single edge (that is, K_{6,6}) splits into two H-copies;
* the 6-blowup of the 7-vertex pattern Hhat splits into seven H-copies,
  via five fixed embedding schemes;
* consequently any {K2, H, Hhat}-tiling of a graph lifts to a pure
  H-tiling of the graph's 6-blowup covering six times as many vertices.

The exact solver independently confirms the blowup tiling numbers.
"""

from htiling.graphs import SmallGraph, blowup, degree_stats
from htiling.patterns import enumerate_copies, pattern_h, pattern_hhat, pattern_k2
from htiling.tiling import hhat_blowup_tiling, lift_tiling, max_tiling, tiling_from_images

h, hh, k2 = pattern_h(), pattern_hhat(), pattern_k2()
print(f"H: {h.n} vertices, {h.graph.edge_count} edges, degree stats {degree_stats(h.graph)}")
print(f"Hhat: {hh.n} vertices, {hh.graph.edge_count} edges (H plus a vertex seeing b and c)")

print("\nCopies of H in K_{3,3}:", len(enumerate_copies(h, SmallGraph.complete_bipartite(3, 3))))
print("Copies of H in K_{2,10}:", len(enumerate_copies(h, SmallGraph.complete_bipartite(2, 10))),
      " (both centre classes need three vertices)")

print("\nExplicit schedule sizes floor(t/2) + 4*floor(t/6) in the Hhat blowup:")
for t in (1, 2, 5, 6, 7, 12):
    tiling = hhat_blowup_tiling(t)
    perfect = " (perfect)" if tiling.coverage == 7 * t else ""
    print(f"  t={t:>2}: {len(tiling.members)} disjoint H-copies covering {tiling.coverage}/{7 * t}{perfect}")

print("\nExact solver on the same hosts:")
for t in (3, 6):
    res = max_tiling(h, blowup(k2.graph, t))
    print(f"  nu(H, K2-blowup[{t}]) = {res.count} exact={res.exact}")
res = max_tiling(h, blowup(hh.graph, 6))
print(f"  nu(H, Hhat-blowup[6]) = {res.count} exact={res.exact} (search nodes: {res.nodes})")

print("\nLifting a mixed tiling into the 6-blowup:")
base = SmallGraph.from_edges(9, list(hh.graph.edges()) + [(7, 8)])
mixed = tiling_from_images(base, [(hh, tuple(range(7))), (k2, (7, 8))])
lifted = lift_tiling(mixed)
print(f"  base tiling: Hhat + K2 covering {mixed.coverage}/9")
print(f"  lifted: {len(lifted.members)} H-copies covering {lifted.coverage}/{6 * base.n} "
      f"(exactly 6x the base coverage: {lifted.coverage == 6 * mixed.coverage})")
