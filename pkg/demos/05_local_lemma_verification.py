"""Machine-checking the local edge-bound lemmas.

Setup: two disjoint labelled H-copies, a 36-bit mask of cross edges between
them, designated vertices with one worst-case pendant each.  A pair is
"extendable" when the assembled host carries a {K2, H, Hhat}-tiling
covering at least 13 vertices.  Extendability is monotone in cross edges,
so each lemma ("a non-extendable pair has at most B cross edges") reduces
to a finite check at exactly B + 1 cross edges.

The checker keeps a cache of certificates (cross-edge sets used by
validated covers); a mask containing a certificate is extendable outright,
and only the rare misses run the exact cover search.  That is why sweeping
all 753,984 boundary configurations of the first lemma takes seconds.
"""

import time

from htiling.extendability import (
    LEMMAS,
    PairConfig,
    admissible_L_patterns,
    bip_from_pairs,
    is_extendable,
    tightness_probe,
    verify_lemma,
)
from htiling.fixtures import FIXTURES, verify_figure_fixtures

print("Admissible designation patterns (after the c/d relabeling):")
for p in admissible_L_patterns():
    print(f"  {{{','.join(sorted(p.labels)) or ''}}}".ljust(12), "orbit:", p.orbit)

print("\nExtendability examples:")
cfg = PairConfig(0, frozenset("u"))
print("  no cross edges, one pendant:", is_extendable(cfg), "(best cover is the two copies: 12)")
f1 = bip_from_pairs([("c", "a"), ("d", "d"), ("b", "d"), ("a", "u"), ("v", "b")])
print("  five well-placed cross edges:", is_extendable(PairConfig(f1, frozenset("u"))),
      "(Hhat + three disjoint edges cover all 13)")

print("\nCurated decomposition fixtures:")
rep = verify_figure_fixtures()
for f in rep["fixtures"]:
    print(f"  {'ok' if f['ok'] else 'FAIL'}  cover={f.get('coverage', '-'):>2}  {f['key']}")

print("\nLemma table and verification runs:")
print("  id   bound  designation classes")
for lid, spec in LEMMAS.items():
    cls = ["{" + ",".join(sorted(a)) + "}/{" + ",".join(sorted(b)) + "}" for a, b in spec.classes]
    print(f"  {lid}   {spec.bound:>3}   {', '.join(cls)}")

t0 = time.time()
rep = verify_lemma("L51", mode="exhaustive")
print(f"\nL51 exhaustive: {rep.checked} boundary configs, {len(rep.counterexamples)} counterexamples,"
      f" {rep.solver_calls} exact-solver calls, {time.time() - t0:.1f}s")

for lid in ("L52", "L55"):
    t0 = time.time()
    rep = verify_lemma(lid, mode="sampled", count=50_000, seed=42)
    print(f"{lid} sampled: {rep.checked} configs, {len(rep.counterexamples)} counterexamples, {time.time() - t0:.1f}s")

print("\nAre the bounds tight?  Probe for non-extendable configs AT the bound:")
found = tightness_probe("L51", budget=300, seed=1)
print("  L51 probe:", "found a non-extendable boundary config" if found else "none found in this budget")
