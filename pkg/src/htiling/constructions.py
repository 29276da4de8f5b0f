"""Extremal constructions, closed-form edge counts, and density formulas.

Two construction families matter here, both parametrized by a rational
density knob beta and a vertex count n:

* ``bipartite_lower``: the complete bipartite graph with parts of sizes
  floor(3 beta n) - 1 and the rest.  Its maximum H-tiling is capped by the
  small side (every H-copy uses three vertices of each side).
* ``gnib`` (planted-set construction): a set V1 is planted and the edges are
  exactly the r-sets meeting V1 in at least i vertices, with
  |V1| = floor(beta (s_1 + ... + s_i) n) - 1.  For graphs (r = 2) and sizes
  (3, 3): i = 1 gives "all edges meeting V1", i = 2 gives a clique on V1
  plus isolated vertices.

The density envelope these constructions trace out is

    xi(beta) = 3 beta (1 - 3 beta)   for beta in [0, 1/9]
             = 18 beta^2             for beta in [1/9, 1/6]

and its blowup analogue xi_blowup(t, beta) = max(3 t beta (1 - 3 t beta),
18 t^2 beta^2) on [0, 1/(6t)].

``verify_construction_matching`` closes the loop: it materializes a
construction, computes its exact H-matching number, and reports whether it
stays strictly below beta * n.  The planted-set construction with i = 1 and
sizes (3, 3) fails that test -- two H-copies fit where the naive count says
fewer than two should -- which is exactly the finite-scale counterexample
this package exists to exhibit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor
from typing import Optional

from .graphs import GraphBuilder, SmallGraph
from .patterns import pattern_h
from .simplex import RationalLike, as_fraction
from .tiling import DEFAULT_NODE_BUDGET, Tiling, max_tiling


class ConstructionDomainError(ValueError):
    """Parameters outside the admissible range of a formula/construction."""


def xi(beta: RationalLike) -> Fraction:
    """Piecewise extremal density: 3b(1-3b) on [0,1/9], 18b^2 on [1/9,1/6]."""
    b = as_fraction(beta)
    if not Fraction(0) <= b <= Fraction(1, 6):
        raise ConstructionDomainError(f"beta {b} outside [0, 1/6]")
    if b <= Fraction(1, 9):
        return 3 * b * (1 - 3 * b)
    return 18 * b * b


def xi_blowup(t: int, beta: RationalLike) -> Fraction:
    """max(3tb(1-3tb), 18 t^2 b^2) for beta in [0, 1/(6t)]."""
    if t < 1:
        raise ConstructionDomainError("blowup factor must be >= 1")
    b = as_fraction(beta)
    if not Fraction(0) <= b <= Fraction(1, 6 * t):
        raise ConstructionDomainError(f"beta {b} outside [0, 1/(6*{t})]")
    return max(3 * t * b * (1 - 3 * t * b), 18 * t * t * b * b)


BIPARTITE_LOWER = "bipartite_lower"
GNIB = "gnib"


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    n: int
    beta: Fraction
    i: Optional[int] = None
    sizes: tuple[int, ...] = (3, 3)

    def __post_init__(self) -> None:
        if self.kind not in (BIPARTITE_LOWER, GNIB):
            raise ConstructionDomainError(f"unknown construction kind {self.kind!r}")
        if self.n < 1:
            raise ConstructionDomainError("n must be positive")
        m = sum(self.sizes)
        if not Fraction(0) < self.beta < Fraction(1, m):
            raise ConstructionDomainError(f"beta {self.beta} outside (0, 1/{m})")
        if any(s < 1 for s in self.sizes) or list(self.sizes) != sorted(self.sizes):
            raise ConstructionDomainError("sizes must be positive and nondecreasing")
        if self.kind == GNIB:
            r = len(self.sizes)
            if self.i is None or not 1 <= self.i <= r:
                raise ConstructionDomainError(f"i must lie in [1, {r}]")
        if self.part_size() < 0:
            raise ConstructionDomainError("planted part would be negative")

    def part_size(self) -> int:
        """|V1|: floor(beta * (s_1+...+s_i) n) - 1, with i = 1 for the
        bipartite construction (both branches use the same floor shape)."""
        if self.kind == BIPARTITE_LOWER:
            weight = 3
        else:
            weight = sum(self.sizes[: self.i])
        return floor(self.beta * weight * self.n) - 1

    def describe(self) -> dict:
        doc = {
            "kind": self.kind,
            "n": self.n,
            "beta": str(self.beta),
            "sizes": list(self.sizes),
        }
        if self.kind == GNIB:
            doc["i"] = self.i
        return doc


def bipartite_lower_spec(n: int, beta: RationalLike) -> ConstructionSpec:
    return ConstructionSpec(BIPARTITE_LOWER, n, as_fraction(beta))


def gnib_spec(n: int, beta: RationalLike, i: int, sizes: tuple[int, ...] = (3, 3)) -> ConstructionSpec:
    return ConstructionSpec(GNIB, n, as_fraction(beta), i=i, sizes=tuple(sizes))


def build_construction(spec: ConstructionSpec) -> SmallGraph:
    """Materialize a construction as a graph (r = 2 only).

    Layout: the planted part V1 occupies indices [0, |V1|).
    """
    a = spec.part_size()
    n = spec.n
    if spec.kind == BIPARTITE_LOWER:
        b = GraphBuilder(n)
        for u in range(a):
            for v in range(a, n):
                b.add_edge(u, v)
        return b.build()
    if len(spec.sizes) != 2:
        raise ConstructionDomainError("only r = 2 constructions can be materialized")
    b = GraphBuilder(n)
    if spec.i == 1:
        for u in range(a):
            for v in range(u + 1, n):
                b.add_edge(u, v)
    else:  # i == 2: edges inside V1 only
        for u in range(a):
            for v in range(u + 1, a):
                b.add_edge(u, v)
    return b.build()


def construction_edge_count(spec: ConstructionSpec, r: Optional[int] = None) -> int:
    """Closed-form edge count, without materializing anything.

    For the planted-set construction this counts r-sets E with
    |E ∩ V1| >= i; the bipartite construction counts a * (n - a).
    """
    a = spec.part_size()
    n = spec.n
    if spec.kind == BIPARTITE_LOWER:
        return a * (n - a)
    if r is None:
        r = len(spec.sizes)
    return sum(comb(a, j) * comb(n - a, r - j) for j in range(spec.i, r + 1))


@dataclass(frozen=True)
class MatchingVerdict:
    """Outcome of checking nu(H, construction) < beta * n.

    ``holds`` is None when the solver failed to certify exactness within its
    node budget (inconclusive: never silently reported as a pass).
    """

    spec: ConstructionSpec
    nu: int
    beta_n: Fraction
    exact: bool
    witness: Tiling

    @property
    def holds(self) -> Optional[bool]:
        if not self.exact:
            return None
        return Fraction(self.nu) < self.beta_n

    def to_doc(self) -> dict:
        return {
            "schema_version": 1,
            "spec": self.spec.describe(),
            "nu": self.nu,
            "beta_n": str(self.beta_n),
            "exact": self.exact,
            "holds": self.holds,
        }


def verify_construction_matching(
    spec: ConstructionSpec, budget: int = DEFAULT_NODE_BUDGET
) -> MatchingVerdict:
    """Exact H-matching number of the built construction vs beta * n."""
    host = build_construction(spec)
    res = max_tiling(pattern_h(), host, budget=budget)
    return MatchingVerdict(spec, res.count, spec.beta * spec.n, res.exact, res.tiling)


# The fixed refutation scenarios: the first two constructions respect the
# beta*n ceiling, the planted-set i=1 instance meets it exactly and thereby
# breaks the conjectured bound at finite scale.
REFUTATION_SCENARIOS: tuple[tuple[ConstructionSpec, bool], ...] = (
    (ConstructionSpec(BIPARTITE_LOWER, 18, Fraction(1, 9)), True),
    (ConstructionSpec(GNIB, 24, Fraction(1, 8), i=2), True),
    (ConstructionSpec(GNIB, 20, Fraction(1, 10), i=1), False),
)


def refutation_demo(budget: int = DEFAULT_NODE_BUDGET) -> list[dict]:
    """Run the fixed scenario list; each entry reports the verdict and
    whether it matches the expected outcome."""
    out = []
    for spec, expected in REFUTATION_SCENARIOS:
        verdict = verify_construction_matching(spec, budget=budget)
        doc = verdict.to_doc()
        doc["expected_holds"] = expected
        doc["as_expected"] = verdict.holds is expected
        out.append(doc)
    return out
