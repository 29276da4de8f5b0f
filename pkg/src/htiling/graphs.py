"""Compact undirected simple graphs with bitset adjacency.

Vertices are integers ``0..n-1``.  Adjacency rows are Python ints used as
bitsets, which keeps neighbourhood intersection, subset tests and popcounts
cheap for the small hosts (up to a few hundred vertices) this package works
with.  Graphs are immutable value objects; construction goes through
:class:`GraphBuilder` or the ``from_edges`` / parsing helpers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

#: Hard cap on vertex counts.  Large enough for every blowup and extremal
#: construction handled here; stops runaway inputs before bitsets get huge.
VERTEX_LIMIT = 4096


class GraphError(ValueError):
    """Invalid graph construction or malformed graph input."""


class CapacityError(GraphError):
    """Requested graph would exceed VERTEX_LIMIT."""


def _popcount(x: int) -> int:
    return x.bit_count()


def bits(x: int) -> Iterator[int]:
    """Iterate set bit positions of ``x`` in increasing order."""
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


@dataclass(frozen=True)
class SmallGraph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbour bitset of ``v``.  Invariants (checked on
    construction): symmetry, no loops, neighbour indices below ``n``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        if self.n > VERTEX_LIMIT:
            raise CapacityError(f"{self.n} vertices exceeds limit {VERTEX_LIMIT}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    # -- basic accessors ---------------------------------------------------

    @property
    def edge_count(self) -> int:
        return sum(_popcount(row) for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return _popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> int:
        """Neighbour bitset of ``v``."""
        return self.adj[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as pairs ``(u, v)`` with ``u < v``, lexicographic order."""
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(higher):
                yield (u, v)

    def __str__(self) -> str:  # pragma: no cover - debugging aid
        return f"SmallGraph(n={self.n}, m={self.edge_count})"

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "SmallGraph":
        b = GraphBuilder(n)
        for u, v in edges:
            b.add_edge(u, v)
        return b.build()

    @staticmethod
    def empty(n: int) -> "SmallGraph":
        return SmallGraph(n, (0,) * n)

    @staticmethod
    def complete(n: int) -> "SmallGraph":
        full = (1 << n) - 1
        return SmallGraph(n, tuple(full ^ (1 << v) for v in range(n)))

    @staticmethod
    def complete_bipartite(s: int, t: int) -> "SmallGraph":
        """K_{s,t} with side A = [0, s) and side B = [s, s+t)."""
        a_mask = (1 << s) - 1
        b_mask = ((1 << (s + t)) - 1) ^ a_mask
        rows = [b_mask] * s + [a_mask] * t
        return SmallGraph(s + t, tuple(rows))


class GraphBuilder:
    """Mutable accumulator for a SmallGraph.  Single-owner; not shared."""

    def __init__(self, n: int):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        if n > VERTEX_LIMIT:
            raise CapacityError(f"{n} vertices exceeds limit {VERTEX_LIMIT}")
        self.n = n
        self._adj = [0] * n

    def add_edge(self, u: int, v: int) -> "GraphBuilder":
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u},{v}) out of range for n={self.n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        self._adj[u] |= 1 << v
        self._adj[v] |= 1 << u
        return self

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def build(self) -> SmallGraph:
        return SmallGraph(self.n, tuple(self._adj))


# -- vertex sets -----------------------------------------------------------


def vertex_set(g: SmallGraph, vertices: Iterable[int]) -> int:
    """Validated bitset over ``V(g)`` from an iterable of vertex indices."""
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in [0, {g.n})")
        mask |= 1 << v
    return mask


def _as_mask(g: SmallGraph, s: int | Iterable[int]) -> int:
    if isinstance(s, int):
        if s & ~((1 << g.n) - 1):
            raise GraphError("vertex set not a subset of V(G)")
        return s
    return vertex_set(g, s)


def induced_edge_count(g: SmallGraph, s: int | Iterable[int]) -> int:
    """Number of edges of ``g`` with both endpoints in ``s``."""
    mask = _as_mask(g, s)
    return sum(_popcount(g.adj[v] & mask) for v in bits(mask)) // 2


def cross_edge_count(g: SmallGraph, s: int | Iterable[int], t: int | Iterable[int]) -> int:
    """Number of edges with one endpoint in ``s`` and one in ``t`` (disjoint)."""
    sm = _as_mask(g, s)
    tm = _as_mask(g, t)
    if sm & tm:
        raise GraphError("cross_edge_count requires disjoint vertex sets")
    return sum(_popcount(g.adj[v] & tm) for v in bits(sm))


def degree_stats(g: SmallGraph) -> tuple[int, int, Fraction]:
    """(minimum degree, maximum degree, average degree as exact rational)."""
    if g.n == 0:
        return (0, 0, Fraction(0))
    degs = [g.degree(v) for v in range(g.n)]
    return (min(degs), max(degs), Fraction(2 * g.edge_count, g.n))


# -- blowups ---------------------------------------------------------------


def blowup(g: SmallGraph, t: int) -> SmallGraph:
    """Replace each vertex by ``t`` clones and each edge by a complete
    bipartite graph between the clone sets.

    Clone ``i`` of vertex ``u`` sits at index ``u*t + i``.  The layout is part
    of the contract: explicit embeddings into blowups rely on it.
    """
    if t < 1:
        raise GraphError("blowup factor must be >= 1")
    if g.n * t > VERTEX_LIMIT:
        raise CapacityError(f"blowup to {g.n * t} vertices exceeds limit {VERTEX_LIMIT}")
    block = (1 << t) - 1
    rows = []
    for u in range(g.n):
        row = 0
        for v in bits(g.adj[u]):
            row |= block << (v * t)
        rows.extend([row] * t)
    return SmallGraph(g.n * t, tuple(rows))


# -- edge-list text format ---------------------------------------------------
#
# First non-comment line: "n m".  Then m lines "u v" (0-based endpoints).
# Lines starting with '#' are ignored.  Duplicate or reversed duplicate edges
# are rejected so that round-trips are bit-exact.


def parse_edge_list(text: str) -> SmallGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise GraphError(f"header declares {m} edges, found {len(lines) - 1}")
    b = GraphBuilder(n)
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphError(f"non-integer edge line {ln!r}") from exc
        if b.has_edge(u, v):
            raise GraphError(f"duplicate or reversed edge ({u},{v})")
        b.add_edge(u, v)
    return b.build()


def format_edge_list(g: SmallGraph) -> str:
    out = [f"{g.n} {g.edge_count}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"
