"""Canonical pattern graphs and subgraph-copy machinery.

The two tree-like patterns at the heart of this package:

* ``H``  -- six vertices labelled (u, v, a, b, c, d); two adjacent centres
  u, v, with leaves a, b on u and c, d on v.
* ``Hhat`` -- seven vertices labelled (u, v, w, a, b, c, d); H plus an extra
  vertex w adjacent to b and c.

Label order is fixed (indices 0..5 resp. 0..6) so that embeddings, witness
files and fixtures are stable across runs.

Copies of a pattern in a host are deduplicated by image *edge set*: two
copies on the same vertices with different edge images count separately.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import SmallGraph, bits

#: Patterns passed to exhaustive routines (vertex covers, generic matching)
#: are capped at this many vertices.
PATTERN_VERTEX_CAP = 16

H_LABELS = ("u", "v", "a", "b", "c", "d")
H_EDGES = ((0, 1), (0, 2), (0, 3), (1, 4), (1, 5))

HHAT_LABELS = ("u", "v", "w", "a", "b", "c", "d")
HHAT_EDGES = ((0, 1), (0, 3), (0, 4), (1, 5), (1, 6), (2, 4), (2, 5))


@dataclass(frozen=True)
class Pattern:
    """A labelled pattern graph.  Compare by content, not identity."""

    name: str
    graph: SmallGraph
    labels: tuple[str, ...]

    @property
    def n(self) -> int:
        return self.graph.n

    def __str__(self) -> str:  # pragma: no cover
        return self.name


def pattern_h() -> Pattern:
    return Pattern("H", SmallGraph.from_edges(6, H_EDGES), H_LABELS)


def pattern_hhat() -> Pattern:
    return Pattern("Hhat", SmallGraph.from_edges(7, HHAT_EDGES), HHAT_LABELS)


def pattern_k2() -> Pattern:
    return Pattern("K2", SmallGraph.from_edges(2, [(0, 1)]), ("u", "v"))


def pattern_complete_bipartite(s: int, t: int) -> Pattern:
    if s < 1 or t < 1:
        raise ValueError("complete bipartite parts must be positive")
    labels = tuple(f"x{i}" for i in range(s)) + tuple(f"y{i}" for i in range(t))
    return Pattern(f"K{{{s},{t}}}", SmallGraph.complete_bipartite(s, t), labels)


def custom_pattern(graph: SmallGraph, name: str = "custom") -> Pattern:
    labels = tuple(f"p{i}" for i in range(graph.n))
    return Pattern(name, graph, labels)


_BUILTIN = {"H": pattern_h, "Hhat": pattern_hhat, "K2": pattern_k2}


def pattern_by_name(name: str) -> Pattern:
    """Look up a built-in pattern; accepts H, Hhat, K2."""
    try:
        return _BUILTIN[name]()
    except KeyError:
        raise ValueError(f"unknown pattern {name!r}; expected one of {sorted(_BUILTIN)}")


@dataclass(frozen=True)
class Embedding:
    """Injective, edge-preserving placement of a pattern in a host.

    ``image[i]`` is the host vertex carrying pattern vertex ``i`` (canonical
    label order).
    """

    pattern: Pattern
    image: tuple[int, ...]

    def image_mask(self) -> int:
        m = 0
        for v in self.image:
            m |= 1 << v
        return m

    def image_edges(self) -> frozenset[tuple[int, int]]:
        out = set()
        for i, j in self.pattern.graph.edges():
            u, v = self.image[i], self.image[j]
            out.add((u, v) if u < v else (v, u))
        return frozenset(out)

    def is_valid_in(self, host: SmallGraph) -> bool:
        img = self.image
        if len(set(img)) != len(img):
            return False
        if any(not 0 <= x < host.n for x in img):
            return False
        return all(host.has_edge(img[i], img[j]) for i, j in self.pattern.graph.edges())


# -- fast copy generators ----------------------------------------------------
#
# H, Hhat and K2 copies are generated combinatorially from their centre
# structure; each distinct image edge set is produced exactly once.  These
# generators drive the tiling solvers, so they work on raw bitset rows and
# yield plain image tuples.


def iter_k2_images(adj: list[int] | tuple[int, ...], avail: int) -> Iterator[tuple[int, int]]:
    for u in bits(avail):
        for v in bits(adj[u] & avail >> (u + 1) << (u + 1)):
            yield (u, v)


def iter_h_images(adj: list[int] | tuple[int, ...], avail: int) -> Iterator[tuple[int, ...]]:
    """Images (u, v, a, b, c, d) of H inside ``avail``, one per edge set.

    Centres are emitted with u < v; leaf pairs are sorted.  The u<->v flip
    automorphism is quotiented out by the centre ordering.
    """
    for u in bits(avail):
        for v in bits(adj[u] & avail >> (u + 1) << (u + 1)):
            u_pool = adj[u] & avail & ~(1 << v)
            v_pool = adj[v] & avail & ~(1 << u)
            u_list = list(bits(u_pool))
            if len(u_list) < 2:
                continue
            for a, b in itertools.combinations(u_list, 2):
                rest = v_pool & ~(1 << a) & ~(1 << b)
                rest_list = list(bits(rest))
                if len(rest_list) < 2:
                    continue
                for c, d in itertools.combinations(rest_list, 2):
                    yield (u, v, a, b, c, d)


def iter_hhat_images(adj: list[int] | tuple[int, ...], avail: int) -> Iterator[tuple[int, ...]]:
    """Images (u, v, w, a, b, c, d) of Hhat inside ``avail``.

    Each image edge set appears exactly once: the only non-trivial
    automorphism of Hhat swaps the two centres, which the u < v ordering
    kills.  Roles a/b (and c/d) are distinguishable -- w attaches to b and c
    -- so both ordered assignments are genuinely different copies.
    """
    for u in bits(avail):
        for v in bits(adj[u] & avail >> (u + 1) << (u + 1)):
            used_uv = (1 << u) | (1 << v)
            u_pool = adj[u] & avail & ~used_uv
            v_pool = adj[v] & avail & ~used_uv
            for a in bits(u_pool):
                for b in bits(u_pool & ~(1 << a)):
                    for c in bits(v_pool & ~(1 << a) & ~(1 << b)):
                        w_pool = adj[b] & adj[c] & avail & ~used_uv
                        w_pool &= ~(1 << a) & ~(1 << b) & ~(1 << c)
                        for d in bits(v_pool & ~(1 << a) & ~(1 << b) & ~(1 << c)):
                            for w in bits(w_pool & ~(1 << d)):
                                yield (u, v, w, a, b, c, d)


def _iter_generic_images(pattern: Pattern, host: SmallGraph, avail: int) -> Iterator[tuple[int, ...]]:
    """Backtracking subgraph-isomorphism enumeration for arbitrary patterns.

    Yields raw injective maps; the caller deduplicates by image edge set.
    Pattern vertices are matched in an order that keeps each new vertex
    adjacent to an already-matched one where possible.
    """
    pg = pattern.graph
    k = pg.n
    if k == 0:
        yield ()
        return
    order = []
    placed = 0
    degs = sorted(range(k), key=lambda v: -pg.degree(v))
    while len(order) < k:
        nxt = None
        for v in degs:
            if placed >> v & 1:
                continue
            if pg.adj[v] & placed or not order:
                nxt = v
                break
        if nxt is None:  # disconnected pattern: start a fresh component
            nxt = next(v for v in degs if not placed >> v & 1)
        order.append(nxt)
        placed |= 1 << nxt
    pos = {v: i for i, v in enumerate(order)}

    image = [0] * k
    used = 0

    def extend(step: int) -> Iterator[tuple[int, ...]]:
        nonlocal used
        if step == k:
            yield tuple(image)
            return
        pv = order[step]
        cand = avail & ~used
        for prev in bits(pg.adj[pv]):
            if pos[prev] < step:
                cand &= host.adj[image[pos[prev]]]
        deg_need = pg.degree(pv)
        for hv in bits(cand):
            if host.degree(hv) < deg_need:
                continue
            image[pos[pv]] = hv
            used |= 1 << hv
            yield from extend(step + 1)
            used &= ~(1 << hv)

    # image[] is indexed by match step; remap to canonical label order
    for raw in extend(0):
        out = [0] * k
        for v in range(k):
            out[v] = raw[pos[v]]
        yield tuple(out)


def iter_copy_images(pattern: Pattern, host: SmallGraph, avail: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Copy images of ``pattern`` in ``host``, one per distinct edge set.

    Order is not specified here; :func:`enumerate_copies` sorts.
    """
    if avail is None:
        avail = (1 << host.n) - 1
    if pattern.name == "H" and pattern.labels == H_LABELS:
        yield from iter_h_images(host.adj, avail)
    elif pattern.name == "Hhat" and pattern.labels == HHAT_LABELS:
        yield from iter_hhat_images(host.adj, avail)
    elif pattern.name == "K2":
        yield from iter_k2_images(host.adj, avail)
    else:
        seen: set[frozenset[tuple[int, int]]] = set()
        pg_edges = list(pattern.graph.edges())
        for img in _iter_generic_images(pattern, host, avail):
            key = frozenset(
                (img[i], img[j]) if img[i] < img[j] else (img[j], img[i]) for i, j in pg_edges
            )
            if key in seen:
                continue
            seen.add(key)
            yield img


def enumerate_copies(pattern: Pattern, host: SmallGraph, limit: Optional[int] = None) -> list[Embedding]:
    """All copies of ``pattern`` in ``host`` as embeddings.

    One representative per distinct image edge set, sorted lexicographically
    by sorted image vertex tuple (ties by image tuple), truncated at
    ``limit`` if given.
    """
    if pattern.n > host.n:
        return []
    images = list(iter_copy_images(pattern, host))
    images.sort(key=lambda img: (tuple(sorted(img)), img))
    if limit is not None:
        images = images[:limit]
    return [Embedding(pattern, img) for img in images]


def count_copies(pattern: Pattern, host: SmallGraph) -> int:
    return sum(1 for _ in iter_copy_images(pattern, host))


# -- covering numbers and rigidity -------------------------------------------


def covering_number(pattern: Pattern, i: int) -> int:
    """i-covering number: minimum |S| with |S ∩ e| >= i for every edge.

    ``i = 1`` is the ordinary vertex cover number (exact, exhaustive over
    vertex subsets); ``i = 2`` equals v(F) for graphs.
    """
    if i not in (1, 2):
        raise ValueError("covering index must be 1 or 2 for graphs")
    if pattern.n > PATTERN_VERTEX_CAP:
        raise ValueError(f"pattern too large for exhaustive search (> {PATTERN_VERTEX_CAP})")
    if i == 2:
        return pattern.n
    edges = list(pattern.graph.edges())
    if not edges:
        return 0
    for size in range(pattern.n + 1):
        for sub in itertools.combinations(range(pattern.n), size):
            mask = 0
            for v in sub:
                mask |= 1 << v
            if all(mask >> u & 1 or mask >> v & 1 for u, v in edges):
                return size
    return pattern.n  # unreachable: V(F) always covers


def _bipartition_sizes(g: SmallGraph) -> Optional[set[int]]:
    """Achievable sizes of one side over all proper 2-colourings, or None
    if g is not bipartite."""
    color = [-1] * g.n
    comp_counts = []
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        cnt = [1, 0]
        while stack:
            x = stack.pop()
            for y in bits(g.adj[x]):
                if color[y] == -1:
                    color[y] = color[x] ^ 1
                    cnt[color[y]] += 1
                    stack.append(y)
                elif color[y] == color[x]:
                    return None
        comp_counts.append(cnt)
    sizes = {0}
    for c0, c1 in comp_counts:
        sizes = {s + c0 for s in sizes} | {s + c1 for s in sizes}
    return sizes


def is_rigid(pattern: Pattern, sizes: tuple[int, int]) -> bool:
    """Whether a bipartite pattern with parts of the given sizes has
    covering number equal to the smaller part.

    Returns False when the pattern admits no proper bipartition with these
    part sizes (including the non-bipartite case).
    """
    s1, s2 = sizes
    if s1 > s2:
        raise ValueError("part sizes must be nondecreasing")
    if pattern.n != s1 + s2:
        return False
    achievable = _bipartition_sizes(pattern.graph)
    if achievable is None or (s1 not in achievable and s2 not in achievable):
        return False
    return covering_number(pattern, 1) == s1
