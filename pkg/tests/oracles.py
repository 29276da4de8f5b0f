"""Independent brute-force oracles used to check the solvers.

These deliberately share no search code with the package: copy counting is
all-injective-maps enumeration, and the tiling/coverage maxima are dynamic
programs over vertex subsets.  They are only usable on small hosts.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from htiling.graphs import SmallGraph
from htiling.patterns import Pattern


def count_copies_naive(pattern: Pattern, host: SmallGraph) -> int:
    """Number of distinct copies (by image edge set) via all injective maps."""
    pg = pattern.graph
    if pg.n > host.n:
        return 0
    seen = set()
    pedges = list(pg.edges())
    for img in itertools.permutations(range(host.n), pg.n):
        if all(host.has_edge(img[i], img[j]) for i, j in pedges):
            key = frozenset(
                (img[i], img[j]) if img[i] < img[j] else (img[j], img[i]) for i, j in pedges
            )
            seen.add(key)
    return len(seen)


def spans_h(host: SmallGraph, verts: tuple[int, ...]) -> bool:
    """Whether the six vertices carry an H-copy: adjacent centres u, v with
    two leaves each.  Written from the pattern structure, not the package's
    generators."""
    vs = set(verts)
    for u, v in itertools.permutations(verts, 2):
        if not host.has_edge(u, v):
            continue
        rest = list(vs - {u, v})
        for a, b in itertools.combinations(rest, 2):
            c, d = (x for x in rest if x not in (a, b))
            if (
                host.has_edge(u, a)
                and host.has_edge(u, b)
                and host.has_edge(v, c)
                and host.has_edge(v, d)
            ):
                return True
    return False


def spans_hhat(host: SmallGraph, verts: tuple[int, ...]) -> bool:
    """Whether the seven vertices carry an Hhat-copy: H plus an extra
    vertex adjacent to one u-leaf and one v-leaf."""
    vs = set(verts)
    for u, v in itertools.permutations(verts, 2):
        if not host.has_edge(u, v):
            continue
        rest = vs - {u, v}
        for w in rest:
            for a, b in itertools.permutations(rest - {w}, 2):
                if not (host.has_edge(u, a) and host.has_edge(u, b) and host.has_edge(w, b)):
                    continue
                for c, d in itertools.permutations(rest - {w, a, b}, 2):
                    if host.has_edge(v, c) and host.has_edge(v, d) and host.has_edge(w, c):
                        return True
    return False


def _member_masks(patterns: list[Pattern], host: SmallGraph) -> list[tuple[int, int]]:
    """(mask, size) of every copy vertex set, by subset-spanning checks."""
    checks = {"K2": None, "H": spans_h, "Hhat": spans_hhat}
    seen: dict[int, int] = {}
    for pat in patterns:
        if pat.name == "K2":
            for u, v in host.edges():
                seen.setdefault((1 << u) | (1 << v), 2)
            continue
        fn = checks[pat.name]
        for verts in itertools.combinations(range(host.n), pat.n):
            if fn(host, verts):
                m = 0
                for v in verts:
                    m |= 1 << v
                seen.setdefault(m, pat.n)
    return sorted(seen.items())


def max_tiling_naive(pattern: Pattern, host: SmallGraph) -> int:
    """Maximum number of disjoint copies by subset DP."""
    members = _member_masks([pattern], host)
    by_vertex: dict[int, list[int]] = {}
    for m, _ in members:
        v = (m & -m).bit_length() - 1
        by_vertex.setdefault(v, []).append(m)

    @lru_cache(maxsize=None)
    def f(avail: int) -> int:
        if not avail:
            return 0
        v = (avail & -avail).bit_length() - 1
        best = f(avail & ~(1 << v))
        for m in by_vertex.get(v, ()):
            if not m & ~avail:
                best = max(best, 1 + f(avail & ~m))
        return best

    return f((1 << host.n) - 1)


def max_cover_naive(patterns: list[Pattern], host: SmallGraph) -> int:
    """Maximum covered vertices over disjoint copies from several patterns."""
    members = _member_masks(patterns, host)
    by_vertex: dict[int, list[tuple[int, int]]] = {}
    for m, size in members:
        v = (m & -m).bit_length() - 1
        by_vertex.setdefault(v, []).append((m, size))

    @lru_cache(maxsize=None)
    def f(avail: int) -> int:
        if not avail:
            return 0
        v = (avail & -avail).bit_length() - 1
        best = f(avail & ~(1 << v))
        for m, size in by_vertex.get(v, ()):
            if not m & ~avail:
                best = max(best, size + f(avail & ~m))
        return best

    return f((1 << host.n) - 1)


def random_graph(rng, n: int, p: float) -> SmallGraph:
    """Erdos-Renyi graph with a seeded generator."""
    from htiling.graphs import GraphBuilder

    b = GraphBuilder(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                b.add_edge(u, v)
    return b.build()


def random_graph_with_edges(rng, n: int, m: int) -> SmallGraph:
    """Uniform graph with exactly m edges."""
    from htiling.graphs import GraphBuilder

    pairs = list(itertools.combinations(range(n), 2))
    idx = rng.choice(len(pairs), size=m, replace=False)
    b = GraphBuilder(n)
    for i in idx:
        b.add_edge(*pairs[int(i)])
    return b.build()
