"""Exact maximum tiling and mixed-family coverage solvers.

A tiling is a collection of vertex-disjoint pattern copies in a host graph.
``max_tiling`` maximizes the number of copies of one pattern;
``max_mixed_cover`` maximizes the number of covered vertices over copies
drawn from several patterns at once.

Both solvers are branch-and-bound searches that branch on the lowest-index
uncovered vertex: either cover it with one of the copies through it, or mark
it uncovered.  Results carry an ``exact`` flag; a result is only reported
exact when the search either closed the gap to a proven upper bound or
exhausted the branch tree within its node budget.  Upper bounds come from
three sources, cheapest first:

* the counting bound  floor(#coverable-vertices / v(F)),
* v(F) times a greedy maximal packing (any copy in an optimal packing meets
  some greedy copy),
* a fractional vertex-weighting bound: any w >= 0 with sum_{v in c} w_v >= 1
  for every copy c gives  nu <= sum w.  The weighting is found by LP and then
  certified in exact integer arithmetic, so solver tolerances cannot make
  the bound unsound.

Hosts whose copy list is too large to enumerate (big blowups) fall back to a
lazy depth-first search that generates copies through the branching vertex
on demand and stops as soon as the counting bound is attained.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .graphs import SmallGraph, bits, blowup
from .patterns import (
    Embedding,
    Pattern,
    iter_copy_images,
    iter_h_images,
    pattern_h,
    pattern_hhat,
    pattern_k2,
)

DEFAULT_NODE_BUDGET = 10_000_000
COPY_ENUM_CAP = 300_000


class TilingError(ValueError):
    """Invalid tiling input."""


@dataclass(frozen=True)
class Tiling:
    """Vertex-disjoint pattern copies in a common host."""

    host: SmallGraph
    members: tuple[tuple[Pattern, Embedding], ...]

    @property
    def coverage(self) -> int:
        return sum(p.n for p, _ in self.members)

    def covered_mask(self) -> int:
        m = 0
        for _, emb in self.members:
            m |= emb.image_mask()
        return m

    def validate(self) -> None:
        """Raise TilingError unless every member is a valid copy and all
        members are pairwise vertex-disjoint."""
        seen = 0
        for pat, emb in self.members:
            if emb.pattern != pat:
                raise TilingError("member pattern does not match its embedding")
            if not emb.is_valid_in(self.host):
                raise TilingError(f"member {pat.name}{emb.image} is not a copy in the host")
            m = emb.image_mask()
            if m & seen:
                raise TilingError(f"member {pat.name}{emb.image} overlaps another member")
            seen |= m
        if self.coverage > self.host.n:
            raise TilingError("coverage exceeds host order")

    def is_valid(self) -> bool:
        try:
            self.validate()
        except TilingError:
            return False
        return True

    def to_json(self) -> str:
        doc = {
            "schema_version": 1,
            "host_vertices": self.host.n,
            "members": [
                {"pattern": pat.name, "image": list(emb.image)} for pat, emb in self.members
            ],
        }
        return json.dumps(doc, sort_keys=True)


def tiling_from_images(
    host: SmallGraph, members: Iterable[tuple[Pattern, tuple[int, ...]]]
) -> Tiling:
    t = Tiling(host, tuple((p, Embedding(p, img)) for p, img in members))
    t.validate()
    return t


@dataclass(frozen=True)
class TilingResult:
    count: int
    tiling: Tiling
    exact: bool
    nodes: int


@dataclass(frozen=True)
class MixedCoverResult:
    coverage: int
    tiling: Tiling
    exact: bool
    nodes: int


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n: int):
        self.left = n

    def tick(self) -> bool:
        self.left -= 1
        return self.left >= 0


# -- copy harvesting ---------------------------------------------------------


def _collect_images(pattern: Pattern, host: SmallGraph, cap: int) -> Optional[list[tuple[int, ...]]]:
    """Sorted packing-relevant copy images, or None above the raw cap.

    Copies sharing a vertex mask are interchangeable for packing and
    coverage purposes, so only one representative per mask is kept.  When
    the host is small enough, candidate vertex subsets are enumerated
    directly and spanning-checked (dense hosts have far fewer spanning sets
    than raw placements); otherwise placements are generated with a raw cap
    that hands truly big hosts to the lazy solver.
    """
    from math import comb

    seen: dict[int, tuple[int, ...]] = {}
    if 0 < pattern.n <= host.n and comb(host.n, pattern.n) <= cap:
        for verts in itertools.combinations(range(host.n), pattern.n):
            m = 0
            for v in verts:
                m |= 1 << v
            img = next(iter_copy_images(pattern, host, avail=m), None)
            if img is not None:
                seen[m] = img
    else:
        raw = 0
        for img in iter_copy_images(pattern, host):
            raw += 1
            if raw > cap:
                return None
            m = 0
            for v in img:
                m |= 1 << v
            if m not in seen:
                seen[m] = img
    out = list(seen.values())
    out.sort(key=lambda img: (tuple(sorted(img)), img))
    return out


def _masks(images: Sequence[tuple[int, ...]]) -> list[int]:
    out = []
    for img in images:
        m = 0
        for v in img:
            m |= 1 << v
        out.append(m)
    return out


def _greedy_pack(masks: Sequence[int], blocked: int) -> list[int]:
    """First-fit disjoint selection (indices) among masks avoiding blocked."""
    picked = []
    used = blocked
    for i, m in enumerate(masks):
        if not m & used:
            picked.append(i)
            used |= m
    return picked


def _best_greedy_pack(masks: Sequence[int]) -> list[int]:
    """Best first-fit packing over a handful of deterministic scan orders.

    A single lexicographic scan can get stuck behind copies that hog a
    scarce vertex class, so also try the reversed order and a few seeded
    shuffles.
    """
    best: list[int] = []
    orders: list[Sequence[int]] = [range(len(masks)), range(len(masks) - 1, -1, -1)]
    rng = np.random.default_rng(0)
    for _ in range(4):
        orders.append(rng.permutation(len(masks)).tolist())
    for order in orders:
        picked, used = [], 0
        for i in order:
            if not masks[i] & used:
                picked.append(i)
                used |= masks[i]
        if len(picked) > len(best):
            best = picked
    return sorted(best)


# -- fractional vertex-weighting bound ----------------------------------------


def _fractional_cover_bound(images: Sequence[tuple[int, ...]], n: int) -> Optional[int]:
    """Certified upper bound on the packing number via an LP weighting.

    Solves min 1'w subject to (sum of w over each copy) >= 1, w >= 0, then
    rescales an integerized w so every copy constraint holds exactly in
    integer arithmetic.  The returned bound is therefore sound regardless of
    LP solver accuracy; None when the LP fails or the weighting degenerates.
    """
    if not images:
        return 0
    try:
        from scipy.optimize import linprog
        from scipy.sparse import coo_matrix
    except ImportError:  # pragma: no cover - scipy is a hard dependency
        return None
    img = np.asarray(images, dtype=np.int64)
    ncopies, vf = img.shape
    rows = np.repeat(np.arange(ncopies), vf)
    cols = img.reshape(-1)
    a = coo_matrix((-np.ones(ncopies * vf), (rows, cols)), shape=(ncopies, n)).tocsr()
    res = linprog(
        c=np.ones(n),
        A_ub=a,
        b_ub=-np.ones(ncopies),
        bounds=(0, None),
        method="highs",
    )
    if not res.success:
        return None
    scale = 1 << 20
    w_int = np.maximum(np.round(res.x * scale).astype(np.int64), 0)
    loads = w_int[img].sum(axis=1)
    min_load = int(loads.min())
    if min_load <= 0:
        return None
    return int(w_int.sum()) // min_load


# -- single-pattern exact solver ----------------------------------------------


def max_tiling(
    pattern: Pattern,
    host: SmallGraph,
    budget: int = DEFAULT_NODE_BUDGET,
    copy_cap: int = COPY_ENUM_CAP,
) -> TilingResult:
    """Maximum number of vertex-disjoint copies of ``pattern`` in ``host``.

    Returns the best tiling found along with an ``exact`` flag.  When
    ``exact`` is False the count is still a valid lower bound.
    """
    if pattern.n == 0 or pattern.n > host.n:
        return TilingResult(0, Tiling(host, ()), True, 0)
    images = _collect_images(pattern, host, copy_cap)
    if images is None:
        return _lazy_max_tiling(pattern, host, budget)
    return _explicit_max_tiling(pattern, host, images, budget)


def _explicit_max_tiling(
    pattern: Pattern, host: SmallGraph, images: list[tuple[int, ...]], budget: int
) -> TilingResult:
    vf = pattern.n
    masks = _masks(images)
    coverable = 0
    for m in masks:
        coverable |= m
    ub_count = bin(coverable).count("1") // vf

    best = _best_greedy_pack(masks)
    best_n = len(best)

    def result(exact: bool, nodes: int) -> TilingResult:
        t = Tiling(host, tuple((pattern, Embedding(pattern, images[i])) for i in best))
        return TilingResult(best_n, t, exact, nodes)

    if best_n >= ub_count:
        return result(True, 0)
    lp_bound = _fractional_cover_bound(images, host.n)
    if lp_bound is not None and best_n >= lp_bound:
        return result(True, 0)

    through: list[list[int]] = [[] for _ in range(host.n)]
    for i, m in enumerate(masks):
        for v in bits(m):
            through[v].append(i)

    bud = _Budget(budget)
    overran = False
    node_greedy = len(masks) <= 50_000  # full scans per node stay affordable

    def rec(blocked: int, current: list[int]) -> None:
        nonlocal best, best_n, overran
        if overran or not bud.tick():
            overran = True
            return
        free = coverable & ~blocked
        trivial = bin(free).count("1") // vf
        ub = len(current) + trivial
        if node_greedy:
            # greedy completion doubles as incumbent update and packing
            # bound; v(F) * |maximal packing| only bounds the optimum when
            # the scan ran to completion, so stop early only once it cannot
            # beat `trivial`
            comp = []
            used = blocked
            maximal = True
            for i, m in enumerate(masks):
                if not m & used:
                    comp.append(i)
                    used |= m
                    if vf * len(comp) >= trivial:
                        maximal = False
                        break
            if len(current) + len(comp) > best_n:
                best = current + comp
                best_n = len(best)
            if maximal:
                ub = len(current) + min(trivial, vf * len(comp))
        if ub <= best_n or free == 0 or best_n >= ub_count:
            return
        v = (free & -free).bit_length() - 1
        for i in through[v]:
            if not masks[i] & blocked:
                current.append(i)
                rec(blocked | masks[i], current)
                current.pop()
                if overran or best_n >= ub_count:
                    return
        rec(blocked | (1 << v), current)

    rec(0, [])
    nodes = budget - bud.left
    if overran:
        return result(best_n >= ub_count, nodes)
    return result(True, nodes)


def _twin_classes(adj: Sequence[int], avail: int) -> dict[int, list[int]]:
    """Group available vertices into pairwise-interchangeable twin classes.

    False twins (equal open neighbourhoods: blowup clones) are grouped
    first; vertices without a false twin are then grouped by closed
    neighbourhood (true twins: clique members).  Every two members of a
    class are exchanged by a transposition automorphism of the available
    subgraph, so a branch-and-bound only ever needs the canonical copy of
    each class pattern: the one using the lowest available members.
    """
    open_groups: dict[int, list[int]] = {}
    for w in bits(avail):
        open_groups.setdefault(adj[w] & avail, []).append(w)
    classes: dict[int, list[int]] = {}
    closed_groups: dict[int, list[int]] = {}
    for members in open_groups.values():
        if len(members) > 1:
            classes[len(classes)] = members
        else:
            w = members[0]
            closed_groups.setdefault((adj[w] & avail) | (1 << w), []).append(w)
    for members in closed_groups.values():
        classes[len(classes)] = members
    return classes


def _h_class_candidates_through(adj: Sequence[int], avail: int, v: int) -> list[tuple[int, ...]]:
    """Twin-reduced H-copy images through ``v``, one per class pattern.

    Every H-copy through v can be mapped by twin swaps onto a candidate in
    which each slot holds the lowest unused member of its twin class, so
    restricting branching to these candidates keeps the search complete.
    Slots are filled in the order (partner, a, b, c, d); v itself is fixed.
    """
    classes = _twin_classes(adj, avail)
    key_of = {}
    for key, members in classes.items():
        for w in members:
            key_of[w] = key

    out: list[tuple[int, ...]] = []
    seen: set[int] = set()

    def take(key: int, used: set[int]) -> Optional[int]:
        for w in classes[key]:
            if w not in used:
                used.add(w)
                return w
        return None

    def emit(img: tuple[int, ...]) -> None:
        m = 0
        for w in img:
            m |= 1 << w
        if m not in seen:
            seen.add(m)
            out.append(img)

    nav = adj[v] & avail
    nav_keys = sorted({key_of[w] for w in bits(nav)})

    # v as a centre: partner p, leaves a,b on v, leaves c,d on p
    for pk in nav_keys:
        for ak, bk in itertools.combinations_with_replacement(nav_keys, 2):
            used = {v}
            p = take(pk, used)
            if p is None:
                continue
            a = take(ak, used)
            b = take(bk, used)
            if a is None or b is None:
                continue
            p_keys = sorted({key_of[w] for w in bits(adj[p] & avail)})
            for ck, dk in itertools.combinations_with_replacement(p_keys, 2):
                used2 = set(used)
                c = take(ck, used2)
                d = take(dk, used2)
                if c is None or d is None:
                    continue
                emit((v, p, a, b, c, d))
    # v as a leaf of centre u with co-centre w2
    for uk in nav_keys:
        used0 = {v}
        u = take(uk, used0)
        if u is None:
            continue
        u_keys = sorted({key_of[x] for x in bits(adj[u] & avail)})
        for wk in u_keys:
            for bk in u_keys:
                used1 = set(used0)
                w2 = take(wk, used1)
                b = take(bk, used1)
                if w2 is None or b is None:
                    continue
                w_keys = sorted({key_of[x] for x in bits(adj[w2] & avail)})
                for ck, dk in itertools.combinations_with_replacement(w_keys, 2):
                    used2 = set(used1)
                    c = take(ck, used2)
                    d = take(dk, used2)
                    if c is None or d is None:
                        continue
                    lo, hi = (v, b) if v < b else (b, v)
                    emit((u, w2, lo, hi, c, d))
    return out


def _lazy_max_tiling(pattern: Pattern, host: SmallGraph, budget: int) -> TilingResult:
    """Depth-first search for hosts too dense to enumerate all copies.

    Supports the H pattern (the only one needed on big blowups).  Branching
    candidates are twin-reduced, so on blowups the tree is over clone-class
    patterns rather than raw vertex tuples; candidates are tried in order of
    residual degree sum, which mops up constrained clone classes first.
    """
    if pattern.name != "H":
        raise TilingError(
            f"host too large to enumerate copies of {pattern.name}; "
            "raise copy_cap or reduce the host"
        )
    adj = host.adj
    full = (1 << host.n) - 1
    coverable = 0
    for v in range(host.n):
        if _h_class_candidates_through(adj, full, v):
            coverable |= 1 << v
    vf = pattern.n
    ub_count = bin(coverable).count("1") // vf

    best: list[tuple[int, ...]] = []
    bud = _Budget(budget)
    overran = False

    def rec(blocked: int, current: list[tuple[int, ...]]) -> None:
        nonlocal best, overran
        if overran or not bud.tick():
            overran = True
            return
        if len(current) > len(best):
            best = list(current)
        if len(best) >= ub_count:
            return
        free = coverable & ~blocked
        if free == 0 or len(current) + bin(free).count("1") // vf <= len(best):
            return
        v = (free & -free).bit_length() - 1
        avail = full & ~blocked
        cands = _h_class_candidates_through(adj, avail, v)
        deg = [bin(adj[w] & avail).count("1") for w in range(host.n)]
        cands.sort(key=lambda img: (sum(deg[w] for w in img), img))
        for img in cands:
            m = 0
            for w in img:
                m |= 1 << w
            current.append(img)
            rec(blocked | m, current)
            current.pop()
            if overran or len(best) >= ub_count:
                return
        rec(blocked | (1 << v), current)

    rec(0, [])
    nodes = budget - bud.left
    t = Tiling(host, tuple((pattern, Embedding(pattern, img)) for img in best))
    exact = (not overran) or len(best) >= ub_count
    return TilingResult(len(best), t, exact, nodes)


def covering_ratio(pattern: Pattern, host: SmallGraph, budget: int = DEFAULT_NODE_BUDGET) -> Fraction:
    """Fraction of host vertices covered by a maximum tiling, exact."""
    if host.n < 1:
        raise TilingError("covering ratio needs a nonempty host")
    res = max_tiling(pattern, host, budget=budget)
    if not res.exact:
        raise TilingError("tiling solver exhausted its budget; ratio would not be exact")
    return Fraction(pattern.n * res.count, host.n)


# -- mixed-family coverage -----------------------------------------------------


def default_families() -> tuple[Pattern, ...]:
    return (pattern_k2(), pattern_h(), pattern_hhat())


def max_mixed_cover(
    families: Sequence[Pattern],
    host: SmallGraph,
    budget: int = DEFAULT_NODE_BUDGET,
    target: Optional[int] = None,
    copy_cap: int = COPY_ENUM_CAP,
) -> MixedCoverResult:
    """Maximize covered vertices over vertex-disjoint copies from ``families``.

    Stops early once ``target`` coverage is reached (the result is then a
    witness for coverage >= target, not necessarily the maximum).
    """
    members: list[tuple[int, tuple[int, ...]]] = []  # (family index, image)
    for fi, pat in enumerate(families):
        imgs = _collect_images(pat, host, copy_cap)
        if imgs is None:
            raise TilingError(f"too many {pat.name}-copies to enumerate; reduce the host")
        members.extend((fi, img) for img in imgs)
    # larger members first so greedy and branching reach high coverage early
    order = sorted(
        range(len(members)),
        key=lambda i: (-families[members[i][0]].n, tuple(sorted(members[i][1])), members[i][1]),
    )
    members = [members[i] for i in order]
    masks = _masks([img for _, img in members])
    sizes = [families[fi].n for fi, _ in members]
    coverable = 0
    for m in masks:
        coverable |= m
    ub_cover = bin(coverable).count("1")
    goal = ub_cover if target is None else min(target, ub_cover)

    through: list[list[int]] = [[] for _ in range(host.n)]
    for i, m in enumerate(masks):
        for v in bits(m):
            through[v].append(i)

    best: list[int] = []
    best_cov = 0

    def greedy(blocked: int) -> tuple[list[int], int]:
        picked, used, cov = [], blocked, 0
        for i, m in enumerate(masks):
            if not m & used:
                picked.append(i)
                used |= m
                cov += sizes[i]
        return picked, cov

    g0, gcov = greedy(0)
    best, best_cov = g0, gcov

    bud = _Budget(budget)
    overran = False
    adj = host.adj

    def rec(blocked: int, current: list[int], cov: int) -> None:
        nonlocal best, best_cov, overran
        if overran or not bud.tick():
            overran = True
            return
        if cov > best_cov:
            best, best_cov = list(current), cov
        if best_cov >= goal:
            return
        free = coverable & ~blocked
        # every member is connected, so a free vertex with no free
        # neighbour can never be covered below this node
        reachable = sum(1 for v in bits(free) if adj[v] & free)
        if cov + reachable <= best_cov:
            return
        v = (free & -free).bit_length() - 1
        for i in through[v]:
            if not masks[i] & blocked:
                current.append(i)
                rec(blocked | masks[i], current, cov + sizes[i])
                current.pop()
                if overran or best_cov >= goal:
                    return
        rec(blocked | (1 << v), current, cov)

    if best_cov < goal:
        rec(0, [], 0)
    nodes = budget - bud.left
    t = Tiling(
        host,
        tuple(
            (families[members[i][0]], Embedding(families[members[i][0]], members[i][1]))
            for i in best
        ),
    )
    exact = (not overran) or best_cov >= goal
    return MixedCoverResult(best_cov, t, exact, nodes)


# -- canonical perfect tilings of blowups and the tiling lift ------------------


def _k2_blowup6_images() -> list[tuple[int, ...]]:
    # Two H-copies covering K2[6]; coordinates are (class*6 + clone).
    return [
        (0, 6, 7, 8, 1, 2),
        (3, 9, 10, 11, 4, 5),
    ]


def _h_blowup6_images() -> list[tuple[int, ...]]:
    # Diagonal copies: clone i of each class forms one H-copy.
    return [tuple(cls * 6 + i for cls in range(6)) for i in range(6)]


def hhat_blowup_tiling(t: int) -> Tiling:
    """H-tiling of Hhat[t] with exactly floor(t/2) + 4*floor(t/6) members.

    Built from five fixed embedding schemes of H into a blowup of Hhat:
    the first scheme is used floor(t/2) times, the remaining four
    floor(t/6) times each, with clone indices allocated left to right.
    All members are validated before returning.
    """
    if t < 1:
        raise TilingError("blowup factor must be >= 1")
    hhat = pattern_hhat()
    host = blowup(hhat.graph, t)
    hp = pattern_h()
    # class indices in Hhat label order
    U, V, W, A, B, C, D = range(7)
    counters = [0] * 7

    def alloc(cls: int, k: int) -> list[int]:
        start = counters[cls]
        counters[cls] += k
        if counters[cls] > t:
            raise TilingError("embedding schedule overflowed a clone class")
        return [cls * t + start + i for i in range(k)]

    images: list[tuple[int, ...]] = []
    for _ in range(t // 2):
        (u,) = alloc(U, 1)
        (v,) = alloc(V, 1)
        a, b = alloc(A, 2)
        c, d = alloc(D, 2)
        images.append((u, v, a, b, c, d))
    for _ in range(t // 6):
        u, d = alloc(U, 2)
        (v,) = alloc(V, 1)
        a, b = alloc(B, 2)
        (c,) = alloc(C, 1)
        images.append((u, v, a, b, c, d))
    for _ in range(t // 6):
        (u,) = alloc(U, 1)
        v, a = alloc(V, 2)
        (b,) = alloc(B, 1)
        c, d = alloc(C, 2)
        images.append((u, v, a, b, c, d))
    for _ in range(t // 6):
        u, c, d = alloc(W, 3)
        (v,) = alloc(C, 1)
        a, b = alloc(B, 2)
        images.append((u, v, a, b, c, d))
    for _ in range(t // 6):
        (u,) = alloc(B, 1)
        v, a, b = alloc(W, 3)
        c, d = alloc(C, 2)
        images.append((u, v, a, b, c, d))
    tiling = tiling_from_images(host, [(hp, img) for img in images])
    expected = t // 2 + 4 * (t // 6)
    if len(tiling.members) != expected:
        raise TilingError(f"schedule produced {len(tiling.members)} members, expected {expected}")
    return tiling


def lift_tiling(tiling: Tiling) -> Tiling:
    """Lift a {K2, H, Hhat}-tiling of G to an H-tiling of the 6-blowup of G.

    Each member is replaced by the stored perfect H-tiling of its own
    6-blowup, composed with the blowup layout (u, i) -> u*6 + i.  Coverage
    multiplies by exactly 6.
    """
    tiling.validate()
    host6 = blowup(tiling.host, 6)
    hp = pattern_h()
    lifted: list[tuple[Pattern, tuple[int, ...]]] = []
    for pat, emb in tiling.members:
        if pat.name == "K2":
            local = _k2_blowup6_images()
        elif pat.name == "H":
            local = _h_blowup6_images()
        elif pat.name == "Hhat":
            local = [img for _, e in hhat_blowup_tiling(6).members for img in [e.image]]
        else:
            raise TilingError(f"no stored blowup tiling for pattern {pat.name}")
        for img in local:
            lifted.append((hp, tuple(emb.image[c // 6] * 6 + (c % 6) for c in img)))
    out = tiling_from_images(host6, lifted)
    if out.coverage != 6 * tiling.coverage:
        raise TilingError("lifted tiling does not cover 6x the input coverage")
    return out


# -- dense-graph H finder and greedy representatives ----------------------------


def find_h_in_dense(host: SmallGraph) -> Optional[Embedding]:
    """An H-copy found by peeling to a min-degree-6 core and embedding
    greedily; falls back to full enumeration when the core is empty.

    Whenever the host has at least 5n edges this returns a copy; it returns
    None only when the host has no H-copy at all.
    """
    hp = pattern_h()
    alive = (1 << host.n) - 1
    deg = [host.degree(v) for v in range(host.n)]
    stack = [v for v in range(host.n) if deg[v] <= 5]
    while stack:
        v = stack.pop()
        if not alive >> v & 1:
            continue
        alive &= ~(1 << v)
        for u in bits(host.adj[v] & alive):
            deg[u] -= 1
            if deg[u] <= 5:
                stack.append(u)
    if alive:
        u = (alive & -alive).bit_length() - 1
        nu = host.adj[u] & alive
        v = (nu & -nu).bit_length() - 1
        u_pool = list(bits(host.adj[u] & alive & ~(1 << v)))
        a, b = u_pool[0], u_pool[1]
        v_pool = host.adj[v] & alive & ~(1 << u) & ~(1 << a) & ~(1 << b)
        v_list = list(bits(v_pool))
        c, d = v_list[0], v_list[1]
        emb = Embedding(hp, (u, v, a, b, c, d))
        if not emb.is_valid_in(host):  # pragma: no cover - peel guarantees this
            raise TilingError("greedy embedding failed inside a min-degree-6 core")
        return emb
    img = next(iter_h_images(host.adj, (1 << host.n) - 1), None)
    return Embedding(hp, img) if img is not None else None


def disjoint_representatives(
    families: Sequence[Sequence[frozenset]],
) -> Optional[list[frozenset]]:
    """Greedy choice of one member per family, pairwise disjoint.

    Families are scanned in index order and each contributes its first
    member disjoint from everything picked so far; None when some family is
    exhausted.  Abundant families (in the rt*n^(r-1) sense) always succeed.
    """
    picked: list[frozenset] = []
    used: set = set()
    for fam in families:
        choice = None
        for member in fam:
            if not (member & used):
                choice = member
                break
        if choice is None:
            return None
        picked.append(choice)
        used |= set(choice)
    return picked
