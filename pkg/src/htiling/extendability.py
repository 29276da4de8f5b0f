"""Two-copy pair configurations and verification of the local edge bounds.

The object under study is a pair of vertex-disjoint H-copies H_i, H_j
together with

* a 36-bit mask over the ordered vertex pairs V(H_i) x V(H_j) (row-major in
  canonical label order u, v, a, b, c, d per copy) selecting which cross
  pairs are edges,
* designations L_i, L_j of "high outside degree" vertices on each copy, and
* one pendant vertex per designated vertex, adjacent only to its anchor.

The assembled host is deliberately the worst case: inside each copy only
the five H-edges are present, and pendants bring no adjacency beyond their
anchor edge.  Extendability -- the existence of a {K2, H, Hhat}-tiling of
the host covering at least 13 vertices -- is monotone under adding cross
edges, so the worst-case host is the binding one and each edge-bound lemma
only needs checking at its boundary edge count.

Five local lemmas are machine-checked here, each stating an upper bound on
the number of cross edges a non-extendable pair can carry under a given
designation hypothesis:

    =====  =====================================  =====
    id     designation hypothesis                 bound
    =====  =====================================  =====
    L51    one designated vertex in H_i            30
    L52    one in H_i and one in H_j               24
    L53    two in H_i                              24
    L54    {v,a,b} in H_i and two in H_j           21
    L55    {v,a,b} in both copies                  18
    =====  =====================================  =====

Verification checks the contrapositive at the boundary: every mask with
exactly bound+1 cross edges, under every admissible designation class
matching the hypothesis, must be extendable.  L51's boundary is small
enough to sweep exhaustively (C(36,31) = 376,992 masks per class); the
others are checked on seeded uniform samples.

The engine keeps a growing cache of *certificates*: cross-edge subsets
that some validated qualifying cover uses.  A mask containing a certificate
is extendable outright (the same cover embeds); the check is a vectorized
subset test over the whole batch.  Cache misses go to an exact decision
procedure that searches the five minimal cover shapes

    7+7, 7+6, 7+2+2+2, 6+6+2, 6+2+2+2+2, 2*7      (>= 13 covered vertices)

reduced to: a matching of size 7; an H-copy plus a 4-matching; an Hhat-copy
plus an H-copy or a 3-matching; two H-copies plus an edge.  (Two disjoint
Hhat-copies contain an Hhat + H cover and three disjoint H-copies contain a
two-H-plus-edge cover, so those shapes need no separate search.)  Every
witness found this way is validated and recycled into the certificate
cache; a mask on which the exact search fails is a counterexample.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from .graphs import GraphBuilder, SmallGraph, bits
from .patterns import (
    H_EDGES,
    H_LABELS,
    Embedding,
    iter_h_images,
    iter_hhat_images,
    pattern_h,
    pattern_hhat,
    pattern_k2,
)
from .tiling import Tiling, max_mixed_cover

LABEL_INDEX = {lab: i for i, lab in enumerate(H_LABELS)}
FULL_BIP = (1 << 36) - 1
EXTEND_TARGET = 13


class ConfigError(ValueError):
    """Invalid pair configuration or verification request."""


# -- admissible designation patterns ------------------------------------------


def designation_allowed(labels: Iterable[str]) -> bool:
    """Whether a designation set on one copy survives the local constraints.

    After relabeling every copy so that c and d carry no designation, the
    surviving constraints are: a designated leaf in {a, b} rules out a
    designation on u (and the c/d side is empty by the relabeling).
    """
    s = frozenset(labels)
    if not s <= set(H_LABELS):
        raise ConfigError(f"unknown labels in {sorted(s)}")
    if s & {"c", "d"}:
        return False
    if s & {"a", "b"} and "u" in s:
        return False
    return len(s) <= 2 or s == {"v", "a", "b"}


_ORBIT = {
    frozenset(): "empty",
    frozenset("u"): "center",
    frozenset("v"): "center",
    frozenset("a"): "leaf",
    frozenset("b"): "leaf",
    frozenset({"u", "v"}): "center-pair",
    frozenset({"v", "a"}): "center-leaf",
    frozenset({"v", "b"}): "center-leaf",
    frozenset({"a", "b"}): "leaf-pair",
    frozenset({"v", "a", "b"}): "full",
}


@dataclass(frozen=True)
class LPattern:
    labels: frozenset[str]
    orbit: str


def admissible_L_patterns() -> list[LPattern]:
    """The designation patterns consistent with the local constraints,
    each annotated with its symmetry class under the copy automorphisms."""
    out = [LPattern(labels, orbit) for labels, orbit in _ORBIT.items()]
    out.sort(key=lambda p: (len(p.labels), sorted(LABEL_INDEX[l] for l in p.labels)))
    return out


# -- pair configurations -------------------------------------------------------


def _sorted_labels(labels: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(labels, key=LABEL_INDEX.__getitem__))


@dataclass(frozen=True)
class PairConfig:
    """Two labelled H-copies, a cross-edge mask, designations, pendants.

    Vertex layout of the assembled host: H_i at 0..5 and H_j at 6..11 in
    canonical label order; pendant k at 12+k, anchored first to the
    designated vertices of H_i (label order), then those of H_j.
    """

    bip: int
    l_i: frozenset[str] = frozenset()
    l_j: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        if not 0 <= self.bip <= FULL_BIP:
            raise ConfigError("bip mask must fit in 36 bits")
        for side, s in (("L_i", self.l_i), ("L_j", self.l_j)):
            if not designation_allowed(s):
                raise ConfigError(f"{side} = {sorted(s)} is not an admissible designation")

    def pendant_anchors(self) -> tuple[int, ...]:
        """Host vertex of each pendant's anchor, in pendant order."""
        anchors = [LABEL_INDEX[l] for l in _sorted_labels(self.l_i)]
        anchors += [6 + LABEL_INDEX[l] for l in _sorted_labels(self.l_j)]
        return tuple(anchors)

    @property
    def cross_edge_count(self) -> int:
        return self.bip.bit_count()

    def bip_hex(self) -> str:
        return f"{self.bip:09x}"

    def describe(self) -> dict:
        return {
            "bip_hex": self.bip_hex(),
            "L_i": list(_sorted_labels(self.l_i)),
            "L_j": list(_sorted_labels(self.l_j)),
            "pendants": [f"p{12 + k}@{a}" for k, a in enumerate(self.pendant_anchors())],
        }


def bip_bit(label_i: str, label_j: str) -> int:
    """Bit index of the cross pair (vertex of H_i, vertex of H_j)."""
    return 6 * LABEL_INDEX[label_i] + LABEL_INDEX[label_j]


def bip_from_pairs(pairs: Iterable[tuple[str, str]]) -> int:
    mask = 0
    for li, lj in pairs:
        mask |= 1 << bip_bit(li, lj)
    return mask


def assemble_host(config: PairConfig) -> SmallGraph:
    """Worst-case host: copy edges, cross edges from the mask, anchor edges."""
    anchors = config.pendant_anchors()
    b = GraphBuilder(12 + len(anchors))
    for x, y in H_EDGES:
        b.add_edge(x, y)
        b.add_edge(6 + x, 6 + y)
    for bit in bits(config.bip):
        b.add_edge(bit // 6, 6 + bit % 6)
    for k, anchor in enumerate(anchors):
        b.add_edge(12 + k, anchor)
    return b.build()


def is_extendable(config: PairConfig, budget: int = 2_000_000) -> bool:
    """Whether the assembled host admits a {K2, H, Hhat}-tiling covering at
    least 13 vertices; exact via the mixed-coverage solver."""
    host = assemble_host(config)
    res = max_mixed_cover(
        (pattern_k2(), pattern_h(), pattern_hhat()),
        host,
        budget=budget,
        target=EXTEND_TARGET,
        copy_cap=2_000_000,
    )
    if not res.exact:
        raise ConfigError("mixed-cover search exhausted its budget on a pair host")
    return res.coverage >= EXTEND_TARGET


# -- templates: fixed parts of the host per designation class -----------------


@dataclass(frozen=True)
class _Template:
    l_i: frozenset[str]
    l_j: frozenset[str]
    n: int
    base_adj: tuple[int, ...]  # copy + pendant edges, no cross edges
    cross_pairs: tuple[tuple[int, int], ...]  # bit index -> host pair


@lru_cache(maxsize=None)
def _template(l_i: frozenset, l_j: frozenset) -> _Template:
    cfg = PairConfig(0, l_i, l_j)
    host = assemble_host(cfg)
    pairs = tuple((bit // 6, 6 + bit % 6) for bit in range(36))
    return _Template(l_i, l_j, host.n, host.adj, pairs)


def _host_rows(tpl: _Template, mask: int) -> list[int]:
    rows = list(tpl.base_adj)
    for bit in bits(mask):
        x, y = tpl.cross_pairs[bit]
        rows[x] |= 1 << y
        rows[y] |= 1 << x
    return rows


def _cross_bits_of_edges(edges: Iterable[tuple[int, int]]) -> int:
    mask = 0
    for x, y in edges:
        if x > y:
            x, y = y, x
        if x < 6 <= y < 12:
            mask |= 1 << (6 * x + (y - 6))
    return mask


# -- exact extendability decision over the minimal cover shapes ----------------


def _matching_ge(adj: Sequence[int], avail: int, k: int) -> Optional[list[tuple[int, int]]]:
    """A matching of size k inside ``avail``, or None."""
    if k <= 0:
        return []
    live = avail
    v = None
    while live:
        cand = (live & -live).bit_length() - 1
        if adj[cand] & avail:
            v = cand
            break
        live &= live - 1
    if v is None:
        return None
    # count vertices that still have a partner; quick infeasibility prune
    busy = sum(1 for w in bits(live) if adj[w] & avail)
    if busy < 2 * k:
        return None
    rest_base = avail & ~(1 << v)
    for w in bits(adj[v] & avail):
        sub = _matching_ge(adj, rest_base & ~(1 << w), k - 1)
        if sub is not None:
            return [(v, w)] + sub
    return _matching_ge(adj, rest_base, k)


def _h_plus_matching(adj: Sequence[int], avail: int, need: int) -> Optional[list]:
    for img in iter_h_images(adj, avail):
        used = 0
        for x in img:
            used |= 1 << x
        m = _matching_ge(adj, avail & ~used, need)
        if m is not None:
            return [("H", img)] + [("K2", e) for e in m]
    return None


def _extendable_cover(adj: Sequence[int], n: int) -> Optional[list[tuple[str, tuple[int, ...]]]]:
    """A {K2, H, Hhat}-cover of >= 13 vertices, or None (exact).

    Searches the minimal qualifying shapes; see the module docstring for
    why these four searches are exhaustive.
    """
    full = (1 << n) - 1
    if n >= 14:
        m = _matching_ge(adj, full, 7)
        if m is not None:
            return [("K2", e) for e in m]
        res = _h_plus_matching(adj, full, 4)
        if res is not None:
            return res
    for img in iter_hhat_images(adj, full):
        used = 0
        for x in img:
            used |= 1 << x
        rest = full & ~used
        h2 = next(iter_h_images(adj, rest), None)
        if h2 is not None:
            return [("Hhat", img), ("H", h2)]
        m = _matching_ge(adj, rest, 3)
        if m is not None:
            return [("Hhat", img)] + [("K2", e) for e in m]
    if n >= 14:
        for img in iter_h_images(adj, full):
            used = 0
            for x in img:
                used |= 1 << x
            rest = full & ~used
            for h2 in iter_h_images(adj, rest):
                used2 = used
                for x in h2:
                    used2 |= 1 << x
                rest2 = full & ~used2
                for v in bits(rest2):
                    nb = adj[v] & rest2
                    if nb:
                        w = (nb & -nb).bit_length() - 1
                        return [("H", img), ("H", h2), ("K2", (v, w))]
    return None


_PATTERNS = {"K2": pattern_k2(), "H": pattern_h(), "Hhat": pattern_hhat()}


def _cover_tiling(host: SmallGraph, cover: list[tuple[str, tuple[int, ...]]]) -> Tiling:
    t = Tiling(host, tuple((_PATTERNS[name], Embedding(_PATTERNS[name], tuple(img))) for name, img in cover))
    t.validate()
    return t


def _cover_cross_bits(cover: list[tuple[str, tuple[int, ...]]]) -> int:
    edges: list[tuple[int, int]] = []
    for name, img in cover:
        pat = _PATTERNS[name]
        for x, y in pat.graph.edges():
            edges.append((img[x], img[y]))
    return _cross_bits_of_edges(edges)


def extendable_exact(tpl_l_i: frozenset, tpl_l_j: frozenset, mask: int) -> Optional[list]:
    """Qualifying cover for the configured mask, or None.  Validated."""
    tpl = _template(tpl_l_i, tpl_l_j)
    rows = _host_rows(tpl, mask)
    cover = _extendable_cover(rows, tpl.n)
    if cover is None:
        return None
    host = assemble_host(PairConfig(mask, tpl.l_i, tpl.l_j))
    _cover_tiling(host, cover)  # raises if anything is off
    return cover


# -- lemma registry ------------------------------------------------------------


def _fs(*labels: str) -> frozenset[str]:
    return frozenset(labels)


@dataclass(frozen=True)
class LemmaSpec:
    lemma_id: str
    bound: int
    classes: tuple[tuple[frozenset, frozenset], ...]

    @property
    def boundary_edges(self) -> int:
        return self.bound + 1


LEMMAS: dict[str, LemmaSpec] = {
    "L51": LemmaSpec("L51", 30, ((_fs("u"), _fs()), (_fs("a"), _fs()))),
    "L52": LemmaSpec(
        "L52", 24, ((_fs("u"), _fs("u")), (_fs("u"), _fs("a")), (_fs("a"), _fs("a")))
    ),
    "L53": LemmaSpec(
        "L53",
        24,
        ((_fs("u", "v"), _fs()), (_fs("a", "b"), _fs()), (_fs("v", "a"), _fs()), (_fs("v", "b"), _fs())),
    ),
    "L54": LemmaSpec(
        "L54",
        21,
        (
            (_fs("v", "a", "b"), _fs("u", "v")),
            (_fs("v", "a", "b"), _fs("a", "b")),
            (_fs("v", "a", "b"), _fs("v", "a")),
            (_fs("v", "a", "b"), _fs("v", "b")),
        ),
    ),
    "L55": LemmaSpec("L55", 18, ((_fs("v", "a", "b"), _fs("v", "a", "b")),)),
}

#: Only this lemma's boundary is small enough for an exhaustive sweep.
EXHAUSTIVE_OK = ("L51",)


# -- verification reports ------------------------------------------------------


@dataclass
class VerificationReport:
    lemma: str
    mode: str
    l_configs: list[dict]
    checked: int
    counterexamples: list[dict]
    seed: Optional[int]
    rng: Optional[str]
    elapsed_ms: int
    solver_calls: int = 0
    certificates: int = 0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_doc(self) -> dict:
        return {
            "schema_version": 1,
            "lemma": self.lemma,
            "mode": self.mode,
            "l_configs": self.l_configs,
            "checked": self.checked,
            "failures": self.counterexamples,
            "seed": self.seed,
            "rng": self.rng,
            "solver_calls": self.solver_calls,
            "certificates": self.certificates,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_doc(), sort_keys=True)


class _CertChecker:
    """Adaptive certificate cache + vectorized subset filter for one class."""

    def __init__(self, l_i: frozenset, l_j: frozenset):
        self.l_i = l_i
        self.l_j = l_j
        self.certs: list[int] = []
        self.solver_calls = 0
        full_cover = extendable_exact(l_i, l_j, FULL_BIP)
        self.solver_calls += 1
        if full_cover is not None:
            self.certs.append(_cover_cross_bits(full_cover))

    def check_batch(self, masks: np.ndarray) -> list[dict]:
        """Returns counterexample descriptors found in this batch."""
        rem = np.arange(len(masks))
        for cert in self.certs:
            if not len(rem):
                return []
            sub = masks[rem]
            rem = rem[(sub & cert) != cert]
        failures: list[dict] = []
        idx = 0
        while idx < len(rem):
            mask = int(masks[rem[idx]])
            cover = extendable_exact(self.l_i, self.l_j, mask)
            self.solver_calls += 1
            if cover is None:
                failures.append(PairConfig(mask, self.l_i, self.l_j).describe())
                idx += 1
                continue
            cert = _cover_cross_bits(cover)
            self.certs.append(cert)
            tail = rem[idx:]
            sub = masks[tail]
            rem = np.concatenate([rem[:idx], tail[(sub & cert) != cert]])
        return failures


def _boundary_masks_exhaustive(k: int) -> np.ndarray:
    """All 36-bit masks with exactly k bits, as int64, in colex rank order
    of the missing-bit sets (the order job partitions slice)."""
    miss = 36 - k
    combos = np.array(list(itertools.combinations(range(36), miss)), dtype=np.int64)
    comp = (np.int64(1) << combos).sum(axis=1)
    order = np.lexsort(combos.T)  # last key = largest element: colex
    return np.int64(FULL_BIP) ^ comp[order]


def _boundary_masks_sampled(k: int, count: int, seed: int, stream: tuple[int, ...]) -> np.ndarray:
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=stream))
    cols = np.argsort(rng.random((count, 36)), axis=1)[:, :k].astype(np.int64)
    return (np.int64(1) << cols).sum(axis=1)


def verify_lemma(
    lemma_id: str,
    mode: str = "sampled",
    count: int = 100_000,
    seed: int = 42,
    jobs: int = 1,
    batch: int = 8192,
    progress=None,
) -> VerificationReport:
    """Check one local lemma at its boundary edge count.

    ``mode="exhaustive"`` sweeps every boundary mask (permitted for L51
    only); ``mode="sampled"`` draws ``count`` uniform boundary masks per
    admissible designation class from a seeded generator.  Returns a
    deterministic report; rerunning with identical arguments reproduces it
    byte-for-byte apart from the elapsed-time field.
    """
    if lemma_id not in LEMMAS:
        raise ConfigError(f"unknown lemma id {lemma_id!r}")
    spec = LEMMAS[lemma_id]
    if mode not in ("exhaustive", "sampled"):
        raise ConfigError(f"unknown mode {mode!r}")
    if mode == "exhaustive" and lemma_id not in EXHAUSTIVE_OK:
        raise ConfigError(
            f"exhaustive mode is only feasible for {EXHAUSTIVE_OK}; "
            f"{lemma_id} has C(36,{spec.boundary_edges}) boundary masks"
        )
    k = spec.boundary_edges
    t0 = time.monotonic()
    l_configs: list[dict] = []
    failures: list[dict] = []
    checked = 0
    solver_calls = 0
    n_certs = 0
    for class_no, (l_i, l_j) in enumerate(spec.classes):
        if mode == "exhaustive":
            masks = _boundary_masks_exhaustive(k)
        else:
            masks = _boundary_masks_sampled(k, count, seed, (LEMMA_STREAM[lemma_id], class_no))
        l_configs.append(
            {
                "L_i": list(_sorted_labels(l_i)),
                "L_j": list(_sorted_labels(l_j)),
                "masks": int(len(masks)),
            }
        )
        if jobs > 1:
            fails, calls, certs = _run_class_parallel(l_i, l_j, masks, jobs, batch)
        else:
            fails, calls, certs = _run_class(l_i, l_j, masks, batch, progress)
        failures.extend(fails)
        solver_calls += calls
        n_certs += certs
        checked += len(masks)
        if progress:
            progress(f"{lemma_id} class {class_no + 1}/{len(spec.classes)} done")
    failures.sort(key=lambda f: (f["L_i"], f["L_j"], f["bip_hex"]))
    elapsed_ms = int((time.monotonic() - t0) * 1000)
    return VerificationReport(
        lemma=lemma_id,
        mode=mode,
        l_configs=l_configs,
        checked=checked,
        counterexamples=failures,
        seed=seed if mode == "sampled" else None,
        rng="pcg64" if mode == "sampled" else None,
        elapsed_ms=elapsed_ms,
        solver_calls=solver_calls,
        certificates=n_certs,
    )


LEMMA_STREAM = {lid: i for i, lid in enumerate(LEMMAS)}


def _run_class(l_i, l_j, masks: np.ndarray, batch: int, progress=None) -> tuple[list[dict], int, int]:
    checker = _CertChecker(l_i, l_j)
    failures: list[dict] = []
    for lo in range(0, len(masks), batch):
        failures.extend(checker.check_batch(masks[lo : lo + batch]))
        if progress and lo // batch % 8 == 0:
            progress(f"  masks {min(lo + batch, len(masks))}/{len(masks)}")
    return failures, checker.solver_calls, len(checker.certs)


def _class_chunk_worker(args) -> tuple[list[dict], int, int]:
    l_i, l_j, masks, batch = args
    return _run_class(frozenset(l_i), frozenset(l_j), masks, batch)


def _run_class_parallel(l_i, l_j, masks: np.ndarray, jobs: int, batch: int):
    import multiprocessing as mp

    chunks = np.array_split(masks, jobs)
    payload = [(tuple(l_i), tuple(l_j), chunk, batch) for chunk in chunks if len(chunk)]
    with mp.Pool(jobs) as pool:
        parts = pool.map(_class_chunk_worker, payload)
    failures: list[dict] = []
    calls = certs = 0
    for f, c, ce in parts:
        failures.extend(f)
        calls += c
        certs += ce
    return failures, calls, certs


def tightness_probe(
    lemma_id: str, budget: int = 10_000, seed: int = 0
) -> Optional[PairConfig]:
    """Search for a non-extendable configuration with exactly ``bound``
    cross edges under the lemma's hypothesis.  Informational only: the
    bounds are not claimed tight, so None is the common outcome.
    """
    if lemma_id not in LEMMAS:
        raise ConfigError(f"unknown lemma id {lemma_id!r}")
    spec = LEMMAS[lemma_id]
    if budget <= 0:
        return None
    per_class = max(1, budget // len(spec.classes))
    for class_no, (l_i, l_j) in enumerate(spec.classes):
        masks = _boundary_masks_sampled(
            spec.bound, per_class, seed, (100 + LEMMA_STREAM[lemma_id], class_no)
        )
        for m in masks:
            if extendable_exact(l_i, l_j, int(m)) is None:
                return PairConfig(int(m), l_i, l_j)
    return None
