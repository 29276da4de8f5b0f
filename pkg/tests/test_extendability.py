"""Pair configurations: admissible designations, extendability routes,
lemma verification reports."""

import json

import numpy as np
import pytest

from htiling.extendability import (
    EXHAUSTIVE_OK,
    FULL_BIP,
    LEMMAS,
    ConfigError,
    PairConfig,
    admissible_L_patterns,
    assemble_host,
    bip_from_pairs,
    designation_allowed,
    extendable_exact,
    is_extendable,
    tightness_probe,
    verify_lemma,
)
from htiling.graphs import bits
from htiling.patterns import pattern_h, pattern_hhat, pattern_k2

from oracles import max_cover_naive

ALL_LABELS = ("u", "v", "a", "b", "c", "d")


def _fs(s):
    return frozenset(s)


def test_admissible_catalog_exact():
    pats = admissible_L_patterns()
    listed = {p.labels for p in pats}
    assert len(pats) == 10
    assert _fs("vab") in listed and _fs("") in listed
    assert _fs("ua") not in listed
    # catalogue = exactly the allowed subsets of all designs of size <= 3
    import itertools

    for size in range(0, 4):
        for combo in itertools.combinations(ALL_LABELS, size):
            s = _fs(combo)
            assert (s in listed) == designation_allowed(s), combo
    orbits = {p.labels: p.orbit for p in pats}
    assert orbits[_fs("u")] == orbits[_fs("v")] == "center"
    assert orbits[_fs("a")] == orbits[_fs("b")] == "leaf"
    assert orbits[_fs("va")] == orbits[_fs("vb")]


def test_assemble_host_counts():
    cfg = PairConfig(0, _fs("u"))
    h = assemble_host(cfg)
    assert (h.n, h.edge_count) == (13, 11)
    cfg = PairConfig(FULL_BIP)
    h = assemble_host(cfg)
    assert (h.n, h.edge_count) == (12, 46)
    cfg = PairConfig(0, _fs("vab"), _fs("vab"))
    h = assemble_host(cfg)
    assert (h.n, h.edge_count) == (18, 16)
    # pendants anchored in label order: l_i first, then l_j
    cfg = PairConfig(0, _fs("va"), _fs("u"))
    assert cfg.pendant_anchors() == (1, 2, 6)


def test_config_validation():
    with pytest.raises(ConfigError):
        PairConfig(0, _fs("ua"))
    with pytest.raises(ConfigError):
        PairConfig(0, _fs("c"))
    with pytest.raises(ConfigError):
        PairConfig(1 << 36)


def test_is_extendable_examples():
    assert not is_extendable(PairConfig(0, _fs("u")))
    assert is_extendable(PairConfig(FULL_BIP, _fs("u")))
    f1 = bip_from_pairs([("c", "a"), ("d", "d"), ("b", "d"), ("a", "u"), ("v", "b")])
    assert is_extendable(PairConfig(f1, _fs("u")))


def test_extendable_monotone_in_cross_edges():
    # 10,000 nested mask pairs; extendability may never be lost by adding
    # cross edges.  Uses the fast exact route (agreement with the solver
    # route is covered separately).
    rng = np.random.default_rng(50)
    classes = [cls for spec in LEMMAS.values() for cls in spec.classes]
    positives = 0
    for _ in range(10_000):
        l_i, l_j = classes[int(rng.integers(len(classes)))]
        k = int(rng.integers(4, 31))
        cols = rng.choice(36, size=k, replace=False)
        small = int(sum(1 << int(b) for b in cols))
        big = small | int(rng.integers(0, FULL_BIP + 1))
        if extendable_exact(l_i, l_j, small) is not None:
            assert extendable_exact(l_i, l_j, big) is not None
            positives += 1
    assert positives >= 2000


def test_routes_agree_with_naive_oracle():
    # the exhaustive-enumerator comparison is feasible on the 13-vertex
    # hosts (single-designation classes); HTILING_DEEP=1 runs the full
    # thousand-config sweep
    import os

    rng = np.random.default_rng(51)
    fams = [pattern_k2(), pattern_h(), pattern_hhat()]
    classes = [cls for cls in LEMMAS["L51"].classes]
    n_cfg = 1000 if os.environ.get("HTILING_DEEP") else 150
    for _ in range(n_cfg):
        l_i, l_j = classes[int(rng.integers(len(classes)))]
        nbits = int(rng.integers(0, 37))
        cols = rng.choice(36, size=nbits, replace=False)
        mask = int(sum(1 << int(b) for b in cols))
        cfg = PairConfig(mask, l_i, l_j)
        host = assemble_host(cfg)
        assert host.n == 13
        naive = max_cover_naive(fams, host)
        fast = extendable_exact(l_i, l_j, mask) is not None
        assert fast == (naive >= 13)
        assert is_extendable(cfg) == (naive >= 13)


def test_extendable_exact_witness_validates():
    rng = np.random.default_rng(52)
    for _ in range(50):
        mask = int(rng.integers(0, FULL_BIP + 1)) | int(rng.integers(0, FULL_BIP + 1))
        cover = extendable_exact(_fs("u"), _fs(""), mask)
        if cover is not None:
            covered = sum({"K2": 2, "H": 6, "Hhat": 7}[name] for name, _ in cover)
            assert covered >= 13


def test_verify_lemma_small_sampled_all_pass():
    for lid, spec in LEMMAS.items():
        rep = verify_lemma(lid, mode="sampled", count=2000, seed=42)
        assert rep.passed, (lid, rep.counterexamples[:3])
        assert rep.checked == 2000 * len(spec.classes)
        assert rep.seed == 42 and rep.rng == "pcg64"


def test_verify_lemma_deterministic_reports():
    a = verify_lemma("L53", mode="sampled", count=1500, seed=7)
    b = verify_lemma("L53", mode="sampled", count=1500, seed=7)
    da, db = a.to_doc(), b.to_doc()
    da.pop("elapsed_ms"), db.pop("elapsed_ms")
    assert json.dumps(da, sort_keys=True) == json.dumps(db, sort_keys=True)


def test_verify_lemma_mode_guard():
    with pytest.raises(ConfigError):
        verify_lemma("L52", mode="exhaustive")
    with pytest.raises(ConfigError):
        verify_lemma("L99")
    assert EXHAUSTIVE_OK == ("L51",)


def test_boundary_edge_counts():
    assert [LEMMAS[k].bound for k in ("L51", "L52", "L53", "L54", "L55")] == [30, 24, 24, 21, 18]
    # L51 boundary: all masks with 31 edges, i.e. C(36,31) per class
    from math import comb

    assert comb(36, LEMMAS["L51"].boundary_edges) == 376_992


def test_bip_hex_round_trip():
    cfg = PairConfig(0x123456789, _fs("u"))
    assert cfg.bip_hex() == "123456789"
    assert int(cfg.bip_hex(), 16) == cfg.bip
    assert PairConfig(5).bip_hex() == "000000005"


def test_tightness_probe():
    found = tightness_probe("L51", budget=60, seed=3)
    if found is not None:
        assert found.cross_edge_count == LEMMAS["L51"].bound
        assert extendable_exact(found.l_i, found.l_j, found.bip) is None
    assert tightness_probe("L52", budget=0) is None
