"""Constructions: closed forms, exact matching numbers, refutation demo."""

from fractions import Fraction

import numpy as np
import pytest

from htiling.constructions import (
    BIPARTITE_LOWER,
    GNIB,
    ConstructionDomainError,
    ConstructionSpec,
    bipartite_lower_spec,
    build_construction,
    construction_edge_count,
    gnib_spec,
    refutation_demo,
    verify_construction_matching,
    xi,
    xi_blowup,
)
from htiling.patterns import pattern_h
from htiling.tiling import max_tiling


def test_xi_values_and_continuity():
    assert xi(0) == 0
    assert xi(Fraction(1, 9)) == Fraction(2, 9)
    assert xi(Fraction(1, 6)) == Fraction(1, 2)
    assert 3 * Fraction(1, 9) * (1 - 3 * Fraction(1, 9)) == 18 * Fraction(1, 9) ** 2
    with pytest.raises(ConstructionDomainError):
        xi(Fraction(1, 5))
    with pytest.raises(ConstructionDomainError):
        xi(Fraction(-1, 10))


def test_xi_blowup():
    for k in range(0, 31):
        b = Fraction(k, 180)
        assert xi_blowup(1, b) == xi(b)
    assert xi_blowup(2, Fraction(1, 12)) == Fraction(1, 2)
    assert xi_blowup(3, 0) == 0
    with pytest.raises(ConstructionDomainError):
        xi_blowup(2, Fraction(1, 10))


def test_spec_validation():
    with pytest.raises(ConstructionDomainError):
        ConstructionSpec("nonsense", 10, Fraction(1, 10))
    with pytest.raises(ConstructionDomainError):
        gnib_spec(10, Fraction(1, 10), i=3)  # i out of range for r = 2
    with pytest.raises(ConstructionDomainError):
        bipartite_lower_spec(10, Fraction(1, 2))  # beta outside (0, 1/6)
    with pytest.raises(ConstructionDomainError):
        bipartite_lower_spec(2, Fraction(1, 100))  # planted part negative


def test_build_examples():
    g = build_construction(bipartite_lower_spec(18, Fraction(1, 9)))
    assert g.n == 18 and g.edge_count == 65  # parts (5, 13)
    g = build_construction(gnib_spec(24, Fraction(1, 8), i=2))
    assert g.edge_count == 136  # clique on 17 vertices
    assert all(g.degree(v) == 0 for v in range(17, 24))
    g = build_construction(gnib_spec(20, Fraction(1, 10), i=1))
    assert g.edge_count == 190 - 105  # all pairs minus pairs avoiding V1


def test_edge_counts_match_closed_form():
    rng = np.random.default_rng(40)
    for _ in range(60):
        n = int(rng.integers(4, 201))
        kind = rng.choice([BIPARTITE_LOWER, GNIB])
        den = int(rng.integers(7, 40))
        num = int(rng.integers(1, den // 6 + 1))
        beta = Fraction(num, den)
        if beta >= Fraction(1, 6):
            continue
        try:
            if kind == BIPARTITE_LOWER:
                spec = bipartite_lower_spec(n, beta)
            else:
                spec = gnib_spec(n, beta, i=int(rng.integers(1, 3)))
        except ConstructionDomainError:
            continue
        g = build_construction(spec)
        assert g.edge_count == construction_edge_count(spec)


def test_edge_count_special_cases():
    spec = gnib_spec(20, Fraction(1, 10), i=1)
    assert spec.part_size() == 5
    assert construction_edge_count(spec) == 85
    spec = gnib_spec(24, Fraction(1, 8), i=2)
    assert construction_edge_count(spec) == 136  # i = r: pairs inside V1
    tiny = gnib_spec(30, Fraction(1, 80), i=1)
    assert tiny.part_size() == 0 and construction_edge_count(tiny) == 0


def test_bipartite_matching_formula():
    # every H-copy in a complete bipartite graph uses three vertices per
    # side, so the matching number is floor(small side / 3)
    h = pattern_h()
    rng = np.random.default_rng(41)
    betas = [Fraction(1, 12), Fraction(1, 10), Fraction(1, 9), Fraction(1, 8), Fraction(1, 7)]
    for n in range(8, 37, 4):
        for beta in betas:
            try:
                spec = bipartite_lower_spec(n, beta)
            except ConstructionDomainError:
                continue
            a = spec.part_size()
            if a < 1 or n - a < a:
                continue
            res = max_tiling(h, build_construction(spec))
            assert res.exact and res.count == a // 3, (n, beta)


def test_density_link_to_xi():
    # built-construction densities never exceed the envelope (up to the
    # finite-size floor slack of 3/n)
    for n in (60, 120, 180):
        for k in range(1, 30):
            beta = Fraction(k, 180)
            for spec_fn in (
                lambda: bipartite_lower_spec(n, beta),
                lambda: gnib_spec(n, beta, i=2),
            ):
                try:
                    spec = spec_fn()
                except ConstructionDomainError:
                    continue
                dens = Fraction(construction_edge_count(spec), n * n)
                assert xi(beta) + Fraction(3, n) >= dens


def test_verify_construction_examples():
    v = verify_construction_matching(bipartite_lower_spec(18, Fraction(1, 9)))
    assert (v.nu, v.beta_n, v.holds) == (1, Fraction(2), True)
    v = verify_construction_matching(gnib_spec(20, Fraction(1, 10), i=1))
    assert (v.nu, v.beta_n, v.holds) == (2, Fraction(2), False)
    v = verify_construction_matching(gnib_spec(24, Fraction(1, 8), i=2))
    assert (v.nu, v.beta_n, v.holds) == (2, Fraction(3), True)


def test_refutation_demo_shape():
    out = refutation_demo()
    assert [r["holds"] for r in out] == [True, True, False]
    assert all(r["as_expected"] for r in out)
    assert all(r["schema_version"] == 1 for r in out)
