"""Exact simplex maximization: values, oracle bounds, argmax structure."""

from fractions import Fraction

import pytest

from htiling.constructions import xi
from htiling.simplex import (
    SimplexDomainError,
    aggregate_edge_bound,
    aggregate_psi_gap,
    psi,
    psi_star,
    psi_star_grid,
    simplex_point,
)


def test_psi_values():
    a = Fraction(1, 9)
    assert psi(a, simplex_point([0, 0, 0, 0], a)) == 0
    assert psi(a, simplex_point([a, 0, 0, 0], a)) == Fraction(2, 9)
    a = Fraction(1, 12)
    assert psi(a, simplex_point([0, 0, 0, a], a)) == Fraction(3, 16)


def test_psi_rejects_infeasible():
    with pytest.raises(SimplexDomainError):
        simplex_point([Fraction(1, 2), 0, 0, 0], Fraction(1, 10))
    with pytest.raises(SimplexDomainError):
        simplex_point([-1, 0, 0, 1], Fraction(1, 6))


def test_psi_star_edge_cases():
    val, arg = psi_star(0)
    assert val == 0 and all(v == 0 for v in arg.y)
    assert psi_star(Fraction(1, 9))[0] == Fraction(2, 9)
    val, arg = psi_star(Fraction(1, 10))
    assert val == Fraction(21, 100)
    assert arg.y == (0, 0, 0, Fraction(1, 10))
    with pytest.raises(SimplexDomainError):
        psi_star(Fraction(1, 5))


def test_psi_star_equals_xi_on_grid():
    for k in range(0, 31):
        a = Fraction(k, 180)
        val, arg = psi_star(a)
        assert val == xi(a)
        assert psi(a, arg) == val  # witness attains the maximum exactly


def test_argmax_structure():
    # below the kink a budget-saturating point in the last coordinate is
    # optimal; above it, one in the first coordinate
    for a in (Fraction(1, 20), Fraction(1, 12), Fraction(1, 10)):
        assert psi(a, simplex_point([0, 0, 0, a], a)) == xi(a)
    for a in (Fraction(1, 8), Fraction(3, 20), Fraction(1, 6)):
        assert psi(a, simplex_point([a, 0, 0, 0], a)) == xi(a)


def test_grid_oracle_bounds_from_below():
    for a in (Fraction(1, 10), Fraction(1, 9), Fraction(3, 20)):
        star = psi_star(a)[0]
        prev = None
        for steps in (5, 10, 20, 40):
            g = psi_star_grid(a, steps)
            assert g <= star
            if steps in (20, 40):
                assert star - g <= Fraction(5, 1000)
            if prev is not None and steps % prev[0] == 0:
                assert g >= prev[1]  # refining a divisor lattice only helps
            prev = (steps, g)
    assert psi_star_grid(0, 7) == 0
    assert psi_star_grid(Fraction(1, 10), 1) == Fraction(21, 100)  # vertex hit


def test_aggregate_edge_bound():
    y0 = Fraction(1, 10)
    p = simplex_point([y0, 0, 0, 0], Fraction(1, 6))
    assert aggregate_edge_bound(p, 50) == 18 * y0 * y0
    p = simplex_point([0, 0, 0, 0], Fraction(1, 6))
    assert aggregate_edge_bound(p, 10) == 0
    p = simplex_point([0, Fraction(1, 10), 0, 0], Fraction(1, 6))
    assert aggregate_edge_bound(p, 100) == Fraction(123, 1000)


def test_aggregate_gap_identity():
    import numpy as np

    rng = np.random.default_rng(30)
    for _ in range(50):
        alpha = Fraction(int(rng.integers(1, 31)), 180)
        parts = sorted(rng.integers(0, 13, size=3))
        ks = [parts[0], parts[1] - parts[0], parts[2] - parts[1], 12 - parts[2]]
        y = [alpha * k / 12 for k in ks]
        n = int(rng.integers(1, 500))
        p = simplex_point(y, alpha)
        gap, slack = aggregate_psi_gap(p, n, alpha)
        assert gap == 3 * (y[1] + y[2] + 2 * y[3]) / n
        assert slack >= 0
