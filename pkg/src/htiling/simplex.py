"""Exact maximization of the tiling-density quadratic over a simplex.

The objective, for a parameter alpha, is

    Psi_alpha(y0, y1, y2, y3) = 18 y0^2 + 12 y1^2 + 12 y2^2 + 9 y3^2
        + 30 y0 y1 + 24 y0 y2 + 24 y0 y3 + 24 y1 y2 + 24 y1 y3 + 21 y2 y3
        + (y1 + 2 y2 + 3 y3) (1 - 6 alpha)

maximized over the simplex  Delta_alpha = { y >= 0, y0+y1+y2+y3 <= alpha }.

A maximum of a quadratic over a polytope is a stationary point of the
objective restricted to the minimal face containing it, so enumerating every
active-constraint subset (five constraints: the four sign constraints and
the budget) and solving the stationarity system on each face in exact
rational arithmetic produces a complete candidate set.  Vertices of the
polytope come out as the zero-dimensional faces.  Everything is done with
``fractions.Fraction``: the headline equality this supports is an exact
rational identity, not a numeric approximation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

RationalLike = Fraction | int | str


def as_fraction(x: RationalLike) -> Fraction:
    """Coerce ints, 'p/q' strings and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


# symmetric matrix of the quadratic part: Psi_quad(y) = y' Q y
_Q = (
    (Fraction(18), Fraction(15), Fraction(12), Fraction(12)),
    (Fraction(15), Fraction(12), Fraction(12), Fraction(12)),
    (Fraction(12), Fraction(12), Fraction(12), Fraction(21, 2)),
    (Fraction(12), Fraction(12), Fraction(21, 2), Fraction(9)),
)
# linear part is (b . y) * (1 - 6 alpha)
_B = (Fraction(0), Fraction(1), Fraction(2), Fraction(3))


class SimplexDomainError(ValueError):
    """Point outside the simplex or alpha outside its admissible range."""


@dataclass(frozen=True)
class SimplexPoint:
    y: tuple[Fraction, Fraction, Fraction, Fraction]
    alpha: Fraction

    def __post_init__(self) -> None:
        if any(v < 0 for v in self.y):
            raise SimplexDomainError(f"negative coordinate in {self.y}")
        if sum(self.y) > self.alpha:
            raise SimplexDomainError(f"coordinates of {self.y} exceed budget {self.alpha}")


def simplex_point(y: Sequence[RationalLike], alpha: RationalLike) -> SimplexPoint:
    vals = tuple(as_fraction(v) for v in y)
    if len(vals) != 4:
        raise SimplexDomainError("expected exactly four coordinates")
    return SimplexPoint(vals, as_fraction(alpha))


def quadratic_part(y: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for i in range(4):
        for j in range(4):
            total += _Q[i][j] * y[i] * y[j]
    return total


def linear_part(y: Sequence[Fraction], alpha: Fraction) -> Fraction:
    return sum(_B[i] * y[i] for i in range(4)) * (1 - 6 * alpha)


def psi(alpha: RationalLike, point: SimplexPoint | Sequence[RationalLike]) -> Fraction:
    """Exact value of the objective at a feasible point."""
    a = as_fraction(alpha)
    if not isinstance(point, SimplexPoint):
        point = simplex_point(point, a)
    if point.alpha != a:
        raise SimplexDomainError("point was validated against a different alpha")
    return quadratic_part(point.y) + linear_part(point.y, a)


def _psi_raw(y: Sequence[Fraction], alpha: Fraction) -> Fraction:
    return quadratic_part(y) + linear_part(y, alpha)


def _solve_linear(rows: list[list[Fraction]]) -> Optional[list[Fraction]]:
    """One solution of an augmented rational system, or None if inconsistent.

    Gaussian elimination over Fraction; free variables are set to zero, which
    is enough here: the objective is constant on the stationary set of its
    restriction to any affine face.
    """
    if not rows:
        return []
    m = [row[:] for row in rows]
    nvar = len(m[0]) - 1
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(nvar):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append((r, c))
        r += 1
        if r == len(m):
            break
    for i in range(r, len(m)):
        if all(x == 0 for x in m[i][:nvar]) and m[i][nvar] != 0:
            return None
    sol = [Fraction(0)] * nvar
    for row, col in pivots:
        sol[col] = m[row][nvar]
    return sol


def _face_candidates(alpha: Fraction) -> Iterable[tuple[Fraction, ...]]:
    """Stationary points of the objective restricted to each face.

    Constraint indices 0..3 force y_i = 0; index 4 forces sum(y) = alpha.
    Stationarity on a face with budget active is the Lagrange system
    grad Psi = lambda * 1 on the free coordinates.
    """
    for active in itertools.chain.from_iterable(
        itertools.combinations(range(5), k) for k in range(6)
    ):
        zeros = set(a for a in active if a < 4)
        budget = 4 in active
        free = [i for i in range(4) if i not in zeros]
        if not free:
            if not budget or alpha == 0:
                yield (Fraction(0),) * 4
            continue
        # d/dy_i of y'Qy + (1-6a) b.y  =  2 (Q y)_i + (1-6a) b_i
        rows: list[list[Fraction]] = []
        nvar = len(free) + (1 if budget else 0)
        for i in free:
            row = [Fraction(0)] * (nvar + 1)
            for jpos, j in enumerate(free):
                row[jpos] = 2 * _Q[i][j]
            if budget:
                row[len(free)] = Fraction(-1)  # -lambda
            row[nvar] = -(1 - 6 * alpha) * _B[i]
            rows.append(row)
        if budget:
            row = [Fraction(0)] * (nvar + 1)
            for jpos in range(len(free)):
                row[jpos] = Fraction(1)
            row[nvar] = alpha
            rows.append(row)
        sol = _solve_linear(rows)
        if sol is None:
            continue
        y = [Fraction(0)] * 4
        for jpos, j in enumerate(free):
            y[j] = sol[jpos]
        yield tuple(y)


def psi_star(alpha: RationalLike) -> tuple[Fraction, SimplexPoint]:
    """Exact maximum of the objective over the simplex, with a maximizer.

    Valid for alpha in [0, 1/6].
    """
    a = as_fraction(alpha)
    if not Fraction(0) <= a <= Fraction(1, 6):
        raise SimplexDomainError(f"alpha {a} outside [0, 1/6]")
    best_val: Optional[Fraction] = None
    best_y: Optional[tuple[Fraction, ...]] = None
    candidates = list(_face_candidates(a))
    candidates.append((Fraction(0),) * 4)
    for i in range(4):
        vertex = [Fraction(0)] * 4
        vertex[i] = a
        candidates.append(tuple(vertex))
    for y in candidates:
        if any(v < 0 for v in y) or sum(y) > a:
            continue
        val = _psi_raw(y, a)
        if best_val is None or val > best_val or (val == best_val and y < best_y):
            best_val, best_y = val, y
    assert best_val is not None and best_y is not None
    return best_val, SimplexPoint(best_y, a)


def psi_star_grid(alpha: RationalLike, steps: int) -> Fraction:
    """Lattice-search lower bound for the simplex maximum.

    Evaluates the objective on every point y = k * alpha / steps with
    k0+k1+k2+k3 <= steps.  Serves as an independent oracle for
    :func:`psi_star`.
    """
    a = as_fraction(alpha)
    if steps < 1:
        raise SimplexDomainError("steps must be >= 1")
    if a == 0:
        return Fraction(0)
    unit = a / steps
    best = Fraction(0)
    for k0 in range(steps + 1):
        for k1 in range(steps + 1 - k0):
            for k2 in range(steps + 1 - k0 - k1):
                for k3 in range(steps + 1 - k0 - k1 - k2):
                    y = (k0 * unit, k1 * unit, k2 * unit, k3 * unit)
                    val = _psi_raw(y, a)
                    if val > best:
                        best = val
    return best


def aggregate_edge_bound(point: SimplexPoint, n: int) -> Fraction:
    """Right-hand side of the aggregated pairwise edge bound at block scale n.

    Quadratic part of the objective plus the finite-size correction
    (3 y1 + 3 y2 + 6 y3) / n, as an exact rational.
    """
    if n < 1:
        raise SimplexDomainError("n must be a positive integer")
    y = point.y
    return quadratic_part(y) + Fraction(3) * (y[1] + y[2] + 2 * y[3]) / n


def aggregate_psi_gap(point: SimplexPoint, n: int, alpha: RationalLike) -> tuple[Fraction, Fraction]:
    """(gap, slack) for the aggregation-vs-objective comparison.

    gap = aggregate bound + linear term - Psi, which equals the correction
    (3 y1 + 3 y2 + 6 y3)/n identically; slack = 6 (y1 + y2 + 2 y3)/n - gap,
    nonnegative for every feasible point.
    """
    a = as_fraction(alpha)
    y = point.y
    gap = aggregate_edge_bound(point, n) + linear_part(y, a) - _psi_raw(y, a)
    slack = Fraction(6) * (y[1] + y[2] + 2 * y[3]) / n - gap
    return gap, slack
