"""Exact rational linear programming: Phase-I simplex with Bland's rule.

Only feasibility of equality systems {Ax = b, x >= 0} is needed here (it
decides convex-combination membership).  The tableau runs entirely over
Fraction; Bland's smallest-index rule guarantees termination.  On an
infeasible system the final multipliers give a Farkas functional y with
y.b > 0 and y.A <= 0, which is verified before being returned so the
caller gets a self-checking witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence


@dataclass
class FeasibilityResult:
    feasible: bool
    # A feasible nonnegative solution when feasible.
    solution: Optional[list[Fraction]]
    # A verified Farkas certificate (y.A <= 0, y.b > 0) when infeasible.
    farkas: Optional[list[Fraction]]


def solve_equality_feasibility(matrix: Sequence[Sequence[Fraction]],
                               rhs: Sequence[Fraction]) -> FeasibilityResult:
    """Decide whether Ax = b has a solution with x >= 0."""
    m = len(matrix)
    if m == 0:
        return FeasibilityResult(True, [], None)
    n = len(matrix[0])
    rows = [[Fraction(x) for x in row] for row in matrix]
    b = [Fraction(x) for x in rhs]
    if any(len(row) != n for row in rows) or len(b) != m:
        raise ValueError("inconsistent system shape")

    # Normalize to b >= 0 so the artificial basis is feasible; remember
    # the flips to recover multipliers for the original rows.
    flipped = []
    for i in range(m):
        if b[i] < 0:
            rows[i] = [-x for x in rows[i]]
            b[i] = -b[i]
            flipped.append(True)
        else:
            flipped.append(False)

    # Tableau columns: n structural, then m artificial, then rhs.
    # Phase-I objective: minimize the sum of artificials.
    tableau = [rows[i] + [Fraction(1) if j == i else Fraction(0)
                          for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]

    # Objective row holds reduced costs z_j - c_j for minimization via
    # maximizing -sum(artificials): start from cost row = sum of rows.
    cost = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n + m + 1):
            cost[j] += tableau[i][j]
    for i in range(m):
        cost[n + i] -= Fraction(1)  # artificial columns carry cost 1

    def pivot(row: int, col: int) -> None:
        p = tableau[row][col]
        tableau[row] = [x / p for x in tableau[row]]
        for i in range(m):
            if i != row and tableau[i][col] != 0:
                f = tableau[i][col]
                tableau[i] = [x - f * y
                              for x, y in zip(tableau[i], tableau[row])]
        f = cost[col]
        if f != 0:
            for j in range(n + m + 1):
                cost[j] -= f * tableau[row][j]
        basis[row] = col

    while True:
        # Bland: entering column is the smallest index with positive
        # reduced cost (we are driving the artificial sum down to 0).
        entering = None
        for j in range(n + m):
            if cost[j] > 0:
                entering = j
                break
        if entering is None:
            break
        # Bland: among minimum-ratio rows pick the one whose basic
        # variable has the smallest index.
        best = None
        for i in range(m):
            coeff = tableau[i][entering]
            if coeff > 0:
                ratio = tableau[i][-1] / coeff
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise RuntimeError("phase-I objective is bounded by construction")
        pivot(best[1], entering)

    infeasibility = sum(tableau[i][-1] for i in range(m)
                        if basis[i] >= n)
    if infeasibility == 0:
        solution = [Fraction(0)] * n
        for i, var in enumerate(basis):
            if var < n:
                solution[var] = tableau[i][-1]
        return FeasibilityResult(True, solution, None)

    # Multipliers: at optimality, y_i = (reduced cost of artificial i) + 1;
    # after the sign flips y certifies y.A <= 0 and y.b > 0 for the
    # original system.
    y = [cost[n + i] + 1 for i in range(m)]
    y = [-v if flip else v for v, flip in zip(y, flipped)]
    _verify_farkas(matrix, rhs, y)
    return FeasibilityResult(False, None, y)


def _verify_farkas(matrix, rhs, y) -> None:
    dot_b = sum(f * x for f, x in zip(y, rhs))
    if dot_b <= 0:
        raise AssertionError("Farkas witness failed: y.b <= 0")
    n = len(matrix[0])
    for j in range(n):
        col = sum(y[i] * matrix[i][j] for i in range(len(matrix)))
        if col > 0:
            raise AssertionError("Farkas witness failed: y.A has a positive entry")


def convex_combination_weights(points: Sequence[Sequence[Fraction]],
                               target: Sequence[Fraction]) -> FeasibilityResult:
    """Is target a convex combination of the given points?

    Solves sum_j w_j * points[j] = target, sum_j w_j = 1, w >= 0.  The
    returned solution holds the weights; the Farkas functional, when
    infeasible, is a separating affine functional.
    """
    dim = len(target)
    if any(len(p) != dim for p in points):
        raise ValueError("point dimension mismatch")
    matrix = [[Fraction(p[i]) for p in points] for i in range(dim)]
    matrix.append([Fraction(1)] * len(points))
    rhs = [Fraction(x) for x in target] + [Fraction(1)]
    return solve_equality_feasibility(matrix, rhs)
