"""Cross ratio and the Hilbert metric on rational polytopes.

The cross ratio of four collinear projective points is computed through
2x2 determinants in a coordinate pair that embeds their common line, so
points at infinity need no special casing.  The Hilbert metric between
interior points of a polytope is returned as the exact rational argument
R of the distance (1/2) log R; taking the log is left to callers that
want floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import Matrix
from .rationals import format_rational, parse_rational


def cross_ratio(p1, p2, p3, p4) -> Fraction:
    """Cross ratio [p1,p2; p3,p4] of four collinear projective points.

    With affine parameters t_i on the common line this is
    ((t3-t1)(t4-t2)) / ((t3-t2)(t4-t1)).  Points are given as homogeneous
    coordinate sequences (ProjPoint.coords works); they must be pairwise
    distinct and collinear.
    """
    lifts = [_as_tuple(p) for p in (p1, p2, p3, p4)]
    if len({len(v) for v in lifts}) != 1:
        raise ValueError("points live in different dimensions")
    stack = Matrix(lifts)
    if stack.rank() != 2:
        raise ValueError("cross ratio needs four collinear points "
                         "spanning a line")
    _, pivots = stack.rref()
    c1, c2 = pivots[0], pivots[1]
    plane = [(v[c1], v[c2]) for v in lifts]

    def d(i: int, j: int) -> Fraction:
        (x1, y1), (x2, y2) = plane[i], plane[j]
        return x1 * y2 - x2 * y1

    if d(0, 1) == 0 or d(0, 2) == 0 or d(0, 3) == 0 or d(1, 2) == 0 \
            or d(1, 3) == 0 or d(2, 3) == 0:
        raise ValueError("cross ratio needs pairwise distinct points")
    return (d(0, 2) * d(1, 3)) / (d(1, 2) * d(0, 3))


def _as_tuple(p) -> tuple[Fraction, ...]:
    coords = getattr(p, "coords", p)
    return tuple(Fraction(x) for x in coords)


@dataclass(frozen=True)
class Halfspace:
    """The affine constraint coeffs . z <= bound."""
    coeffs: tuple[Fraction, ...]
    bound: Fraction

    @staticmethod
    def of(coeffs, bound) -> "Halfspace":
        return Halfspace(tuple(Fraction(x) for x in coeffs), Fraction(bound))

    def value(self, point: Sequence[Fraction]) -> Fraction:
        return sum(c * Fraction(x) for c, x in zip(self.coeffs, point))

    def strictly_inside(self, point: Sequence[Fraction]) -> bool:
        return self.value(point) < self.bound

    def to_text(self) -> str:
        cells = [format_rational(c) for c in self.coeffs]
        return "\t".join(cells + [format_rational(self.bound)])

    @staticmethod
    def from_text(line: str) -> "Halfspace":
        cells = [parse_rational(c) for c in line.split()]
        if len(cells) < 2:
            raise ValueError("halfspace line needs coefficients and a bound")
        return Halfspace(tuple(cells[:-1]), cells[-1])


def load_polytope(text: str) -> list[Halfspace]:
    """One halfspace per line: n coefficients then the bound."""
    faces = [Halfspace.from_text(line) for line in text.splitlines()
             if line.strip() and not line.lstrip().startswith("#")]
    if not faces:
        raise ValueError("polytope file is empty")
    if len({len(f.coeffs) for f in faces}) != 1:
        raise ValueError("halfspaces have inconsistent dimensions")
    return faces


def box(lows: Sequence[Fraction], highs: Sequence[Fraction]) -> list[Halfspace]:
    """Axis-aligned box as a halfspace list."""
    faces = []
    for i, (lo, hi) in enumerate(zip(lows, highs)):
        if not lo < hi:
            raise ValueError("box needs lo < hi in every axis")
        e = [Fraction(0)] * len(lows)
        e[i] = Fraction(1)
        faces.append(Halfspace.of(e, hi))
        faces.append(Halfspace.of([-x for x in e], -Fraction(lo)))
    return faces


def hilbert_log_argument(polytope: Sequence[Halfspace],
                         x: Sequence[Fraction],
                         y: Sequence[Fraction]) -> Fraction:
    """Exact R >= 1 with Hilbert distance (1/2) log R.

    The chord through interior points x, y meets the boundary in u (on
    the x side) and v (on the y side); R is the cross ratio
    (|uy| |xv|) / (|ux| |yv|) in the chord's affine parameter.
    """
    x = [Fraction(v) for v in x]
    y = [Fraction(v) for v in y]
    for face in polytope:
        if not face.strictly_inside(x):
            raise ValueError("x is not interior to the polytope")
        if not face.strictly_inside(y):
            raise ValueError("y is not interior to the polytope")
    if x == y:
        return Fraction(1)

    direction = [b - a for a, b in zip(x, y)]
    # Parameterize z(s) = x + s * direction; x at s=0, y at s=1.  Each
    # face bounds s on one side unless the chord is parallel to it.
    s_low = None
    s_high = None
    for face in polytope:
        rate = sum(c * d for c, d in zip(face.coeffs, direction))
        if rate == 0:
            continue
        limit = (face.bound - face.value(x)) / rate
        if rate > 0:
            s_high = limit if s_high is None else min(s_high, limit)
        else:
            s_low = limit if s_low is None else max(s_low, limit)
    if s_low is None or s_high is None:
        raise ValueError("polytope is unbounded along the chord")
    # Interior points force s_low < 0 < 1 < s_high.
    return ((1 - s_low) * s_high) / ((-s_low) * (s_high - 1))


def hilbert_boundary_points(polytope, x, y):
    """The chord endpoints (u, v) used by hilbert_log_argument."""
    x = [Fraction(v) for v in x]
    y = [Fraction(v) for v in y]
    if x == y:
        raise ValueError("equal points have no chord")
    direction = [b - a for a, b in zip(x, y)]
    s_low = None
    s_high = None
    for face in polytope:
        rate = sum(c * d for c, d in zip(face.coeffs, direction))
        if rate == 0:
            continue
        limit = (face.bound - face.value(x)) / rate
        if rate > 0:
            s_high = limit if s_high is None else min(s_high, limit)
        else:
            s_low = limit if s_low is None else max(s_low, limit)
    if s_low is None or s_high is None:
        raise ValueError("polytope is unbounded along the chord")
    u = [a + s_low * d for a, d in zip(x, direction)]
    v = [a + s_high * d for a, d in zip(x, direction)]
    return u, v
