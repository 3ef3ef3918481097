"""Cross ratio and Hilbert metric: exact values and metric axioms."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heiscert.convexity import orbit_lift
from heiscert.heis import HeisElement, get_representation
from heiscert.metric import (Halfspace, box, cross_ratio,
                             hilbert_boundary_points, hilbert_log_argument,
                             load_polytope)
from heiscert.sampler import RandomStream

THETA = get_representation("theta")


def line_point(t: Fraction) -> tuple:
    return (Fraction(1), Fraction(t))


def test_cross_ratio_of_equally_spaced_points():
    pts = [line_point(t) for t in (0, 1, 2, 3)]
    assert cross_ratio(*pts) == Fraction(4, 3)


def test_harmonic_quadruple():
    pts = [(1, Fraction(0)), (0, Fraction(1)), (1, Fraction(1)),
           (1, Fraction(-1))]
    assert cross_ratio(*pts) == -1


def test_cross_ratio_rejects_non_collinear():
    pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]
    with pytest.raises(ValueError):
        cross_ratio(*pts)


def test_cross_ratio_rejects_coincident():
    pts = [line_point(0), line_point(0), line_point(1), line_point(2)]
    with pytest.raises(ValueError):
        cross_ratio(*pts)


def test_cross_ratio_invariant_under_group_matrices():
    p = orbit_lift(HeisElement.identity())
    q = orbit_lift(HeisElement.of(1, 1, 1))
    points = [[x + Fraction(t) * y for x, y in zip(p, q)]
              for t in (0, 1, 2, 3)]
    base = cross_ratio(*points)
    stream = RandomStream(31).split("cross-ratio")
    for _ in range(25):
        mat = THETA(HeisElement.of(*stream.next_triple()))
        assert cross_ratio(*(mat.apply(v) for v in points)) == base


def test_interval_log_argument():
    interval = box([Fraction(-1)], [Fraction(1)])
    assert hilbert_log_argument(interval, [Fraction(0)],
                                [Fraction(1, 2)]) == 3


def test_equal_points_give_unit_ratio():
    interval = box([Fraction(-1)], [Fraction(1)])
    assert hilbert_log_argument(interval, [Fraction(1, 3)],
                                [Fraction(1, 3)]) == 1


def test_boundary_points_and_consistency_with_cross_ratio():
    interval = box([Fraction(-1)], [Fraction(1)])
    x, y = [Fraction(0)], [Fraction(1, 2)]
    u, v = hilbert_boundary_points(interval, x, y)
    assert (u, v) == ([Fraction(-1)], [Fraction(1)])
    quad = [line_point(u[0]), line_point(v[0]), line_point(y[0]),
            line_point(x[0])]
    assert cross_ratio(*quad) == hilbert_log_argument(interval, x, y)


def test_exterior_point_rejected():
    interval = box([Fraction(-1)], [Fraction(1)])
    with pytest.raises(ValueError):
        hilbert_log_argument(interval, [Fraction(2)], [Fraction(0)])


def test_unbounded_chord_rejected():
    half = [Halfspace.of([1], 1)]
    with pytest.raises(ValueError):
        hilbert_log_argument(half, [Fraction(0)], [Fraction(1, 2)])


def test_polytope_file_parsing():
    faces = load_polytope("1\t1\n-1\t1\n")
    assert faces == [Halfspace.of([1], 1), Halfspace.of([-1], 1)]
    with pytest.raises(ValueError):
        load_polytope("")
    with pytest.raises(ValueError):
        load_polytope("1 2 3\n1 2\n")


inner = st.integers(min_value=1, max_value=9)
bounds = st.tuples(st.integers(min_value=-5, max_value=-1),
                   st.integers(min_value=1, max_value=5))


@st.composite
def box_with_points(draw):
    dim = draw(st.integers(min_value=1, max_value=3))
    lows, highs = [], []
    for _ in range(dim):
        lo, hi = draw(bounds)
        lows.append(Fraction(lo))
        highs.append(Fraction(hi))

    def interior():
        return [lo + Fraction(draw(inner), 10) * (hi - lo)
                for lo, hi in zip(lows, highs)]

    return box(lows, highs), interior(), interior(), interior()


@settings(max_examples=60)
@given(box_with_points())
def test_metric_axioms_on_random_boxes(instance):
    faces, x, y, z = instance
    r_xy = hilbert_log_argument(faces, x, y)
    assert r_xy >= 1
    assert (r_xy == 1) == (x == y)
    assert r_xy == hilbert_log_argument(faces, y, x)
    r_xz = hilbert_log_argument(faces, x, z)
    r_yz = hilbert_log_argument(faces, y, z)
    assert r_xz <= r_xy * r_yz
