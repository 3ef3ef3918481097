"""Orbit map, limit behaviour, hull dimension, convexity and extreme points."""

from fractions import Fraction

import pytest

from heiscert.convexity import (DEFAULT_RAY_TS, DEFAULT_RAYS, ORBIT_FORMULA,
                                OrbitSample, ProjPoint,
                                equivariance_certificate,
                                extreme_point_certificate,
                                hull_dimension_certificate, lift_origin,
                                limit_point_certificate, nonneg_certificate,
                                orbit_lift, orbit_point,
                                proper_convexity_certificate, sample_orbit,
                                symbolic_equivariance_holds)
from heiscert.heis import DATA_DIR, ENTRY_RING, HeisElement, \
    get_representation, heis_mul
from heiscert.linalg import Matrix
from heiscert.poly import PolyRing
from heiscert.sampler import RandomStream

THETA = get_representation("theta")


def test_orbit_of_identity_is_origin():
    assert orbit_point(HeisElement.identity()) == ProjPoint(lift_origin())


def test_orbit_point_explicit_value():
    point = orbit_point(HeisElement.of(1, 1, 1))
    expected = ProjPoint([Fraction(13, 12), 1, 1, Fraction(1, 6),
                          Fraction(1, 2), 1, Fraction(1, 6), Fraction(1, 2),
                          1, 1])
    assert point == expected


def test_orbit_equals_matrix_column_sampled():
    stream = RandomStream(17).split("orbit-vs-matrix")
    for _ in range(100):
        g = HeisElement.of(*stream.next_triple())
        assert THETA(g).apply(lift_origin()) == orbit_lift(g)


def test_orbit_equals_matrix_column_symbolic():
    g = HeisElement.symbolic(ENTRY_RING)
    column = THETA(g).apply([ENTRY_RING.const(x) for x in lift_origin()])
    assert column == list(ORBIT_FORMULA) + [ENTRY_RING.one()]


def test_equivariance_identity_element():
    cert = equivariance_certificate(HeisElement.identity(),
                                    HeisElement.of(2, 3, 4))
    assert cert.verdict == "PASS"


def test_equivariance_generator_pair():
    cert = equivariance_certificate(HeisElement.of(1, 0, 0),
                                    HeisElement.of(0, 1, 0))
    assert cert.verdict == "PASS"
    assert cert.witnesses["target_parameter"] == [1, 1, 1]


def test_equivariance_symbolic():
    assert symbolic_equivariance_holds()


def test_projective_canonicalization():
    v = [Fraction(0), Fraction(3), Fraction(-6)]
    p = ProjPoint(v)
    assert p == ProjPoint([x * Fraction(-7, 5) for x in v])
    assert ProjPoint(p.coords) == p
    with pytest.raises(ValueError):
        ProjPoint([0, 0, 0])


# -- limit point ---------------------------------------------------------------

def test_shipped_rays_pass():
    cert = limit_point_certificate()
    assert cert.verdict == "PASS"
    for report in cert.witnesses["rays"]:
        ratios = report["ratios"]
        assert ratios[-1] < Fraction(1, 1000)
        assert all(r1 > r2 for r1, r2 in zip(ratios, ratios[1:]))


def test_ray_degrees_are_symbolic_witnesses():
    cert = limit_point_certificate()
    for report in cert.witnesses["rays"]:
        lead = report["leading_degree"]
        for d in report["other_degrees"]:
            assert d == "-inf" or d < lead


def test_constant_ray_rejected():
    ring = PolyRing("t")
    flat = (ring.const(1), ring.const(0), ring.const(0))
    with pytest.raises(ValueError):
        limit_point_certificate([flat], DEFAULT_RAY_TS)


def test_unsorted_t_values_rejected():
    with pytest.raises(ValueError):
        limit_point_certificate(DEFAULT_RAYS, [Fraction(10), Fraction(5)])


def test_slow_ray_fails_domination_bound():
    # x1 = t^4/24 vs x4 = t^3/6 leaves ratio 4/t = 1/250 at t = 1000,
    # which misses the 1/1000 bound: the scaling on shipped rays matters.
    ring = PolyRing("t")
    t = ring.var("t")
    slow = (t, ring.zero(), ring.zero())
    cert = limit_point_certificate([slow], DEFAULT_RAY_TS)
    assert cert.verdict == "FAIL"
    assert cert.witnesses["rays"][0]["ratios"][-1] == Fraction(1, 250)


# -- hull dimension -------------------------------------------------------------

def _frozen_sample(name: str) -> OrbitSample:
    return OrbitSample.from_csv((DATA_DIR / name).read_text(), seed="frozen")


def test_frozen_hull_sample_has_nonzero_determinant():
    cert = hull_dimension_certificate(_frozen_sample("hull_sample.csv"))
    assert cert.verdict == "PASS"
    assert cert.witnesses["determinant"] != 0


def test_repeated_point_matrix_is_singular():
    lift = orbit_lift(HeisElement.identity())
    assert Matrix([lift] * 10).det() == 0


def test_center_only_sample_is_degenerate():
    params = [(Fraction(0), Fraction(0), Fraction(k)) for k in range(1, 11)]
    cert = hull_dimension_certificate(OrbitSample(params))
    assert cert.verdict == "FAIL"
    assert cert.witnesses["determinant"] == 0


def test_fresh_seeded_samples_stay_nondegenerate():
    for seed in range(1, 21):
        cert = hull_dimension_certificate(sample_orbit(10, seed, "hull"))
        assert cert.verdict == "PASS"


def test_hull_dimension_invariant_under_group_images():
    sample = _frozen_sample("hull_sample.csv")
    stream = RandomStream(23).split("hull-invariance")
    for index in range(3):
        g = HeisElement.of(*stream.next_triple())
        params = list(sample.parameters)
        params[index] = tuple(
            heis_mul(g, HeisElement.of(*params[index])).components())
        moved = OrbitSample(params)
        assert hull_dimension_certificate(moved).verdict == "PASS"


def test_wrong_sample_size_rejected():
    with pytest.raises(ValueError):
        hull_dimension_certificate(sample_orbit(9, 0, "hull"))


# -- proper convexity ------------------------------------------------------------

def test_proper_convexity_certificate():
    cert = proper_convexity_certificate()
    assert cert.verdict == "PASS"
    assert cert.witnesses["halfspace"] == "x1 >= 0"


def test_mutated_first_coordinate_fails():
    a = ENTRY_RING.var("a")
    assert nonneg_certificate(a ** 3).verdict == "FAIL"


def test_first_coordinate_nonnegative_numerically():
    stream = RandomStream(29).split("convexity-spot")
    first = ORBIT_FORMULA[0]
    for _ in range(1000):
        a, b, c = stream.next_triple()
        assert first.eval({"a": a, "b": b, "c": c}) >= 0


# -- extreme points ---------------------------------------------------------------

def test_simplex_vertex_is_extreme():
    params = [(Fraction(k), Fraction(0), Fraction(0)) for k in range(11)]
    sample = OrbitSample(params)
    cert = extreme_point_certificate(sample, 0)
    assert cert.verdict == "PASS"
    assert "separating_functional" in cert.witnesses


def test_simplex_centroid_is_not_extreme():
    from heiscert.lp import convex_combination_weights
    vertices = [[Fraction(0), Fraction(0)], [Fraction(1), Fraction(0)],
                [Fraction(0), Fraction(1)]]
    centroid = [Fraction(1, 3), Fraction(1, 3)]
    result = convex_combination_weights(vertices, centroid)
    assert result.feasible
    assert result.solution == [Fraction(1, 3)] * 3


def test_all_shipped_points_are_extreme():
    sample = _frozen_sample("extreme_sample.csv")
    assert len(sample) == 20
    for index in range(len(sample)):
        assert extreme_point_certificate(sample, index).verdict == "PASS"


def test_too_small_sample_rejected():
    with pytest.raises(ValueError):
        extreme_point_certificate(sample_orbit(10, 0, "hull"), 0)


# -- orbit sample plumbing ---------------------------------------------------------

def test_sample_csv_round_trip():
    sample = sample_orbit(10, 0, "hull")
    again = OrbitSample.from_csv(sample.to_csv())
    assert again.parameters == sample.parameters


def test_sampling_is_deterministic():
    assert sample_orbit(10, 4, "hull").parameters == \
        sample_orbit(10, 4, "hull").parameters


def test_duplicate_parameters_rejected():
    with pytest.raises(ValueError):
        OrbitSample([(Fraction(1), Fraction(0), Fraction(0))] * 2)
