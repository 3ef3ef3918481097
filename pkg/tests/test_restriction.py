"""Invariant subspace of the 14-dimensional action and entry growth."""

from fractions import Fraction

from heiscert.heis import ENTRY_RING, HeisElement, get_representation, \
    heis_mul, one_parameter_power
from heiscert.poly import PolyRing
from heiscert.restriction import (derive_conjugator, derive_subspace_basis,
                                  growth_certificate, induced_matrix,
                                  intertwiner_dimension, load_witness,
                                  orbit_lift_14, restriction_certificate,
                                  subspace_equations, write_witnesses)

THETA = get_representation("theta")
RHO14 = get_representation("rho14")


def test_equations_have_rank_four():
    assert subspace_equations().rank() == 4


def test_orbit_point_satisfies_equations():
    lift = orbit_lift_14(ENTRY_RING)
    one = ENTRY_RING.one()
    b = ENTRY_RING.var("b")
    assert lift[5] == one and lift[9] == one and lift[13] == one
    assert lift[4] == b and lift[12] == b
    assert lift[2] == 2 * lift[11]
    equations = subspace_equations().map(ENTRY_RING.const)
    assert all(p.is_zero() for p in equations.apply(lift))


def test_basis_spans_solution_space():
    basis = derive_subspace_basis()
    assert basis.rank() == 10
    assert (subspace_equations() * basis).is_zero()


def test_subspace_is_invariant_symbolically():
    g = HeisElement.symbolic(ENTRY_RING)
    basis = derive_subspace_basis().map(ENTRY_RING.const)
    image = RHO14(g) * basis
    equations = subspace_equations().map(ENTRY_RING.const)
    assert (equations * image).is_zero()


def test_induced_action_is_conjugate_to_theta():
    g = HeisElement.symbolic(ENTRY_RING)
    conjugator = derive_conjugator().map(ENTRY_RING.const)
    assert induced_matrix(g) * conjugator == conjugator * THETA(g)


def test_conjugator_shape():
    t = derive_conjugator()
    assert t.det() == -2
    # one scaled entry, otherwise a permutation matrix
    entries = sorted(abs(x) for row in t.entries for x in row if x != 0)
    assert entries == [1] * 9 + [2]


def test_induced_action_is_multiplicative():
    ring = PolyRing("a", "b", "c", "a'", "b'", "c'")
    g = HeisElement.symbolic(ring, ("a", "b", "c"))
    h = HeisElement.symbolic(ring, ("a'", "b'", "c'"))
    assert induced_matrix(g) * induced_matrix(h) == \
        induced_matrix(heis_mul(g, h))


def test_frozen_witnesses_match_rederivation(tmp_path):
    paths = write_witnesses(tmp_path)
    for name, fresh_path in paths.items():
        assert load_witness(name).to_text() == fresh_path.read_text()


def test_restriction_certificate_passes():
    cert = restriction_certificate()
    assert cert.verdict == "PASS"
    assert all(cert.witnesses["checks"].values())
    rederived = restriction_certificate(rederive=True)
    assert rederived.verdict == "PASS"


def test_intertwiner_space_dimension():
    # larger than 1: the conjugator is canonical only through the
    # orbit-matching construction, not by Schur-style uniqueness
    assert intertwiner_dimension() == 9


def test_growth_certificate():
    cert = growth_certificate()
    assert cert.verdict == "PASS"
    assert cert.witnesses["A"] == {"six_block_degree": 2,
                                   "added_blocks_degree": 4}
    assert cert.witnesses["B"] == {"six_block_degree": 2,
                                   "added_blocks_degree": 4}
    assert cert.witnesses["C"]["whole_matrix_degree"] <= 2


def test_growth_quartic_entry_location():
    ring = PolyRing("n")
    power = one_parameter_power(RHO14, "A", ring)
    n = ring.var("n")
    assert power[0, 9] == n ** 4 * Fraction(1, 24)
    six_block_degrees = [power[i, j].degree_in("n")
                         for i in range(6) for j in range(6)
                         if not power[i, j].is_zero()]
    assert max(six_block_degrees) == 2


def test_growth_degrees_stable_under_rescaling():
    ring = PolyRing("n")
    n = ring.var("n")
    zero = ring.zero()
    for scale in (Fraction(2), Fraction(-1), Fraction(3, 7)):
        scaled = RHO14(HeisElement(scale * n, zero, zero))
        plain = RHO14(HeisElement(n, zero, zero))
        for i in range(14):
            for j in range(14):
                assert scaled[i, j].degree_in("n") == \
                    plain[i, j].degree_in("n")
