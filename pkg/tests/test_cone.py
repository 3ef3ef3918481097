"""Quadratic-form cone: exact PSD decisions, the symmetric-square match,
fixed boundary forms and flats."""

from fractions import Fraction

import pytest

from heiscert.cone import (SymForm, act_on_form, attraction_gaps,
                           congruence_image, flat_segment_certificate,
                           form_coordinates, form_from_coordinates,
                           parabolic_fixed_form, pd_by_charpoly,
                           pd_preservation_certificate, psd_by_charpoly,
                           sym_square_match_certificate)
from heiscert.heis import GENERATORS, HeisElement, Representation, \
    get_representation
from heiscert.linalg import Matrix
from heiscert.sampler import RandomStream

RHO6 = get_representation("rho6")


def random_symmetric(stream) -> SymForm:
    vals = [Fraction(stream.next_int(-4, 4), stream.next_int(1, 3))
            for _ in range(6)]
    return form_from_coordinates(vals)


def test_psd_decision_matches_charpoly_oracle():
    stream = RandomStream(41).split("psd-oracle")
    psd_seen = 0
    for _ in range(500):
        form = random_symmetric(stream)
        assert form.is_positive_semidefinite() == psd_by_charpoly(form)
        assert form.is_positive_definite() == pd_by_charpoly(form)
        psd_seen += form.is_positive_semidefinite()
    assert psd_seen > 0  # the sample hits both sides of the boundary


def test_psd_boundary_cases():
    assert SymForm([[0, 0, 0], [0, 0, 0], [0, 0, -1]]) \
        .is_positive_semidefinite() is False
    assert SymForm.rank_one([1, 2, 3]).is_positive_semidefinite()
    assert not SymForm.rank_one([1, 2, 3]).is_positive_definite()
    assert SymForm.identity().is_positive_definite()


def test_form_coordinates_round_trip():
    assert form_coordinates(SymForm.zero()) == [Fraction(0)] * 6
    identity_coords = form_coordinates(SymForm.identity())
    assert identity_coords == [1, 0, 1, 0, 0, 1]
    stream = RandomStream(43).split("round-trip")
    for _ in range(25):
        form = random_symmetric(stream)
        assert form_from_coordinates(form_coordinates(form)) == form


def test_action_agrees_with_congruence():
    stream = RandomStream(47).split("action")
    for _ in range(50):
        g = HeisElement.of(*stream.next_triple())
        form = random_symmetric(stream)
        assert act_on_form(g, form) == congruence_image(g, form)


def test_sym_square_match():
    cert = sym_square_match_certificate()
    assert cert.verdict == "PASS"
    assert cert.witnesses["monomial_ordering"] == \
        ["x1x1", "x1x2", "x2x2", "x1x3", "x2x3", "x3x3"]
    assert cert.witnesses["diagonal_rescaling"] == [Fraction(1)] * 6


def test_mutated_table_fails_sym_square_match():
    entries = [list(row) for row in RHO6.table.entries]
    entries[0][2], entries[2][5] = entries[2][5], entries[0][2]
    mutated = Representation("rho6_mutated", 6, Matrix(entries))
    assert sym_square_match_certificate(mutated).verdict == "FAIL"


def test_pd_preservation():
    cert = pd_preservation_certificate(HeisElement.identity(),
                                       SymForm.identity())
    assert cert.verdict == "PASS"
    cert = pd_preservation_certificate(HeisElement.of(1, 1, 1),
                                       SymForm.identity())
    assert cert.verdict == "PASS"
    image = SymForm([[Fraction(x) for x in row]
                     for row in cert.witnesses["image_form"]])
    assert image.is_positive_definite()


def test_pd_preservation_spot_checks():
    stream = RandomStream(53).split("pd-spot")
    for _ in range(200):
        r = Matrix([[Fraction(stream.next_int(-3, 3)) for _ in range(3)]
                    for _ in range(3)])
        if r.det() == 0:
            continue
        form = SymForm((r.transpose() * r).entries)
        g = HeisElement.of(*stream.next_triple())
        assert pd_preservation_certificate(g, form).verdict == "PASS"


def test_pd_preservation_rejects_indefinite_input():
    indefinite = SymForm([[1, 0, 0], [0, -1, 0], [0, 0, 1]])
    with pytest.raises(ValueError):
        pd_preservation_certificate(HeisElement.identity(), indefinite)


def test_fixed_forms_are_rank_one_eigenvectors():
    for name in ("A", "B", "C"):
        form = parabolic_fixed_form(name)
        assert form.rank() == 1
        assert form.is_positive_semidefinite()
        coords = form_coordinates(form)
        assert RHO6(GENERATORS[name]).apply(coords) == coords


def test_fixed_forms_of_first_two_generators_differ():
    fa = parabolic_fixed_form("A")
    fb = parabolic_fixed_form("B")
    assert fa != fb
    # the central generator shares its attractor with the first one
    assert parabolic_fixed_form("C") == fa


def test_attraction_gaps_decrease():
    for name in ("A", "B", "C"):
        g1, g2, g3 = attraction_gaps(name)
        assert g1 > g2 > g3


def test_flat_between_coordinate_squares():
    f1 = SymForm.rank_one([1, 0, 0])
    f2 = SymForm.rank_one([0, 1, 0])
    cert = flat_segment_certificate(f1, f2)
    assert cert.verdict == "PASS"
    assert all(s["det"] == 0 and s["psd"]
               for s in cert.witnesses["segment_samples"])


def test_flat_between_fixed_forms():
    cert = flat_segment_certificate(parabolic_fixed_form("A"),
                                    parabolic_fixed_form("B"))
    assert cert.verdict == "PASS"


def test_flat_rejects_proportional_inputs():
    f = SymForm.rank_one([1, 2, 0])
    with pytest.raises(ValueError):
        flat_segment_certificate(f, f.scale(Fraction(3, 2)))


def test_symform_validation():
    with pytest.raises(ValueError):
        SymForm([[1, 2, 3], [0, 1, 2], [3, 2, 1]])
    with pytest.raises(ValueError):
        SymForm([[1, 0], [0, 1]])
