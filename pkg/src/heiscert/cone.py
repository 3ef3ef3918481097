"""The 6-dimensional picture: quadratic forms, the semidefinite cone and
its boundary flats.

The 6x6 representation acts on symmetric 3x3 forms by congruence
S -> g S g^T, which visibly preserves positive definiteness.  The module
certifies the identification of the shipped entry table with that
symmetric-square action (searching monomial orderings with a solved
diagonal rescaling), exact PD/PSD decisions, the attracting rank-1
boundary fixed form of each generator, and straight segments inside the
boundary (flats) witnessing that the cone is not strictly convex.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .certs import Certificate
from .heis import ENTRY_RING, GENERATORS, HeisElement, Representation, \
    get_representation, heis_mul
from .linalg import Matrix
from .poly import Poly, PolyRing

# Monomial basis ordering under which the shipped 6x6 table acts on form
# coordinates: quadratic monomials in the three linear coordinates.
FORM_MONOMIALS = ((0, 0), (0, 1), (1, 1), (0, 2), (1, 2), (2, 2))


class SymForm:
    """A symmetric 3x3 rational matrix, i.e. a quadratic form."""

    __slots__ = ("m",)

    def __init__(self, entries: Sequence[Sequence[Fraction]]):
        m = [[Fraction(x) for x in row] for row in entries]
        if len(m) != 3 or any(len(r) != 3 for r in m):
            raise ValueError("forms are 3x3")
        for i in range(3):
            for j in range(i):
                if m[i][j] != m[j][i]:
                    raise ValueError("form matrix is not symmetric")
        self.m = tuple(tuple(r) for r in m)

    @staticmethod
    def identity() -> "SymForm":
        return SymForm([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    @staticmethod
    def zero() -> "SymForm":
        return SymForm([[0] * 3 for _ in range(3)])

    @staticmethod
    def rank_one(vector: Sequence[Fraction]) -> "SymForm":
        v = [Fraction(x) for x in vector]
        return SymForm([[v[i] * v[j] for j in range(3)] for i in range(3)])

    def matrix(self) -> Matrix:
        return Matrix(self.m)

    def __eq__(self, other):
        return isinstance(other, SymForm) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        return f"SymForm({self.m})"

    def scale(self, factor: Fraction) -> "SymForm":
        f = Fraction(factor)
        return SymForm([[f * x for x in row] for row in self.m])

    def add(self, other: "SymForm") -> "SymForm":
        return SymForm([[x + y for x, y in zip(r1, r2)]
                        for r1, r2 in zip(self.m, other.m)])

    def rank(self) -> int:
        return self.matrix().rank()

    def det(self) -> Fraction:
        return self.matrix().det()

    def principal_minor(self, indices: tuple[int, ...]) -> Fraction:
        sub = [[self.m[i][j] for j in indices] for i in indices]
        return Matrix(sub).det()

    def is_positive_definite(self) -> bool:
        """Sylvester: all leading principal minors positive."""
        return all(self.principal_minor(tuple(range(k))) > 0
                   for k in (1, 2, 3))

    def is_positive_semidefinite(self) -> bool:
        """All principal minors (not only leading ones) nonnegative."""
        index_sets = [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]
        return all(self.principal_minor(s) >= 0 for s in index_sets)

    def is_proportional_to(self, other: "SymForm") -> bool:
        flat_a = [x for row in self.m for x in row]
        flat_b = [x for row in other.m for x in row]
        for i, va in enumerate(flat_a):
            if va != 0:
                if flat_b[i] == 0:
                    return False
                r = flat_b[i] / va
                return all(r * x == y for x, y in zip(flat_a, flat_b))
        return all(x == 0 for x in flat_b)


def psd_by_charpoly(form: SymForm) -> bool:
    """Independent PSD test: a real-rooted cubic has all roots >= 0 iff
    its elementary symmetric functions are all >= 0."""
    trace = sum(form.m[i][i] for i in range(3))
    e2 = sum(form.principal_minor(s) for s in ((0, 1), (0, 2), (1, 2)))
    return trace >= 0 and e2 >= 0 and form.det() >= 0


def pd_by_charpoly(form: SymForm) -> bool:
    trace = sum(form.m[i][i] for i in range(3))
    e2 = sum(form.principal_minor(s) for s in ((0, 1), (0, 2), (1, 2)))
    return trace >= 0 and e2 >= 0 and form.det() > 0


def form_coordinates(form: SymForm) -> list[Fraction]:
    """Coordinates of a form in the monomial ordering FORM_MONOMIALS."""
    return [form.m[i][j] for i, j in FORM_MONOMIALS]


def form_from_coordinates(coords: Sequence[Fraction]) -> SymForm:
    m = [[Fraction(0)] * 3 for _ in range(3)]
    for (i, j), value in zip(FORM_MONOMIALS, coords):
        m[i][j] = Fraction(value)
        m[j][i] = Fraction(value)
    return SymForm(m)


def act_on_form(g: HeisElement, form: SymForm) -> SymForm:
    """The 6x6 representation applied through form coordinates."""
    rho6 = get_representation("rho6")
    image = rho6(g).apply(form_coordinates(form))
    return form_from_coordinates(image)


def heis_3x3(g: HeisElement) -> Matrix:
    """The defining 3x3 unit upper-triangular matrix of g."""
    one, zero = Fraction(1), Fraction(0)
    return Matrix([[one, g.a, g.c], [zero, one, g.b], [zero, zero, one]])


def congruence_image(g: HeisElement, form: SymForm) -> SymForm:
    """g S g^T: the geometric description of the same action."""
    m = heis_3x3(g)
    return SymForm((m * form.matrix() * m.transpose()).entries)


# -- matching the entry table against the symmetric-square action ------------

def _sym_square_matrix(ordering: Sequence[tuple[int, int]],
                       ring: PolyRing) -> Matrix:
    """Matrix of the congruence action on form coordinates in the given
    monomial ordering, for the symbolic element (a, b, c)."""
    g = HeisElement.symbolic(ring, ("a", "b", "c"))
    a, b, c = g.a, g.b, g.c
    one, zero = ring.one(), ring.zero()
    h = [[one, a, c], [zero, one, b], [zero, zero, one]]
    columns = []
    for (i, j) in ordering:
        # image of the basis form E_ij (symmetrized): h E h^T has entries
        # (h E h^T)_{kl} = h_ki h_lj + (i != j) * h_kj h_li
        image = [[h[k][i] * h[l][j] + (h[k][j] * h[l][i] if i != j else zero)
                  for l in range(3)] for k in range(3)]
        columns.append([image[k][l] for k, l in ordering])
    return Matrix(columns).transpose()


def _solve_diagonal_match(candidate: Matrix, target: Matrix):
    """Diagonal d with diag(d) * candidate * diag(d)^-1 == target, if any.

    The constraint d_i / d_j = target_ij / candidate_ij propagates along
    nonzero entries; d_0 is normalized to 1.
    """
    n = candidate.rows
    ratios = {}
    for i in range(n):
        for j in range(n):
            ci, ti = candidate[i, j], target[i, j]
            if ci.is_zero() != ti.is_zero():
                return None
            if ci.is_zero():
                continue
            # the ratio must be a nonzero constant
            quot = _constant_quotient(ti, ci)
            if quot is None:
                return None
            ratios[(i, j)] = quot
    d: list = [None] * n
    d[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for (i, j), q in ratios.items():
            if d[j] is not None and d[i] is None:
                d[i] = q * d[j]
                changed = True
            elif d[i] is not None and d[j] is None:
                d[j] = d[i] / q
                changed = True
            elif d[i] is not None and d[j] is not None:
                if d[i] != q * d[j]:
                    return None
    if any(x is None for x in d):
        return None
    return d


def _constant_quotient(numer: Poly, denom: Poly):
    """numer / denom when the quotient is a nonzero rational constant."""
    d_terms = denom.terms
    n_terms = numer.terms
    if set(d_terms) != set(n_terms):
        return None
    quotient = None
    for e, c in d_terms.items():
        r = n_terms[e] / c
        if quotient is None:
            quotient = r
        elif quotient != r:
            return None
    return quotient


def sym_square_match_certificate(rep: Representation = None) -> Certificate:
    """Search for a monomial ordering and diagonal rescaling conjugating
    the symmetric-square congruence action onto the shipped 6x6 table."""
    rep = rep or get_representation("rho6")
    target = rep.table
    for ordering in permutations([(0, 0), (0, 1), (0, 2),
                                  (1, 1), (1, 2), (2, 2)]):
        candidate = _sym_square_matrix(ordering, ENTRY_RING)
        d = _solve_diagonal_match(candidate, target)
        if d is None:
            continue
        scale = Matrix([[d[i] if i == j else Fraction(0) for j in range(6)]
                        for i in range(6)])
        conjugated = scale.map(ENTRY_RING.const) * candidate \
            * scale.inverse().map(ENTRY_RING.const)
        if conjugated == target:
            monomial_names = ["".join(f"x{k+1}" for k in pair)
                              for pair in ordering]
            return Certificate.ok(
                "cone.sym_square_match",
                witnesses={"monomial_ordering": monomial_names,
                           "diagonal_rescaling": d},
                inputs={"representation": rep.name})
    return Certificate.fail(
        "cone.sym_square_match",
        witnesses={"orderings_tried": 720},
        inputs={"representation": rep.name})


# -- cone preservation and boundary structure ---------------------------------

def pd_preservation_certificate(g: HeisElement, form: SymForm) -> Certificate:
    """The action of g keeps a positive-definite form positive definite;
    the image is recorded and cross-checked against the congruence g S g^T."""
    if not form.is_positive_definite():
        raise ValueError("input form must be positive definite")
    image = act_on_form(g, form)
    consistent = image == congruence_image(g, form)
    ok = image.is_positive_definite() and consistent
    ctor = Certificate.ok if ok else Certificate.fail
    return ctor(
        "cone.pd_preserved",
        witnesses={"image_form": [list(r) for r in image.m],
                   "matches_congruence": consistent},
        inputs={"g": list(g.components()),
                "form": [list(r) for r in form.m]})


def parabolic_fixed_form(generator: str) -> SymForm:
    """The attracting boundary fixed form of a generator.

    With N the nilpotent part of the 6x6 image, the top nonzero power of
    N has rank 1 and sends every positive-definite form to the same ray;
    that ray is the limit of the iterated action.  Normalized so the
    largest-magnitude entry is 1.
    """
    rho6 = get_representation("rho6")
    mat = rho6(GENERATORS[generator])
    n = mat - Matrix.identity(6)
    power = n
    while True:
        next_power = power * n
        if next_power.is_zero():
            break
        power = next_power
    if power.rank() != 1:
        raise ValueError("top nilpotent power does not have rank 1")
    image = power.apply(form_coordinates(SymForm.identity()))
    if all(x == 0 for x in image):
        raise ValueError("identity form is annihilated by the top power")
    form = form_from_coordinates(image)
    largest = max((x for row in form.m for x in row), key=abs)
    form = form.scale(1 / largest)
    fixed = act_on_form(GENERATORS[generator], form) == form
    if not fixed or form.rank() != 1 or not form.is_positive_semidefinite():
        raise ValueError("attractor is not a fixed rank-1 semidefinite form")
    return form


def attraction_gaps(generator: str, steps: Sequence[int] = (4, 8, 16)
                    ) -> list[Fraction]:
    """Projective gap between the iterated image of the identity form and
    the fixed form, at the given iteration counts."""
    fixed = parabolic_fixed_form(generator)
    fixed_coords = _canonical(form_coordinates(fixed))
    gaps = []
    for count in steps:
        g = GENERATORS[generator]
        power = HeisElement.identity()
        for _ in range(count):
            power = heis_mul(power, g)
        coords = _canonical(form_coordinates(
            act_on_form(power, SymForm.identity())))
        gaps.append(max(abs(x - y) for x, y in zip(coords, fixed_coords)))
    return gaps


def _canonical(coords: Sequence[Fraction]) -> list[Fraction]:
    # Normalize by the largest-magnitude entry; unlike first-nonzero
    # scaling this stays bounded when the leading coordinate dies off.
    pivot = max(coords, key=abs)
    return [x / pivot for x in coords]


def flat_segment_certificate(f1: SymForm, f2: SymForm) -> Certificate:
    """The segment between two degenerate semidefinite forms stays in the
    cone's boundary: every sampled mixture is PSD with determinant zero."""
    for f in (f1, f2):
        if not f.is_positive_semidefinite() or f.det() != 0:
            raise ValueError("inputs must be semidefinite with det 0")
    if f1.is_proportional_to(f2):
        raise ValueError("flat check needs non-proportional endpoints")
    samples = []
    ok = True
    for t in (Fraction(0), Fraction(1, 4), Fraction(1, 2),
              Fraction(3, 4), Fraction(1)):
        mix = f1.scale(1 - t).add(f2.scale(t))
        psd = mix.is_positive_semidefinite()
        det = mix.det()
        ok = ok and psd and det == 0
        samples.append({"t": t, "psd": psd, "det": det})
    ctor = Certificate.ok if ok else Certificate.fail
    return ctor("cone.boundary_flat",
                witnesses={"segment_samples": samples},
                inputs={"f1": [list(r) for r in f1.m],
                        "f2": [list(r) for r in f2.m]})
