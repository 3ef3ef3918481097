"""The invariant 10-dimensional subspace of the 14x14 representation.

Four linear equations (x6 = x10 = x14, x5 = x13, x3 = 2*x12, 1-based)
cut out a subspace that the 14x14 action preserves; in the right basis
the induced 10x10 action is conjugate, by a constant matrix T, to the
10-dimensional representation.  Both the subspace basis and T are
derived here by exact linear solves, shipped as frozen witness files,
and re-derivable on demand.  The same module certifies the quadratic
versus quartic entry growth of generator powers that motivates the
14-dimensional construction.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .certs import Certificate
from .convexity import ORBIT_FORMULA
from .heis import DATA_DIR, ENTRY_RING, PAIR_RING, HeisElement, \
    get_representation, heis_mul, one_parameter_power
from .linalg import Matrix
from .poly import Poly, PolyRing

AMBIENT_DIM = 14
SUBSPACE_DIM = 10

T_WITNESS = "restriction_T.tsv"
BASIS_WITNESS = "restriction_basis.tsv"


def subspace_equations() -> Matrix:
    """The four defining linear functionals as rows of a 4x14 matrix."""
    rows = []
    for positive, negative, factor in (
            (6, 10, 1), (6, 14, 1), (5, 13, 1), (3, 12, 2)):
        row = [Fraction(0)] * AMBIENT_DIM
        row[positive - 1] = Fraction(1)
        row[negative - 1] = Fraction(-factor)
        rows.append(row)
    return Matrix(rows)


FREE_COORDINATES = (1, 2, 3, 4, 5, 6, 7, 8, 9, 11)  # 1-based


def derive_subspace_basis() -> Matrix:
    """A 14x10 basis of the solution space, one column per free
    coordinate, dependent coordinates filled from the equations."""
    columns = []
    for free in FREE_COORDINATES:
        vec = [Fraction(0)] * AMBIENT_DIM
        vec[free - 1] = Fraction(1)
        if free == 6:
            vec[10 - 1] = Fraction(1)
            vec[14 - 1] = Fraction(1)
        elif free == 5:
            vec[13 - 1] = Fraction(1)
        elif free == 3:
            vec[12 - 1] = Fraction(1, 2)
        columns.append(vec)
    return Matrix(columns).transpose()


def orbit_lift_14(ring: PolyRing, names=("a", "b", "c")) -> list[Poly]:
    """The symbolic 14-dimensional orbit of the base point
    e6 + e10 + e14 under the 14x14 action."""
    rho14 = get_representation("rho14")
    g = HeisElement(*(ring.var(n) for n in names))
    base = [Fraction(0)] * AMBIENT_DIM
    for i in (6, 10, 14):
        base[i - 1] = Fraction(1)
    return rho14(g).apply([ring.const(x) for x in base])


def induced_matrix(g: HeisElement) -> Matrix:
    """The 10x10 matrix of g acting in the subspace basis.

    Because the basis matrix restricted to the free coordinate rows is
    the identity, the induced matrix is just those rows of
    rho14(g) * basis; the dropped rows are rechecked separately by the
    invariance certificate.
    """
    rho14 = get_representation("rho14")
    mat = rho14(g)
    basis = derive_subspace_basis()
    if isinstance(mat[0, 0], Poly):
        basis = basis.map(mat[0, 0].ring.const)
    image = mat * basis
    return Matrix([image.row(f - 1) for f in FREE_COORDINATES])


def derive_conjugator() -> Matrix:
    """The constant change of basis T with induced(g) = T theta(g) T^-1.

    T is pinned by matching orbits: the subspace coordinates of the
    14-dimensional orbit must equal T applied to the 10-dimensional
    orbit.  Componentwise this is a linear solve in the monomial
    coefficients of the two orbit polynomial tuples.
    """
    lift14 = orbit_lift_14(ENTRY_RING)
    basis = derive_subspace_basis()
    residual = _subspace_coordinates_and_check(lift14, basis)
    target = list(ORBIT_FORMULA) + [ENTRY_RING.one()]

    monomials = sorted({e for p in target + residual for e in p.terms})
    columns_a = [[p.terms.get(e, Fraction(0)) for e in monomials]
                 for p in target]   # 10 x K
    rows_y = [[p.terms.get(e, Fraction(0)) for e in monomials]
              for p in residual]    # 10 x K
    # Solve t_i . A = y_i for each row of T, i.e. A^T t_i^T = y_i^T.
    lhs = Matrix(columns_a).transpose()          # K x 10
    rhs = Matrix(rows_y).transpose()             # K x 10
    solution = _solve_full_column_rank(lhs, rhs)  # 10 x 10
    return solution.transpose()


def _subspace_coordinates_and_check(lift14, basis) -> list[Poly]:
    """Free-coordinate components of a vector known to lie in the
    subspace; raises if it does not."""
    coords = [lift14[f - 1] for f in FREE_COORDINATES]
    ring = coords[0].ring
    reconstructed = basis.map(ring.const).apply(coords)
    if any(x != y for x, y in zip(reconstructed, lift14)):
        raise ValueError("vector is not in the invariant subspace")
    return coords


def _solve_full_column_rank(lhs: Matrix, rhs: Matrix) -> Matrix:
    """Unique X with lhs @ X = rhs for lhs of full column rank."""
    n = lhs.cols
    aug = Matrix([list(lhs.row(i)) + list(rhs.row(i))
                  for i in range(lhs.rows)])
    reduced, pivots = aug.rref()
    if pivots[:n] != list(range(n)) or any(p >= n for p in pivots):
        raise ValueError("system is rank deficient or inconsistent")
    return Matrix([[reduced[i, n + j] for j in range(rhs.cols)]
                   for i in range(n)])


def load_witness(name: str, directory: Path = None) -> Matrix:
    path = (directory or DATA_DIR) / name
    return Matrix.from_text(path.read_text())


def write_witnesses(directory: Path) -> dict[str, Path]:
    directory.mkdir(parents=True, exist_ok=True)
    paths = {}
    for name, matrix in ((T_WITNESS, derive_conjugator()),
                         (BASIS_WITNESS, derive_subspace_basis())):
        path = directory / name
        path.write_text(matrix.to_text())
        paths[name] = path
    return paths


def restriction_certificate(rederive: bool = False) -> Certificate:
    """Full restriction verdict: equations have rank 4 and are preserved,
    the induced action is multiplicative, and it is conjugate to the
    10-dimensional representation by the witness T."""
    equations = subspace_equations()
    basis = derive_subspace_basis() if rederive else \
        load_witness(BASIS_WITNESS)
    conjugator = derive_conjugator() if rederive else load_witness(T_WITNESS)
    theta = get_representation("theta")
    rho14 = get_representation("rho14")

    checks = {}
    checks["equations_rank_4"] = equations.rank() == 4
    checks["basis_rank_10"] = basis.rank() == SUBSPACE_DIM
    checks["basis_solves_equations"] = (equations * basis).is_zero()

    g = HeisElement.symbolic(ENTRY_RING)
    image = rho14(g) * basis.map(ENTRY_RING.const)
    checks["subspace_invariant"] = \
        (equations.map(ENTRY_RING.const) * image).is_zero()

    induced = induced_matrix(g)
    checks["induced_consistent"] = \
        image == basis.map(ENTRY_RING.const) * induced

    t_poly = conjugator.map(ENTRY_RING.const)
    checks["conjugate_to_theta"] = induced * t_poly == t_poly * theta(g)
    t_det = conjugator.det()
    checks["conjugator_invertible"] = t_det != 0

    gp, hp = HeisElement.symbolic(PAIR_RING, ("a", "b", "c")), \
        HeisElement.symbolic(PAIR_RING, ("a'", "b'", "c'"))
    checks["induced_multiplicative"] = \
        induced_matrix(gp) * induced_matrix(hp) == \
        induced_matrix(heis_mul(gp, hp))

    ok = all(checks.values())
    witnesses = {
        "checks": checks,
        "conjugator_det": t_det,
        "conjugator": [list(conjugator.row(i)) for i in range(SUBSPACE_DIM)],
        "intertwiner_space_dimension": intertwiner_dimension(),
    }
    ctor = Certificate.ok if ok else Certificate.fail
    return ctor("restrict.conjugate_to_theta", witnesses,
                inputs={"rederived": rederive})


def intertwiner_dimension() -> int:
    """Dimension of {X : induced(g) X = X theta(g) for all g}.

    Solved from the generator conditions (enough because the integer
    points are Zariski dense); every kernel element is then reverified
    against the full symbolic identity.
    """
    theta = get_representation("theta")
    n = SUBSPACE_DIM
    rows = []
    for gen in (HeisElement.of(1, 0, 0), HeisElement.of(0, 1, 0)):
        left = induced_matrix(gen)
        right = theta(gen)
        # condition left @ X - X @ right = 0, unknowns X_kl flattened
        for i in range(n):
            for j in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    row[k * n + j] += left[i, k]
                    row[i * n + k] -= right[k, j]
                rows.append(row)
    kernel = Matrix(rows).kernel_basis()
    g = HeisElement.symbolic(ENTRY_RING)
    induced = induced_matrix(g)
    theta_g = theta(g)
    for vec in kernel:
        x = Matrix([[ENTRY_RING.const(vec[i * n + j]) for j in range(n)]
                    for i in range(n)])
        if induced * x != x * theta_g:
            raise AssertionError("generator conditions were not sufficient")
    return len(kernel)


# -- entry growth of generator powers -----------------------------------------

GROWTH_RING = PolyRing("n")


def _max_degree(matrix: Matrix, cells) -> int:
    degrees = [matrix[i, j].degree_in("n") for i, j in cells]
    finite = [d for d in degrees if isinstance(d, int)]
    return max(finite) if finite else 0


def growth_certificate() -> Certificate:
    """Quadratic growth inside the 6x6 block versus quartic growth in the
    glued chains, for symbolic powers of the first two generators; the
    central generator stays quadratic everywhere."""
    rho14 = get_representation("rho14")
    six_block = [(i, j) for i in range(6) for j in range(6)]
    added = [(0, j) for j in range(6, 14)]
    added += [(i, j) for i in range(6, 10) for j in range(6, 10)]
    added += [(i, j) for i in range(10, 14) for j in range(10, 14)]
    whole = [(i, j) for i in range(14) for j in range(14)]

    report = {}
    ok = True
    for gen in ("A", "B"):
        power = one_parameter_power(rho14, gen, GROWTH_RING)
        six_deg = _max_degree(power, six_block)
        added_deg = _max_degree(power, added)
        report[gen] = {"six_block_degree": six_deg,
                       "added_blocks_degree": added_deg}
        ok = ok and six_deg == 2 and added_deg == 4
    center_power = one_parameter_power(rho14, "C", GROWTH_RING)
    center_deg = _max_degree(center_power, whole)
    report["C"] = {"whole_matrix_degree": center_deg}
    ok = ok and center_deg <= 2

    ctor = Certificate.ok if ok else Certificate.fail
    return ctor("growth.block_degrees", witnesses=report)
