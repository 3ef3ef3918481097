"""Orbit geometry and exact convexity certificates.

The 10-dimensional representation acts affinely on the patch
[x1:...:x9:1]; the orbit of the origin is a polynomial embedding of the
group whose first coordinate eventually dominates every other one.  This
module certifies, in exact arithmetic: the closed orbit formula, its
equivariance, domination along rays to infinity, full dimensionality of
the orbit hull (a nonzero 10x10 determinant), proper convexity (the hull
stays in {x1 >= 0}) and extremality of sampled orbit points via exact LP.
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import Sequence

from .certs import Certificate
from .heis import ENTRY_RING, HeisElement, get_representation, heis_mul
from .linalg import Matrix
from .lp import convex_combination_weights
from .poly import NEG_INFINITY, Poly, PolyRing
from .rationals import format_rational, parse_rational
from .sampler import RandomStream

AFFINE_DIM = 9

# The closed form of the orbit of the origin: nine affine coordinates as
# polynomials in a, b, c.  Kept as an explicit tuple (not read off the
# entry table) so the table and the formula cross-check each other.
_A, _B, _C = ENTRY_RING.vars("a", "b", "c")
ORBIT_FORMULA: tuple[Poly, ...] = (
    (_A ** 4 + _B ** 4) * Fraction(1, 24) + _C ** 2,
    _B * _C,
    _C,
    _A ** 3 * Fraction(1, 6),
    _A ** 2 * Fraction(1, 2),
    _A,
    _B ** 3 * Fraction(1, 6),
    _B ** 2 * Fraction(1, 2),
    _B,
)


class ProjPoint:
    """A point of projective space, stored in canonical homogeneous form
    (first nonzero coordinate scaled to 1)."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence[Fraction]):
        coords = [Fraction(x) for x in coords]
        pivot = next((x for x in coords if x != 0), None)
        if pivot is None:
            raise ValueError("projective points cannot be the zero vector")
        self.coords = tuple(x / pivot for x in coords)

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "[" + ":".join(format_rational(x) for x in self.coords) + "]"

    @property
    def dim(self) -> int:
        return len(self.coords)


def lift_origin() -> list[Fraction]:
    """Homogeneous lift of the affine origin."""
    return [Fraction(0)] * AFFINE_DIM + [Fraction(1)]


def orbit_lift(g: HeisElement) -> list[Fraction]:
    """Homogeneous lift (x1..x9, 1) of the orbit point of g."""
    assignment = {"a": g.a, "b": g.b, "c": g.c}
    if not all(isinstance(v, Fraction) for v in assignment.values()):
        raise TypeError("orbit points need rational group elements")
    return [p.eval(assignment) for p in ORBIT_FORMULA] + [Fraction(1)]


def orbit_point(g: HeisElement) -> ProjPoint:
    return ProjPoint(orbit_lift(g))


def symbolic_orbit_lift(ring: PolyRing, names=("a", "b", "c")) -> list[Poly]:
    mapping = dict(zip(("a", "b", "c"), (ring.var(n) for n in names)))
    return [p.substitute(mapping, ring) for p in ORBIT_FORMULA] + [ring.one()]


def orbit_formula_certificate() -> Certificate:
    """The entry table applied to the lifted origin reproduces the closed
    orbit formula, as an exact polynomial identity."""
    theta = get_representation("theta")
    g = HeisElement.symbolic(ENTRY_RING)
    column = theta(g).apply([ENTRY_RING.const(x) for x in lift_origin()])
    expected = list(ORBIT_FORMULA) + [ENTRY_RING.one()]
    mismatches = [i + 1 for i, (got, want) in enumerate(zip(column, expected))
                  if got != want]
    witnesses = {"coordinates": [str(p) for p in expected]}
    if mismatches:
        witnesses["mismatched_coordinates"] = mismatches
        return Certificate.fail("orbit.formula", witnesses)
    return Certificate.ok("orbit.formula", witnesses)


def fixed_structure_certificate() -> Certificate:
    """The symbolic matrix fixes the point [1:0:...:0] (first column) and
    preserves the hyperplane at infinity x10 = 0 (last row)."""
    theta = get_representation("theta")
    table = theta.table
    n = theta.dimension
    one, zero = ENTRY_RING.one(), ENTRY_RING.zero()
    col_ok = table[0, 0] == one and all(table[i, 0] == zero
                                        for i in range(1, n))
    row_ok = table[n - 1, n - 1] == one and all(table[n - 1, j] == zero
                                                for j in range(n - 1))
    witnesses = {"first_column_is_e1": col_ok, "last_row_is_e10": row_ok}
    ctor = Certificate.ok if (col_ok and row_ok) else Certificate.fail
    return ctor("orbit.fixed_at_infinity", witnesses)


def equivariance_certificate(g: HeisElement, h: HeisElement) -> Certificate:
    """Acting on the orbit point of h by the matrix of g lands on the
    orbit point of g*h (projective equality, exact)."""
    theta = get_representation("theta")
    image = theta(g).apply(orbit_lift(h))
    target = orbit_lift(heis_mul(g, h))
    ok = ProjPoint(image) == ProjPoint(target)
    inputs = {"g": [g.a, g.b, g.c], "h": [h.a, h.b, h.c]}
    witnesses = {"target_parameter": [x for x in heis_mul(g, h).components()]}
    ctor = Certificate.ok if ok else Certificate.fail
    return ctor("orbit.equivariance", witnesses, inputs=inputs)


def symbolic_equivariance_holds() -> bool:
    """The equivariance identity as a polynomial identity in six variables."""
    ring = PolyRing("a", "b", "c", "a'", "b'", "c'")
    theta = get_representation("theta")
    g = HeisElement.symbolic(ring, ("a", "b", "c"))
    h = HeisElement.symbolic(ring, ("a'", "b'", "c'"))
    image = theta(g).apply(symbolic_orbit_lift(ring, ("a'", "b'", "c'")))
    mapping = {n: comp for n, comp in zip(("a", "b", "c"),
                                          heis_mul(g, h).components())}
    target = [p.substitute(mapping, ring) for p in ORBIT_FORMULA] + [ring.one()]
    return all(x == y for x, y in zip(image, target))


# -- limit point at infinity -------------------------------------------------

RAY_RING = PolyRing("t")

def _scaled_ray(*coeffs) -> tuple[Poly, ...]:
    t = RAY_RING.var("t")
    return tuple(RAY_RING.const(k) * t for k in coeffs)

# Shipped rays to infinity and evaluation schedule.  Scaling by 5 makes
# the largest scheduled parameter already reach domination ratio < 1/1000
# while keeping every value exact and small.
DEFAULT_RAYS: tuple[tuple[Poly, ...], ...] = (
    _scaled_ray(5, 0, 0),
    _scaled_ray(0, 0, 5),
    _scaled_ray(5, 5, 5),
)
DEFAULT_RAY_TS = (Fraction(10), Fraction(100), Fraction(1000))
DOMINATION_BOUND = Fraction(1, 1000)


def limit_point_certificate(rays: Sequence[Sequence[Poly]] = DEFAULT_RAYS,
                            t_values: Sequence[Fraction] = DEFAULT_RAY_TS,
                            ) -> Certificate:
    """Domination of the first coordinate along rays to infinity.

    Symbolic part: on each ray the first orbit coordinate has strictly
    larger degree in t than every other coordinate.  Numeric part: the
    ratio max_i>=2 |x_i(t)| / x1(t) strictly decreases along the given
    t values and ends below 1/1000.
    """
    t_values = [Fraction(t) for t in t_values]
    if any(t <= 0 for t in t_values) or sorted(t_values) != list(t_values) \
            or len(set(t_values)) != len(t_values):
        raise ValueError("t values must be positive and strictly increasing")
    ray_reports = []
    all_ok = True
    for ray in rays:
        ray = list(ray)
        if len(ray) != 3:
            raise ValueError("a ray is three polynomials in t")
        if all(p.total_degree() <= 0 for p in ray):
            raise ValueError("ray has no coordinate of positive degree")
        mapping = dict(zip(("a", "b", "c"), ray))
        coords = [p.substitute(mapping, RAY_RING) for p in ORBIT_FORMULA]
        coords.append(RAY_RING.one())
        if coords[0].is_zero():
            raise ValueError("first coordinate vanishes identically; "
                             "the ray does not leave every bounded set")
        lead_degree = coords[0].degree_in("t")
        other_degrees = [p.degree_in("t") for p in coords[1:]]
        degrees_ok = all(d < lead_degree for d in other_degrees)

        ratios = []
        for t in t_values:
            values = [p.eval({"t": t}) for p in coords]
            if values[0] <= 0:
                raise ValueError(f"first coordinate not positive at t={t}")
            ratios.append(max(abs(v) for v in values[1:]) / values[0])
        decreasing = all(r1 > r2 for r1, r2 in zip(ratios, ratios[1:]))
        small_enough = ratios[-1] < DOMINATION_BOUND
        ok = degrees_ok and decreasing and small_enough
        all_ok = all_ok and ok
        ray_reports.append({
            "ray": [str(p) for p in ray],
            "leading_degree": lead_degree,
            "other_degrees": [d if d != NEG_INFINITY else "-inf"
                              for d in other_degrees],
            "ratios": ratios,
            "passes": ok,
        })
    witnesses = {"rays": ray_reports,
                 "bound": DOMINATION_BOUND,
                 "limit_point": "[1:0:0:0:0:0:0:0:0:0]"}
    inputs = {"t_values": t_values,
              "rays": [[str(p) for p in ray] for ray in rays]}
    ctor = Certificate.ok if all_ok else Certificate.fail
    return ctor("orbit.limit_point", witnesses, inputs=inputs)


# -- orbit samples ------------------------------------------------------------

class OrbitSample:
    """Deterministically sampled orbit parameters and their points."""

    def __init__(self, parameters: Sequence[tuple], seed: str = ""):
        parameters = [tuple(Fraction(x) for x in p) for p in parameters]
        if len(set(parameters)) != len(parameters):
            raise ValueError("orbit sample parameters must be distinct")
        self.parameters = parameters
        self.seed = seed
        self.points = [orbit_point(HeisElement.of(*p)) for p in parameters]

    def lifts(self) -> list[list[Fraction]]:
        return [orbit_lift(HeisElement.of(*p)) for p in self.parameters]

    def __len__(self):
        return len(self.parameters)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["a", "b", "c"])
        for a, b, c in self.parameters:
            writer.writerow([format_rational(a), format_rational(b),
                             format_rational(c)])
        return buf.getvalue()

    @staticmethod
    def from_csv(text: str, seed: str = "") -> "OrbitSample":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if header != ["a", "b", "c"]:
            raise ValueError("orbit sample CSV must have header a,b,c")
        params = [tuple(parse_rational(cell) for cell in row)
                  for row in reader if row]
        return OrbitSample(params, seed=seed)


def sample_orbit(count: int, seed: int, label: str = "orbit",
                 nonzero: bool = False) -> OrbitSample:
    stream = RandomStream(seed).split(label)
    params = stream.distinct_triples(count, nonzero=nonzero)
    return OrbitSample(params, seed=str(seed))


def hull_dimension_certificate(sample: OrbitSample) -> Certificate:
    """Nonzero determinant of ten lifted orbit points: the hull interior
    has full dimension nine."""
    if len(sample) != 10:
        raise ValueError("hull dimension check needs exactly 10 points")
    det = Matrix(sample.lifts()).det()
    witnesses = {"determinant": det}
    inputs = {"parameters": [[x for x in p] for p in sample.parameters]}
    ctor = Certificate.ok if det != 0 else Certificate.fail
    return ctor("hull.dimension", witnesses, inputs=inputs,
                seed=sample.seed)


def proper_convexity_certificate() -> Certificate:
    """Every orbit point satisfies x1 >= 0, by the syntactic even-power
    criterion on the first coordinate; the closed hull therefore lies in
    the halfspace {x1 >= 0} and misses the hyperplane {x1 = -1}."""
    first = ORBIT_FORMULA[0]
    nonneg = nonneg_certificate(first)
    witnesses = {
        "halfspace": "x1 >= 0",
        "separated_from": "x1 = -1",
        "first_coordinate": str(first),
        "nonnegativity": nonneg.witnesses,
    }
    ctor = Certificate.ok if nonneg.passed else Certificate.fail
    return ctor("hull.proper_convexity", witnesses)


def nonneg_certificate(p: Poly) -> Certificate:
    """Syntactic nonnegativity: every term has all-even exponents and a
    positive coefficient.  FAIL means inconclusive, not negative."""
    terms = []
    ok = True
    for exps, coeff in p.sorted_terms():
        even = all(e % 2 == 0 for e in exps)
        positive = coeff > 0
        terms.append({"monomial_exponents": list(exps), "coefficient": coeff,
                      "all_even": even, "positive": positive})
        ok = ok and even and positive
    ctor = Certificate.ok if ok else Certificate.fail
    return ctor("poly.nonnegative", {"terms": terms, "polynomial": str(p)})


def extreme_point_certificate(sample: OrbitSample, index: int) -> Certificate:
    """Is sample point `index` outside the convex hull of the others?

    Decided by exact LP: PASS records a verified separating functional;
    FAIL records the convex-combination weights.
    """
    if len(sample) < 11:
        raise ValueError("extreme point check needs at least 11 points")
    if not 0 <= index < len(sample):
        raise IndexError("sample index out of range")
    lifts = sample.lifts()
    target = lifts[index]
    others = [lift for i, lift in enumerate(lifts) if i != index]
    result = convex_combination_weights(others, target)
    inputs = {"parameters": [[x for x in p] for p in sample.parameters],
              "index": index}
    if result.feasible:
        return Certificate.fail(
            "hull.extreme_point",
            witnesses={"convex_combination_weights": result.solution},
            inputs=inputs, seed=sample.seed)
    return Certificate.ok(
        "hull.extreme_point",
        witnesses={"separating_functional": result.farkas},
        inputs=inputs, seed=sample.seed)
