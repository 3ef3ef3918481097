"""The rank-3 unipotent group law and its three matrix representations.

Group elements are triples (a, b, c) standing for the 3x3 unit
upper-triangular matrix with a, c on the first row and b in position
(2, 3); the composition law is read off from the 3x3 product:

    (a, b, c) * (a', b', c') = (a + a', b + b', c + c' + a*b')

The entry tables of the three representations (named theta, rho6 and
rho14; dimensions 10, 6 and 14) are loaded from plain-text .rep files so
they exist in exactly one transcription.  Homomorphism and injectivity
verification run fully symbolically over a six-variable ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Union

from .certs import Certificate
from .linalg import Matrix
from .poly import Poly, PolyRing

DATA_DIR = Path(__file__).parent / "data"

# The ring every entry table lives in, and the doubled ring used when two
# symbolic group elements interact.
ENTRY_RING = PolyRing("a", "b", "c")
PAIR_RING = PolyRing("a", "b", "c", "a'", "b'", "c'")

Component = Union[Fraction, Poly]


@dataclass(frozen=True)
class HeisElement:
    a: Component
    b: Component
    c: Component

    @staticmethod
    def of(a, b, c) -> "HeisElement":
        conv = lambda x: x if isinstance(x, Poly) else Fraction(x)
        return HeisElement(conv(a), conv(b), conv(c))

    @staticmethod
    def identity() -> "HeisElement":
        return HeisElement.of(0, 0, 0)

    @staticmethod
    def symbolic(ring: PolyRing = ENTRY_RING, names=("a", "b", "c")) -> "HeisElement":
        return HeisElement(*(ring.var(n) for n in names))

    def is_identity(self) -> bool:
        return all(_is_zero(x) for x in (self.a, self.b, self.c))

    def inverse(self) -> "HeisElement":
        return HeisElement(-self.a, -self.b, -self.c + self.a * self.b)

    def components(self) -> tuple[Component, Component, Component]:
        return (self.a, self.b, self.c)


def heis_mul(g: HeisElement, h: HeisElement) -> HeisElement:
    return HeisElement(g.a + h.a, g.b + h.b, g.c + h.c + g.a * h.b)


GEN_A = HeisElement.of(1, 0, 0)
GEN_B = HeisElement.of(0, 1, 0)
GEN_C = HeisElement.of(0, 0, 1)
GENERATORS = {"A": GEN_A, "B": GEN_B, "C": GEN_C}


def _is_zero(x: Component) -> bool:
    return x.is_zero() if isinstance(x, Poly) else x == 0


class Representation:
    """A symbolic unit-upper-triangular entry table in variables a, b, c."""

    def __init__(self, name: str, dimension: int, table: Matrix):
        if table.rows != dimension or table.cols != dimension:
            raise ValueError("entry table has wrong shape")
        for i in range(dimension):
            if table[i, i] != ENTRY_RING.one():
                raise ValueError(f"{name}: diagonal entry ({i},{i}) is not 1")
            for j in range(i):
                if not table[i, j].is_zero():
                    raise ValueError(
                        f"{name}: nonzero entry ({i},{j}) below the diagonal")
        if self._specialize_table(table, HeisElement.identity()) != \
                Matrix.identity(dimension):
            raise ValueError(f"{name}: table at the identity is not I")
        self.name = name
        self.dimension = dimension
        self.table = table

    @staticmethod
    def _specialize_table(table: Matrix, g: HeisElement) -> Matrix:
        mapping = {"a": g.a, "b": g.b, "c": g.c}
        if all(isinstance(v, Fraction) for v in mapping.values()):
            return table.map(lambda p: p.eval(mapping))
        rings = {v.ring for v in mapping.values() if isinstance(v, Poly)}
        if len(rings) != 1:
            raise ValueError("symbolic components must share one ring")
        ring = rings.pop()
        return table.map(lambda p: p.substitute(mapping, ring))

    def __call__(self, g: HeisElement) -> Matrix:
        """The matrix of g: rational if g is rational, symbolic otherwise."""
        return self._specialize_table(self.table, g)

    def __repr__(self):
        return f"Representation({self.name}, dim={self.dimension})"


def load_representation(name: str, dimension: int, path: Path = None) -> Representation:
    """Read a .rep file: lines "row col polynomial", 1-based indices,
    omitted entries 0 off-diagonal and 1 on-diagonal."""
    path = path or DATA_DIR / f"{name}.rep"
    entries = [[ENTRY_RING.one() if i == j else ENTRY_RING.zero()
                for j in range(dimension)] for i in range(dimension)]
    seen = set()
    for line_no, line in enumerate(path.read_text().splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        row_text, col_text, poly_text = line.split(None, 2)
        i, j = int(row_text) - 1, int(col_text) - 1
        if not (0 <= i < dimension and 0 <= j < dimension):
            raise ValueError(f"{path.name}:{line_no}: index out of range")
        if (i, j) in seen:
            raise ValueError(f"{path.name}:{line_no}: duplicate entry ({i},{j})")
        seen.add((i, j))
        entries[i][j] = ENTRY_RING.parse(poly_text)
    return Representation(name, dimension, Matrix(entries))


_CACHE: dict[str, Representation] = {}


def get_representation(name: str) -> Representation:
    if name not in _CACHE:
        dims = {"theta": 10, "rho6": 6, "rho14": 14}
        if name not in dims:
            raise KeyError(f"unknown representation {name!r}")
        _CACHE[name] = load_representation(name, dims[name])
    return _CACHE[name]


def symbolic_pair() -> tuple[HeisElement, HeisElement]:
    """Two independent symbolic elements over the shared six-variable ring."""
    g = HeisElement.symbolic(PAIR_RING, ("a", "b", "c"))
    h = HeisElement.symbolic(PAIR_RING, ("a'", "b'", "c'"))
    return g, h


def verify_homomorphism(rep: Representation) -> Certificate:
    """Check rep(g) rep(h) = rep(g h) as an exact identity in six variables."""
    g, h = symbolic_pair()
    product = rep(g) * rep(h)
    composed = rep(heis_mul(g, h))
    difference = product - composed
    for i in range(rep.dimension):
        for j in range(rep.dimension):
            if not difference[i, j].is_zero():
                return Certificate.fail(
                    claim=f"homomorphism.{rep.name}",
                    witnesses={
                        "first_nonzero_entry": {"row": i + 1, "col": j + 1,
                                                "value": str(difference[i, j])},
                    },
                    inputs={"representation": rep.name},
                )
    return Certificate.ok(
        claim=f"homomorphism.{rep.name}",
        witnesses={"entries_checked": rep.dimension ** 2,
                   "ring": list(PAIR_RING.names)},
        inputs={"representation": rep.name},
    )


def verify_injectivity_generators(rep: Representation) -> Certificate:
    """PASS iff the table carries the bare coordinate polynomials a, b, c
    somewhere, so a matrix determines its group element by inspection."""
    targets = {n: ENTRY_RING.var(n) for n in ("a", "b", "c")}
    found: dict[str, list[list[int]]] = {n: [] for n in targets}
    for i in range(rep.dimension):
        for j in range(rep.dimension):
            for name, target in targets.items():
                if rep.table[i, j] == target:
                    found[name].append([i + 1, j + 1])
    missing = [n for n, positions in found.items() if not positions]
    inputs = {"representation": rep.name}
    if missing:
        return Certificate.fail(
            claim=f"injectivity.{rep.name}",
            witnesses={"missing_coordinates": missing, "positions": found},
            inputs=inputs,
        )
    return Certificate.ok(
        claim=f"injectivity.{rep.name}",
        witnesses={"positions": found},
        inputs=inputs,
    )


def one_parameter_power(rep: Representation, generator: str,
                        ring: PolyRing, name: str = "n") -> Matrix:
    """The symbolic n-th power of a generator's image.

    Each generator spans a one-parameter subgroup ((t,0,0)*(s,0,0) =
    (t+s,0,0) and likewise for B and C), so the n-th power is the entry
    table specialized at parameter n.
    """
    if generator not in GENERATORS:
        raise KeyError(f"generator must be one of A, B, C, got {generator!r}")
    n = ring.var(name)
    zero = ring.zero()
    components = {"A": (n, zero, zero), "B": (zero, n, zero),
                  "C": (zero, zero, n)}[generator]
    return rep(HeisElement(*components))
