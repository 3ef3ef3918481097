"""Dense exact matrices over Fraction or Poly entries.

Multiplication, powers and equality work for either scalar kind.
Determinant, rank, kernel and inverse are restricted to Fraction
matrices and use fraction-free Bareiss elimination on a denominator-
cleared integer copy, so intermediate values stay integral instead of
accumulating huge reduced fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Sequence, Union

from .poly import Poly
from .rationals import format_rational, parse_rational

Entry = Union[Fraction, Poly]


class Matrix:
    """Immutable rectangular matrix; entries all Fraction or all Poly."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Entry]]):
        rows = [list(r) for r in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        self.rows = len(rows)
        self.cols = width
        self.entries = tuple(tuple(r) for r in rows)

    @staticmethod
    def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> "Matrix":
        return Matrix([[one if i == j else zero for j in range(n)]
                       for i in range(n)])

    @staticmethod
    def from_rows(rows) -> "Matrix":
        return Matrix(rows)

    def __getitem__(self, pos):
        i, j = pos
        return self.entries[i][j]

    def row(self, i: int):
        return self.entries[i]

    def column(self, j: int):
        return tuple(self.entries[i][j] for i in range(self.rows))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other, same=True)
        return Matrix([[a + b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other, same=True)
        return Matrix([[a - b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.entries, other.entries)])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by "
                f"{other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            row = self.entries[i]
            out_row = []
            for col in cols:
                acc = row[0] * col[0]
                for k in range(1, self.cols):
                    acc = acc + row[k] * col[k]
                out_row.append(acc)
            out.append(out_row)
        return Matrix(out)

    def scale(self, factor) -> "Matrix":
        return Matrix([[factor * x for x in row] for row in self.entries])

    def __pow__(self, n: int) -> "Matrix":
        if not self.is_square():
            raise ValueError("powers need a square matrix")
        if not isinstance(n, int) or n < 0:
            raise ValueError("matrix powers must be nonnegative integers")
        result = Matrix.identity(self.rows, one=self._one(), zero=self._zero())
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.cols)])

    def apply(self, vector: Sequence[Entry]) -> list:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.entries:
            acc = row[0] * vector[0]
            for k in range(1, self.cols):
                acc = acc + row[k] * vector[k]
            out.append(acc)
        return out

    def map(self, fn: Callable[[Entry], Entry]) -> "Matrix":
        return Matrix([[fn(x) for x in row] for row in self.entries])

    def is_zero(self) -> bool:
        return all(_entry_is_zero(x) for row in self.entries for x in row)

    def _zero(self):
        sample = self.entries[0][0]
        return sample.ring.zero() if isinstance(sample, Poly) else Fraction(0)

    def _one(self):
        sample = self.entries[0][0]
        return sample.ring.one() if isinstance(sample, Poly) else Fraction(1)

    def _check_shape(self, other: "Matrix", same: bool):
        if same and (self.rows != other.rows or self.cols != other.cols):
            raise ValueError("shape mismatch")

    def _require_rational(self):
        if any(isinstance(x, Poly) for row in self.entries for x in row):
            raise TypeError("operation defined for rational matrices only")

    # -- exact elimination ---------------------------------------------------

    def det(self) -> Fraction:
        """Exact determinant by fraction-free Bareiss elimination."""
        if not self.is_square():
            raise ValueError("determinant needs a square matrix")
        self._require_rational()
        m, scale = _integer_copy(self.entries)
        n = self.rows
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return Fraction(0)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return Fraction(sign * m[n - 1][n - 1]) / scale

    def rank(self) -> int:
        """Exact rank by integer fraction-free elimination."""
        self._require_rational()
        m, _ = _integer_copy(self.entries)
        n_rows, n_cols = self.rows, self.cols
        rank = 0
        prev = 1
        for col in range(n_cols):
            pivot_row = None
            for i in range(rank, n_rows):
                if m[i][col] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            m[rank], m[pivot_row] = m[pivot_row], m[rank]
            for i in range(rank + 1, n_rows):
                for j in range(col + 1, n_cols):
                    m[i][j] = (m[i][j] * m[rank][col]
                               - m[i][col] * m[rank][j]) // prev
                m[i][col] = 0
            prev = m[rank][col]
            rank += 1
            if rank == n_rows:
                break
        return rank

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and its pivot columns (Fraction math)."""
        self._require_rational()
        m = [[Fraction(x) for x in row] for row in self.entries]
        pivots: list[int] = []
        r = 0
        for col in range(self.cols):
            pivot_row = None
            for i in range(r, self.rows):
                if m[i][col] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            pivot = m[r][col]
            m[r] = [x / pivot for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][col] != 0:
                    factor = m[i][col]
                    m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
            pivots.append(col)
            r += 1
            if r == self.rows:
                break
        return Matrix(m), pivots

    def kernel_basis(self) -> list[tuple[Fraction, ...]]:
        """Exact basis of the right null space; [] iff full column rank."""
        reduced, pivots = self.rref()
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        for f in free:
            vec = [Fraction(0)] * self.cols
            vec[f] = Fraction(1)
            for r, p in enumerate(pivots):
                vec[p] = -reduced[r, f]
            basis.append(tuple(vec))
        return basis

    def solve_right(self, rhs: "Matrix") -> "Matrix":
        """Unique solution X of self @ X = rhs for invertible square self."""
        if not self.is_square() or rhs.rows != self.rows:
            raise ValueError("shape mismatch in solve")
        self._require_rational()
        rhs._require_rational()
        n = self.rows
        aug = [[Fraction(x) for x in self.entries[i]] +
               [Fraction(x) for x in rhs.entries[i]] for i in range(n)]
        reduced, pivots = Matrix(aug).rref()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix([[reduced[i, n + j] for j in range(rhs.cols)]
                       for i in range(n)])

    def inverse(self) -> "Matrix":
        return self.solve_right(Matrix.identity(self.rows))

    # -- wire format ---------------------------------------------------------

    def to_text(self) -> str:
        """Row-per-line, tab-separated entries (rationals or poly strings)."""
        lines = []
        for row in self.entries:
            cells = [format_rational(x) if isinstance(x, Fraction) else str(x)
                     for x in row]
            lines.append("\t".join(cells))
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str, ring=None) -> "Matrix":
        rows = []
        for line in text.splitlines():
            if not line.strip():
                continue
            cells = line.split("\t")
            if ring is None:
                rows.append([parse_rational(c) for c in cells])
            else:
                rows.append([ring.parse(c) for c in cells])
        return Matrix(rows)


def _entry_is_zero(x: Entry) -> bool:
    return x.is_zero() if isinstance(x, Poly) else x == 0


def _integer_copy(entries) -> tuple[list[list[int]], Fraction]:
    """Clear denominators row by row; returns the int matrix and the
    factor by which its determinant exceeds the original's."""
    out = []
    scale = Fraction(1)
    for row in entries:
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        scale *= lcm
        out.append([int(x * lcm) for x in row])
    return out, scale


def jordan_partition(m: Matrix) -> list[int]:
    """Jordan block sizes of a unipotent rational matrix, largest first.

    Derived from the rank sequence of the nilpotent part N = m - I: the
    number of blocks of size >= k is rank(N^(k-1)) - rank(N^k).  Raises
    if m - I is not nilpotent.
    """
    if not m.is_square():
        raise ValueError("Jordan analysis needs a square matrix")
    m._require_rational()
    n = m.rows
    nilpotent = m - Matrix.identity(n)
    if not (nilpotent ** n).is_zero():
        raise ValueError("matrix is not unipotent: (m - I) is not nilpotent")
    ranks = [n]  # rank of N^0
    power = Matrix.identity(n)
    while ranks[-1] > 0:
        power = power * nilpotent
        ranks.append(power.rank())
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    partition = []
    for size in range(len(at_least), 0, -1):
        exactly = at_least[size - 1] - (at_least[size] if size < len(at_least) else 0)
        partition.extend([size] * exactly)
    return partition
