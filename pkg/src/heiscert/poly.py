"""Sparse multivariate polynomials over exact rationals.

A polynomial lives in a ring context (an ordered tuple of variable names)
and is stored as a map from exponent tuples to nonzero Fraction
coefficients.  The zero polynomial is the empty map, so structural
equality of the term maps is semantic equality.  Everything is immutable
and exact; there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

NEG_INFINITY = float("-inf")

# Exponents are bounded so that accidental runaway powers fail loudly
# instead of silently eating memory.
MAX_EXPONENT = 2**31

Scalar = Union[int, Fraction]


class PolyRing:
    """An ordered set of variable names fixing the exponent layout."""

    def __init__(self, *names: str):
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = tuple(names)
        self._index = {name: i for i, name in enumerate(names)}

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)})"

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def var(self, name: str) -> "Poly":
        """The polynomial consisting of the single variable `name`."""
        exps = [0] * len(self.names)
        exps[self._index[name]] = 1
        return Poly(self, {tuple(exps): Fraction(1)})

    def vars(self, *names: str) -> tuple["Poly", ...]:
        return tuple(self.var(n) for n in names)

    def const(self, value: Scalar) -> "Poly":
        """The constant polynomial with the given rational value."""
        value = Fraction(value)
        if value == 0:
            return Poly(self, {})
        return Poly(self, {(0,) * len(self.names): value})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def parse(self, text: str) -> "Poly":
        """Parse the textual sum format emitted by Poly.__str__.

        Grammar: terms joined by top-level + or -, each term a product of
        '*'-separated factors; a factor is a rational literal "p/q"/"p" or
        a variable with an optional "^exp".
        """
        return _parse_poly(self, text)


class Poly:
    """Immutable sparse polynomial over Fraction in a fixed ring."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple, Fraction]):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c != 0}
        for e in self.terms:
            if len(e) != len(ring.names):
                raise ValueError(f"exponent tuple {e} does not fit {ring}")
            if any(x < 0 or x > MAX_EXPONENT for x in e):
                raise OverflowError(f"exponent out of range in {e}")
        self._hash = None

    # -- ring plumbing ---------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError(
                    f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(x == 0 for x in e) for e in self.terms)

    def constant_value(self) -> Fraction:
        """The rational value of a constant polynomial."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        if not self.terms:
            return Fraction(0)
        return next(iter(self.terms.values()))

    def variables(self) -> tuple[str, ...]:
        """Names of the variables actually occurring."""
        used = [False] * len(self.ring.names)
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return tuple(n for n, u in zip(self.ring.names, used) if u)

    def degree_in(self, name: str):
        """Highest exponent of `name`; NEG_INFINITY for the zero poly."""
        if not self.terms:
            return NEG_INFINITY
        i = self.ring._index[name]
        return max(e[i] for e in self.terms)

    def total_degree(self):
        if not self.terms:
            return NEG_INFINITY
        return max(sum(e) for e in self.terms)

    # -- evaluation and substitution --------------------------------------

    def eval(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at a rational point covering every occurring variable."""
        missing = [n for n in self.variables() if n not in assignment]
        if missing:
            raise KeyError(f"assignment missing variables {missing}")
        values = {n: Fraction(assignment[n]) for n in assignment}
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for name, exp in zip(self.ring.names, e):
                if exp:
                    term *= values[name] ** exp
            total += term
        return total

    def substitute(self, mapping: Mapping[str, Union["Poly", Scalar]],
                   ring: PolyRing) -> "Poly":
        """Map every occurring variable to a polynomial of `ring`."""
        missing = [n for n in self.variables() if n not in mapping]
        if missing:
            raise KeyError(f"substitution missing variables {missing}")
        images = {}
        for name, value in mapping.items():
            if isinstance(value, Poly):
                if value.ring != ring:
                    raise ValueError("substitution image in wrong ring")
                images[name] = value
            else:
                images[name] = ring.const(value)
        total = ring.zero()
        for e, c in self.terms.items():
            term = ring.const(c)
            for name, exp in zip(self.ring.names, e):
                if exp:
                    term = term * images[name] ** exp
            total = total + term
        return total

    # -- canonical text form ----------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms in graded-lexicographic order, highest first."""
        return sorted(self.terms.items(),
                      key=lambda item: (sum(item[0]), item[0]),
                      reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            factors = []
            for name, exp in zip(self.ring.names, e):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = body if sign == "+" else f"-{body}"
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Poly({self})"


def _parse_poly(ring: PolyRing, text: str) -> Poly:
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial string")
    if text == "0":
        return ring.zero()
    total = ring.zero()
    for sign, chunk in _split_terms(text):
        total = total + sign * _parse_term(ring, chunk)
    return total


def _split_terms(text: str) -> Iterable[tuple[int, str]]:
    # Top-level +/- separators; '/' only appears inside rational literals.
    terms = []
    sign = 1
    current = []
    for ch in text:
        if ch in "+-":
            if current and any(not c.isspace() for c in current):
                terms.append((sign, "".join(current)))
                sign = 1
                current = []
            sign = -sign if ch == "-" else sign
        else:
            current.append(ch)
    if not current or all(c.isspace() for c in current):
        raise ValueError(f"dangling sign in {text!r}")
    terms.append((sign, "".join(current)))
    return terms


def _parse_term(ring: PolyRing, chunk: str) -> Poly:
    term = ring.one()
    for factor in chunk.split("*"):
        factor = factor.strip()
        if not factor:
            raise ValueError(f"empty factor in term {chunk!r}")
        head = factor[0]
        if head.isdigit():
            term = term * ring.const(Fraction(factor))
            continue
        if "^" in factor:
            name, _, exp_text = factor.partition("^")
            exp = int(exp_text)
        else:
            name, exp = factor, 1
        if name not in ring._index:
            raise ValueError(f"unknown variable {name!r} for {ring}")
        term = term * ring.var(name) ** exp
    return term
