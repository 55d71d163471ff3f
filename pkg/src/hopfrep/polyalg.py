"""Exact polynomial and linear-algebra kernel over the rationals.

Sparse multivariate polynomials with arbitrary-precision ``Fraction``
coefficients, reduced Groebner bases computed by Buchberger's algorithm
(product and chain criteria, full auto-reduction, monic output), ideal
membership via normal forms, and exact right-kernel computation.

All values are immutable and hashable.  Determinism is a design goal:
identical inputs, including the variable order of the ring, produce
bit-identical results and printed output.  A ring is simply a tuple of
variable names; the position in the tuple fixes the variable order used
by every monomial order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

Exponents = tuple[int, ...]
Ring = tuple[str, ...]

GREVLEX = "grevlex"
LEX = "lex"
MONOMIAL_ORDERS = (GREVLEX, LEX)


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


class SubstitutionError(ValueError):
    """A substitution map does not match the variables of the operand's ring."""


class PolynomialParseError(ValueError):
    """Malformed polynomial text.  Carries the 1-based offending column."""

    def __init__(self, message: str, column: int) -> None:
        super().__init__(f"column {column}: {message}")
        self.column = column


def monomial_key(order: str) -> Callable[[Exponents], tuple]:
    """Sort key for the given monomial order; larger key means larger monomial.

    ``grevlex`` compares total degree first and breaks ties so that the
    monomial whose rightmost differing exponent is *smaller* wins; ``lex``
    is plain dictionary order on exponent tuples.
    """
    if order == GREVLEX:
        return lambda e: (sum(e), tuple(-x for x in reversed(e)))
    if order == LEX:
        return lambda e: e
    raise ValueError(f"unknown monomial order {order!r}")


_CANONICAL_KEY = monomial_key(GREVLEX)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class Polynomial:
    """A sparse multivariate polynomial with exact rational coefficients.

    ``terms`` is the canonical form: no zero coefficients, no duplicate
    exponent tuples, sorted in descending grevlex order.  Use the
    factory methods (or the arithmetic operators) rather than building
    terms by hand.
    """

    ring: Ring
    terms: tuple[tuple[Exponents, Fraction], ...]

    def __post_init__(self) -> None:
        width = len(self.ring)
        for exponents, coeff in self.terms:
            if len(exponents) != width:
                raise ValueError("exponent tuple length does not match ring")
            if coeff == 0:
                raise ValueError("zero coefficient stored in polynomial")

    # -- construction -------------------------------------------------

    @staticmethod
    def from_dict(ring: Ring, mapping: Mapping[Exponents, Fraction]) -> "Polynomial":
        terms = tuple(
            (exponents, _as_fraction(coeff))
            for exponents, coeff in sorted(
                mapping.items(), key=lambda item: _CANONICAL_KEY(item[0]), reverse=True
            )
            if coeff != 0
        )
        return Polynomial(tuple(ring), terms)

    @staticmethod
    def zero(ring: Ring) -> "Polynomial":
        return Polynomial(tuple(ring), ())

    @staticmethod
    def constant(ring: Ring, value) -> "Polynomial":
        value = _as_fraction(value)
        if value == 0:
            return Polynomial.zero(ring)
        return Polynomial(tuple(ring), (((0,) * len(ring), value),))

    @staticmethod
    def one(ring: Ring) -> "Polynomial":
        return Polynomial.constant(ring, 1)

    @staticmethod
    def variable(ring: Ring, name: str) -> "Polynomial":
        ring = tuple(ring)
        try:
            index = ring.index(name)
        except ValueError:
            raise RingMismatchError(f"variable {name!r} is not in the ring") from None
        exponents = tuple(1 if i == index else 0 for i in range(len(ring)))
        return Polynomial(ring, ((exponents, Fraction(1)),))

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Degree of the zero polynomial is reported as -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e, _ in self.terms)

    def coefficient(self, exponents: Exponents) -> Fraction:
        for e, c in self.terms:
            if e == exponents:
                return c
        return Fraction(0)

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * len(self.ring))

    def _check_same_ring(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(
                f"rings differ: {self.ring} vs {other.ring}"
            )

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_same_ring(other)
            return other
        return Polynomial.constant(self.ring, other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        acc = dict(self.terms)
        for exponents, coeff in other.terms:
            acc[exponents] = acc.get(exponents, Fraction(0)) + coeff
        return Polynomial.from_dict(self.ring, acc)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            value = _as_fraction(other)
            if value == 0:
                return Polynomial.zero(self.ring)
            return Polynomial(self.ring, tuple((e, c * value) for e, c in self.terms))
        other = self._coerce(other)
        acc: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                key = tuple(a + b for a, b in zip(e1, e2))
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        return Polynomial.from_dict(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Polynomial.one(self.ring)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- substitution and evaluation ----------------------------------

    def substitute(self, images: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Ring homomorphism determined by ``images``.

        Every variable of this polynomial's ring must be mapped, and all
        image polynomials must share one target ring; the result lives in
        that ring.
        """
        missing = [v for v in self.ring if v not in images]
        if missing:
            raise SubstitutionError(f"substitution missing variables {missing}")
        extra = [v for v in images if v not in self.ring]
        if extra:
            raise SubstitutionError(f"substitution maps unknown variables {extra}")
        target: Ring | None = None
        for image in images.values():
            if target is None:
                target = image.ring
            elif image.ring != target:
                raise RingMismatchError("substitution images live in different rings")
        assert target is not None
        ordered = [images[v] for v in self.ring]
        result = Polynomial.zero(target)
        for exponents, coeff in self.terms:
            term = Polynomial.constant(target, coeff)
            for image, power in zip(ordered, exponents):
                if power:
                    term = term * image**power
            result = result + term
        return result

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        """Evaluate at a rational point; every ring variable needs a value."""
        missing = [v for v in self.ring if v not in point]
        if missing:
            raise SubstitutionError(f"evaluation point missing variables {missing}")
        values = [_as_fraction(point[v]) for v in self.ring]
        total = Fraction(0)
        for exponents, coeff in self.terms:
            term = coeff
            for value, power in zip(values, exponents):
                if power:
                    term *= value**power
            total += term
        return total

    def rename(self, ring: Ring, mapping: Mapping[str, str]) -> "Polynomial":
        """Inject into ``ring`` by renaming each variable via ``mapping``."""
        ring = tuple(ring)
        positions = []
        for v in self.ring:
            name = mapping.get(v, v)
            try:
                positions.append(ring.index(name))
            except ValueError:
                raise RingMismatchError(f"variable {name!r} is not in the target ring") from None
        width = len(ring)
        acc: dict[Exponents, Fraction] = {}
        for exponents, coeff in self.terms:
            new = [0] * width
            for position, power in zip(positions, exponents):
                new[position] += power
            acc[tuple(new)] = acc.get(tuple(new), Fraction(0)) + coeff
        return Polynomial.from_dict(ring, acc)

    def __str__(self) -> str:
        return format_polynomial(self)


def embed(p: Polynomial, ring: Ring) -> Polynomial:
    """Reinterpret ``p`` in a larger ring containing all its variables."""
    return p.rename(ring, {})


# ---------------------------------------------------------------------------
# Ideals and Groebner bases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    ring: Ring
    generators: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatchError("ideal generator in a different ring")


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced, monic Groebner basis together with its defining data."""

    ideal: Ideal
    order: str
    basis: tuple[Polynomial, ...]

    @property
    def ring(self) -> Ring:
        return self.ideal.ring


def _leading(p: Polynomial, key) -> tuple[Exponents, Fraction]:
    return max(p.terms, key=lambda term: key(term[0]))


def _monic(p: Polynomial, key) -> Polynomial:
    _, lc = _leading(p, key)
    if lc == 1:
        return p
    return p * (Fraction(1) / lc)


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def normal_form(p: Polynomial, divisors: Sequence[Polynomial], order: str = GREVLEX) -> Polynomial:
    """Remainder of full multivariate division of ``p`` by ``divisors``.

    Every term of the result is irreducible: divisible by no divisor's
    leading monomial.  Divisors are tried in the given order, so the
    output is deterministic for a fixed sequence.
    """
    key = monomial_key(order)
    prepared = []
    for g in divisors:
        if g.is_zero():
            continue
        lm, lc = _leading(g, key)
        tail = tuple(t for t in g.terms if t[0] != lm)
        prepared.append((lm, lc, tail))
    work = dict(p.terms)
    remainder: dict[Exponents, Fraction] = {}
    while work:
        exponents = max(work, key=key)
        coeff = work.pop(exponents)
        for lm, lc, tail in prepared:
            if _divides(lm, exponents):
                shift = tuple(x - y for x, y in zip(exponents, lm))
                factor = coeff / lc
                for te, tc in tail:
                    moved = tuple(x + y for x, y in zip(te, shift))
                    value = work.get(moved, Fraction(0)) - factor * tc
                    if value == 0:
                        work.pop(moved, None)
                    else:
                        work[moved] = value
                break
        else:
            remainder[exponents] = coeff
    return Polynomial.from_dict(p.ring, remainder)


def _s_polynomial(f: Polynomial, g: Polynomial, key) -> Polynomial:
    lf, cf = _leading(f, key)
    lg, cg = _leading(g, key)
    lcm = _lcm(lf, lg)
    shift_f = tuple(x - y for x, y in zip(lcm, lf))
    shift_g = tuple(x - y for x, y in zip(lcm, lg))
    mono_f = Polynomial.from_dict(f.ring, {shift_f: Fraction(1, 1) / cf})
    mono_g = Polynomial.from_dict(g.ring, {shift_g: Fraction(1, 1) / cg})
    return mono_f * f - mono_g * g


def groebner(ideal: Ideal, order: str = GREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` for the requested monomial order.

    Buchberger's algorithm with the product criterion (coprime leading
    monomials) and the chain criterion, followed by minimalization and
    full tail reduction.  Basis elements are monic and sorted with the
    largest leading monomial first.
    """
    if order not in MONOMIAL_ORDERS:
        raise ValueError(f"unknown monomial order {order!r}")
    key = monomial_key(order)
    basis = [_monic(g, key) for g in ideal.generators if not g.is_zero()]
    lead = [_leading(g, key)[0] for g in basis]

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    processed: set[tuple[int, int]] = set()
    while pairs:
        pair = min(pairs, key=lambda ij: (key(_lcm(lead[ij[0]], lead[ij[1]])), ij))
        pairs.discard(pair)
        processed.add(pair)
        i, j = pair
        lcm = _lcm(lead[i], lead[j])
        if lcm == tuple(a + b for a, b in zip(lead[i], lead[j])):
            continue  # product criterion: coprime leading monomials
        skip = False
        for k in range(len(basis)):
            if k in pair or not _divides(lead[k], lcm):
                continue
            p1 = (min(i, k), max(i, k))
            p2 = (min(j, k), max(j, k))
            if p1 in processed and p2 in processed:
                skip = True
                break
        if skip:
            continue  # chain criterion
        s = _s_polynomial(basis[i], basis[j], key)
        r = normal_form(s, basis, order)
        if not r.is_zero():
            basis.append(_monic(r, key))
            lead.append(_leading(basis[-1], key)[0])
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))

    # Minimalize: visit elements by increasing leading monomial and drop
    # any whose leading monomial is divisible by one already kept.
    keep: list[int] = []
    for i in sorted(range(len(basis)), key=lambda i: (key(lead[i]), i)):
        if not any(_divides(lead[j], lead[i]) for j in keep):
            keep.append(i)
    minimal = [basis[i] for i in sorted(keep)]
    # Tail-reduce each element against the others; leading monomials are
    # pairwise indivisible at this point, so one pass suffices.
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(_monic(normal_form(g, others, order), key))
    reduced.sort(key=lambda g: key(_leading(g, key)[0]), reverse=True)
    return GroebnerBasis(ideal=ideal, order=order, basis=tuple(reduced))


def ideal_member(p: Polynomial, gb: GroebnerBasis) -> bool:
    """True iff the normal form of ``p`` modulo the basis is zero."""
    if p.ring != gb.ring:
        raise RingMismatchError("polynomial ring does not match the basis ring")
    return normal_form(p, gb.basis, gb.order).is_zero()


# ---------------------------------------------------------------------------
# Exact linear algebra
# ---------------------------------------------------------------------------


def linear_kernel(rows: Sequence[Sequence], width: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel of a rational matrix, via exact RREF.

    ``width`` is only needed for a matrix with no rows.  The basis vectors
    are indexed by the free columns in increasing order, each with a 1 in
    its free coordinate; the kernel dimension is the length of the result.
    """
    matrix = [[_as_fraction(x) for x in row] for row in rows]
    if matrix:
        widths = {len(row) for row in matrix}
        if len(widths) != 1:
            raise ValueError("matrix rows have unequal lengths")
        width = widths.pop()
    elif width is None:
        raise ValueError("width is required for a matrix with no rows")

    pivot_cols: list[int] = []
    row = 0
    for col in range(width):
        pivot = next((r for r in range(row, len(matrix)) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[row], matrix[pivot] = matrix[pivot], matrix[row]
        scale = matrix[row][col]
        matrix[row] = [x / scale for x in matrix[row]]
        for r in range(len(matrix)):
            if r != row and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [x - factor * y for x, y in zip(matrix[r], matrix[row])]
        pivot_cols.append(col)
        row += 1

    free_cols = [c for c in range(width) if c not in pivot_cols]
    basis = []
    for free in free_cols:
        vector = [Fraction(0)] * width
        vector[free] = Fraction(1)
        for r, col in enumerate(pivot_cols):
            vector[col] = -matrix[r][free]
        basis.append(vector)
    return basis


def matrix_rank(rows: Sequence[Sequence], width: int | None = None) -> int:
    if not rows and width is None:
        return 0
    w = width if width is not None else len(rows[0])
    return w - len(linear_kernel(rows, w))


# ---------------------------------------------------------------------------
# Text syntax
# ---------------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[-+*^()]))"
)


def format_polynomial(p: Polynomial) -> str:
    """Deterministic text form: terms in descending grevlex order.

    Monomials print as ``coef*var^exp*...`` with unit coefficients and
    unit exponents elided, e.g. ``3*x1_11^2*t1 - 1``.
    """
    if not p.terms:
        return "0"
    pieces = []
    for position, (exponents, coeff) in enumerate(p.terms):
        factors = [
            name if power == 1 else f"{name}^{power}"
            for name, power in zip(p.ring, exponents)
            if power
        ]
        magnitude = abs(coeff)
        if not factors or magnitude != 1:
            factors.insert(0, str(magnitude))
        body = "*".join(factors)
        if position == 0:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse the textual polynomial syntax over the given ring.

    Grammar: sum of terms joined by ``+``/``-``; a term is ``*``-separated
    factors, each a rational literal or ``var`` or ``var^exp``.
    """
    ring = tuple(ring)
    index = {name: i for i, name in enumerate(ring)}
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            rest = text[pos:]
            if rest.strip() == "":
                break
            bad = pos + (len(rest) - len(rest.lstrip()))
            raise PolynomialParseError(f"unexpected character {text[bad]!r}", bad + 1)
        kind = match.lastgroup
        assert kind is not None
        tokens.append((kind, match.group(kind), match.start(kind) + 1))
        pos = match.end()

    result: dict[Exponents, Fraction] = {}
    cursor = 0

    def peek():
        return tokens[cursor] if cursor < len(tokens) else (None, None, len(text) + 1)

    def parse_factor() -> tuple[Fraction, dict[int, int]]:
        nonlocal cursor
        kind, value, column = peek()
        if kind == "number":
            cursor += 1
            return Fraction(value), {}
        if kind == "name":
            cursor += 1
            if value not in index:
                raise PolynomialParseError(f"unknown variable {value!r}", column)
            power = 1
            kind2, value2, _ = peek()
            if kind2 == "op" and value2 == "^":
                cursor += 1
                kind3, value3, column3 = peek()
                if kind3 != "number" or "/" in (value3 or ""):
                    raise PolynomialParseError("expected integer exponent after '^'", column3)
                cursor += 1
                power = int(value3)
            return Fraction(1), {index[value]: power}
        raise PolynomialParseError("expected a coefficient or variable", column)

    def parse_term() -> tuple[Fraction, Exponents]:
        nonlocal cursor
        coeff, powers = parse_factor()
        exponents = [0] * len(ring)
        for i, power in powers.items():
            exponents[i] += power
        while True:
            kind, value, _ = peek()
            if kind == "op" and value == "*":
                cursor += 1
                more_coeff, more_powers = parse_factor()
                coeff *= more_coeff
                for i, power in more_powers.items():
                    exponents[i] += power
            else:
                break
        return coeff, tuple(exponents)

    if not tokens:
        raise PolynomialParseError("empty polynomial", 1)
    sign = Fraction(1)
    kind, value, _ = peek()
    if kind == "op" and value in "+-":
        cursor += 1
        sign = Fraction(-1) if value == "-" else Fraction(1)
    while True:
        coeff, exponents = parse_term()
        coeff *= sign
        result[exponents] = result.get(exponents, Fraction(0)) + coeff
        kind, value, column = peek()
        if kind is None:
            break
        if kind == "op" and value in "+-":
            cursor += 1
            sign = Fraction(-1) if value == "-" else Fraction(1)
            continue
        raise PolynomialParseError(f"expected '+' or '-', got {value!r}", column)
    return Polynomial.from_dict(ring, result)
