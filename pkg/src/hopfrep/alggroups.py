"""Coordinate Hopf algebras of affine algebraic groups, and Lie structure data.

A group is presented by polynomial generators, a defining ideal, and the
three structure maps as polynomial data: the counit is the identity point,
the comultiplication lands in a doubled ring (primed and double-primed
variable copies), and the antipode is polynomial thanks to the adjugate
trick -- inverse matrix entries are adjugate entries times a determinant-
inverse generator, so no localization is ever needed.

Shipped groups: GL(m) and SL(m) for m <= 3, tori, and the additive group.
Arbitrary presented groups load from JSON and are validated, not trusted.
Multiple copies of a group live in block-renamed variable rings, which is
the concrete form of the iterated tensor power of the coordinate ring.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

from .groups import FreeWord
from .polyalg import (
    GREVLEX,
    Ideal,
    Polynomial,
    Ring,
    groebner,
    ideal_member,
    linear_kernel,
    parse_polynomial,
)


class GroupDataError(ValueError):
    """Inconsistent presented-group data (bad counit, ideal, or structure map)."""


class MissingMatrixShapeError(ValueError):
    """The operation needs a matrix realization the group does not carry."""


class LieDataError(ValueError):
    """Structure constants fail antisymmetry or the Jacobi identity."""


# ---------------------------------------------------------------------------
# Presented commutative Hopf algebras
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatrixShape:
    """An m x m matrix of coordinates together with its antipode matrix."""

    size: int
    entries: tuple[tuple[Polynomial, ...], ...]
    antipode_entries: tuple[tuple[Polynomial, ...], ...]


@dataclass(frozen=True)
class PresentedCommHopf:
    """Coordinate ring of an affine algebraic group, as explicit polynomial data.

    ``comultiplication[i]`` is the image of ``variables[i]`` in the doubled
    ring (every variable once primed, once double-primed, in that order);
    ``antipode[i]`` lives in the base ring; ``counit[i]`` is the value at
    the identity point.  ``copy_templates[i]`` names variable ``i`` of copy
    ``c`` via ``.format(c=c)``.
    """

    name: str
    variables: Ring
    defining_ideal: Ideal
    counit: tuple[Fraction, ...]
    comultiplication: tuple[Polynomial, ...]
    antipode: tuple[Polynomial, ...]
    copy_templates: tuple[str, ...]
    matrix_shape: MatrixShape | None = None

    @property
    def doubled_ring(self) -> Ring:
        return tuple(f"{v}'" for v in self.variables) + tuple(
            f"{v}''" for v in self.variables
        )

    def counit_point(self) -> dict[str, Fraction]:
        return dict(zip(self.variables, self.counit))

    def copy_name(self, variable: str, copy: int) -> str:
        return self.copy_templates[self.variables.index(variable)].format(c=copy)

    def __str__(self) -> str:
        return self.name


def block_ring(group: PresentedCommHopf, copies: Sequence[int]) -> Ring:
    """Concatenated variable blocks, one per copy, in the given copy order."""
    names = []
    for c in copies:
        names.extend(template.format(c=c) for template in group.copy_templates)
    return tuple(names)


def block_map(group: PresentedCommHopf, copy: int) -> dict[str, str]:
    return {
        v: template.format(c=copy)
        for v, template in zip(group.variables, group.copy_templates)
    }


def block_ideal_generators(
    group: PresentedCommHopf, copy: int, ring: Ring
) -> list[Polynomial]:
    mapping = block_map(group, copy)
    return [g.rename(ring, mapping) for g in group.defining_ideal.generators]


def _matrix_for_copy(
    group: PresentedCommHopf, copy: int, ring: Ring, antipode: bool
) -> list[list[Polynomial]]:
    shape = group.matrix_shape
    if shape is None:
        raise MissingMatrixShapeError(f"group {group.name} has no matrix shape")
    source = shape.antipode_entries if antipode else shape.entries
    mapping = block_map(group, copy)
    return [[entry.rename(ring, mapping) for entry in row] for row in source]


def _matrix_mul(
    a: Sequence[Sequence[Polynomial]], b: Sequence[Sequence[Polynomial]], ring: Ring
) -> list[list[Polynomial]]:
    size = len(a)
    return [
        [
            sum((a[i][k] * b[k][j] for k in range(size)), Polynomial.zero(ring))
            for j in range(size)
        ]
        for i in range(size)
    ]


def _matrix_identity(size: int, ring: Ring) -> list[list[Polynomial]]:
    return [
        [Polynomial.one(ring) if i == j else Polynomial.zero(ring) for j in range(size)]
        for i in range(size)
    ]


def matrix_word(
    word: FreeWord,
    group: PresentedCommHopf,
    ring: Ring | None = None,
    copy_base: int = 1,
) -> list[list[Polynomial]]:
    """Symbolic product of copy matrices along a word.

    Letter ``i`` uses the matrix of copy ``copy_base + i - 1``; a negative
    exponent uses that copy's antipode (adjugate) matrix instead, so the
    result is honestly polynomial.  The empty word gives the identity.
    """
    if group.matrix_shape is None:
        raise MissingMatrixShapeError(f"group {group.name} has no matrix shape")
    copies = [copy_base + i for i in range(word.rank)]
    if ring is None:
        ring = block_ring(group, copies)
    plain = {}
    inverse = {}
    result = _matrix_identity(group.matrix_shape.size, ring)
    for index, exponent in word.letters:
        copy = copy_base + index - 1
        if exponent == 1:
            if index not in plain:
                plain[index] = _matrix_for_copy(group, copy, ring, antipode=False)
            factor = plain[index]
        else:
            if index not in inverse:
                inverse[index] = _matrix_for_copy(group, copy, ring, antipode=True)
            factor = inverse[index]
        result = _matrix_mul(result, factor, ring)
    return result


def trace_of_word(
    word: FreeWord,
    group: PresentedCommHopf,
    ring: Ring | None = None,
    copy_base: int = 1,
) -> Polynomial:
    """Trace of the matrix realized by a word; the standard invariant observable."""
    matrix = matrix_word(word, group, ring=ring, copy_base=copy_base)
    target = matrix[0][0].ring
    return sum((matrix[i][i] for i in range(len(matrix))), Polynomial.zero(target))


def conjugation_substitution(
    p: Polynomial, group: PresentedCommHopf, n_copies: int | None = None
) -> Polynomial:
    """Substitute every copy's matrix X by A X S(A), A the conjugator copy 0.

    ``p`` must live in the block ring of copies ``1..n``; the result lives
    in the ring with the conjugator block prepended.  Variables that are
    not matrix entries (determinant inverses) are fixed, which is correct
    up to the conjugator's defining ideal since conjugation preserves the
    determinant.
    """
    shape = group.matrix_shape
    if shape is None:
        raise MissingMatrixShapeError(f"group {group.name} has no matrix shape")
    if n_copies is None:
        if len(p.ring) % len(group.variables):
            raise GroupDataError("polynomial ring is not a whole number of blocks")
        n_copies = len(p.ring) // len(group.variables)
    copies = list(range(1, n_copies + 1))
    if p.ring != block_ring(group, copies):
        raise GroupDataError("polynomial does not live in the copy block ring")
    extended = block_ring(group, [0] + copies)

    entry_names = {}
    for i in range(shape.size):
        for j in range(shape.size):
            entry = shape.entries[i][j]
            if len(entry.terms) == 1 and sum(entry.terms[0][0]) == 1 and entry.terms[0][1] == 1:
                position = entry.terms[0][0].index(1)
                entry_names[group.variables[position]] = (i, j)

    conjugator = _matrix_for_copy(group, 0, extended, antipode=False)
    conjugator_inv = _matrix_for_copy(group, 0, extended, antipode=True)
    images: dict[str, Polynomial] = {}
    for c in copies:
        mapping = block_map(group, c)
        x = _matrix_for_copy(group, c, extended, antipode=False)
        conjugated = _matrix_mul(_matrix_mul(conjugator, x, extended), conjugator_inv, extended)
        for v in group.variables:
            name = mapping[v]
            if v in entry_names:
                i, j = entry_names[v]
                images[name] = conjugated[i][j]
            else:
                images[name] = Polynomial.variable(extended, name)
    return p.substitute(images)


@dataclass(frozen=True)
class CotangentData:
    """Tangent data at the identity: the kernel of the linearized ideal."""

    dimension: int
    variables: Ring
    linear_rows: tuple[tuple[Fraction, ...], ...]
    kernel_basis: tuple[tuple[Fraction, ...], ...]


def cotangent_at_identity(group: PresentedCommHopf) -> CotangentData:
    """Linearize the defining ideal at the identity point.

    Each variable is shifted by its counit value; the degree-1 parts of
    the shifted generators cut out the tangent space, whose dimension is
    the number of variables minus the rank of the linear parts.
    """
    ring = group.variables
    point = group.counit_point()
    shift = {
        v: Polynomial.variable(ring, v) + Polynomial.constant(ring, point[v])
        for v in ring
    }
    rows = []
    for g in group.defining_ideal.generators:
        shifted = g.substitute(shift)
        row = [Fraction(0)] * len(ring)
        for exponents, coeff in shifted.terms:
            if sum(exponents) == 1:
                row[exponents.index(1)] = coeff
        rows.append(tuple(row))
    kernel = linear_kernel([list(r) for r in rows], width=len(ring))
    return CotangentData(
        dimension=len(kernel),
        variables=ring,
        linear_rows=tuple(rows),
        kernel_basis=tuple(tuple(v) for v in kernel),
    )


# ---------------------------------------------------------------------------
# Construction of the shipped groups
# ---------------------------------------------------------------------------


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def _determinant(matrix: Sequence[Sequence[Polynomial]], ring: Ring) -> Polynomial:
    size = len(matrix)
    total = Polynomial.zero(ring)
    for perm in itertools.permutations(range(size)):
        term = Polynomial.constant(ring, _permutation_sign(perm))
        for i in range(size):
            term = term * matrix[i][perm[i]]
        total = total + term
    return total


def _adjugate(matrix: Sequence[Sequence[Polynomial]], ring: Ring) -> list[list[Polynomial]]:
    size = len(matrix)
    if size == 1:
        return [[Polynomial.one(ring)]]
    out = [[Polynomial.zero(ring)] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            minor = [
                [matrix[r][c] for c in range(size) if c != i]
                for r in range(size) if r != j
            ]
            cofactor = _determinant(minor, ring)
            if (i + j) % 2:
                cofactor = -cofactor
            out[i][j] = cofactor
    return out


def _validate_hopf(group: PresentedCommHopf) -> None:
    """Check the structural data really is a Hopf algebra presentation.

    Verifies that the counit is a point of the variety, that antipode and
    comultiplication map the ideal into the (extended) ideal, and that a
    matrix shape satisfies X * S(X) = identity modulo the ideal.
    """
    point = group.counit_point()
    for g in group.defining_ideal.generators:
        if g.evaluate(point) != 0:
            raise GroupDataError(
                f"{group.name}: counit is not a zero of generator {g}"
            )

    gb = groebner(group.defining_ideal, GREVLEX)
    antipode_map = dict(zip(group.variables, group.antipode))
    for g in group.defining_ideal.generators:
        if not ideal_member(g.substitute(antipode_map), gb):
            raise GroupDataError(f"{group.name}: antipode does not preserve the ideal")

    doubled = group.doubled_ring
    doubled_generators = []
    for g in group.defining_ideal.generators:
        doubled_generators.append(g.rename(doubled, {v: f"{v}'" for v in group.variables}))
        doubled_generators.append(g.rename(doubled, {v: f"{v}''" for v in group.variables}))
    doubled_gb = groebner(Ideal(doubled, tuple(doubled_generators)), GREVLEX)
    comult_map = dict(zip(group.variables, group.comultiplication))
    for g in group.defining_ideal.generators:
        if not ideal_member(g.substitute(comult_map), doubled_gb):
            raise GroupDataError(
                f"{group.name}: comultiplication does not preserve the ideal"
            )

    shape = group.matrix_shape
    if shape is not None:
        ring = group.variables
        product = _matrix_mul(shape.entries, shape.antipode_entries, ring)
        identity = _matrix_identity(shape.size, ring)
        for i in range(shape.size):
            for j in range(shape.size):
                if not ideal_member(product[i][j] - identity[i][j], gb):
                    raise GroupDataError(
                        f"{group.name}: X * S(X) is not the identity modulo the ideal"
                    )
                mapped = shape.entries[i][j].substitute(antipode_map)
                if not ideal_member(mapped - shape.antipode_entries[i][j], gb):
                    raise GroupDataError(
                        f"{group.name}: antipode matrix disagrees with the antipode map"
                    )


def _matrix_group(kind: str, size: int) -> PresentedCommHopf:
    if not 1 <= size <= 3:
        raise GroupDataError(f"{kind}({size}): only sizes 1..3 ship")
    entries = [f"x{i}{j}" for i in range(1, size + 1) for j in range(1, size + 1)]
    has_t = kind == "gl"
    variables = tuple(entries) + (("t",) if has_t else ())
    templates = tuple(
        "x{c}_" + f"{i}{j}" for i in range(1, size + 1) for j in range(1, size + 1)
    ) + (("t{c}",) if has_t else ())

    ring = variables
    var = {v: Polynomial.variable(ring, v) for v in variables}
    x = [[var[f"x{i}{j}"] for j in range(1, size + 1)] for i in range(1, size + 1)]
    det = _determinant(x, ring)
    adj = _adjugate(x, ring)

    if has_t:
        ideal = Ideal(ring, (var["t"] * det - 1,))
        antipode_matrix = [[adj[i][j] * var["t"] for j in range(size)] for i in range(size)]
        antipode = tuple(
            antipode_matrix[i][j] for i in range(size) for j in range(size)
        ) + (det,)
    else:
        ideal = Ideal(ring, (det - 1,))
        antipode_matrix = adj
        antipode = tuple(adj[i][j] for i in range(size) for j in range(size))

    doubled = tuple(f"{v}'" for v in variables) + tuple(f"{v}''" for v in variables)
    dvar = {v: Polynomial.variable(doubled, v) for v in doubled}
    comultiplication = []
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            comultiplication.append(
                sum(
                    (dvar[f"x{i}{k}'"] * dvar[f"x{k}{j}''"] for k in range(1, size + 1)),
                    Polynomial.zero(doubled),
                )
            )
    if has_t:
        comultiplication.append(dvar["t'"] * dvar["t''"])

    counit = tuple(
        Fraction(1) if i == j else Fraction(0)
        for i in range(1, size + 1)
        for j in range(1, size + 1)
    ) + ((Fraction(1),) if has_t else ())

    group = PresentedCommHopf(
        name=f"{kind}:{size}",
        variables=variables,
        defining_ideal=ideal,
        counit=counit,
        comultiplication=tuple(comultiplication),
        antipode=antipode,
        copy_templates=templates,
        matrix_shape=MatrixShape(
            size=size,
            entries=tuple(tuple(row) for row in x),
            antipode_entries=tuple(tuple(row) for row in antipode_matrix),
        ),
    )
    _validate_hopf(group)
    return group


def _torus_group(k: int) -> PresentedCommHopf:
    if k < 1:
        raise GroupDataError("torus rank must be at least 1")
    if k == 1:
        variables: tuple[str, ...] = ("z", "t")
        templates: tuple[str, ...] = ("z{c}", "t{c}")
    else:
        variables = tuple(
            name for i in range(1, k + 1) for name in (f"z{i}", f"t{i}")
        )
        templates = tuple(
            name for i in range(1, k + 1) for name in (f"z{i}_{{c}}", f"t{i}_{{c}}")
        )
    ring = variables
    var = {v: Polynomial.variable(ring, v) for v in variables}
    pairs = [(variables[2 * i], variables[2 * i + 1]) for i in range(k)]
    ideal = Ideal(ring, tuple(var[z] * var[t] - 1 for z, t in pairs))
    counit = tuple(Fraction(1) for _ in variables)
    doubled = tuple(f"{v}'" for v in variables) + tuple(f"{v}''" for v in variables)
    dvar = {v: Polynomial.variable(doubled, v) for v in doubled}
    comultiplication = tuple(dvar[f"{v}'"] * dvar[f"{v}''"] for v in variables)
    antipode = []
    for z, t in pairs:
        antipode.extend([var[t], var[z]])
    shape = None
    if k == 1:
        shape = MatrixShape(1, ((var["z"],),), ((var["t"],),))
    group = PresentedCommHopf(
        name=f"torus:{k}",
        variables=variables,
        defining_ideal=ideal,
        counit=counit,
        comultiplication=comultiplication,
        antipode=tuple(antipode),
        copy_templates=templates,
        matrix_shape=shape,
    )
    _validate_hopf(group)
    return group


def _additive_group() -> PresentedCommHopf:
    variables = ("u",)
    ring = variables
    doubled = ("u'", "u''")
    group = PresentedCommHopf(
        name="ga",
        variables=variables,
        defining_ideal=Ideal(ring, ()),
        counit=(Fraction(0),),
        comultiplication=(
            Polynomial.variable(doubled, "u'") + Polynomial.variable(doubled, "u''"),
        ),
        antipode=(-Polynomial.variable(ring, "u"),),
        copy_templates=("u{c}",),
        matrix_shape=None,
    )
    _validate_hopf(group)
    return group


def _group_from_json(data: Mapping) -> PresentedCommHopf:
    variables = tuple(data["variables"])
    ring = variables
    doubled = tuple(f"{v}'" for v in variables) + tuple(f"{v}''" for v in variables)
    ideal = Ideal(ring, tuple(parse_polynomial(s, ring) for s in data.get("ideal", [])))
    counit = tuple(Fraction(str(data["counit"][v])) for v in variables)
    comultiplication = tuple(
        parse_polynomial(data["delta"][v], doubled) for v in variables
    )
    antipode = tuple(parse_polynomial(data["antipode"][v], ring) for v in variables)
    shape = None
    if "matrix" in data:
        entries = tuple(
            tuple(parse_polynomial(s, ring) for s in row) for row in data["matrix"]
        )
        anti = tuple(
            tuple(parse_polynomial(s, ring) for s in row)
            for row in data["antipode_matrix"]
        )
        shape = MatrixShape(len(entries), entries, anti)
    group = PresentedCommHopf(
        name=str(data.get("name", "custom")),
        variables=variables,
        defining_ideal=ideal,
        counit=counit,
        comultiplication=comultiplication,
        antipode=antipode,
        copy_templates=tuple(f"{v}_{{c}}" for v in variables),
        matrix_shape=shape,
    )
    _validate_hopf(group)
    return group


def make_group(spec) -> PresentedCommHopf:
    """Build a presented group from a spec string.

    ``gl:m`` / ``sl:m`` (m <= 3), ``torus:k``, ``ga``, or a path to a JSON
    file with the full presentation schema.
    """
    if isinstance(spec, PresentedCommHopf):
        return spec
    text = str(spec)
    if text.startswith("gl:") or text.startswith("sl:"):
        kind, _, size = text.partition(":")
        return _matrix_group(kind, int(size))
    if text.startswith("torus:"):
        return _torus_group(int(text.split(":", 1)[1]))
    if text == "ga":
        return _additive_group()
    path = Path(text)
    if not path.exists():
        raise GroupDataError(f"unknown group spec {text!r}")
    return _group_from_json(json.loads(path.read_text()))


# ---------------------------------------------------------------------------
# Lie algebra data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LieAlgebraData:
    """A finite-dimensional Lie algebra via structure constants.

    ``constants[i][j][k]`` is the coefficient of basis element ``k`` in
    the bracket of basis elements ``i`` and ``j`` (0-based).  Antisymmetry
    and the Jacobi identity are verified on construction.
    """

    name: str
    dimension: int
    basis: tuple[str, ...]
    constants: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def bracket_coords(self, u: Sequence, v: Sequence, ring: Ring) -> list[Polynomial]:
        """Componentwise bracket of coordinate vectors of polynomials."""
        d = self.dimension
        out = [Polynomial.zero(ring) for _ in range(d)]
        for i in range(d):
            if isinstance(u[i], Polynomial) and u[i].is_zero():
                continue
            for j in range(d):
                for k in range(d):
                    c = self.constants[i][j][k]
                    if c != 0:
                        out[k] = out[k] + u[i] * v[j] * c
        return out


def _validate_lie(data: LieAlgebraData) -> None:
    d = data.dimension
    c = data.constants
    for i in range(d):
        for j in range(d):
            for k in range(d):
                if c[i][j][k] != -c[j][i][k]:
                    raise LieDataError(
                        f"antisymmetry fails at c[{i}][{j}][{k}]"
                    )
    for i in range(d):
        for j in range(d):
            for k in range(d):
                for l in range(d):
                    total = Fraction(0)
                    for m in range(d):
                        total += (
                            c[i][j][m] * c[m][k][l]
                            + c[j][k][m] * c[m][i][l]
                            + c[k][i][m] * c[m][j][l]
                        )
                    if total != 0:
                        raise LieDataError(
                            f"Jacobi identity fails at ({i},{j},{k}) component {l}"
                        )


def make_lie(spec) -> LieAlgebraData:
    """Build a Lie algebra: ``sl2``, ``abelian:d``, or explicit-constants JSON.

    ``sl2`` has basis (e, f, h) with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    """
    if isinstance(spec, LieAlgebraData):
        return spec
    text = str(spec)
    if text == "sl2":
        d = 3
        zero = Fraction(0)
        c = [[[zero] * d for _ in range(d)] for _ in range(d)]
        e, f, h = 0, 1, 2
        c[h][e][e], c[e][h][e] = Fraction(2), Fraction(-2)
        c[h][f][f], c[f][h][f] = Fraction(-2), Fraction(2)
        c[e][f][h], c[f][e][h] = Fraction(1), Fraction(-1)
        data = LieAlgebraData(
            "sl2", d, ("e", "f", "h"), tuple(tuple(tuple(r) for r in p) for p in c)
        )
        _validate_lie(data)
        return data
    if text.startswith("abelian:"):
        d = int(text.split(":", 1)[1])
        if d < 0:
            raise LieDataError("dimension must be non-negative")
        zero = Fraction(0)
        constants = tuple(
            tuple(tuple(zero for _ in range(d)) for _ in range(d)) for _ in range(d)
        )
        data = LieAlgebraData(
            f"abelian:{d}", d, tuple(f"e{i}" for i in range(1, d + 1)), constants
        )
        _validate_lie(data)
        return data
    path = Path(text)
    if path.exists():
        raw = json.loads(path.read_text())
        return lie_from_constants(
            raw["constants"], raw.get("basis"), raw.get("name", "custom")
        )
    raise LieDataError(f"unknown Lie algebra spec {text!r}")


def lie_from_constants(
    constants: Sequence, basis: Sequence[str] | None = None, name: str = "custom"
) -> LieAlgebraData:
    d = len(constants)
    parsed = tuple(
        tuple(tuple(Fraction(str(x)) for x in row) for row in plane)
        for plane in constants
    )
    for plane in parsed:
        if len(plane) != d or any(len(row) != d for row in plane):
            raise LieDataError("constants must form a d x d x d array")
    if basis is None:
        basis = tuple(f"e{i}" for i in range(1, d + 1))
    data = LieAlgebraData(name, d, tuple(basis), parsed)
    _validate_lie(data)
    return data


# ---------------------------------------------------------------------------
# Lie presentations
# ---------------------------------------------------------------------------


class LieExpr:
    """Formal Lie expression: generators, brackets, rational combinations."""


@dataclass(frozen=True)
class LieGen(LieExpr):
    name: str


@dataclass(frozen=True)
class LieBracket(LieExpr):
    left: LieExpr
    right: LieExpr


@dataclass(frozen=True)
class LieSum(LieExpr):
    terms: tuple[tuple[Fraction, LieExpr], ...]


@dataclass(frozen=True)
class LiePresentation:
    generators: tuple[str, ...]
    relators: tuple[LieExpr, ...] = ()

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    @staticmethod
    def free(n: int) -> "LiePresentation":
        return LiePresentation(tuple(f"x{i}" for i in range(1, n + 1)), ())

    @staticmethod
    def from_json(data) -> "LiePresentation":
        if isinstance(data, (str, Path)):
            data = json.loads(Path(data).read_text())
        generators = tuple(data["generators"])
        relators = tuple(
            parse_lie_expr(text, generators) for text in data.get("relators", [])
        )
        return LiePresentation(generators, relators)


class LieParseError(ValueError):
    pass


def parse_lie_expr(text: str, names: Sequence[str]) -> LieExpr:
    """Parse ``[a,b]``-style bracket expressions with rational coefficients.

    Grammar: sums of optionally scaled atoms, an atom being a generator
    name, a bracket ``[expr, expr]``, or a parenthesized expression;
    e.g. ``[a,[a,b]] - 2*b``.
    """
    import re as _re

    tokens = _re.findall(r"\d+/\d+|\d+|[A-Za-z_][A-Za-z0-9_]*|[][(),*+-]", text)
    if "".join(tokens).replace(" ", "") != text.replace(" ", ""):
        raise LieParseError(f"unrecognized characters in {text!r}")
    cursor = 0

    def peek() -> str | None:
        return tokens[cursor] if cursor < len(tokens) else None

    def advance() -> str:
        nonlocal cursor
        token = peek()
        if token is None:
            raise LieParseError("unexpected end of expression")
        cursor += 1
        return token

    def expect(token: str) -> None:
        got = advance()
        if got != token:
            raise LieParseError(f"expected {token!r}, got {got!r}")

    def parse_atom() -> LieExpr:
        token = advance()
        if token == "[":
            left = parse_sum()
            expect(",")
            right = parse_sum()
            expect("]")
            return LieBracket(left, right)
        if token == "(":
            inner = parse_sum()
            expect(")")
            return inner
        if token in names:
            return LieGen(token)
        raise LieParseError(f"unknown generator {token!r}")

    def parse_term() -> tuple[Fraction, LieExpr]:
        coefficient = Fraction(1)
        token = peek()
        if token is not None and (token[0].isdigit()):
            coefficient = Fraction(advance())
            if peek() == "*":
                advance()
        return coefficient, parse_atom()

    def parse_sum() -> LieExpr:
        sign = Fraction(1)
        if peek() in ("+", "-"):
            sign = Fraction(-1) if advance() == "-" else Fraction(1)
        coefficient, atom = parse_term()
        terms = [(sign * coefficient, atom)]
        while peek() in ("+", "-"):
            sign = Fraction(-1) if advance() == "-" else Fraction(1)
            coefficient, atom = parse_term()
            terms.append((sign * coefficient, atom))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return LieSum(tuple(terms))

    expr = parse_sum()
    if cursor != len(tokens):
        raise LieParseError(f"trailing input at {tokens[cursor]!r}")
    return expr


def evaluate_lie_expr(
    expr: LieExpr,
    assignment: Mapping[str, Sequence[Polynomial]],
    lie: LieAlgebraData,
    ring: Ring,
) -> list[Polynomial]:
    """Evaluate a formal expression to a coordinate vector over ``ring``."""
    if isinstance(expr, LieGen):
        return list(assignment[expr.name])
    if isinstance(expr, LieBracket):
        left = evaluate_lie_expr(expr.left, assignment, lie, ring)
        right = evaluate_lie_expr(expr.right, assignment, lie, ring)
        return lie.bracket_coords(left, right, ring)
    if isinstance(expr, LieSum):
        out = [Polynomial.zero(ring) for _ in range(lie.dimension)]
        for coefficient, part in expr.terms:
            vec = evaluate_lie_expr(part, assignment, lie, ring)
            out = [a + v * coefficient for a, v in zip(out, vec)]
        return out
    raise TypeError(f"not a Lie expression: {expr!r}")
