"""Representation varieties as explicit polynomial presentations.

For a finitely presented group and a matrix-shaped target group, the
coordinate ring of the space of representations is presented on one
variable block per group generator: the defining ideal of the target is
copied into every block, and every relator contributes the entries of
"its matrix word minus the identity".  Inverse letters use the adjugate
antipode, so relator equations stay polynomial.

Finite targets are handled extensionally: the representation set is
enumerated outright and carries its algebra of finitely supported
functions with pointwise product.  Lie-algebra sources use coordinate
vectors against a structure-constant target; conjugation invariance of
trace observables is decided by Groebner membership.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .alggroups import (
    LieAlgebraData,
    LiePresentation,
    MissingMatrixShapeError,
    PresentedCommHopf,
    block_ideal_generators,
    block_ring,
    conjugation_substitution,
    evaluate_lie_expr,
    matrix_word,
    trace_of_word,
)
from .groups import (
    FiniteGroup,
    FreeWord,
    GroupPresentation,
    WordError,
    enumerate_homs,
    evaluate_word,
)
from .polyalg import GREVLEX, Ideal, Polynomial, Ring, embed, groebner, ideal_member
from .prop_h import HMorphism


class HomomorphismError(ValueError):
    """A purported homomorphism fails a relator."""


# ---------------------------------------------------------------------------
# Group representation ideals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RepIdealPresentation:
    """Polynomial presentation of the space of representations.

    ``provenance[i]`` records where generator ``i`` came from:
    ``copy_ideal:<copy>`` or ``relator:<index>:entry:<row>,<col>``.
    """

    group: GroupPresentation
    target: PresentedCommHopf
    ring: Ring
    ideal: Ideal
    provenance: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "variables": list(self.ring),
            "ideal": [str(g) for g in self.ideal.generators],
            "provenance": [
                {"generator_index": i, "source": source}
                for i, source in enumerate(self.provenance)
            ],
        }

    def evaluate_point(self, point: Mapping[str, Fraction]) -> list[Fraction]:
        return [g.evaluate(point) for g in self.ideal.generators]

    def satisfies(self, point: Mapping[str, Fraction]) -> bool:
        return all(v == 0 for v in self.evaluate_point(point))


def rep_ideal(group: GroupPresentation, target: PresentedCommHopf) -> RepIdealPresentation:
    """Presentation of representations of ``group`` into ``target``.

    One block of target variables per generator; the ideal is the union of
    the per-copy defining ideals plus, for each relator, all matrix
    entries of ``word(relator) - identity``.  A free group therefore
    yields exactly the copied defining ideals and nothing else.
    """
    n = group.n_generators
    if group.relators and target.matrix_shape is None:
        raise MissingMatrixShapeError(
            f"target {target.name} has no matrix shape for relator equations"
        )
    ring = block_ring(target, range(1, n + 1))
    generators: list[Polynomial] = []
    provenance: list[str] = []
    for copy in range(1, n + 1):
        for g in block_ideal_generators(target, copy, ring):
            generators.append(g)
            provenance.append(f"copy_ideal:{copy}")
    for index, relator in enumerate(group.relators):
        matrix = matrix_word(relator, target, ring=ring)
        size = len(matrix)
        for i in range(size):
            for j in range(size):
                entry = matrix[i][j] - (1 if i == j else 0)
                generators.append(entry)
                provenance.append(f"relator:{index}:entry:{i + 1},{j + 1}")
    return RepIdealPresentation(
        group=group,
        target=target,
        ring=ring,
        ideal=Ideal(ring, tuple(generators)),
        provenance=tuple(provenance),
    )


# ---------------------------------------------------------------------------
# Finite targets: the function algebra on the representation set
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiniteRepAlgebra:
    """Functions with finite support on the set of homomorphisms.

    Elements are dicts mapping points (tuples of target element indices)
    to rational values; the product is pointwise, so the delta functions
    are orthogonal idempotents and their sum is the unit.
    """

    source: GroupPresentation
    target: FiniteGroup
    points: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.points)

    def _check(self, element: Mapping) -> None:
        for point in element:
            if point not in self.points:
                raise ValueError(f"{point} is not a representation point")

    def delta(self, point: tuple[int, ...]) -> dict:
        if point not in self.points:
            raise ValueError(f"{point} is not a representation point")
        return {point: Fraction(1)}

    def zero(self) -> dict:
        return {}

    def one(self) -> dict:
        return {point: Fraction(1) for point in self.points}

    def add(self, a: Mapping, b: Mapping) -> dict:
        self._check(a), self._check(b)
        out = dict(a)
        for point, value in b.items():
            total = out.get(point, Fraction(0)) + value
            if total == 0:
                out.pop(point, None)
            else:
                out[point] = total
        return out

    def mul(self, a: Mapping, b: Mapping) -> dict:
        self._check(a), self._check(b)
        out = {}
        for point, value in a.items():
            if point in b:
                product = value * b[point]
                if product != 0:
                    out[point] = product
        return out

    def scale(self, a: Mapping, value) -> dict:
        value = Fraction(value)
        return {} if value == 0 else {p: v * value for p, v in a.items()}


def finite_rep_algebra(
    source: GroupPresentation, target: FiniteGroup
) -> FiniteRepAlgebra:
    """Enumerate the representation set and wrap its function algebra."""
    points = tuple(enumerate_homs(source, target))
    return FiniteRepAlgebra(source=source, target=target, points=points)


# ---------------------------------------------------------------------------
# Natural families induced by group homomorphisms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NatTransform:
    """The componentwise map of basis tuples induced by a homomorphism.

    A homomorphism of the source group into a finite group sends a basis
    tuple of source elements (given as words in the source generators) to
    the tuple of its images.  Naturality against any morphism in word
    normal form is checkable exactly, because both paths around the square
    end in the finite group.
    """

    source: GroupPresentation
    target: FiniteGroup
    images: tuple[int, ...]
    level: int

    def apply(self, words: Sequence[FreeWord]) -> tuple[int, ...]:
        if len(words) != self.level:
            raise WordError(f"expected {self.level} words, got {len(words)}")
        return tuple(
            evaluate_word(w, list(self.images), self.target) for w in words
        )

    def naturality_holds(
        self, f: HMorphism, samples: Sequence[Sequence[FreeWord]]
    ) -> bool:
        """Both paths around the square at ``f`` agree on all given tuples."""
        if f.dom != self.level:
            raise WordError(
                f"morphism domain {f.dom} does not match level {self.level}"
            )
        n = self.source.n_generators
        for sample in samples:
            if len(sample) != self.level:
                raise WordError("sample tuple has the wrong length")
            substituted = [
                w.substitute(list(sample), rank=n) for w in f.words
            ]
            via_source = tuple(
                evaluate_word(w, list(self.images), self.target) for w in substituted
            )
            mapped = [evaluate_word(w, list(self.images), self.target) for w in sample]
            via_target = tuple(
                evaluate_word(w, mapped, self.target) for w in f.words
            )
            if via_source != via_target:
                return False
        return True


def nat_transform_from_hom(
    source: GroupPresentation,
    target: FiniteGroup,
    images: Sequence[int],
    level: int,
) -> NatTransform:
    """Validate generator images against the relators and wrap the family."""
    if len(images) != source.n_generators:
        raise HomomorphismError(
            f"need {source.n_generators} generator images, got {len(images)}"
        )
    for relator in source.relators:
        if evaluate_word(relator, list(images), target) != target.identity:
            raise HomomorphismError(
                f"images fail relator {relator}"
            )
    return NatTransform(source, target, tuple(images), level)


# ---------------------------------------------------------------------------
# Lie representation varieties
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LieRepIdealPresentation:
    """Coordinates of generator images in the target basis, plus relator equations."""

    source: LiePresentation
    target: LieAlgebraData
    ring: Ring
    ideal: Ideal
    provenance: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "variables": list(self.ring),
            "ideal": [str(g) for g in self.ideal.generators],
            "provenance": [
                {"generator_index": i, "source": source}
                for i, source in enumerate(self.provenance)
            ],
        }

    def satisfies(self, point: Mapping[str, Fraction]) -> bool:
        return all(g.evaluate(point) == 0 for g in self.ideal.generators)


def lie_rep_ideal(
    source: LiePresentation, target: LieAlgebraData
) -> LieRepIdealPresentation:
    """Presentation of Lie-algebra maps from ``source`` into ``target``.

    Generator ``i`` becomes the coordinate vector ``(y{i}_1 .. y{i}_d)``;
    every relator is evaluated through the structure constants and each of
    its ``d`` components becomes one ideal generator.  A free source gives
    the zero ideal on ``n*d`` variables: the full affine space of
    ``n``-tuples in the target.
    """
    n, d = source.n_generators, target.dimension
    ring = tuple(f"y{i}_{k}" for i in range(1, n + 1) for k in range(1, d + 1))
    assignment = {
        name: [Polynomial.variable(ring, f"y{i}_{k}") for k in range(1, d + 1)]
        for i, name in enumerate(source.generators, start=1)
    }
    generators: list[Polynomial] = []
    provenance: list[str] = []
    for index, relator in enumerate(source.relators):
        vector = evaluate_lie_expr(relator, assignment, target, ring)
        for k, component in enumerate(vector, start=1):
            generators.append(component)
            provenance.append(f"relator:{index}:component:{k}")
    return LieRepIdealPresentation(
        source=source,
        target=target,
        ring=ring,
        ideal=Ideal(ring, tuple(generators)),
        provenance=tuple(provenance),
    )


# ---------------------------------------------------------------------------
# Conjugation invariance of observables
# ---------------------------------------------------------------------------


def check_observable_invariance(
    observable: Polynomial,
    group: GroupPresentation,
    target: PresentedCommHopf,
) -> bool:
    """Is the observable fixed under conjugation, modulo the defining ideals?

    The observable lives on ``n`` copies of the target; it is invariant
    when "conjugated minus original" lies in the ideal generated by the
    conjugator copy's defining ideal together with the representation
    ideal of the group.  Decided by Groebner membership.
    """
    n = group.n_generators
    copies_ring = block_ring(target, range(1, n + 1))
    if observable.ring != copies_ring:
        observable = embed(observable, copies_ring)
    presentation = rep_ideal(group, target)
    extended = block_ring(target, range(0, n + 1))
    generators = list(block_ideal_generators(target, 0, extended))
    generators.extend(embed(g, extended) for g in presentation.ideal.generators)
    gb = groebner(Ideal(extended, tuple(generators)), GREVLEX)
    conjugated = conjugation_substitution(observable, target, n)
    difference = conjugated - embed(observable, extended)
    return ideal_member(difference, gb)


def check_trace_invariance(
    word: FreeWord, group: GroupPresentation, target: PresentedCommHopf
) -> bool:
    """Conjugation invariance of the trace observable of a word."""
    if word.rank != group.n_generators:
        raise WordError(
            f"word rank {word.rank} does not match {group.n_generators} generators"
        )
    observable = trace_of_word(word, target)
    return check_observable_invariance(observable, group, target)
