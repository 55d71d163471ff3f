"""The PROP of cocommutative Hopf algebras, in free-group normal form.

A morphism ``[n] -> [m]`` is an m-tuple of freely reduced words on n
letters; composition is componentwise word substitution and the tensor
product shifts letter indices.  Formal composites of the six generating
operations (multiplication, comultiplication, antipode, unit, counit,
symmetry) are normalized by evaluating them into this model, which makes
equality of composites decidable without any rewriting on terms.

The module also carries two concrete Hopf-algebra models with a generic
structural evaluator (`hopf_action`), and the reduction of a linear
combination of words to its multilinear part supported on permutation
words (`multilinear_reduce`), whose correctness is cross-checked against
the tensor-algebra model.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .groups import FiniteGroup, FreeWord, evaluate_word, format_word


class ArityError(ValueError):
    """Domains and codomains do not line up."""


class TermSyntaxError(ValueError):
    """Malformed generator-term text."""


# ---------------------------------------------------------------------------
# Morphisms in normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HMorphism:
    """A morphism ``[dom] -> [cod]``: one rank-``dom`` word per output."""

    dom: int
    cod: int
    words: tuple[FreeWord, ...]

    def __post_init__(self) -> None:
        if self.dom < 0 or self.cod < 0:
            raise ArityError("arities must be non-negative")
        if len(self.words) != self.cod:
            raise ArityError(f"expected {self.cod} words, got {len(self.words)}")
        for w in self.words:
            if w.rank != self.dom:
                raise ArityError(f"word rank {w.rank} does not match domain {self.dom}")

    def __str__(self) -> str:
        return format_hmorphism(self)


def identity_morphism(n: int) -> HMorphism:
    return HMorphism(n, n, tuple(FreeWord.generator(n, i) for i in range(1, n + 1)))


GENERATOR_NAMES = ("mu", "delta", "antipode", "eta", "epsilon", "tau")


def generator_morphism(name: str) -> HMorphism:
    """The free-group-tuple interpretation of one generating operation.

    mu ``(2->1)``: x1 x2; delta ``(1->2)``: (x1, x1); antipode: x1^-1;
    eta ``(0->1)``: e; epsilon ``(1->0)``: (); tau ``(2->2)``: (x2, x1).
    """
    if name == "mu":
        return HMorphism(2, 1, (FreeWord(2, ((1, 1), (2, 1))),))
    if name == "delta":
        return HMorphism(1, 2, (FreeWord.generator(1, 1), FreeWord.generator(1, 1)))
    if name == "antipode":
        return HMorphism(1, 1, (FreeWord(1, ((1, -1),)),))
    if name == "eta":
        return HMorphism(0, 1, (FreeWord.identity(0),))
    if name == "epsilon":
        return HMorphism(1, 0, ())
    if name == "tau":
        return HMorphism(2, 2, (FreeWord.generator(2, 2), FreeWord.generator(2, 1)))
    raise ValueError(f"unknown generator {name!r}")


def compose_h(f: HMorphism, g: HMorphism) -> HMorphism:
    """``f`` then ``g``; each word of ``g`` has f's words substituted in."""
    if f.cod != g.dom:
        raise ArityError(f"cannot compose [{f.dom}]->[{f.cod}] with [{g.dom}]->[{g.cod}]")
    words = tuple(w.substitute(f.words, rank=f.dom) for w in g.words)
    return HMorphism(f.dom, g.cod, words)


def tensor_h(f: HMorphism, g: HMorphism) -> HMorphism:
    """Side-by-side juxtaposition; g's letters are shifted past f's domain."""
    dom = f.dom + g.dom
    cod = f.cod + g.cod
    words = tuple(w.shift(0, dom) for w in f.words) + tuple(
        w.shift(f.dom, dom) for w in g.words
    )
    return HMorphism(dom, cod, words)


def format_hmorphism(h: HMorphism) -> str:
    inner = "; ".join(format_word(w) for w in h.words)
    return f"[{h.dom}]->[{h.cod}]: ({inner})"


# ---------------------------------------------------------------------------
# Generator terms
# ---------------------------------------------------------------------------


class GeneratorTerm:
    """Formal expression over the generating operations; see subclasses."""

    def arity(self) -> tuple[int, int]:
        raise NotImplementedError


@dataclass(frozen=True)
class Gen(GeneratorTerm):
    name: str

    def __post_init__(self) -> None:
        if self.name not in GENERATOR_NAMES:
            raise ValueError(f"unknown generator {self.name!r}")

    def arity(self) -> tuple[int, int]:
        return {
            "mu": (2, 1),
            "delta": (1, 2),
            "antipode": (1, 1),
            "eta": (0, 1),
            "epsilon": (1, 0),
            "tau": (2, 2),
        }[self.name]


@dataclass(frozen=True)
class Id(GeneratorTerm):
    width: int

    def __post_init__(self) -> None:
        if self.width < 0:
            raise ArityError("identity width must be non-negative")

    def arity(self) -> tuple[int, int]:
        return (self.width, self.width)


@dataclass(frozen=True)
class Compose(GeneratorTerm):
    """``outer`` after ``inner`` (the inner term acts first)."""

    outer: GeneratorTerm
    inner: GeneratorTerm

    def arity(self) -> tuple[int, int]:
        inner_dom, inner_cod = self.inner.arity()
        outer_dom, outer_cod = self.outer.arity()
        if inner_cod != outer_dom:
            raise ArityError(
                f"composition mismatch: inner codomain {inner_cod}, outer domain {outer_dom}"
            )
        return (inner_dom, outer_cod)


@dataclass(frozen=True)
class Tensor(GeneratorTerm):
    left: GeneratorTerm
    right: GeneratorTerm

    def arity(self) -> tuple[int, int]:
        ld, lc = self.left.arity()
        rd, rc = self.right.arity()
        return (ld + rd, lc + rc)


def eval_term(term: GeneratorTerm) -> HMorphism:
    """Normalize a formal composite to its free-group-tuple morphism.

    Two terms equal modulo the Hopf relations evaluate to the same
    HMorphism; ill-typed terms raise ArityError.
    """
    term.arity()  # typecheck eagerly for a clean error
    return _eval(term)


def _eval(term: GeneratorTerm) -> HMorphism:
    if isinstance(term, Gen):
        return generator_morphism(term.name)
    if isinstance(term, Id):
        return identity_morphism(term.width)
    if isinstance(term, Compose):
        return compose_h(_eval(term.inner), _eval(term.outer))
    if isinstance(term, Tensor):
        return tensor_h(_eval(term.left), _eval(term.right))
    raise TypeError(f"not a generator term: {term!r}")


_TERM_TOKEN = re.compile(r"\s*(?P<tok>id:\d+|[A-Za-z]+|[.*()])")
_TERM_LEAVES = {
    "mu": "mu",
    "delta": "delta",
    "S": "antipode",
    "eta": "eta",
    "eps": "epsilon",
    "tau": "tau",
}


def parse_term(text: str) -> GeneratorTerm:
    """Parse the generator-term syntax.

    ``.`` is composition (right factor acts first), ``*`` is the tensor
    product and binds tighter; leaves are ``mu``, ``delta``, ``S``,
    ``eta``, ``eps``, ``tau`` and ``id:<k>``.  Example:
    ``mu . (id:1 * S) . delta``.
    """
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        match = _TERM_TOKEN.match(text, pos)
        if match is None:
            if text[pos:].strip() == "":
                break
            raise TermSyntaxError(f"unexpected character {text[pos:].strip()[0]!r}")
        tokens.append(match.group("tok"))
        pos = match.end()
    cursor = 0

    def peek() -> str | None:
        return tokens[cursor] if cursor < len(tokens) else None

    def expect(token: str) -> None:
        nonlocal cursor
        if peek() != token:
            raise TermSyntaxError(f"expected {token!r}, got {peek()!r}")
        cursor += 1

    def parse_atom() -> GeneratorTerm:
        nonlocal cursor
        token = peek()
        if token is None:
            raise TermSyntaxError("unexpected end of term")
        if token == "(":
            cursor += 1
            node = parse_compose()
            expect(")")
            return node
        cursor += 1
        if token.startswith("id:"):
            return Id(int(token.split(":", 1)[1]))
        if token in _TERM_LEAVES:
            return Gen(_TERM_LEAVES[token])
        raise TermSyntaxError(f"unknown symbol {token!r}")

    def parse_tensor() -> GeneratorTerm:
        nonlocal cursor
        node = parse_atom()
        while peek() == "*":
            cursor += 1
            node = Tensor(node, parse_atom())
        return node

    def parse_compose() -> GeneratorTerm:
        nonlocal cursor
        node = parse_tensor()
        while peek() == ".":
            cursor += 1
            node = Compose(node, parse_tensor())
        return node

    if not tokens:
        raise TermSyntaxError("empty term")
    term = parse_compose()
    if cursor != len(tokens):
        raise TermSyntaxError(f"trailing input starting at {tokens[cursor]!r}")
    return term


# ---------------------------------------------------------------------------
# Axiom suite
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AxiomCheck:
    number: int
    name: str
    holds: bool
    sides: tuple[HMorphism, ...]


def _axiom_terms() -> list[tuple[str, list[GeneratorTerm]]]:
    mu, delta, S = Gen("mu"), Gen("delta"), Gen("antipode")
    eta, eps, tau = Gen("eta"), Gen("epsilon"), Gen("tau")
    i1 = Id(1)
    return [
        ("associativity", [Compose(mu, Tensor(mu, i1)), Compose(mu, Tensor(i1, mu))]),
        ("unit", [Compose(mu, Tensor(eta, i1)), Compose(mu, Tensor(i1, eta)), i1]),
        (
            "coassociativity",
            [Compose(Tensor(i1, delta), delta), Compose(Tensor(delta, i1), delta)],
        ),
        ("counit", [Compose(Tensor(i1, eps), delta), Compose(Tensor(eps, i1), delta), i1]),
        (
            "multiplication-comultiplication compatibility",
            [
                Compose(delta, mu),
                Compose(
                    Compose(Tensor(mu, mu), Tensor(i1, Tensor(tau, i1))),
                    Tensor(delta, delta),
                ),
            ],
        ),
        (
            "antipode",
            [
                Compose(Compose(mu, Tensor(i1, S)), delta),
                Compose(eta, eps),
                Compose(Compose(mu, Tensor(S, i1)), delta),
            ],
        ),
        (
            "antipode-comultiplication compatibility",
            [Compose(delta, S), Compose(Compose(Tensor(S, S), tau), delta)],
        ),
        (
            "antipode-multiplication compatibility",
            [Compose(S, mu), Compose(Compose(mu, tau), Tensor(S, S))],
        ),
        ("cocommutativity", [Compose(tau, delta), delta]),
        ("involutive antipode", [Compose(S, S), i1]),
    ]


def verify_axioms() -> list[AxiomCheck]:
    """Evaluate both sides of each Hopf axiom and compare the normal forms."""
    checks = []
    for number, (name, terms) in enumerate(_axiom_terms(), start=1):
        sides = tuple(eval_term(t) for t in terms)
        holds = all(side == sides[0] for side in sides[1:])
        checks.append(AxiomCheck(number, name, holds, sides))
    return checks


# ---------------------------------------------------------------------------
# Linear combinations of morphisms
# ---------------------------------------------------------------------------


def _hmorphism_sort_key(h: HMorphism):
    return (h.dom, h.cod, tuple(w.letters for w in h.words))


@dataclass(frozen=True)
class LinHom:
    """A formal rational linear combination of parallel morphisms."""

    dom: int
    cod: int
    terms: tuple[tuple[HMorphism, Fraction], ...]

    def __post_init__(self) -> None:
        seen = set()
        for h, c in self.terms:
            if (h.dom, h.cod) != (self.dom, self.cod):
                raise ArityError("linear combination mixes arities")
            if c == 0:
                raise ValueError("zero coefficient stored")
            if h in seen:
                raise ValueError("duplicate morphism stored")
            seen.add(h)

    @staticmethod
    def from_dict(dom: int, cod: int, mapping: Mapping[HMorphism, Fraction]) -> "LinHom":
        terms = tuple(
            (h, mapping[h])
            for h in sorted(mapping, key=_hmorphism_sort_key)
            if mapping[h] != 0
        )
        return LinHom(dom, cod, terms)

    @staticmethod
    def of(h: HMorphism, coefficient=Fraction(1)) -> "LinHom":
        return LinHom.from_dict(h.dom, h.cod, {h: Fraction(coefficient)})

    def __add__(self, other: "LinHom") -> "LinHom":
        if (self.dom, self.cod) != (other.dom, other.cod):
            raise ArityError("cannot add combinations of different arities")
        acc = dict(self.terms)
        for h, c in other.terms:
            acc[h] = acc.get(h, Fraction(0)) + c
        return LinHom.from_dict(self.dom, self.cod, acc)

    def scale(self, value) -> "LinHom":
        value = Fraction(value)
        if value == 0:
            return LinHom(self.dom, self.cod, ())
        return LinHom(self.dom, self.cod, tuple((h, c * value) for h, c in self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        return format_linhom(self)


def format_linhom(element: LinHom) -> str:
    """Words only, coefficients in front: ``(x1 x2) - (x2 x1)``; empty sum is ``0``."""
    if not element.terms:
        return "0"
    pieces = []
    for position, (h, c) in enumerate(element.terms):
        body = "(" + "; ".join(format_word(w) for w in h.words) + ")"
        magnitude = abs(c)
        prefix = "" if magnitude == 1 else f"{magnitude}*"
        if position == 0:
            pieces.append(f"{prefix}{body}" if c > 0 else f"-{prefix}{body}")
        else:
            pieces.append(f"+ {prefix}{body}" if c > 0 else f"- {prefix}{body}")
    return " ".join(pieces)


# ---------------------------------------------------------------------------
# Hopf models and the generic structural evaluator
# ---------------------------------------------------------------------------

Scalar = Fraction
Basis = Union[int, tuple]
Element = dict  # basis label -> Fraction


def _lc_add(acc: dict, extra: Mapping, factor: Fraction = Fraction(1)) -> None:
    for b, c in extra.items():
        value = acc.get(b, Fraction(0)) + c * factor
        if value == 0:
            acc.pop(b, None)
        else:
            acc[b] = value


@dataclass(frozen=True)
class GroupAlgebraModel:
    """The group algebra of a finite group: basis = element indices.

    Basis elements are group-like: the coproduct duplicates, the counit
    is 1, and the antipode inverts.
    """

    group: FiniteGroup

    def unit(self) -> Element:
        return {self.group.identity: Fraction(1)}

    def mul(self, a: int, b: int) -> Element:
        return {self.group.mul(a, b): Fraction(1)}

    def comul(self, a: int) -> Element:
        return {(a, a): Fraction(1)}

    def antipode(self, a: int) -> Element:
        return {self.group.inverse(a): Fraction(1)}

    def counit(self, a: int) -> Fraction:
        return Fraction(1)


@dataclass(frozen=True)
class TensorAlgebraModel:
    """Truncated tensor algebra on primitive generators ``v1..vg``.

    Basis labels are tuples of generator indices (noncommutative words);
    products above the truncation degree are dropped.  Generators are
    primitive, so the coproduct splits a word across all position subsets,
    the antipode reverses with sign ``(-1)^len``, and the counit kills
    everything but the empty word.
    """

    generators: int
    truncation: int

    def __post_init__(self) -> None:
        if self.truncation < 1:
            raise ValueError("truncation degree must be at least 1")

    def generator(self, index: int) -> Element:
        if not 1 <= index <= self.generators:
            raise ValueError(f"generator index {index} outside 1..{self.generators}")
        return {(index,): Fraction(1)}

    def unit(self) -> Element:
        return {(): Fraction(1)}

    def mul(self, a: tuple, b: tuple) -> Element:
        if len(a) + len(b) > self.truncation:
            return {}
        return {a + b: Fraction(1)}

    def comul(self, a: tuple) -> Element:
        out: Element = {}
        for mask in range(1 << len(a)):
            left = tuple(a[i] for i in range(len(a)) if mask >> i & 1)
            right = tuple(a[i] for i in range(len(a)) if not mask >> i & 1)
            _lc_add(out, {(left, right): Fraction(1)})
        return out

    def antipode(self, a: tuple) -> Element:
        return {tuple(reversed(a)): Fraction(-1) ** len(a)}

    def counit(self, a: tuple) -> Fraction:
        return Fraction(1) if a == () else Fraction(0)


HopfModel = Union[GroupAlgebraModel, TensorAlgebraModel]


def _as_element(model: HopfModel, value) -> Element:
    if isinstance(value, dict):
        return dict(value)
    return {value: Fraction(1)}


def _iterated_comul(model: HopfModel, element: Element, legs: int) -> dict:
    """Spread an element over ``legs`` tensor slots; keys are leg tuples."""
    if legs == 1:
        return {(b,): c for b, c in element.items()}
    current: dict = {}
    for b, c in element.items():
        for (left, right), c2 in model.comul(b).items():
            _lc_add(current, {(left, right): c * c2})
    for _ in range(legs - 2):
        expanded: dict = {}
        for key, c in current.items():
            head, last = key[:-1], key[-1]
            for (left, right), c2 in model.comul(last).items():
                _lc_add(expanded, {head + (left, right): c * c2})
        current = expanded
    return current


def _word_product(model: HopfModel, slots: Sequence[tuple[Basis, int]]) -> Element:
    """Multiply slot values in order, taking antipodes on negative slots."""
    result = model.unit()
    for basis, exponent in slots:
        operand = model.antipode(basis) if exponent < 0 else {basis: Fraction(1)}
        combined: Element = {}
        for b1, c1 in result.items():
            for b2, c2 in operand.items():
                for b3, c3 in model.mul(b1, b2).items():
                    _lc_add(combined, {b3: c1 * c2 * c3})
        result = combined
    return result


def hopf_action(f: HMorphism, model: HopfModel, inputs: Sequence) -> dict:
    """Act by ``f`` on a tuple of model elements using only structural maps.

    Each input is copied with the iterated coproduct, one leg per
    occurrence of its letter across all output words (its counit scalar
    if it never occurs), legs in negative-exponent positions pass through
    the antipode, and each output word multiplies its slots in order.
    The result maps cod-tuples of basis labels to coefficients.
    """
    if len(inputs) != f.dom:
        raise ArityError(f"morphism with domain {f.dom} got {len(inputs)} inputs")
    elements = [_as_element(model, x) for x in inputs]

    occurrences: dict[int, list[tuple[int, int]]] = {i: [] for i in range(1, f.dom + 1)}
    exponent_at: dict[tuple[int, int], int] = {}
    for j, w in enumerate(f.words):
        for p, (index, exponent) in enumerate(w.letters):
            occurrences[index].append((j, p))
            exponent_at[(j, p)] = exponent

    scalar = Fraction(1)
    spreads: list[tuple[int, dict]] = []
    for i in range(1, f.dom + 1):
        count = len(occurrences[i])
        if count == 0:
            scalar *= sum(
                (c * model.counit(b) for b, c in elements[i - 1].items()),
                Fraction(0),
            )
        else:
            spreads.append((i, _iterated_comul(model, elements[i - 1], count)))
    if scalar == 0:
        return {}

    result: dict = {}
    for combo in itertools.product(*(s.items() for _, s in spreads)):
        coeff = scalar
        assignment: dict[tuple[int, int], Basis] = {}
        for (variable, _), (legs, c) in zip(spreads, combo):
            coeff *= c
            for slot, leg in zip(occurrences[variable], legs):
                assignment[slot] = leg
        if coeff == 0:
            continue
        word_values = []
        for j, w in enumerate(f.words):
            value = _word_product(
                model,
                [(assignment[(j, p)], exponent_at[(j, p)]) for p in range(len(w.letters))],
            )
            word_values.append(value)
        for parts in itertools.product(*(v.items() for v in word_values)):
            key = tuple(b for b, _ in parts)
            c = coeff
            for _, part_coeff in parts:
                c *= part_coeff
            _lc_add(result, {key: c})
    return result


def group_model_tuple_action(
    f: HMorphism, group: FiniteGroup, inputs: Sequence[int]
) -> tuple[int, ...]:
    """Direct word-substitution semantics on basis tuples, for cross-checks."""
    return tuple(evaluate_word(w, list(inputs), group) for w in f.words)


# ---------------------------------------------------------------------------
# Multilinear reduction
# ---------------------------------------------------------------------------

LEFTMOST = "leftmost"
RIGHTMOST = "rightmost"


def _permutation_morphism(n: int, letters: Sequence[tuple[int, int]]) -> HMorphism:
    word = FreeWord(n, tuple((i, 1) for i, _ in letters))
    return HMorphism(n, 1, (word,))


def reduce_word(word: FreeWord, strategy: str = LEFTMOST) -> dict[HMorphism, Fraction]:
    """Rewrite one word into its multilinear normal form.

    Repeatedly splits a repeated variable into "only this occurrence
    survives" plus "this occurrence is deleted" (the coproduct relation
    for a primitive variable), then trades each surviving inverse letter
    for a sign, and kills words that miss a variable entirely.  The output
    is supported on permutation words: every variable exactly once,
    exponent +1.
    """
    if strategy not in (LEFTMOST, RIGHTMOST):
        raise ValueError(f"unknown strategy {strategy!r}")
    n = word.rank
    cache: dict[tuple, dict] = {}

    def rec(w: FreeWord) -> dict[HMorphism, Fraction]:
        key = w.letters
        hit = cache.get(key)
        if hit is not None:
            return hit
        present = {i for i, _ in w.letters}
        if len(present) < n:
            cache[key] = {}
            return {}
        repeated_at = None
        positions = range(len(w.letters)) if strategy == LEFTMOST else range(
            len(w.letters) - 1, -1, -1
        )
        for p in positions:
            index = w.letters[p][0]
            if len(w.occurrences(index)) >= 2:
                repeated_at = p
                break
        if repeated_at is None:
            sign = Fraction(1)
            for _, exponent in w.letters:
                if exponent < 0:
                    sign = -sign
            out = {_permutation_morphism(n, w.letters): sign}
            cache[key] = out
            return out
        target = w.letters[repeated_at][0]
        occurrences = w.occurrences(target)
        chosen = repeated_at
        survivor_only = FreeWord(
            n,
            tuple(
                letter
                for p, letter in enumerate(w.letters)
                if letter[0] != target or p == chosen
            ),
        )
        chosen_deleted = FreeWord(
            n, tuple(letter for p, letter in enumerate(w.letters) if p != chosen)
        )
        assert len(occurrences) >= 2
        out: dict[HMorphism, Fraction] = {}
        for branch in (chosen_deleted, survivor_only):
            for h, c in rec(branch).items():
                value = out.get(h, Fraction(0)) + c
                if value == 0:
                    out.pop(h, None)
                else:
                    out[h] = value
        cache[key] = out
        return out

    return rec(word)


def multilinear_reduce(element: LinHom, strategy: str = LEFTMOST) -> LinHom:
    """Reduce a combination of single-word morphisms to permutation words."""
    if element.cod != 1:
        raise ArityError("multilinear reduction expects codomain 1")
    acc: dict[HMorphism, Fraction] = {}
    for h, coefficient in element.terms:
        for perm, c in reduce_word(h.words[0], strategy).items():
            value = acc.get(perm, Fraction(0)) + coefficient * c
            if value == 0:
                acc.pop(perm, None)
            else:
                acc[perm] = value
    return LinHom.from_dict(element.dom, 1, acc)


def multilinear_part(
    action_result: Mapping, n: int
) -> dict[HMorphism, Fraction]:
    """Extract the degree-(1,..,1) component of a tensor-model action on cod 1.

    Keys of ``action_result`` are 1-tuples of tensor-algebra words; the
    words that are permutations of ``1..n`` are converted back to
    permutation morphisms for comparison with `multilinear_reduce`.
    """
    out: dict[HMorphism, Fraction] = {}
    for key, coefficient in action_result.items():
        (tensor_word,) = key
        if sorted(tensor_word) == list(range(1, n + 1)):
            h = _permutation_morphism(n, [(i, 1) for i in tensor_word])
            out[h] = out.get(h, Fraction(0)) + coefficient
    return {h: c for h, c in out.items() if c != 0}
