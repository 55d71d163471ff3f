"""Shared fixtures and randomized-input helpers for the test suite."""

from __future__ import annotations

import random

import pytest

from hopfrep.alggroups import make_group, make_lie
from hopfrep.groups import FreeWord, symmetric_group
from hopfrep.prop_h import Compose, Gen, GeneratorTerm, HMorphism, Id, Tensor


@pytest.fixture(scope="session")
def sl2():
    return make_group("sl:2")


@pytest.fixture(scope="session")
def gl2():
    return make_group("gl:2")


@pytest.fixture(scope="session")
def torus1():
    return make_group("torus:1")


@pytest.fixture(scope="session")
def additive():
    return make_group("ga")


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def sl2_lie():
    return make_lie("sl2")


# -- randomized inputs (seeded by the callers for reproducibility) ----------


def random_free_word(rng: random.Random, rank: int, max_len: int) -> FreeWord:
    if rank == 0:
        return FreeWord(0)
    length = rng.randint(0, max_len)
    letters = tuple(
        (rng.randint(1, rank), rng.choice((1, -1))) for _ in range(length)
    )
    return FreeWord(rank, letters)


def random_hmorphism(
    rng: random.Random, dom: int, cod: int, max_len: int = 6
) -> HMorphism:
    return HMorphism(
        dom, cod, tuple(random_free_word(rng, dom, max_len) for _ in range(cod))
    )


_LAYER_ATOMS = (
    ("mu", 2),
    ("delta", 1),
    ("antipode", 1),
    ("epsilon", 1),
    ("tau", 2),
    ("id", 1),
    ("id", 1),
    ("eta", 0),
)


def random_layer(rng: random.Random, width: int) -> tuple[GeneratorTerm, int]:
    """A random tensor of atoms whose domains sum to ``width``."""
    atoms: list[GeneratorTerm] = []
    need = width
    while need > 0:
        name, dom = rng.choice(_LAYER_ATOMS)
        if dom > need or (name == "eta" and rng.random() < 0.6):
            continue
        atoms.append(Id(1) if name == "id" else Gen(name))
        need -= dom
    if not atoms:
        atoms.append(Gen("eta") if rng.random() < 0.5 else Id(0))
    term = atoms[0]
    for atom in atoms[1:]:
        term = Tensor(term, atom)
    return term, term.arity()[1]


def random_term(rng: random.Random, max_layers: int = 4) -> tuple[GeneratorTerm, int]:
    """A random well-typed composite; returns the term and its domain width."""
    start = rng.randint(0, 3)
    width = start
    term: GeneratorTerm = Id(start)
    for _ in range(rng.randint(1, max_layers)):
        layer, width = random_layer(rng, width)
        term = Compose(layer, term)
        if width > 5:
            break
    return term, start
