"""Words, presentations, finite groups, homomorphism enumeration."""

from __future__ import annotations

import itertools
import json
import random

import pytest

from hopfrep.groups import (
    FiniteGroup,
    FreeWord,
    GroupPresentation,
    GroupTableError,
    WordError,
    WordParseError,
    cyclic_group,
    enumerate_homs,
    evaluate_word,
    format_word,
    make_finite_group,
    parse_word,
    symmetric_group,
)


def W(text, names=("a", "b", "c")):
    return parse_word(text, names)


# -- free words --------------------------------------------------------------


def test_concat_reduces():
    ab = W("a b", ("a", "b"))
    binv = W("b^-1", ("a", "b"))
    assert ab * binv == W("a", ("a", "b"))


def test_inverse():
    assert W("a b", ("a", "b")).inverse() == W("b^-1 a^-1", ("a", "b"))


def test_substitute_with_reduction():
    w = parse_word("x1 x2 x1^-1", ("x1", "x2"))
    images = (W("a b", ("a", "b")), W("b", ("a", "b")))
    assert w.substitute(images) == W("a b a^-1", ("a", "b"))


def test_substitute_identity_tuple():
    rng = random.Random(7)
    for _ in range(50):
        letters = tuple(
            (rng.randint(1, 3), rng.choice((1, -1))) for _ in range(rng.randint(0, 8))
        )
        w = FreeWord(3, letters)
        idt = tuple(FreeWord.generator(3, i) for i in (1, 2, 3))
        assert w.substitute(idt) == w


def test_substitute_functorial():
    # substituting twice equals substituting by the composite tuple
    rng = random.Random(11)
    for _ in range(60):
        w = FreeWord(
            2,
            tuple((rng.randint(1, 2), rng.choice((1, -1))) for _ in range(rng.randint(0, 6))),
        )
        T = tuple(
            FreeWord(3, tuple((rng.randint(1, 3), rng.choice((1, -1))) for _ in range(3)))
            for _ in range(2)
        )
        U = tuple(
            FreeWord(2, tuple((rng.randint(1, 2), rng.choice((1, -1))) for _ in range(3)))
            for _ in range(3)
        )
        left = w.substitute(T).substitute(U)
        right = w.substitute(tuple(t.substitute(U) for t in T))
        assert left == right


def test_reduction_idempotent_and_shorter():
    raw = ((1, 1), (2, 1), (2, -1), (1, -1), (1, 1))
    w = FreeWord(2, raw)
    assert len(w.letters) <= len(raw)
    assert FreeWord(2, w.letters) == w


def test_word_validation():
    with pytest.raises(WordError):
        FreeWord(1, ((2, 1),))
    with pytest.raises(WordError):
        FreeWord(1, ((1, 2),))
    with pytest.raises(WordError):
        FreeWord(2, ()).substitute((FreeWord(1),))


def test_word_parse_and_format():
    w = W("a^2 b^-3 a", ("a", "b"))
    assert format_word(w, ("a", "b")) == "a^2 b^-3 a"
    assert format_word(FreeWord(2)) == "e"
    with pytest.raises(WordParseError):
        W("a$", ("a",))
    with pytest.raises(WordParseError):
        W("q", ("a",))


# -- presentations -----------------------------------------------------------


def test_presentation_json_roundtrip(tmp_path):
    data = {"generators": ["a", "b"], "relators": ["a b a^-1 b^-1"]}
    path = tmp_path / "z2.json"
    path.write_text(json.dumps(data))
    pres = GroupPresentation.from_json(path)
    assert pres.n_generators == 2
    assert pres.to_json() == data


def test_presentation_validation():
    with pytest.raises(ValueError):
        GroupPresentation(("a", "a"))
    with pytest.raises(WordError):
        GroupPresentation(("a",), (FreeWord(2, ((2, 1),)),))


# -- finite groups -----------------------------------------------------------


def test_cyclic_trivial():
    g = cyclic_group(1)
    assert g.order == 1 and g.identity == 0


def test_symmetric_three():
    s3 = symmetric_group(3)
    assert s3.order == 6
    assert s3.names[s3.identity] == "e"


def test_invalid_tables_rejected():
    with pytest.raises(GroupTableError):
        # left-to-right composition table that is not associative
        FiniteGroup.from_table([[0, 1, 2], [1, 2, 0], [2, 1, 0]])
    with pytest.raises(GroupTableError):
        FiniteGroup.from_table([[1, 0], [1, 0]])  # no identity
    with pytest.raises(GroupTableError):
        FiniteGroup.from_table([[0, 1], [1, 2]])  # not closed


def test_make_finite_group_specs(tmp_path):
    assert make_finite_group("cyclic:3").order == 3
    assert make_finite_group("sym:3").order == 6
    path = tmp_path / "k4.json"
    table = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    path.write_text(json.dumps({"table": table}))
    assert make_finite_group(str(path)).order == 4
    with pytest.raises(GroupTableError):
        make_finite_group("nonsense:9")


def test_power_and_order():
    s3 = symmetric_group(3)
    swap = s3.names.index("(1 2)")
    assert s3.element_order(swap) == 2
    assert s3.power(swap, 2) == s3.identity
    assert s3.power(swap, -1) == swap


# -- evaluation --------------------------------------------------------------


def test_evaluate_identity_word(s3):
    assert evaluate_word(FreeWord(2), [0, 1], s3) == s3.identity


def test_evaluate_involution(s3):
    swap = s3.names.index("(1 2)")
    w = parse_word("x1^2", ("x1",))
    assert evaluate_word(w, [swap], s3) == s3.identity


def test_evaluate_commutator_is_three_cycle(s3):
    a = s3.names.index("(1 2)")
    b = s3.names.index("(0 2)")
    w = parse_word("x1 x2 x1^-1 x2^-1", ("x1", "x2"))
    result = evaluate_word(w, [a, b], s3)
    assert result != s3.identity
    assert s3.element_order(result) == 3


def test_evaluate_length_mismatch(s3):
    with pytest.raises(WordError):
        evaluate_word(FreeWord(2), [0], s3)


# -- homomorphism enumeration -------------------------------------------------


def _scan_homs(source, target):
    """Independent oracle: full scan of all image tuples."""
    n = source.n_generators
    found = []
    for images in itertools.product(range(target.order), repeat=n):
        if all(
            evaluate_word(r, list(images), target) == target.identity
            for r in source.relators
        ):
            found.append(images)
    return found


@pytest.mark.parametrize(
    "relator_text, expected",
    [("a^2", 4), ("a^3", 3), ("a^6", 6)],
)
def test_enumerate_cyclic_into_s3(relator_text, expected, s3):
    pres = GroupPresentation(("a",), (parse_word(relator_text, ("a",)),))
    homs = enumerate_homs(pres, s3)
    assert len(homs) == expected
    assert homs == _scan_homs(pres, s3)


def test_enumerate_free_counts(s3):
    c4 = cyclic_group(4)
    for target in (s3, c4):
        for n in range(0, 4):
            homs = enumerate_homs(GroupPresentation.free(n), target)
            assert len(homs) == target.order**n


def test_enumeration_sorted_and_exhaustive(s3):
    pres = GroupPresentation(
        ("a", "b"),
        (
            parse_word("a^2", ("a", "b")),
            parse_word("b^3", ("a", "b")),
            parse_word("a b a^-1 b", ("a", "b")),
        ),
    )
    homs = enumerate_homs(pres, s3)
    assert homs == sorted(homs)
    assert homs == _scan_homs(pres, s3)
    # this is a presentation of S_3 itself: 1 trivial + 3 sign-like + 6 isos
    assert len(homs) == 10
