"""Presented algebraic groups: structure maps, matrices, cotangent, Lie data."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from hopfrep.alggroups import (
    GroupDataError,
    LieDataError,
    LieParseError,
    LiePresentation,
    MissingMatrixShapeError,
    block_ideal_generators,
    block_ring,
    conjugation_substitution,
    cotangent_at_identity,
    evaluate_lie_expr,
    lie_from_constants,
    make_group,
    make_lie,
    matrix_word,
    parse_lie_expr,
    trace_of_word,
    _matrix_mul,
)
from hopfrep.groups import FreeWord, parse_word
from hopfrep.polyalg import (
    Ideal,
    Polynomial,
    embed,
    groebner,
    ideal_member,
    parse_polynomial,
)


# -- construction ------------------------------------------------------------


def test_sl2_presentation(sl2):
    assert sl2.variables == ("x11", "x12", "x21", "x22")
    (gen,) = sl2.defining_ideal.generators
    assert gen == parse_polynomial("x11*x22 - x12*x21 - 1", sl2.variables)


def test_torus_presentation(torus1):
    (gen,) = torus1.defining_ideal.generators
    assert gen == parse_polynomial("z*t - 1", torus1.variables)
    assert torus1.comultiplication[0] == parse_polynomial("z'*z''", torus1.doubled_ring)
    assert torus1.antipode[0] == Polynomial.variable(torus1.variables, "t")


def test_gl2_counit_is_identity_point(gl2):
    point = gl2.counit_point()
    assert point["x11"] == point["x22"] == point["t"] == 1
    assert point["x12"] == point["x21"] == 0
    for g in gl2.defining_ideal.generators:
        assert g.evaluate(point) == 0


def test_counit_axiom_legs(sl2, gl2, torus1, additive):
    # collapsing either leg of the coproduct with the counit returns the variable
    for group in (sl2, gl2, torus1, additive):
        doubled = group.doubled_ring
        point = group.counit_point()
        base = group.variables
        collapse_left = {}
        collapse_right = {}
        for v in base:
            collapse_left[f"{v}'"] = Polynomial.constant(base, point[v])
            collapse_left[f"{v}''"] = Polynomial.variable(base, v)
            collapse_right[f"{v}'"] = Polynomial.variable(base, v)
            collapse_right[f"{v}''"] = Polynomial.constant(base, point[v])
        for v, image in zip(base, group.comultiplication):
            expected = Polynomial.variable(base, v)
            assert image.substitute(collapse_left) == expected
            assert image.substitute(collapse_right) == expected


def test_antipode_is_inverse_matrix(gl2):
    # X * S(X) is the identity modulo the defining ideal
    shape = gl2.matrix_shape
    gb = groebner(gl2.defining_ideal)
    product = _matrix_mul(shape.entries, shape.antipode_entries, gl2.variables)
    for i in range(2):
        for j in range(2):
            assert ideal_member(product[i][j] - (1 if i == j else 0), gb)


def test_shipped_sizes():
    assert len(make_group("sl:3").variables) == 9
    assert len(make_group("gl:3").variables) == 10
    assert len(make_group("torus:2").variables) == 4
    with pytest.raises(GroupDataError):
        make_group("sl:4")
    with pytest.raises(GroupDataError):
        make_group("mystery:1")


def test_custom_group_json(tmp_path):
    # multiplicative group written out by hand
    data = {
        "name": "units",
        "variables": ["z", "w"],
        "ideal": ["z*w - 1"],
        "counit": {"z": "1", "w": "1"},
        "delta": {"z": "z'*z''", "w": "w'*w''"},
        "antipode": {"z": "w", "w": "z"},
        "matrix": [["z"]],
        "antipode_matrix": [["w"]],
    }
    path = tmp_path / "units.json"
    path.write_text(json.dumps(data))
    group = make_group(str(path))
    assert cotangent_at_identity(group).dimension == 1

    bad = dict(data, counit={"z": "2", "w": "1"})
    path.write_text(json.dumps(bad))
    with pytest.raises(GroupDataError):
        make_group(str(path))

    bad = dict(data, antipode={"z": "z", "w": "w"}, matrix=[["z"]])
    path.write_text(json.dumps(bad))
    with pytest.raises(GroupDataError):
        make_group(str(path))


# -- matrix words -------------------------------------------------------------


def test_matrix_word_single_letter(sl2):
    m = matrix_word(FreeWord(1, ((1, 1),)), sl2)
    ring = block_ring(sl2, [1])
    assert m == [
        [Polynomial.variable(ring, "x1_11"), Polynomial.variable(ring, "x1_12")],
        [Polynomial.variable(ring, "x1_21"), Polynomial.variable(ring, "x1_22")],
    ]


def test_matrix_word_inverse_is_adjugate(sl2):
    m = matrix_word(FreeWord(1, ((1, -1),)), sl2)
    ring = block_ring(sl2, [1])
    assert m[0][0] == Polynomial.variable(ring, "x1_22")
    assert m[0][1] == -Polynomial.variable(ring, "x1_12")
    assert m[1][0] == -Polynomial.variable(ring, "x1_21")
    assert m[1][1] == Polynomial.variable(ring, "x1_11")


def test_matrix_word_cancellation_modulo_ideal(sl2):
    # x1 * x1^-1 multiplies out to det * identity, which reduces to identity
    ring = block_ring(sl2, [1])
    gb = groebner(Ideal(ring, tuple(block_ideal_generators(sl2, 1, ring))))
    x = matrix_word(FreeWord(1, ((1, 1),)), sl2, ring=ring)
    xinv = matrix_word(FreeWord(1, ((1, -1),)), sl2, ring=ring)
    product = _matrix_mul(x, xinv, ring)
    for i in range(2):
        for j in range(2):
            assert ideal_member(product[i][j] - (1 if i == j else 0), gb)


def test_matrix_word_empty_word_is_identity(sl2):
    m = matrix_word(FreeWord(2), sl2)
    ring = block_ring(sl2, [1, 2])
    assert m[0][0] == Polynomial.one(ring) and m[0][1] == Polynomial.zero(ring)


def test_matrix_word_requires_shape(additive):
    with pytest.raises(MissingMatrixShapeError):
        matrix_word(FreeWord(1, ((1, 1),)), additive)


# -- traces and conjugation -----------------------------------------------------


def test_trace_examples(sl2):
    ring = block_ring(sl2, [1])
    assert trace_of_word(FreeWord(1, ((1, 1),)), sl2) == parse_polynomial(
        "x1_11 + x1_22", ring
    )
    assert trace_of_word(FreeWord(1), sl2) == Polynomial.constant(ring, 2)
    ring2 = block_ring(sl2, [1, 2])
    expected = parse_polynomial(
        "x1_11*x2_11 + x1_12*x2_21 + x1_21*x2_12 + x1_22*x2_22", ring2
    )
    assert trace_of_word(parse_word("a b", ("a", "b")), sl2) == expected


def test_conjugated_trace_congruent_modulo_conjugator_ideal(sl2):
    p = trace_of_word(FreeWord(1, ((1, 1),)), sl2)
    q = conjugation_substitution(p, sl2)
    extended = q.ring
    conj_gb = groebner(Ideal(extended, tuple(block_ideal_generators(sl2, 0, extended))))
    assert ideal_member(q - embed(p, extended), conj_gb)


def test_conjugated_entry_not_congruent(sl2):
    ring = block_ring(sl2, [1])
    p = Polynomial.variable(ring, "x1_12")
    q = conjugation_substitution(p, sl2)
    extended = q.ring
    conj_gb = groebner(Ideal(extended, tuple(block_ideal_generators(sl2, 0, extended))))
    assert not ideal_member(q - embed(p, extended), conj_gb)


def test_conjugation_fixes_constants(sl2):
    ring = block_ring(sl2, [1])
    one = Polynomial.one(ring)
    assert conjugation_substitution(one, sl2, n_copies=1) == Polynomial.one(
        block_ring(sl2, [0, 1])
    )


# -- cotangent spaces -------------------------------------------------------------


def test_torus_antipode_inverts_without_matrix_shape():
    torus2 = make_group("torus:2")
    gb = groebner(torus2.defining_ideal)
    for v, image in zip(torus2.variables, torus2.antipode):
        product = Polynomial.variable(torus2.variables, v) * image
        assert ideal_member(product - 1, gb)


def test_cotangent_dimensions(sl2, gl2, torus1, additive):
    assert cotangent_at_identity(sl2).dimension == 3
    assert cotangent_at_identity(gl2).dimension == 4
    assert cotangent_at_identity(torus1).dimension == 1
    assert cotangent_at_identity(additive).dimension == 1
    assert cotangent_at_identity(make_group("sl:3")).dimension == 8
    assert cotangent_at_identity(make_group("gl:3")).dimension == 9


def test_cotangent_linear_part_sl2(sl2):
    data = cotangent_at_identity(sl2)
    # the only generator linearizes to x11 + x22
    (row,) = data.linear_rows
    assert row == (Fraction(1), Fraction(0), Fraction(0), Fraction(1))


# -- Lie algebras ------------------------------------------------------------------


def test_abelian_lie():
    lie = make_lie("abelian:2")
    assert lie.dimension == 2
    assert all(c == 0 for plane in lie.constants for row in plane for c in row)


def test_sl2_brackets(sl2_lie):
    ring = ("s",)
    one = Polynomial.one(ring)
    zero = Polynomial.zero(ring)
    e = [one, zero, zero]
    f = [zero, one, zero]
    h = [zero, zero, one]
    assert sl2_lie.bracket_coords(h, e, ring) == [one * 2, zero, zero]
    assert sl2_lie.bracket_coords(h, f, ring) == [zero, one * -2, zero]
    assert sl2_lie.bracket_coords(e, f, ring) == [zero, zero, one]


def test_lie_validation_errors():
    with pytest.raises(LieDataError):
        lie_from_constants([[[0, 1], [0, 0]], [[0, 0], [0, 0]]])  # not antisymmetric
    # antisymmetric but failing Jacobi: [e1,e2]=e2, [e2,e3]=e1, [e3,e1]=0
    # gives [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = [e2,e3] = e1
    constants = [
        [[0, 0, 0], [0, 1, 0], [0, 0, 0]],
        [[0, -1, 0], [0, 0, 0], [1, 0, 0]],
        [[0, 0, 0], [-1, 0, 0], [0, 0, 0]],
    ]
    with pytest.raises(LieDataError):
        lie_from_constants(constants)


def test_lie_expr_parsing_and_evaluation(sl2_lie):
    names = ("a", "b")
    expr = parse_lie_expr("[a,[a,b]] - 2*b", names)
    ring = ("c",)
    one = Polynomial.one(ring)
    zero = Polynomial.zero(ring)
    assignment = {"a": [zero, zero, one], "b": [one, zero, zero]}  # a = h, b = e
    value = evaluate_lie_expr(expr, assignment, sl2_lie, ring)
    # [h,[h,e]] - 2e = [h, 2e] - 2e = 4e - 2e = 2e
    assert value == [one * 2, zero, zero]
    with pytest.raises(LieParseError):
        parse_lie_expr("[a,b", names)
    with pytest.raises(LieParseError):
        parse_lie_expr("q", names)


def test_lie_presentation_json(tmp_path):
    path = tmp_path / "ab2.json"
    path.write_text(json.dumps({"generators": ["a", "b"], "relators": ["[a,b]"]}))
    pres = LiePresentation.from_json(path)
    assert pres.n_generators == 2
    assert len(pres.relators) == 1
