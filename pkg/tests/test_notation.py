from fractions import Fraction

import pytest

from nilgca.exterior import Exterior
from nilgca.notation import (
    ExpressionError,
    SalamonSyntaxError,
    format_structure_tuple,
    parse_algebra_file,
    parse_double_element,
    parse_structure_tuple,
)
from nilgca.scalars import GaussianRational, I, ONE


def test_parse_basic_tuple():
    forms = parse_structure_tuple("0,0,0,12")
    assert forms[0].is_zero() and forms[2].is_zero()
    assert forms[3] == Exterior(4, 2, {(0, 1): 1})


def test_parse_sums_and_signs():
    forms = parse_structure_tuple("0,0,0,-12,31+42,41-32")
    assert forms[3] == Exterior(6, 2, {(0, 1): -1})
    assert forms[4] == Exterior(6, 2, {(2, 0): 1, (3, 1): 1})
    assert forms[5] == Exterior(6, 2, {(3, 0): 1, (2, 1): -1})


def test_parse_rational_coefficient():
    forms = parse_structure_tuple("0,0,1/2 12")
    assert forms[2] == Exterior(3, 2, {(0, 1): GaussianRational(Fraction(1, 2))})


def test_parse_bracketed_atoms():
    text = ",".join(["0"] * 9 + ["12+[10][11]"])
    # index 11 exceeds dimension 10
    with pytest.raises(SalamonSyntaxError):
        parse_structure_tuple(text)
    text = ",".join(["0"] * 10 + ["12+9[10]"])
    forms = parse_structure_tuple(text)
    assert forms[10] == Exterior(11, 2, {(0, 1): 1, (8, 9): 1})


def test_syntax_error_carries_position():
    with pytest.raises(SalamonSyntaxError) as info:
        parse_structure_tuple("0,0,x2")
    assert info.value.position == 4


@pytest.mark.parametrize("bad", ["", "0,,0", "0,0,1", "0,0,+12", "0,0,19"])
def test_rejected_tuples(bad):
    with pytest.raises(SalamonSyntaxError):
        parse_structure_tuple(bad)


def test_format_roundtrip_with_fractions():
    text = "0,0,1/2 12,13+2/3 23"
    forms = parse_structure_tuple(text)
    again = parse_structure_tuple(format_structure_tuple(forms))
    assert again == forms


def test_algebra_file():
    body = """
    # a comment
    heisenberg: 0,0,12
    0,0,0,12   # trailing comment
    """
    entries = parse_algebra_file(body)
    assert entries == [("heisenberg", "0,0,12"), (None, "0,0,0,12")]


def test_parse_double_element():
    v = parse_double_element("e1 - i*e2 + 1/2*E4", 4)
    assert v.get((0,)) == ONE
    assert v.get((1,)) == -I
    assert v.get((7,)) == GaussianRational(Fraction(1, 2))


def test_parse_parenthesized_coefficient():
    v = parse_double_element("(1/2+1/3i)*e1", 2)
    assert v.get((0,)) == GaussianRational(Fraction(1, 2), Fraction(1, 3))


def test_parse_wedge_monomials():
    from nilgca.catalog import form_from_text

    omega = form_from_text(6, "E1^E3 + E2^E6 + E4^E5")
    assert omega == Exterior(6, 2, {(0, 2): 1, (1, 5): 1, (3, 4): 1})
    assert form_from_text(2, "-1/4i*E1^E2") == Exterior(
        2, 2, {(0, 1): GaussianRational(0, Fraction(-1, 4))}
    )


@pytest.mark.parametrize("bad", ["", "e1 +", "e1 e2", "2*", "e1^", "q3", "e1**e2"])
def test_rejected_expressions(bad):
    with pytest.raises(ExpressionError):
        parse_double_element(bad, 4)


def test_unknown_symbol():
    with pytest.raises(ExpressionError):
        parse_double_element("e9", 4)
