import pytest

from alcovegt.crystal import string_datum, verify_crystal_axioms
from alcovegt.roots import iA_word
from alcovegt.tableaux import (
    SSYT,
    GTPattern,
    enumerate_gt,
    enumerate_ssyt,
    gt_crystal,
    gt_from_ssyt,
    gt_string_formula,
    gt_weight,
    parse_gt,
    ssyt_count,
    ssyt_crystal,
    ssyt_from_gt,
    ssyt_operator,
)
from tests.conftest import SWEEP


def T(*rows, n=3):
    return SSYT(tuple(tuple(r) for r in rows), n)


def P(text):
    return parse_gt(text)


def test_gt_from_ssyt_examples():
    assert gt_from_ssyt(T((1, 1), (2,))) == P("(2 1 0 / 2 1 / 2)")
    assert gt_from_ssyt(T((2, 3), (3,))) == P("(2 1 0 / 1 0 / 0)")
    assert gt_from_ssyt(T()) == P("(0 0 0 / 0 0 / 0)")


def test_ssyt_from_gt_examples():
    assert ssyt_from_gt(P("(2 1 0 / 2 1 / 2)")) == T((1, 1), (2,))
    assert ssyt_from_gt(P("(2 1 0 / 2 0 / 1)")) == T((1, 2), (3,))
    assert ssyt_from_gt(P("(0 0 0 / 0 0 / 0)")) == T()


def test_ssyt_operator_examples():
    top = T((1, 1), (2,))
    assert ssyt_operator(top, 1, "lower") == T((1, 2), (2,))
    assert ssyt_operator(top, 2, "lower") == T((1, 1), (3,))
    assert ssyt_operator(top, 1, "raise") is None
    with pytest.raises(ValueError):
        ssyt_operator(top, 1, "sideways")


def test_gt_string_formula_examples():
    assert gt_string_formula(P("(2 1 0 / 2 1 / 2)")) == (0, 0, 0)
    assert gt_string_formula(P("(2 1 0 / 1 0 / 0)")) == (1, 2, 1)
    assert gt_string_formula(P("(2 1 0 / 2 0 / 1)")) == (1, 1, 0)


def test_pattern_text_forms():
    a = P("(2 1 0; 2 1; 2)")
    assert str(a) == "(2 1 0 / 2 1 / 2)"
    assert a.a(1, 1) == 2 and a.a(1, 2) == 2 and a.a(2, 3) == 1 and a.a(1, 3) == 2
    with pytest.raises(ValueError):
        parse_gt("(2 1 0 / 0 1 / 0)")
    assert str(T((1, 1), (2,))) == "11/2"


@pytest.mark.parametrize("lam", SWEEP, ids=str)
def test_bijection_and_counts(lam):
    tabs = enumerate_ssyt(lam)
    pats = enumerate_gt(lam)
    assert len(tabs) == len(pats)
    assert sorted(gt_from_ssyt(t) for t in tabs) == pats
    for t in tabs:
        assert ssyt_from_gt(gt_from_ssyt(t)) == t
    for a in pats:
        assert a.is_valid() and gt_from_ssyt(ssyt_from_gt(a)) == a
        assert gt_weight(a) == ssyt_from_gt(a).content()


@pytest.mark.parametrize("lam", SWEEP, ids=str)
def test_tableau_crystals(lam):
    S, G = ssyt_crystal(lam), gt_crystal(lam)
    assert verify_crystal_axioms(S) == []
    assert verify_crystal_axioms(G) == []
    assert len(S) == len(G) == ssyt_count(lam)
    assert sorted(S.elements) == enumerate_ssyt(lam)


@pytest.mark.parametrize("lam", SWEEP, ids=str)
def test_gt_string_formula_matches_extraction(lam):
    G = gt_crystal(lam)
    word = iA_word(len(lam))
    for a in G.elements:
        assert string_datum(G, a, word) == gt_string_formula(a)


def test_weyl_dimension():
    assert ssyt_count((3, 1, 0)) == 15
    assert ssyt_count((2, 1, 0)) == 8
    assert ssyt_count((2, 1, 1, 0)) == 15
