import dataclasses

import pytest

from alcovegt.crystal import character, edge_set, relabel, string_datum
from alcovegt.gallery import alcove_crystal, alcove_model, enumerate_admissible
from alcovegt.isomorphism import (
    NotDecreasingError,
    admissible_from_gt,
    alcove_string_formula,
    canonicalize,
    gt_from_admissible,
    is_almost_decreasing,
    n_stats,
    n_stats_tuple,
    verify_decreasing_props,
    verify_iso,
)
from alcovegt.paths import extend_path, gamma_lambda, lex_path
from alcovegt.roots import iA_word, normalize_weight, reduced_words
from alcovegt.tableaux import gt_crystal, gt_string_formula, parse_gt
from tests.conftest import LAM, SWEEP

EX_N = [(1, 2, 1), (1, 2, 0), (1, 1, 1), (1, 1, 0), (1, 0, 0), (0, 1, 1), (0, 1, 0), (0, 0, 0)]


def test_almost_decreasing_examples(g415, pi1):
    assert all(is_almost_decreasing(g415, J) for J in enumerate_admissible(g415))
    gx = extend_path(pi1, (1, 2, 1))
    assert gx.roots[:3] == ((1, 2), (1, 3), (2, 3))
    assert not is_almost_decreasing(gx, (1, 2, 3))
    for m in range(4):
        g = gamma_lambda(2, (m, 0))
        assert all(is_almost_decreasing(g, J) for J in enumerate_admissible(g))


def test_n_stats_examples(g415):
    Js = enumerate_admissible(g415)
    assert [n_stats_tuple(n_stats(g415, J)) for J in Js] == EX_N
    assert n_stats_tuple(n_stats(g415, (1, 2, 5))) == (1, 2, 1)
    assert n_stats_tuple(n_stats(g415, (3, 6, 7))) == (0, 0, 0)
    assert n_stats_tuple(n_stats(g415, (1, 4, 7))) == (1, 1, 0)


def test_n_stats_requires_decreasing(pi1):
    gx = extend_path(pi1, (1, 2, 1))
    with pytest.raises(NotDecreasingError):
        n_stats(gx, (1, 2, 3))


def test_admissible_from_gt_examples():
    assert admissible_from_gt(LAM, parse_gt("(2 1 0 / 2 1 / 2)")) == (3, 6, 7)
    assert admissible_from_gt(LAM, parse_gt("(2 1 0 / 1 0 / 0)")) == (1, 2, 5)
    assert admissible_from_gt(LAM, parse_gt("(2 1 0 / 2 0 / 1)")) == (1, 4, 7)
    with pytest.raises(ValueError):
        admissible_from_gt((3, 1, 0), parse_gt("(2 1 0 / 2 0 / 1)"))


def test_gt_from_admissible_examples(g415):
    assert gt_from_admissible(g415, (3, 6, 7)) == parse_gt("(2 1 0 / 2 1 / 2)")
    assert gt_from_admissible(g415, (1, 2, 5)) == parse_gt("(2 1 0 / 1 0 / 0)")
    assert gt_from_admissible(g415, (1, 4, 7)) == parse_gt("(2 1 0 / 2 0 / 1)")
    with pytest.raises(ValueError):
        gt_from_admissible(lex_path(3, LAM), ())


def test_canonicalize_examples(g415, pi1):
    for J in enumerate_admissible(g415):
        assert canonicalize(g415, J) == J
    gx = extend_path(pi1, (1, 2, 1))
    word = iA_word(3)
    J2 = canonicalize(gx, (1, 2, 3))
    assert J2 in enumerate_admissible(g415)
    assert string_datum(alcove_crystal(gx), (1, 2, 3), word) == string_datum(alcove_crystal(g415), J2, word)


@pytest.mark.parametrize("lam", [l for l in SWEEP if len(l) == 3], ids=str)
def test_canonicalize_preserves_weight(lam):
    g0 = gamma_lambda(3, lam)
    for word in reduced_words(3):
        gx = extend_path(lex_path(3, lam), word)
        mx, m0 = alcove_model(gx), alcove_model(g0)
        for J in enumerate_admissible(gx):
            assert normalize_weight(mx.weight(J)) == normalize_weight(m0.weight(canonicalize(gx, J)))


def test_decreasing_props_examples(g415):
    for J in enumerate_admissible(g415):
        assert verify_decreasing_props(g415, J) == []
    g4 = gamma_lambda(4, (2, 1, 1, 0))
    for J in enumerate_admissible(g4):
        assert verify_decreasing_props(g4, J) == []


def test_fault_injection_reports_item_4(g415):
    J = (1, 2, 5)
    F = alcove_model(g415).fold(J)
    levels = list(F.levels)
    (j23,) = [j for j in J if g415.root(j) == (2, 3)]
    levels[j23 - 1] += 1
    bad = dataclasses.replace(F, levels=tuple(levels))
    items = {f.item for f in verify_decreasing_props(g415, J, folded=bad)}
    assert "(4)" in items


@pytest.mark.parametrize("lam", SWEEP, ids=str)
def test_pattern_map_on_sweep(lam):
    assert verify_iso(lam) == []
    g = gamma_lambda(len(lam), lam)
    G = alcove_crystal(g)
    word = iA_word(len(lam))
    for J in G.elements:
        N = n_stats(g, J)
        sd = string_datum(G, J, word)
        assert sd == gt_string_formula(gt_from_admissible(g, J)) == alcove_string_formula(N, len(lam))


@pytest.mark.parametrize("lam", [l for l in SWEEP if len(l) >= 3 and sum(l) <= 4], ids=str)
def test_path_independence(lam):
    n = len(lam)
    target = edge_set(gt_crystal(lam))
    ref = character(gt_crystal(lam))
    for word in reduced_words(n)[:4]:
        g = extend_path(lex_path(n, lam), word)
        G = alcove_crystal(g)
        labelled = relabel(G, lambda J: gt_from_admissible(g, J))
        assert edge_set(labelled) == target
        assert character(G) == ref


def test_direct_n_stats_agree_with_canonicalization():
    # Where a non-canonical subset is already almost decreasing, the direct
    # N-statistics and the canonical representative give the same pattern.
    checked = 0
    for lam in [l for l in SWEEP if len(l) == 3]:
        g0 = gamma_lambda(3, lam)
        for word in reduced_words(3):
            g = extend_path(lex_path(3, lam), word)
            for J in enumerate_admissible(g):
                if is_almost_decreasing(g, J):
                    direct = gt_from_admissible(g, J)
                    J0 = canonicalize(g, J)
                    assert direct == gt_from_admissible(g0, J0)
                    checked += 1
    assert checked > 0
