import pytest

from alcovegt.crystal import generate_crystal, verify_crystal_axioms
from alcovegt.gallery import (
    AlcoveModel,
    NotAdmissibleError,
    alcove_crystal,
    alcove_model,
    embed_psi,
    enumerate_admissible,
    extend_phi,
    fold,
    format_subset,
    restrict_phi,
    root_operator_E,
    root_operator_F,
    verify_extended_props,
    verify_ordinary_props,
    verify_psi,
    weight,
)
from alcovegt.paths import EXTENDED, GammaSequence, extend_path, gamma_lambda, lex_path
from alcovegt.roots import AffineElement, Hyperplane, WeylElement, normalize_weight, reduced_words, rho, sub
from tests.conftest import A1, A2, LAM, SWEEP, TH

EX415 = [(1, 2, 5), (1, 2, 7), (1, 4, 5), (1, 4, 7), (1, 6, 7), (3, 4, 5), (3, 4, 7), (3, 6, 7)]
SMALL = [l for l in SWEEP if sum(l) <= 4]


def test_enumerate_ordinary_examples(pi1, pi2):
    assert enumerate_admissible(pi1) == sorted(
        [(), (1,), (3,), (1, 2), (1, 3), (1, 4), (3, 4), (1, 2, 3)]
    )
    assert set(enumerate_admissible(pi2)) == {(), (3,), (1,), (1, 3), (1, 2), (3, 4), (1, 4), (1, 2, 3)}


def test_enumerate_extended_examples(g415):
    assert enumerate_admissible(g415) == EX415
    assert enumerate_admissible(gamma_lambda(3, (0, 0, 0))) == [(1, 2, 3)]


def test_admissibility_checks(pi1, g415):
    m = alcove_model(pi1)
    assert m.is_admissible((1, 2, 3))
    assert not m.is_admissible((2,))
    assert not m.is_admissible((3, 1))
    with pytest.raises(NotAdmissibleError):
        m.check((2, 3))
    assert not alcove_model(g415).is_admissible((1, 2))


def test_fold_examples(pi1, g415):
    F = fold(pi1, ())
    assert F.roots == pi1.roots and F.levels == pi1.levels and F.mu == (-2, -1, 0)
    F = fold(g415, (1, 2, 5))
    assert (F.root(1), F.root(2), F.root(5)) == (A2, A1, A2)
    w0_lam = WeylElement.longest(3).act(LAM)
    assert normalize_weight(tuple(-x for x in F.mu)) == normalize_weight(w0_lam)


def test_weight_examples(pi1, g415):
    assert weight(pi1, ()) == LAM
    assert normalize_weight(weight(g415, (3, 6, 7))) == LAM
    assert normalize_weight(weight(g415, (1, 2, 5))) == (-2, -1, 0)
    assert weight(g415, (1, 2, 5)) == (0, 1, 2)


def test_root_operator_examples(pi1, g415):
    assert root_operator_F(g415, (1, 2, 5), 1) is None
    assert root_operator_F(g415, (1, 2, 5), 2) is None
    assert root_operator_F(g415, (3, 6, 7), 1) == (3, 4, 7)
    assert root_operator_E(g415, (3, 4, 7), 1) == (3, 6, 7)
    for p in (1, 2):
        assert root_operator_E(g415, (3, 6, 7), p) is None
    assert root_operator_E(pi1, (1,), 1) == ()
    G = alcove_crystal(pi1)
    assert sorted(G.elements) == enumerate_admissible(pi1)


def test_operator_data_debug_view(g415):
    d = alcove_model(g415).operator_data((3, 6, 7), 1)
    assert d.M == -1 and d.m_F == 6 and d.k_F == 4
    assert set(d.attained) <= set(d.I)


def test_alcove_crystal_labels(g415):
    G = alcove_crystal(g415)
    assert G.highest == (3, 6, 7) and G.label(G.highest) == "{3,6,7}"
    assert format_subset(()) == "{}"


def test_custom_base_vertex(pi1):
    m = AlcoveModel(pi1, base=(0, 0, 0))
    assert m.weight(()) == (0, 0, 0)


@pytest.mark.parametrize("lam", SWEEP, ids=str)
def test_extended_crystal_is_the_admissible_set(lam):
    g = gamma_lambda(len(lam), lam)
    m = alcove_model(g)
    G = generate_crystal(m.highest, m, label=format_subset)
    assert sorted(G.elements) == m.enumerate_admissible()
    assert verify_crystal_axioms(G) == []
    for J in G.elements:
        assert m.weight(J) == m.weight_from_affine(J)
        assert m.affine_w(J).linear == WeylElement.longest(len(lam))


@pytest.mark.parametrize("lam", [l for l in SWEEP if len(l) <= 3 and sum(l) <= 4], ids=str)
def test_ordinary_props_on_lex_paths(lam):
    g = lex_path(len(lam), lam)
    assert verify_ordinary_props(g) == []
    assert verify_crystal_axioms(alcove_crystal(g)) == []


def test_ordinary_props_examples(pi1, pi2):
    assert verify_ordinary_props(pi1) == []
    assert verify_ordinary_props(pi2) == []


@pytest.mark.parametrize("lam", SWEEP, ids=str)
def test_extended_props_and_psi(lam):
    g = gamma_lambda(len(lam), lam)
    assert verify_extended_props(g) == []
    assert verify_psi(g) == []


def test_folding_reflections_are_involutions(g415):
    m = alcove_model(g415)
    for J in m.enumerate_admissible():
        F = m.fold(J)
        for j in J:
            s = AffineElement.reflection(F.root(j), F.level(j), 3)
            H = Hyperplane(F.root(j), F.level(j))
            assert s.act_hyperplane(H) == H
            assert (s * s).act(F.mu) == F.mu


def test_extend_phi_examples(pi1):
    s = len(pi1)
    for word in reduced_words(3):
        assert extend_phi(pi1, (), word) == (s + 1, s + 2, s + 3)
        assert extend_phi(pi1, (1, 2, 3), word) == (1, 2, 3)
        for J in enumerate_admissible(pi1):
            assert len(extend_phi(pi1, J, word)) == 3


@pytest.mark.parametrize("lam", [l for l in SWEEP if len(l) == 3], ids=str)
def test_extend_phi_commutes_with_operators(lam):
    g = lex_path(3, lam)
    for word in reduced_words(3):
        gx = extend_path(g, word)
        G, Gx = alcove_crystal(g), alcove_crystal(gx)
        phi = {J: extend_phi(g, J, word) for J in G.elements}
        assert sorted(phi.values()) == sorted(Gx.elements)
        for J, K in phi.items():
            assert restrict_phi(gx, len(g), K) == J
            assert normalize_weight(G.weights[J]) == normalize_weight(Gx.weights[K])
            for p in (1, 2):
                FJ, EJ = G.f(J, p), G.e(J, p)
                assert Gx.f(K, p) == (None if FJ is None else phi[FJ])
                assert Gx.e(K, p) == (None if EJ is None else phi[EJ])


def test_embed_psi_examples(g415):
    g2, J = embed_psi(g415, (3, 6, 7))
    m2, m = alcove_model(g2), alcove_model(g415)
    assert normalize_weight(m2.weight(J)) == normalize_weight(sub(LAM, rho(3)))
    g2, J = embed_psi(g415, (1, 2, 5))
    assert J == (1, 2, 5) and m2.is_admissible(J)
    for J in m.enumerate_admissible():
        _, K = embed_psi(g415, J)
        for p in (1, 2):
            M, M2 = m.operator_data(J, p).M, m2.operator_data(K, p).M
            assert M2 in (M, M + 1)
    with pytest.raises(ValueError):
        embed_psi(lex_path(3, LAM), ())


def test_non_gamma_extended_path_third_case_never_fires():
    g = extend_path(GammaSequence(3, LAM, "ordinary", (A1, TH, A2, TH)), (1, 2, 1))
    assert g.kind == EXTENDED
    G = alcove_crystal(g)
    assert len(G) == 8 and verify_crystal_axioms(G) == []
