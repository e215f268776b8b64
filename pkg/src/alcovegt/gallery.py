"""Admissible subsets, folded galleries and the root operators on them.

Subsets ``J`` are strictly increasing tuples of 1-based positions into a
:class:`~alcovegt.paths.GammaSequence`.  Folding ``J`` reflects the tail of
the straight gallery across the walls at the positions of ``J``; the
crystal operators read off which folded walls are parallel to ``alpha_p``
and at which level.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .crystal import CrystalGraph, generate_crystal
from .paths import EXTENDED, ORDINARY, GammaSequence, check_gamma, extend_path, rho_shift_concat
from .roots import (
    AffineElement,
    Hyperplane,
    Root,
    Weight,
    WeylElement,
    is_cover_step,
    normalize_weight,
    pairing,
    reflection_order,
    rho,
    simple_root,
    sub,
)

Subset = tuple[int, ...]


class NotAdmissibleError(ValueError):
    pass


@dataclass(frozen=True)
class FoldedGallery:
    roots: tuple[Root, ...]
    levels: tuple[int, ...]
    mu: Weight

    def root(self, i: int) -> Root:
        return self.roots[i - 1]

    def level(self, i: int) -> int:
        return self.levels[i - 1]


@dataclass(frozen=True)
class OperatorData:
    """Internals of ``E_p`` / ``F_p`` at ``(J, p)``; ``None`` marks an undefined index."""

    I: tuple[int, ...]
    L: tuple[int, ...]
    M: int
    mu_pairing: int
    m_F: int | None
    k_F: int | None
    k_prime: int | None
    k_E: int | None
    m_E: int | None

    @property
    def attained(self) -> tuple[int, ...]:
        """Positions of ``I(J, p)`` whose folded level equals ``M(J, p)``."""
        return tuple(i for i, l in zip(self.I, self.L) if l == self.M)


def _min_or_none(xs):
    xs = list(xs)
    return min(xs) if xs else None


def _max_or_none(xs):
    xs = list(xs)
    return max(xs) if xs else None


class AlcoveModel:
    """The crystal of admissible subsets of one path, with base vertex ``-lambda``."""

    def __init__(self, path: GammaSequence, base: Sequence[int] | None = None):
        self.path = path
        self.n = path.n
        self.lam = path.lam
        self.base = tuple(base) if base is not None else tuple(-x for x in path.lam)
        self.N = self.n * (self.n - 1) // 2
        self._fold_cache: dict[Subset, FoldedGallery] = {}

    @property
    def extended(self) -> bool:
        return self.path.kind == EXTENDED

    # -- admissibility -------------------------------------------------------

    def w_bar(self, J: Subset) -> WeylElement:
        w = WeylElement.identity(self.n)
        for j in J:
            w = w.right_reflect(self.path.root(j))
        return w

    def affine_w(self, J: Subset) -> AffineElement:
        """``w(J) = s_{F_{j_1}} ... s_{F_{j_t}}``."""
        w = AffineElement.identity(self.n)
        for j in J:
            w = w * AffineElement.reflection(self.path.root(j), self.path.level(j), self.n)
        return w

    def is_admissible(self, J: Subset) -> bool:
        J = tuple(J)
        if any(not 1 <= j <= len(self.path) for j in J) or list(J) != sorted(set(J)):
            return False
        w = WeylElement.identity(self.n)
        for j in J:
            beta = self.path.root(j)
            if not is_cover_step(w, beta):
                return False
            w = w.right_reflect(beta)
        return not self.extended or len(J) == self.N

    def check(self, J: Subset) -> Subset:
        J = tuple(J)
        if not self.is_admissible(J):
            raise NotAdmissibleError(f"{J} is not admissible for this path")
        return J

    def enumerate_admissible(self) -> list[Subset]:
        """All admissible subsets, lexicographically sorted."""
        s = len(self.path)
        roots = self.path.roots
        target = self.N if self.extended else None
        out = []

        def dfs(start, w, J):
            if target is None or len(J) == target:
                out.append(tuple(J))
                if target is not None:
                    return
            if target is not None and s - start < target - len(J):
                return
            for i in range(start, s):
                if is_cover_step(w, roots[i]):
                    J.append(i + 1)
                    dfs(i + 1, w.right_reflect(roots[i]), J)
                    J.pop()

        dfs(0, WeylElement.identity(self.n), [])
        return sorted(out)

    @property
    def highest(self) -> Subset:
        if not self.extended:
            return ()
        return self._extended_highest()

    def _extended_highest(self) -> Subset:
        lam = normalize_weight(self.lam)
        tops = [J for J in self.enumerate_admissible() if normalize_weight(self.weight(J)) == lam]
        if len(tops) != 1:
            raise RuntimeError(f"expected one admissible subset of weight lambda, found {len(tops)}")
        return tops[0]

    # -- folding -------------------------------------------------------------

    def fold(self, J: Subset) -> FoldedGallery:
        J = tuple(J)
        if J in self._fold_cache:
            return self._fold_cache[J]
        Jset = set(J)
        w = AffineElement.identity(self.n)
        roots, levels = [], []
        for i, (beta, l) in enumerate(zip(self.path.roots, self.path.levels), 1):
            H = w.act_hyperplane(Hyperplane(beta, l))
            roots.append(H.root)
            levels.append(H.level)
            if i in Jset:
                w = w * AffineElement.reflection(beta, l, self.n)
        out = FoldedGallery(tuple(roots), tuple(levels), w.act(self.base))
        self._fold_cache[J] = out
        return out

    def weight(self, J: Subset) -> Weight:
        return tuple(-x for x in self.fold(J).mu)

    def weight_from_affine(self, J: Subset) -> Weight:
        """``-w(J)(-lambda)``, computed without folding."""
        return tuple(-x for x in self.affine_w(J).act(self.base))

    # -- root operators ------------------------------------------------------

    def operator_data(self, J: Subset, p: int) -> OperatorData:
        G = self.fold(J)
        ap = simple_root(p)
        I = tuple(i for i, r in enumerate(G.roots, 1) if r == ap)
        L = tuple(G.level(i) for i in I)
        mu_pair = pairing(G.mu, ap)
        M = min(L + (mu_pair,))
        att = [i for i, l in zip(I, L) if l == M]
        m_F = _min_or_none(att)
        k_F = _max_or_none(i for i in I if m_F is not None and i < m_F)
        k_E = _max_or_none(att)
        m_E = _min_or_none(i for i in I if k_E is not None and i > k_E)
        return OperatorData(I, L, M, mu_pair, m_F, k_F, _max_or_none(I), k_E, m_E)

    def f(self, J: Subset, p: int) -> Subset | None:
        d = self.operator_data(J, p)
        if d.M >= 0:
            return None
        if d.m_F is not None:
            if d.k_F is None:
                raise RuntimeError(f"F_{p}{J}: no position of I(J,p) before m_F")
            return tuple(sorted((set(J) - {d.m_F}) | {d.k_F}))
        if self.extended:
            raise RuntimeError(f"F_{p}{J}: third case reached on an extended path")
        return tuple(sorted(set(J) | {d.k_prime}))

    def e(self, J: Subset, p: int) -> Subset | None:
        d = self.operator_data(J, p)
        if d.M == d.mu_pairing:
            return None
        if d.k_E != d.k_prime:
            return tuple(sorted((set(J) - {d.k_E}) | {d.m_E}))
        if self.extended:
            raise RuntimeError(f"E_{p}{J}: third case reached on an extended path")
        return tuple(sorted(set(J) - {d.k_prime}))

    def crystal(self) -> CrystalGraph:
        return alcove_crystal(self.path)


def format_subset(J: Subset) -> str:
    return "{" + ",".join(map(str, J)) + "}"


@lru_cache(maxsize=256)
def alcove_model(path: GammaSequence) -> AlcoveModel:
    return AlcoveModel(path)


@lru_cache(maxsize=256)
def alcove_crystal(path: GammaSequence) -> CrystalGraph:
    model = alcove_model(path)
    return generate_crystal(model.highest, model, label=format_subset)


# -- module-level operations -------------------------------------------------


def enumerate_admissible(g: GammaSequence) -> list[Subset]:
    return alcove_model(g).enumerate_admissible()


def fold(g: GammaSequence, J: Subset) -> FoldedGallery:
    return alcove_model(g).fold(J)


def weight(g: GammaSequence, J: Subset) -> Weight:
    return alcove_model(g).weight(J)


def root_operator_F(g: GammaSequence, J: Subset, p: int) -> Subset | None:
    return alcove_model(g).f(tuple(J), p)


def root_operator_E(g: GammaSequence, J: Subset, p: int) -> Subset | None:
    return alcove_model(g).e(tuple(J), p)


def extend_phi(g: GammaSequence, J: Subset, word: Sequence[int]) -> Subset:
    """Complete an ordinary subset by the unique increasing chain to ``w0`` in the appended order."""
    model = alcove_model(g)
    J = model.check(J)
    tail = reflection_order(word, g.n)
    s, N = len(g), model.N
    target = WeylElement.longest(g.n)
    found = []

    def dfs(start, w, chosen):
        if w == target:
            found.append(tuple(chosen))
            return
        for k in range(start, N):
            if is_cover_step(w, tail[k]):
                chosen.append(s + k + 1)
                dfs(k + 1, w.right_reflect(tail[k]), chosen)
                chosen.pop()

    dfs(0, model.w_bar(J), [])
    if len(found) != 1:
        raise RuntimeError(f"expected a unique completing chain for {J}, found {len(found)}")
    return J + found[0]


def restrict_phi(g_ext: GammaSequence, s: int, J: Subset) -> Subset:
    """Inverse of :func:`extend_phi`: keep the positions inside the ordinary part."""
    return tuple(j for j in J if j <= s)


def embed_psi(g: GammaSequence, J: Subset) -> tuple[GammaSequence, Subset]:
    """``Psi``: the same positions, read in the ordinary ``lambda + rho`` path."""
    if g.kind != EXTENDED:
        raise ValueError("embed_psi expects an extended path")
    g2 = check_gamma(rho_shift_concat(g))
    J = tuple(J)
    if not alcove_model(g2).is_admissible(J):
        raise NotAdmissibleError(f"Psi({J}) is not admissible in the rho-shifted path")
    return g2, J


# -- proposition sweeps --------------------------------------------------------


@dataclass(frozen=True)
class Finding:
    item: str
    J: Subset
    p: int | None
    detail: str


def verify_ordinary_props(g: GammaSequence) -> list[Finding]:
    """Weight, ``M``, ``phi``/``eps`` and case-tag properties for every admissible subset of an ordinary path."""
    if g.kind != ORDINARY:
        raise ValueError("ordinary path expected")
    model = alcove_model(g)
    G = alcove_crystal(g)
    out = []
    elements = model.enumerate_admissible()
    if sorted(G.elements) != elements:
        out.append(Finding("closure", (), None, "crystal from the empty set != admissible subsets"))
    for J in elements:
        wt = model.weight(J)
        if normalize_weight(wt) != normalize_weight(model.weight_from_affine(J)):
            out.append(Finding("(1)", J, None, f"wt {wt} != -w(J)(-lambda)"))
        wbar = model.w_bar(J)
        for p in range(1, g.n):
            d = model.operator_data(J, p)
            neg_wt = pairing(tuple(-x for x in wt), simple_root(p))
            if d.M > 0:
                out.append(Finding("(2)", J, p, f"M = {d.M} > 0"))
            tilde = [l for i, l in zip(d.I, d.L) if i in J]
            if d.M != min(tilde + [neg_wt]):
                out.append(Finding("(3)", J, p, "M differs from the min over I(J,p) & J"))
            if G.phi(J, p) != -d.M:
                out.append(Finding("(4)", J, p, f"phi = {G.phi(J, p)} != -M = {-d.M}"))
            if G.epsilon(J, p) != neg_wt - d.M:
                out.append(Finding("(5)", J, p, "eps != (-wt, alpha_p) - M"))
            F = model.f(J, p)
            if d.M < 0 and d.m_F is not None:
                if d.m_F not in J or d.k_F in J or model.w_bar(F) != wbar:
                    out.append(Finding("(6)", J, p, "m_F/k_F case tags fail"))
            elif d.M < 0:
                sw = WeylElement.reflection(simple_root(p), g.n) * wbar
                if d.k_prime in J or model.w_bar(F) != sw or sw.length() != wbar.length() + 1:
                    out.append(Finding("(7)", J, p, "k' case tags fail"))
            E = model.e(J, p)
            if d.M < d.mu_pairing and d.k_E != d.k_prime:
                if d.k_E not in J or d.m_E in J or model.w_bar(E) != wbar:
                    out.append(Finding("(8)", J, p, "k_E/m_E case tags fail"))
            elif d.M < d.mu_pairing:
                sw = WeylElement.reflection(simple_root(p), g.n) * wbar
                if d.k_prime not in J or model.w_bar(E) != sw or sw.length() != wbar.length() - 1:
                    out.append(Finding("(9)", J, p, "k' removal case tags fail"))
            for X in (F, E):
                if X is not None and not model.is_admissible(X):
                    out.append(Finding("closure", J, p, f"operator output {X} not admissible"))
    return out


def verify_extended_props(g: GammaSequence) -> list[Finding]:
    """``M <= 0``, ``phi = -M``, the ``eps`` formula and the simplified operator rules on an extended path."""
    if g.kind != EXTENDED:
        raise ValueError("extended path expected")
    model = alcove_model(g)
    G = alcove_crystal(g)
    out = []
    elements = model.enumerate_admissible()
    if sorted(G.elements) != elements:
        out.append(Finding("closure", (), None, "crystal from the highest element != admissible subsets"))
    for J in elements:
        if model.w_bar(J) != WeylElement.longest(g.n):
            out.append(Finding("w(J)", J, None, "w_bar(J) != w0"))
        if model.affine_w(J).linear != WeylElement.longest(g.n):
            out.append(Finding("w(J)", J, None, "linear part of w(J) != w0"))
        wt = model.weight(J)
        for p in range(1, g.n):
            d = model.operator_data(J, p)
            neg_wt = pairing(tuple(-x for x in wt), simple_root(p))
            if d.M > 0:
                out.append(Finding("(1)", J, p, f"M = {d.M} > 0"))
            if G.phi(J, p) != -d.M:
                out.append(Finding("(2)", J, p, f"phi = {G.phi(J, p)} != -M = {-d.M}"))
            if G.epsilon(J, p) != neg_wt - d.M:
                out.append(Finding("(3)", J, p, "eps != (-wt, alpha_p) - M"))
            tilde = [i for i, l in zip(d.I, d.L) if i in J and l == d.M]
            if d.M == 0:
                expected_F = None
            else:
                jm = min(tilde) if tilde else None
                ks = [i for i in d.I if jm is not None and i < jm]
                expected_F = None if jm is None or not ks else tuple(sorted((set(J) - {jm}) | {max(ks)}))
            if model.f(J, p) != expected_F or (d.M < 0 and expected_F is None):
                out.append(Finding("(4)", J, p, f"F_p = {model.f(J, p)} vs simplified rule {expected_F}"))
            if d.M == neg_wt:
                expected_E = None
            else:
                jk = max(tilde) if tilde else None
                ms = [i for i in d.I if jk is not None and i > jk]
                expected_E = None if jk is None or not ms else tuple(sorted((set(J) - {jk}) | {min(ms)}))
            if model.e(J, p) != expected_E or (d.M < neg_wt and expected_E is None):
                out.append(Finding("(5)", J, p, f"E_p = {model.e(J, p)} vs simplified rule {expected_E}"))
    return out


def verify_psi(g: GammaSequence) -> list[Finding]:
    """Weight shift by ``rho`` and the ``M`` dichotomy for ``Psi`` on every admissible subset."""
    model = alcove_model(g)
    g2 = check_gamma(rho_shift_concat(g))
    model2 = alcove_model(g2)
    r = rho(g.n)
    out = []
    for J in model.enumerate_admissible():
        if not model2.is_admissible(J):
            out.append(Finding("Psi", J, None, "not admissible in the rho-shifted path"))
            continue
        if normalize_weight(model2.weight(J)) != normalize_weight(sub(model.weight(J), r)):
            out.append(Finding("wt(Psi)", J, None, "wt(Psi J) != wt(J) - rho"))
        neg_wt = tuple(-x for x in model.weight(J))
        for p in range(1, g.n):
            d, d2 = model.operator_data(J, p), model2.operator_data(J, p)
            top = pairing(neg_wt, simple_root(p))
            tilde = [l for i, l in zip(d.I, d.L) if i in J]
            if d2.M == d.M + 1 == top + 1:
                if d.attained:
                    out.append(Finding("M(Psi)", J, p, "shifted branch with M attained in I(J,p)"))
            elif not (d2.M == d.M and d.M in tilde):
                out.append(Finding("M(Psi)", J, p, f"M(Psi J) = {d2.M}, M(J) = {d.M}: neither branch"))
    return out
