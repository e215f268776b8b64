"""Type A_{n-1} root system: weights, roots, hyperplanes, Weyl group elements.

Roots are pairs ``(i, j)`` with ``i != j`` standing for ``e_i - e_j``
(1-based).  A root is positive when ``i < j``.  Weights are integer
``n``-tuples in the ``e``-basis; they are only ever compared modulo the
all-ones vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

Root = tuple[int, int]
Weight = tuple[int, ...]
Word = tuple[int, ...]


class NotReducedError(ValueError):
    pass


def positive_roots(n: int) -> list[Root]:
    """All ``N = n(n-1)/2`` positive roots, lexicographically sorted."""
    return list(combinations(range(1, n + 1), 2))


def simple_root(p: int) -> Root:
    return (p, p + 1)


def highest_root(n: int) -> Root:
    return (1, n)


def is_positive(alpha: Root) -> bool:
    return alpha[0] < alpha[1]


def negate(alpha: Root) -> Root:
    return (alpha[1], alpha[0])


def root_vector(alpha: Root, n: int) -> Weight:
    v = [0] * n
    v[alpha[0] - 1] += 1
    v[alpha[1] - 1] -= 1
    return tuple(v)


def pairing(v: Sequence[int], alpha: Root) -> int:
    """``(v, alpha^vee)``; in type A the coroot is the root itself."""
    return v[alpha[0] - 1] - v[alpha[1] - 1]


def root_pairing(alpha: Root, beta: Root) -> int:
    """Inner product of two roots."""
    i, j = alpha
    k, l = beta
    return (i == k) - (i == l) - (j == k) + (j == l)


def rho(n: int) -> Weight:
    """Half the sum of positive roots, shifted to the partition ``(n-1, ..., 1, 0)``."""
    return tuple(range(n - 1, -1, -1))


def add(u: Sequence[int], v: Sequence[int]) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> Weight:
    return tuple(a - b for a, b in zip(u, v))


def scale(k: int, v: Sequence[int]) -> Weight:
    return tuple(k * a for a in v)


def normalize_weight(v: Sequence[int]) -> Weight:
    """Representative of ``v`` modulo the all-ones vector with last coordinate 0."""
    last = v[-1]
    return tuple(a - last for a in v)


def weights_equal(u: Sequence[int], v: Sequence[int]) -> bool:
    return normalize_weight(u) == normalize_weight(v)


def is_partition(lam: Sequence[int]) -> bool:
    return (
        len(lam) >= 1
        and all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))
        and lam[-1] == 0
    )


def check_partition(lam: Sequence[int], n: int | None = None) -> Weight:
    lam = tuple(int(x) for x in lam)
    if n is not None and len(lam) != n:
        raise ValueError(f"partition {lam} must have length n={n}")
    if not is_partition(lam):
        raise ValueError(f"{lam} is not weakly decreasing with last entry 0")
    return lam


# -- hyperplanes -------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Hyperplane:
    """``H_{root, level} = {v : (v, root) = level}``, stored with a positive root."""

    root: Root
    level: int

    def __post_init__(self):
        if not is_positive(self.root):
            object.__setattr__(self, "root", negate(self.root))
            object.__setattr__(self, "level", -self.level)


def reflect_root(beta: Root, alpha: Root) -> Root:
    """``s_beta(alpha)``: the transposition ``beta`` acting on the indices of ``alpha``."""
    a, b = beta

    def t(k):
        return b if k == a else a if k == b else k

    return (t(alpha[0]), t(alpha[1]))


def reflect_hyperplane(beta: Root, l: int, H: Hyperplane) -> Hyperplane:
    """Image of ``H`` under the affine reflection ``s_{beta, l}``."""
    return Hyperplane(reflect_root(beta, H.root), H.level - l * root_pairing(beta, H.root))


# -- Weyl group --------------------------------------------------------------


@dataclass(frozen=True, order=True)
class WeylElement:
    """Permutation in one-line notation: ``perm[k-1] = w(k)``."""

    perm: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "WeylElement":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def reflection(cls, alpha: Root, n: int) -> "WeylElement":
        p = list(range(1, n + 1))
        i, j = alpha
        p[i - 1], p[j - 1] = p[j - 1], p[i - 1]
        return cls(tuple(p))

    @classmethod
    def from_word(cls, word: Iterable[int], n: int) -> "WeylElement":
        w = cls.identity(n)
        for p in word:
            w = w * cls.reflection(simple_root(p), n)
        return w

    @property
    def n(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(tuple(self.perm[k - 1] for k in other.perm))

    def inverse(self) -> "WeylElement":
        inv = [0] * self.n
        for k, wk in enumerate(self.perm, 1):
            inv[wk - 1] = k
        return WeylElement(tuple(inv))

    def length(self) -> int:
        p = self.perm
        return sum(1 for a, b in combinations(range(len(p)), 2) if p[a] > p[b])

    def right_reflect(self, alpha: Root) -> "WeylElement":
        """``w * s_alpha``: swap positions ``i`` and ``j`` of the one-line form."""
        p = list(self.perm)
        i, j = alpha
        p[i - 1], p[j - 1] = p[j - 1], p[i - 1]
        return WeylElement(tuple(p))

    def act(self, v: Sequence[int]) -> Weight:
        """Action on weights: ``w(e_k) = e_{w(k)}``."""
        out = [0] * self.n
        for k, wk in enumerate(self.perm):
            out[wk - 1] = v[k]
        return tuple(out)

    def act_root(self, alpha: Root) -> Root:
        return (self.perm[alpha[0] - 1], self.perm[alpha[1] - 1])

    def reduced_word(self) -> Word:
        """A reduced word found by repeatedly stripping a right descent."""
        w = self
        word = []
        while True:
            for p in range(1, self.n):
                if w.perm[p - 1] > w.perm[p]:
                    word.append(p)
                    w = w.right_reflect(simple_root(p))
                    break
            else:
                break
        return tuple(reversed(word))


def bruhat_is_cover(w: WeylElement, w2: WeylElement) -> bool:
    """True iff ``w2 = w * s_beta`` for a positive root ``beta`` and ``l(w2) = l(w) + 1``."""
    if w.n != w2.n:
        return False
    diff = [k for k in range(w.n) if w.perm[k] != w2.perm[k]]
    if len(diff) != 2:
        return False
    return w2.length() == w.length() + 1


def is_cover_step(w: WeylElement, alpha: Root) -> bool:
    """Fast check that ``w -> w * s_alpha`` raises the length by exactly one."""
    i, j = sorted(alpha)
    a, b = w.perm[i - 1], w.perm[j - 1]
    if a > b:
        return False
    return not any(a < w.perm[k] < b for k in range(i, j - 1))


# -- affine Weyl group -------------------------------------------------------


@dataclass(frozen=True)
class AffineElement:
    """The affine map ``v -> linear(v) + translation``, i.e. ``t_nu w``."""

    translation: Weight
    linear: WeylElement

    @classmethod
    def identity(cls, n: int) -> "AffineElement":
        return cls((0,) * n, WeylElement.identity(n))

    @classmethod
    def reflection(cls, alpha: Root, k: int, n: int) -> "AffineElement":
        """``s_{alpha,k} = t_{k alpha} s_alpha``."""
        return cls(scale(k, root_vector(alpha, n)), WeylElement.reflection(alpha, n))

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        return AffineElement(
            add(self.translation, self.linear.act(other.translation)),
            self.linear * other.linear,
        )

    def act(self, v: Sequence[int]) -> Weight:
        return add(self.linear.act(v), self.translation)

    def act_hyperplane(self, H: Hyperplane) -> Hyperplane:
        image = self.linear.act_root(H.root)
        return Hyperplane(image, H.level + pairing(self.translation, image))


# -- reduced words and reflection orders --------------------------------------


def iA_word(n: int) -> Word:
    """``(1, 2, 1, 3, 2, 1, ..., n-1, n-2, ..., 1)``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return tuple(p for k in range(1, n) for p in range(k, 0, -1))


def is_reduced_for_longest(word: Sequence[int], n: int) -> bool:
    N = n * (n - 1) // 2
    if len(word) != N or any(not 1 <= p < n for p in word):
        return False
    return WeylElement.from_word(word, n) == WeylElement.longest(n)


def reflection_order(word: Sequence[int], n: int) -> list[Root]:
    """``beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})`` for a reduced word of ``w0``."""
    if not is_reduced_for_longest(word, n):
        raise NotReducedError(f"{tuple(word)} is not a reduced word for w0 (n={n})")
    out = []
    w = WeylElement.identity(n)
    for p in word:
        out.append(w.act_root(simple_root(p)))
        w = w.right_reflect(simple_root(p))
    return out


@lru_cache(maxsize=None)
def reduced_words(n: int) -> tuple[Word, ...]:
    """All reduced words of the longest element, sorted."""
    N = n * (n - 1) // 2
    words = []

    def extend(w, prefix):
        if len(prefix) == N:
            words.append(tuple(prefix))
            return
        for p in range(1, n):
            if is_cover_step(w, simple_root(p)):
                extend(w.right_reflect(simple_root(p)), prefix + [p])

    extend(WeylElement.identity(n), [])
    return tuple(sorted(words))


def is_convex_order(order: Sequence[Root]) -> bool:
    """``alpha < beta`` with ``alpha + beta`` a root forces ``alpha < alpha+beta < beta``."""
    pos = {r: k for k, r in enumerate(order)}
    for a in order:
        for b in order:
            if a[1] == b[0]:
                g = (a[0], b[1])
                lo, hi = sorted((pos[a], pos[b]))
                if not lo < pos[g] < hi:
                    return False
    return True


def iA_key(alpha: Root) -> tuple[int, int]:
    """Sort key realising the ``i_A`` reflection order: by ``j``, then ``i``."""
    return (alpha[1], alpha[0])
