"""Reduced alcove paths, encoded by their sequences of crossed roots.

Alcoves and facets are never built.  A path is the list of positive roots
``beta_1, ..., beta_s`` of the walls it crosses; the wall levels follow as
``l_i = -#{j < i : beta_j = beta_i}``.  A path is *ordinary* when it runs
from the fundamental alcove to its translate by ``-lambda`` and *extended*
when it ends at ``w0 A - lambda``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .roots import (
    Root,
    Weight,
    add,
    check_partition,
    pairing,
    positive_roots,
    reflection_order,
    rho,
)

ORDINARY = "ordinary"
EXTENDED = "extended"


class InvalidPathError(ValueError):
    def __init__(self, violations):
        self.violations = violations
        super().__init__("; ".join(violations))


@dataclass(frozen=True)
class GammaSequence:
    n: int
    lam: Weight
    kind: str
    roots: tuple[Root, ...]

    def __post_init__(self):
        if self.kind not in (ORDINARY, EXTENDED):
            raise ValueError(f"unknown path kind {self.kind!r}")
        object.__setattr__(self, "lam", tuple(self.lam))
        object.__setattr__(self, "roots", tuple(tuple(r) for r in self.roots))

    def __len__(self):
        return len(self.roots)

    @cached_property
    def levels(self) -> tuple[int, ...]:
        seen = Counter()
        out = []
        for r in self.roots:
            out.append(-seen[r])
            seen[r] += 1
        return tuple(out)

    @cached_property
    def later_counts(self) -> tuple[int, ...]:
        """``N(i) = #{k > i : beta_k = beta_i}``."""
        seen = Counter()
        out = []
        for r in reversed(self.roots):
            out.append(seen[r])
            seen[r] += 1
        return tuple(reversed(out))

    def root(self, i: int) -> Root:
        """1-based access, matching admissible-subset indices."""
        return self.roots[i - 1]

    def level(self, i: int) -> int:
        return self.levels[i - 1]


def validate_gamma(g: GammaSequence) -> list[str]:
    """Count and interlacing conditions; returns the violations (empty means valid)."""
    out = []
    shift = 1 if g.kind == EXTENDED else 0
    for r in g.roots:
        if not (1 <= r[0] < r[1] <= g.n):
            out.append(f"{r} is not a positive root for n={g.n}")
    if out:
        return out
    counts = Counter(g.roots)
    for beta in positive_roots(g.n):
        want = pairing(g.lam, beta) + shift
        if counts[beta] != want:
            out.append(f"root {beta} occurs {counts[beta]} times, expected {want}")
    for i in range(1, g.n + 1):
        for j in range(i + 1, g.n + 1):
            for k in range(j + 1, g.n + 1):
                a, b, c = (i, j), (j, k), (i, k)
                sub = [(pos, r) for pos, r in enumerate(g.roots, 1) if r in (a, b, c)]
                for m, (pos, r) in enumerate(sub, 1):
                    if (m % 2 == 0) != (r == c):
                        out.append(
                            f"interlacing fails on triple ({a}, {b}, {c}) at position {pos}"
                            f" (entry {m} of the subsequence is {r})"
                        )
                        break
    return out


def check_gamma(g: GammaSequence) -> GammaSequence:
    v = validate_gamma(g)
    if v:
        raise InvalidPathError(v)
    return g


def gamma_block(n: int, i: int) -> list[Root]:
    return [(a, b) for a in range(i, 0, -1) for b in range(n, i, -1)]


def gamma_lambda(n: int, lam: Sequence[int]) -> GammaSequence:
    """The extended path ``Gamma(lambda)`` assembled from blocks ``Gamma(i)`` and tails."""
    lam = check_partition(lam, n)
    roots = []
    for i in range(n - 1, 0, -1):
        roots.extend(gamma_block(n, i) * (lam[i - 1] - lam[i]))
        roots.extend((i, b) for b in range(n, i, -1))
    return GammaSequence(n, lam, EXTENDED, tuple(roots))


def _lex_key(alpha: Root, l: int, n: int, denom: int) -> tuple[Fraction, ...]:
    c = [1 if alpha[0] <= k < alpha[1] else 0 for k in range(1, n)]
    return tuple(Fraction(x, denom) for x in [-l] + c)


def lex_path(n: int, lam: Sequence[int]) -> GammaSequence:
    """Ordinary path for ``lambda`` from the lexicographic order on wall data.

    The walls are ``(alpha, l)`` with ``-(lambda, alpha) < l <= 0``, sorted by
    ``(-l, c_1, ..., c_{n-1}) / (lambda, alpha)`` where ``c`` are the simple-root
    coordinates of ``alpha``.
    """
    lam = check_partition(lam, n)
    walls = [
        (alpha, l)
        for alpha in positive_roots(n)
        for l in range(-pairing(lam, alpha) + 1, 1)
    ]
    walls.sort(key=lambda w: _lex_key(w[0], w[1], n, pairing(lam, w[0])))
    return GammaSequence(n, lam, ORDINARY, tuple(a for a, _ in walls))


def rho_lex_path(n: int) -> tuple[GammaSequence, int]:
    """The lexicographic path for ``rho`` and the number ``N`` of its first steps reaching ``w0 A``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return lex_path(n, rho(n)), n * (n - 1) // 2


def extend_path(g: GammaSequence, word: Sequence[int]) -> GammaSequence:
    """Append the reflection order of ``word`` to an ordinary path."""
    if g.kind != ORDINARY:
        raise ValueError("only ordinary paths can be extended")
    check_gamma(g)
    tail = reflection_order(word, g.n)
    return check_gamma(GammaSequence(g.n, g.lam, EXTENDED, g.roots + tuple(tail)))


def rho_shift_concat(g: GammaSequence) -> GammaSequence:
    """Ordinary path for ``lambda + rho``: ``g`` followed by the tail of the rho-path after step ``N``."""
    if g.kind != EXTENDED:
        raise ValueError("rho-shift needs an extended path")
    rp, N = rho_lex_path(g.n)
    return check_gamma(GammaSequence(g.n, add(g.lam, rho(g.n)), ORDINARY, g.roots + rp.roots[N:]))


# -- text format -----------------------------------------------------------------


def format_gamma(g: GammaSequence | Iterable[Root]) -> str:
    roots = g.roots if isinstance(g, GammaSequence) else g
    return "".join(f"{i} {j}\n" for i, j in roots)


def parse_gamma(text: str) -> list[Root]:
    """One root ``i j`` per line; blank lines and ``#`` comments are skipped."""
    roots = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {line!r}")
        i, j = int(parts[0]), int(parts[1])
        if i == j:
            raise ValueError(f"line {lineno}: ({i}, {j}) is not a root")
        roots.append((i, j))
    return roots


def read_gamma(text: str, n: int, lam: Sequence[int], kind: str) -> GammaSequence:
    return check_gamma(GammaSequence(n, check_partition(lam, n), kind, tuple(parse_gamma(text))))
