"""Gelfand-Tsetlin patterns, semistandard tableaux and their crystal structure."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .crystal import CrystalGraph, generate_crystal, relabel
from .roots import Weight, check_partition, iA_key, positive_roots


@dataclass(frozen=True, order=True)
class SSYT:
    """Rows of a semistandard tableau with entries in ``1..n``; ``shape`` pads with zeros to length ``n``."""

    rows: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> Weight:
        return tuple(len(r) for r in self.rows) + (0,) * (self.n - len(self.rows))

    def is_valid(self) -> bool:
        rows = self.rows
        if len(rows) > self.n:
            return False
        for r in rows:
            if any(not 1 <= x <= self.n for x in r):
                return False
            if any(r[c] > r[c + 1] for c in range(len(r) - 1)):
                return False
        for a, b in zip(rows, rows[1:]):
            if len(b) > len(a) or any(b[c] <= a[c] for c in range(len(b))):
                return False
        return True

    def content(self) -> Weight:
        w = [0] * self.n
        for r in self.rows:
            for x in r:
                w[x - 1] += 1
        return tuple(w)

    def reading_word(self) -> list[tuple[int, int, int]]:
        """``(letter, row, col)`` read left to right along rows, bottom row first."""
        return [
            (x, r, c)
            for r in range(len(self.rows) - 1, -1, -1)
            for c, x in enumerate(self.rows[r])
        ]

    def __str__(self):
        return "/".join("".join(map(str, r)) for r in self.rows) or "()"


@dataclass(frozen=True, order=True)
class GTPattern:
    """Triangular array stored by the displayed rows.

    ``rows[k]`` is ``(a_{1,1+k}, a_{2,2+k}, ..., a_{n-k,n})``, so ``rows[0]``
    is the shape and ``rows[-1]`` the single entry ``a_{1,n}``.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Weight:
        return self.rows[0]

    def a(self, i: int, j: int) -> int:
        return self.rows[j - i][i - 1]

    def is_valid(self) -> bool:
        n = self.n
        if [len(r) for r in self.rows] != list(range(n, 0, -1)):
            return False
        if any(x < 0 for r in self.rows for x in r):
            return False
        return all(
            self.a(i + 1, j) <= self.a(i, j) <= self.a(i, j - 1)
            for i in range(1, n)
            for j in range(i + 1, n + 1)
        )

    def __str__(self):
        return "(" + " / ".join(" ".join(map(str, r)) for r in self.rows) + ")"


def parse_gt(text: str) -> GTPattern:
    """Parse ``"(2 1 0 / 2 1 / 2)"``; ``;`` is accepted as the row separator too."""
    body = text.strip().strip("()").replace(";", "/")
    rows = tuple(tuple(int(x) for x in part.replace(",", " ").split()) for part in body.split("/"))
    pat = GTPattern(rows)
    if not pat.is_valid():
        raise ValueError(f"{text!r} is not a Gelfand-Tsetlin pattern")
    return pat


def gt_from_ssyt(T: SSYT) -> GTPattern:
    """``a_{i,j}`` counts entries ``<= n-j+i`` in row ``i``."""
    n = T.n
    rows = T.rows + ((),) * (n - len(T.rows))
    return GTPattern(
        tuple(
            tuple(sum(1 for x in rows[i - 1] if x <= n - (i + k) + i) for i in range(1, n - k + 1))
            for k in range(n)
        )
    )


def ssyt_from_gt(a: GTPattern) -> SSYT:
    """Row ``i`` holds ``a_{i,n-v+i} - a_{i,n-v+i+1}`` copies of ``v`` (with ``a_{i,n+1} = 0``)."""
    n = a.n
    rows = []
    for i in range(1, n + 1):
        row = []
        for v in range(i, n + 1):
            j = n - v + i
            upper = a.a(i, j)
            lower = a.a(i, j + 1) if j + 1 <= n else 0
            row.extend([v] * (upper - lower))
        rows.append(tuple(row))
    return SSYT(tuple(rows), n)


def gt_weight(a: GTPattern) -> Weight:
    return ssyt_from_gt(a).content()


def _unmatched(T: SSYT, p: int) -> tuple[list, list]:
    """Unmatched ``p`` and ``p+1`` positions after cancelling each ``p+1`` against a later ``p``."""
    open_up = []  # unmatched p+1 so far
    free_p = []
    for x, r, c in T.reading_word():
        if x == p + 1:
            open_up.append((r, c))
        elif x == p:
            if open_up:
                open_up.pop()
            else:
                free_p.append((r, c))
    return free_p, open_up


def _set(T: SSYT, r: int, c: int, value: int) -> SSYT:
    rows = [list(row) for row in T.rows]
    rows[r][c] = value
    return SSYT(tuple(tuple(row) for row in rows), T.n)


def ssyt_f(T: SSYT, p: int) -> SSYT | None:
    free_p, _ = _unmatched(T, p)
    if not free_p:
        return None
    r, c = free_p[-1]
    return _set(T, r, c, p + 1)


def ssyt_e(T: SSYT, p: int) -> SSYT | None:
    _, free_up = _unmatched(T, p)
    if not free_up:
        return None
    r, c = free_up[0]
    return _set(T, r, c, p)


def ssyt_operator(T: SSYT, p: int, direction: str) -> SSYT | None:
    if direction == "lower":
        return ssyt_f(T, p)
    if direction == "raise":
        return ssyt_e(T, p)
    raise ValueError(f"direction must be 'raise' or 'lower', not {direction!r}")


def highest_ssyt(lam: Sequence[int]) -> SSYT:
    lam = check_partition(lam)
    return SSYT(tuple((i,) * k for i, k in enumerate(lam, 1)), len(lam))


def highest_gt(lam: Sequence[int]) -> GTPattern:
    lam = check_partition(lam)
    n = len(lam)
    return GTPattern(tuple(tuple(lam[:n - k]) for k in range(n)))


class TableauModel:
    def __init__(self, n: int):
        self.n = n

    def weight(self, T: SSYT) -> Weight:
        return T.content()

    def f(self, T: SSYT, p: int):
        return ssyt_f(T, p)

    def e(self, T: SSYT, p: int):
        return ssyt_e(T, p)


class GTModel:
    """Crystal on patterns, transported through the tableau bijection."""

    def __init__(self, n: int):
        self.n = n

    def weight(self, a: GTPattern) -> Weight:
        return gt_weight(a)

    def f(self, a: GTPattern, p: int):
        T = ssyt_f(ssyt_from_gt(a), p)
        return None if T is None else gt_from_ssyt(T)

    def e(self, a: GTPattern, p: int):
        T = ssyt_e(ssyt_from_gt(a), p)
        return None if T is None else gt_from_ssyt(T)


@lru_cache(maxsize=256)
def ssyt_crystal(lam: tuple[int, ...]) -> CrystalGraph:
    lam = check_partition(lam)
    return generate_crystal(highest_ssyt(lam), TableauModel(len(lam)), label=str)


@lru_cache(maxsize=256)
def gt_crystal(lam: tuple[int, ...]) -> CrystalGraph:
    lam = check_partition(lam)
    return generate_crystal(highest_gt(lam), GTModel(len(lam)), label=str)


def gt_string_formula(a: GTPattern) -> tuple[int, ...]:
    """Closed-form ``i_A`` string datum, ordered by the ``i_A`` reflection order."""
    n = a.n
    d = {
        (i, j): sum(a.a(m, m + n - j) - a.a(m, m + n - j + 1) for m in range(1, j - i + 1))
        for i, j in positive_roots(n)
    }
    return tuple(d[r] for r in sorted(d, key=iA_key))


# -- brute-force enumeration (oracles) ----------------------------------------


def enumerate_gt(lam: Sequence[int]) -> list[GTPattern]:
    """All patterns with top row ``lam``, built row by row from the interlacing bounds."""
    lam = check_partition(lam)
    out = []

    def rec(rows):
        prev = rows[-1]
        if len(prev) == 1:
            out.append(GTPattern(tuple(rows)))
            return
        ranges = [range(prev[i + 1], prev[i] + 1) for i in range(len(prev) - 1)]
        for nxt in product(*ranges):
            rec(rows + [nxt])

    rec([lam])
    return sorted(out)


def enumerate_ssyt(lam: Sequence[int]) -> list[SSYT]:
    """Every filling of the shape with entries ``1..n`` that is semistandard (exhaustive filter)."""
    lam = check_partition(lam)
    n = len(lam)
    cells = [(r, c) for r, k in enumerate(lam) for c in range(k)]
    out = []
    for fill in product(range(1, n + 1), repeat=len(cells)):
        rows = [[0] * k for k in lam if k]
        for (r, c), x in zip(cells, fill):
            rows[r][c] = x
        T = SSYT(tuple(tuple(r) for r in rows), n)
        if T.is_valid():
            out.append(T)
    return sorted(out)


def ssyt_count(lam: Sequence[int]) -> int:
    """Number of semistandard tableaux by exhaustive filtering."""
    return len(enumerate_ssyt(lam))


def iter_partitions(n: int, max_size: int) -> Iterator[tuple[int, ...]]:
    """Partitions with ``n`` parts, last part 0 and ``|lambda| <= max_size``."""

    def rec(prefix, remaining, cap, left):
        if left == 1:
            yield tuple(prefix) + (0,)
            return
        for x in range(min(cap, remaining), -1, -1):
            yield from rec(prefix + [x], remaining - x, x, left - 1)

    yield from sorted(rec([], max_size, max_size, n))
