"""Abstract highest-weight crystals as finite colored digraphs.

A *model* is any object with attributes ``n`` and methods ``weight(b)``,
``f(b, p)`` and ``e(b, p)`` (returning ``None`` for the formal symbol 0).
:func:`generate_crystal` closes a highest-weight seed under the lowering
operators and checks the crystal axioms against the model as it goes.
"""
from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Protocol, Sequence

from .roots import (
    Weight,
    iA_key,
    normalize_weight,
    pairing,
    positive_roots,
    simple_root,
    sub,
    root_vector,
)


class CrystalAxiomError(RuntimeError):
    """Raised when a model violates a crystal axiom during generation."""

    def __init__(self, axiom: str, element, color: int, detail: str = ""):
        self.axiom = axiom
        self.element = element
        self.color = color
        super().__init__(f"{axiom} violated at {element!r}, color {color}: {detail}")


class NotIsomorphicError(ValueError):
    pass


class CrystalModel(Protocol):
    n: int

    def weight(self, b) -> Weight: ...

    def f(self, b, p: int): ...

    def e(self, b, p: int): ...


@dataclass(frozen=True)
class Violation:
    axiom: str
    element: Any
    color: int | None
    detail: str = ""


@dataclass
class CrystalGraph:
    n: int
    elements: list
    weights: dict
    edges: dict  # (b, p) -> F_p(b)
    highest: Hashable
    label: Callable[[Any], str] = field(default=repr, repr=False)

    def __post_init__(self):
        self._index = {b: k for k, b in enumerate(self.elements)}
        self._reverse = {(b2, p): b for (b, p), b2 in self.edges.items()}

    @property
    def colors(self) -> range:
        return range(1, self.n)

    def index(self, b) -> int:
        return self._index[b]

    def f(self, b, p: int):
        return self.edges.get((b, p))

    def e(self, b, p: int):
        return self._reverse.get((b, p))

    def phi(self, b, p: int) -> int:
        k = 0
        while (b := self.f(b, p)) is not None:
            k += 1
        return k

    def epsilon(self, b, p: int) -> int:
        k = 0
        while (b := self.e(b, p)) is not None:
            k += 1
        return k

    def e_max(self, b, p: int):
        while (up := self.e(b, p)) is not None:
            b = up
        return b

    def sorted_edges(self) -> list[tuple[Any, Any, int]]:
        return sorted(
            ((b, b2, p) for (b, p), b2 in self.edges.items()),
            key=lambda t: (self._index[t[0]], t[2]),
        )

    def __len__(self):
        return len(self.elements)

    def __contains__(self, b):
        return b in self._index


def generate_crystal(seed, model: CrystalModel, label: Callable[[Any], str] = repr) -> CrystalGraph:
    """Breadth-first closure of ``seed`` under all ``F_p``.

    Elements are ordered by discovery, colors visited in increasing order.
    Each new edge is checked against ``E_p`` (axiom 1) and the weight drop
    (axiom 2); the seed must be killed by every ``E_p``.
    """
    n = model.n
    for p in range(1, n):
        if model.e(seed, p) is not None:
            raise CrystalAxiomError("highest weight", seed, p, "E_p(seed) != 0")
    elements = [seed]
    weights = {seed: tuple(model.weight(seed))}
    edges = {}
    queue = deque([seed])
    while queue:
        b = queue.popleft()
        for p in range(1, n):
            b2 = model.f(b, p)
            if b2 is None:
                continue
            back = model.e(b2, p)
            if back != b:
                raise CrystalAxiomError("axiom 1", b, p, f"E_p(F_p(b)) = {back!r}")
            w2 = tuple(model.weight(b2))
            expected = sub(weights[b], root_vector(simple_root(p), n))
            if normalize_weight(w2) != normalize_weight(expected):
                raise CrystalAxiomError("axiom 2", b, p, f"wt(F_p b) = {w2}, expected {expected}")
            edges[(b, p)] = b2
            if b2 not in weights:
                weights[b2] = w2
                elements.append(b2)
                queue.append(b2)
    return CrystalGraph(n, elements, weights, edges, seed, label)


def verify_crystal_axioms(G: CrystalGraph) -> list[Violation]:
    """Check the three axioms and the unique highest-weight property on the graph itself."""
    out = []
    seen = {}
    for (b, p), b2 in G.edges.items():
        if (b2, p) in seen and seen[(b2, p)] != b:
            out.append(Violation("axiom 1", b2, p, "two F_p-preimages"))
        seen[(b2, p)] = b
        expected = sub(G.weights[b], root_vector(simple_root(p), G.n))
        if normalize_weight(G.weights[b2]) != normalize_weight(expected):
            out.append(Violation("axiom 2", b, p, f"wt drop mismatch at edge to {b2!r}"))
    for b in G.elements:
        for p in G.colors:
            if G.phi(b, p) != G.epsilon(b, p) + pairing(G.weights[b], simple_root(p)):
                out.append(Violation("axiom 3", b, p, "phi != eps + <wt, alpha_p>"))
    tops = [b for b in G.elements if all(G.e(b, p) is None for p in G.colors)]
    if len(tops) != 1:
        out.append(Violation("highest weight", tuple(tops), None, f"{len(tops)} highest-weight elements"))
    else:
        reached = {tops[0]}
        queue = deque(tops)
        while queue:
            b = queue.popleft()
            for p in G.colors:
                b2 = G.f(b, p)
                if b2 is not None and b2 not in reached:
                    reached.add(b2)
                    queue.append(b2)
        for b in G.elements:
            if b not in reached:
                out.append(Violation("highest weight", b, None, "unreachable from the highest element"))
    return out


def string_datum(G: CrystalGraph, b, word: Sequence[int]) -> tuple[int, ...]:
    """Successive maximal raising counts along ``word``."""
    out = []
    for p in word:
        k = G.epsilon(b, p)
        out.append(k)
        for _ in range(k):
            b = G.e(b, p)
    if b != G.highest:
        raise ValueError("string extraction did not end at the highest element; word not reduced?")
    return tuple(out)


def element_from_string_datum(G: CrystalGraph, word: Sequence[int], d: Sequence[int]):
    """The unique element with string datum ``d``, or ``None``."""
    b = G.highest
    for p, k in zip(reversed(word), reversed(d)):
        for _ in range(k):
            b = G.f(b, p)
            if b is None:
                return None
    if string_datum(G, b, word) != tuple(d):
        return None
    return b


def string_datum_by_pairs(d: Sequence[int], n: int) -> dict[tuple[int, int], int]:
    """Re-index an ``i_A`` string datum by positive roots ``(i, j)``."""
    order = sorted(positive_roots(n), key=iA_key)
    return dict(zip(order, d))


def unique_isomorphism(G1: CrystalGraph, G2: CrystalGraph) -> dict:
    """The crystal isomorphism ``G1 -> G2``, built by walking ``F`` from the highest elements."""
    if G1.n != G2.n or len(G1) != len(G2):
        raise NotIsomorphicError("not isomorphic: sizes or ranks differ")
    iso = {G1.highest: G2.highest}
    queue = deque([G1.highest])
    while queue:
        b = queue.popleft()
        c = iso[b]
        if normalize_weight(G1.weights[b]) != normalize_weight(G2.weights[c]):
            raise NotIsomorphicError(f"not isomorphic: weight mismatch at {b!r}")
        for p in G1.colors:
            b2, c2 = G1.f(b, p), G2.f(c, p)
            if (b2 is None) != (c2 is None):
                raise NotIsomorphicError(f"not isomorphic: F_{p} defined on one side only at {b!r}")
            if b2 is None:
                continue
            if b2 in iso:
                if iso[b2] != c2:
                    raise NotIsomorphicError(f"not isomorphic: conflicting images for {b2!r}")
            else:
                iso[b2] = c2
                queue.append(b2)
    if len(iso) != len(G1) or len(set(iso.values())) != len(G2):
        raise NotIsomorphicError("not isomorphic: map is not a bijection")
    for (b, p), b2 in G1.edges.items():
        if G2.f(iso[b], p) != iso[b2]:
            raise NotIsomorphicError(f"not isomorphic: edge {b!r} -{p}-> {b2!r} not preserved")
    return iso


def character(G: CrystalGraph) -> list[Weight]:
    """Sorted multiset of normalized weights."""
    return sorted(normalize_weight(G.weights[b]) for b in G.elements)


def character_counter(G: CrystalGraph) -> Counter:
    return Counter(character(G))


def relabel(G: CrystalGraph, mapping: Callable[[Any], Hashable], label=None) -> CrystalGraph:
    """Transport ``G`` along an injective relabelling of its elements."""
    elements = [mapping(b) for b in G.elements]
    if len(set(elements)) != len(elements):
        raise ValueError("relabelling is not injective")
    return CrystalGraph(
        G.n,
        elements,
        {mapping(b): w for b, w in G.weights.items()},
        {(mapping(b), p): mapping(b2) for (b, p), b2 in G.edges.items()},
        mapping(G.highest),
        label or G.label,
    )


def edge_set(G: CrystalGraph) -> set[tuple[Any, Any, int]]:
    return {(b, b2, p) for (b, p), b2 in G.edges.items()}


# -- exports -------------------------------------------------------------------


def to_dot(G: CrystalGraph, name: str = "crystal") -> str:
    lines = [f"digraph {name} {{"]
    for k, b in enumerate(G.elements):
        lab = G.label(b).replace('"', r"\"")
        lines.append(f'  n{k} [label="{lab}"];')
    edges = G.sorted_edges()
    for b, b2, p in edges:
        lines.append(f'  n{G.index(b)} -> n{G.index(b2)} [label="{p}", color="/set19/{p}"];')
    lines.append("}")
    lines.append(f"// {len(G)} nodes, {len(edges)} edges")
    return "\n".join(lines) + "\n"


def to_json_dict(G: CrystalGraph, word: Sequence[int] | None = None) -> dict:
    from .roots import iA_word

    word = tuple(word) if word is not None else iA_word(G.n)
    return {
        "elements": [
            {
                "id": k,
                "label": G.label(b),
                "weight": list(G.weights[b]),
                "string_datum": list(string_datum(G, b, word)),
            }
            for k, b in enumerate(G.elements)
        ],
        "edges": [
            {"from": G.index(b), "to": G.index(b2), "color": p}
            for b, b2, p in G.sorted_edges()
        ],
    }


def to_json(G: CrystalGraph, word: Sequence[int] | None = None) -> str:
    return json.dumps(to_json_dict(G, word), indent=2)
