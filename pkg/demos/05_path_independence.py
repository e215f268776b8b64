"""
Different paths, same crystal
=============================

Extending an ordinary path by two different reduced words gives two
extended paths.  Transporting each subset to the canonical path by its
string datum yields the same pattern-labelled graph.
"""
from alcovegt.crystal import edge_set, relabel
from alcovegt.gallery import alcove_crystal, format_subset
from alcovegt.isomorphism import canonicalize, gt_from_admissible
from alcovegt.paths import extend_path, gamma_lambda, lex_path
from alcovegt.roots import reduced_words
from alcovegt.tableaux import gt_crystal

lam = (3, 1, 0)
base = lex_path(3, lam)
target = edge_set(gt_crystal(lam))

for word in reduced_words(3):
    g = extend_path(base, word)
    G = alcove_crystal(g)
    labelled = relabel(G, lambda J: gt_from_admissible(g, J))
    top = G.highest
    print(f"tail {word}: highest {format_subset(top)} -> canonical "
          f"{format_subset(canonicalize(g, top))}; same GT graph: {edge_set(labelled) == target}")

print("canonical path:", gamma_lambda(3, lam).roots)
