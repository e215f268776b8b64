"""
The alcove model on an ordinary path
====================================

A reduced alcove path is stored as the list of roots of the walls it
crosses.  Admissible subsets of the positions carry a crystal structure.
"""
from alcovegt.gallery import alcove_crystal, alcove_model, format_subset
from alcovegt.paths import ORDINARY, GammaSequence, lex_path, validate_gamma

a1, a2, th = (1, 2), (2, 3), (1, 3)
pi1 = GammaSequence(3, (2, 1, 0), ORDINARY, (a1, th, a2, th))
print("violations:", validate_gamma(pi1))
print("levels:", pi1.levels)

model = alcove_model(pi1)
for J in model.enumerate_admissible():
    F = model.fold(J)
    print(f"{format_subset(J):9} wt={model.weight(J)}  folded roots={F.roots}  levels={F.levels}")

# Root operators with their internal data.
d = model.operator_data((), 1)
print("\nF_1 on the empty set:", d, "->", model.f((), 1))

G = alcove_crystal(pi1)
print("\nedges:", [(format_subset(b), p, format_subset(b2)) for b, b2, p in G.sorted_edges()])

# Any partition gets a path from the lexicographic construction.
g = lex_path(3, (3, 1, 0))
print("\nlex path for (3,1,0):", g.roots, "->", len(alcove_crystal(g)), "elements")
