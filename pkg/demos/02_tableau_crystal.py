"""
Tableaux and Gelfand-Tsetlin patterns
=====================================

The crystal of semistandard tableaux of shape (2,1) in three letters, and
the same crystal read through the pattern bijection.
"""
from alcovegt.crystal import string_datum
from alcovegt.roots import iA_word
from alcovegt.tableaux import gt_crystal, gt_from_ssyt, gt_string_formula, ssyt_crystal

lam = (2, 1, 0)
S = ssyt_crystal(lam)
G = gt_crystal(lam)

print("tableau crystal edges:")
for b, b2, p in S.sorted_edges():
    print(f"  {b} -{p}-> {b2}")

print("\nsame graph on patterns:")
for b, b2, p in G.sorted_edges():
    print(f"  {b} -{p}-> {b2}")

# The closed-form string datum agrees with the one read off the graph.
word = iA_word(3)
for T in S.elements:
    a = gt_from_ssyt(T)
    print(f"{str(T):6} {a}  str={string_datum(G, a, word)}  formula={gt_string_formula(a)}")
