"""
From admissible subsets to Gelfand-Tsetlin patterns
===================================================

On the canonical extended path every admissible subset hits each positive
root once.  Counting the later copies of each root gives the N-statistics,
and lambda_i - N_ij is a Gelfand-Tsetlin pattern.
"""
from alcovegt.crystal import string_datum
from alcovegt.gallery import alcove_crystal, format_subset
from alcovegt.isomorphism import admissible_from_gt, gt_from_admissible, n_stats, verify_iso
from alcovegt.paths import gamma_lambda
from alcovegt.roots import iA_word

lam = (2, 1, 0)
g = gamma_lambda(3, lam)
print("Gamma(lambda):", g.roots)

G = alcove_crystal(g)
word = iA_word(3)
for J in sorted(G.elements):
    a = gt_from_admissible(g, J)
    N = n_stats(g, J)
    assert admissible_from_gt(lam, a) == J
    print(f"{format_subset(J):9} N={N}  a={a}  str={string_datum(G, J, word)}")

# The map respects every edge, in both directions.
for lam in [(3, 1, 0), (2, 1, 1, 0), (3, 2, 0, 0)]:
    print(lam, "iso failures:", verify_iso(lam))
