"""
Characters
==========

Weight multiplicities from the alcove model match those of the pattern
model, and the multiset is symmetric under permuting coordinates.
"""
from collections import Counter

from alcovegt.crystal import character
from alcovegt.gallery import alcove_crystal
from alcovegt.paths import gamma_lambda
from alcovegt.tableaux import gt_crystal, iter_partitions

for lam in iter_partitions(3, 4):
    A = alcove_crystal(gamma_lambda(3, lam))
    same = character(A) == character(gt_crystal(lam))
    print(f"{lam}: dim {len(A):3}  agrees with GT: {same}")

# Multiplicities for (2,1,0), weights shown as contents of tableaux.
A = alcove_crystal(gamma_lambda(3, (2, 1, 0)))
for w, k in sorted(Counter(A.weights.values()).items(), reverse=True):
    print(w, k)
