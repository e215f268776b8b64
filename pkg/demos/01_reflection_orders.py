"""
Reduced words and reflection orders
===================================

Every reduced word for the longest permutation lists the positive roots in
a convex order.  For n = 3 there are two such words.
"""
from alcovegt.roots import (
    WeylElement,
    iA_word,
    is_convex_order,
    reduced_words,
    reflection_order,
)

for n in (3, 4):
    words = reduced_words(n)
    print(f"n={n}: {len(words)} reduced words for w0 (length {WeylElement.longest(n).length()})")
    for w in words[:4]:
        order = reflection_order(w, n)
        print("  ", w, "->", order, "convex" if is_convex_order(order) else "NOT convex")

# The word (1,2,1,3,2,1,...) sorts roots by their larger index first.
print("i_A for n=4:", iA_word(4), "->", reflection_order(iA_word(4), 4))
