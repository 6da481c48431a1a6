"""Crossings, nestings and labels of a matching.

Run: python3 demos/01_statistics.py
"""

from arcnest import ObjectClass, count_k_crossings, count_k_nestings, label_of, max_crossing, max_nesting, parse
from arcnest.stats import naive_counts

cls, mu = parse("M n=10; 1-9,2-5,3-6,4-7,8-10")
print("arcs:", [a[:2] for a in mu.upper])

# Pair statistics first, then the whole label.
print("2-crossings:", count_k_crossings(mu.upper, 2))
print("2-nestings: ", count_k_nestings(mu.upper, 2))
print("3-crossings:", count_k_crossings(mu.upper, 3))
label = label_of(cls, mu)
print("label (nest; cross):", label.nest, label.cross)
print("cr, ne:", max_crossing(cls, mu), max_nesting(cls, mu))

# The counting path is a chain DP; brute force over k-subsets agrees.
for k in (2, 3, 4):
    print(f"k={k} naive (nest, cross):", naive_counts(mu.upper, k))

# Enhanced statistics: a transitory counts as an opener followed by a closer,
# so two arcs sharing an endpoint form an enhanced crossing.
_, part = parse("P n=3; {1,2,3}")
print("partition {1,2,3}, plain:", label_of(ObjectClass.SET_PARTITION, part, enhanced=False))
print("partition {1,2,3}, enhanced:", label_of(ObjectClass.SET_PARTITION, part, enhanced=True))
