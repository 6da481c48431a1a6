"""The reverse-labelling involution on matchings and set partitions.

Run: python3 demos/03_triple_reverse.py
"""

from arcnest import ObjectClass, label_of, parse, ptr, serialize
from arcnest.bijection import ptr_stages
from arcnest.structure import analyse_layer, role_runs

M = ObjectClass.MATCHING

# Type OC: reversing the closer labels swaps every nesting statistic with the
# matching crossing statistic.
mu = parse("M n=10; 1-10,2-6,3-7,4-8,5-9")[1]
nu = ptr(M, mu)
print(serialize(M, mu), label_of(M, mu))
print(serialize(M, nu), label_of(M, nu))

# Type OCOC needs three reversals; print every stage.
text = "M n=18; 1-10,2-8,3-16,4-9,5-18,6-7,11-15,12-14,13-17"
la = analyse_layer(M, parse(text)[1], False, "upper")
for iv, bt in la.intervals:
    print("block", (iv.lo, iv.hi), bt.to_json())
    for step, arcs in ptr_stages(la.inflated.upper, role_runs(la.inflated, iv), bt):
        print(f"  {step:>5}:", " ".join(f"{a.left}-{a.right}" for a in arcs))

# Applying the map twice gives back the input.
d = parse(text)[1]
assert ptr(M, ptr(M, d)) == d
print("involution holds on the OCOC example")

# Set partitions go through inflation of transitories.
P = ObjectClass.SET_PARTITION
part = parse("P n=9; {1,3,5}{2}{4,6}{7,8,9}")[1]
img = ptr(P, part)
print(serialize(P, part), "->", serialize(P, img))
print("labels:", label_of(P, part), "->", label_of(P, img))
