"""Permutations: upper and lower arc diagrams are treated separately.

Run: python3 demos/04_permutations.py
"""

from arcnest import ObjectClass, label_of, parse, ptr, render_ascii, serialize
from arcnest.structure import split_permutation

S = ObjectClass.PERMUTATION
sigma = parse("S n=12; 9 5 6 7 8 3 2 1 4 12 11 10")[1]
print(render_ascii(sigma))

upper, lower = split_permutation(sigma)
print("upper arcs:", [a[:2] for a in upper.upper], "loops:", [lp.left for lp in upper.loops])
print("lower arcs:", [a[:2] for a in lower.lower])

# Upper statistics are enhanced (fixed points are loops), lower ones are not.
rho = ptr(S, sigma)
print("sigma:", serialize(S, sigma), label_of(S, sigma).to_json())
print("rho:  ", serialize(S, rho), label_of(S, rho).to_json())
print(render_ascii(rho))
# The loop at 11 became an upper transitory.
print("loops of rho:", [lp.left for lp in rho.loops])
