"""Generating functions for admissible objects, checked by brute force.

Run: python3 demos/06_enumeration.py
"""

from arcnest import ObjectClass, brute_force_count, joint_table, sequence
from arcnest.enumeration import involutions, series_O, series_T

M, P = ObjectClass.MATCHING, ObjectClass.SET_PARTITION

for cls, enhanced, terms in ((M, False, 15), (M, True, 14), (P, False, 11), (P, True, 11)):
    seq = sequence(cls, enhanced, terms).terms
    print(f"{cls.name.lower():>13} enhanced={enhanced!s:5}:", ", ".join(map(str, seq)))

# The series keep every marker, so refined coefficients are available.
O, T = series_O(8), series_T(8)
print("[z^2 s^4] O =", O.coefficient(z=2, s=4))
print("[x y z s^6] T =", T.coefficient(x=1, y=1, z=1, s=6))

# Brute force agrees with the series on small sizes.
seq = sequence(M, False, 9).terms
print("brute force:", [brute_force_count(M, False, n) for n in range(9)])
print("series:     ", list(seq))
inv = [sum(1 for _ in involutions(n)) for n in range(9)]
print("ratio admissible/involutions:", [f"{a / b:.4f}" for a, b in zip(seq, inv)])

# The joint distribution of (cr, ne) on admissible perfect matchings is symmetric.
for row in joint_table(M, 8, admissible_only=True):
    print(" ", row)
