"""Indecomposable intervals and which ones the reversal procedure accepts.

Run: python3 demos/02_admissibility.py
"""

import json

from arcnest import decompose, inflate, is_admissible, parse, roles

examples = [
    ("OC block", "M n=10; 1-10,2-6,3-7,4-8,5-9"),
    ("OCOC block", "M n=18; 1-10,2-8,3-16,4-9,5-18,6-7,11-15,12-14,13-17"),
    ("chained partition", "P n=9; {1,3,5}{2}{4,6}{7,8,9}"),
    ("arc enveloping three blocks", "M n=8; 1-8,2-3,4-5,6-7"),
]

for name, text in examples:
    cls, d = parse(text)
    print(f"== {name}: {text}")
    print("   intervals:", [(iv.lo, iv.hi) for iv in decompose(d)])
    print("   roles:", " ".join(f"{v}:{r.value[0]}" for v, r in roles(d).items()))
    print("   report:", json.dumps(is_admissible(cls, d).to_json()))

# Transitories are split into a closer and an opener before classification,
# which cuts a chain of blocks into independent intervals.
cls, d = parse("P n=9; {1,3,5}{2}{4,6}{7,8,9}")
inflated, imap = inflate(cls, d)
print("inflated partition:", [a[:2] for a in inflated.upper], "on", inflated.n, "positions")
print("splits:", [(s.vertex, s.kind.value, s.positions) for s in imap.splits])
