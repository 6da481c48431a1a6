"""k-crossings, k-nestings and labels of arc diagrams.

A k-crossing is a set of k arcs ``(i_1,j_1),...,(i_k,j_k)`` with
``i_1 < ... < i_k < j_1 < ... < j_k``; a k-nesting has
``i_1 < ... < i_k < j_k < ... < j_1``.  Enhanced statistics are obtained by
inflating loops and transitories to an opener followed by a closer and then
counting ordinary chains.  Chains are monochromatic: arcs of different
colours never form a crossing or nesting together.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .diagram import Arc, ArcDiagram, ObjectClass
from .structure import default_enhanced, enhance, inflate_arcs


def _trim(v: Iterable[int]) -> tuple[int, ...]:
    v = list(v)
    while v and v[-1] == 0:
        v.pop()
    return tuple(v)


@dataclass(frozen=True)
class Label:
    """Counts ``nest[k-2]`` of k-nestings and ``cross[k-2]`` of k-crossings."""

    nest: tuple[int, ...] = ()
    cross: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "nest", _trim(self.nest))
        object.__setattr__(self, "cross", _trim(self.cross))

    def swapped(self) -> "Label":
        return Label(self.cross, self.nest)

    def __add__(self, other: "Label") -> "Label":
        return Label(_vadd(self.nest, other.nest), _vadd(self.cross, other.cross))

    def to_json(self) -> dict:
        return {"nest": list(self.nest), "cross": list(self.cross)}


@dataclass(frozen=True)
class PermLabel:
    upper: Label
    lower: Label

    def swapped(self) -> "PermLabel":
        return PermLabel(self.upper.swapped(), self.lower.swapped())

    def __add__(self, other: "PermLabel") -> "PermLabel":
        return PermLabel(self.upper + other.upper, self.lower + other.lower)

    def to_json(self) -> dict:
        return {"upper": self.upper.to_json(), "lower": self.lower.to_json()}


def _vadd(a, b):
    m = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m)]


# -- chain counting ----------------------------------------------------------


def _prepare(arcs: Sequence, enhanced: bool) -> list[tuple[int, int]]:
    arcs = [Arc(*a) for a in arcs]
    if not enhanced:
        return sorted((a.left, a.right) for a in arcs if a.left < a.right)
    n = max((a.right for a in arcs), default=0)
    proper = [a for a in arcs if a.left < a.right]
    loops = [a for a in arcs if a.left == a.right]
    inflated, _ = inflate_arcs(n, proper, loops, opener_first=True)
    return sorted((a.left, a.right) for a in inflated.upper)


def _chain_counts(arcs: list[tuple[int, int]], crossing: bool) -> list[int]:
    """``out[k]`` = number of k-crossings (or k-nestings), all k at once.

    Fix the arc with the smallest opener of the chain.  Every other member
    opens before it closes and closes after it (crossing) or inside it
    (nesting); among such candidates a chain is exactly an increasing
    (crossing) or decreasing (nesting) subsequence of closers ordered by
    opener.
    """
    m = len(arcs)
    out = [0] * (m + 1)
    for idx, (l1, r1) in enumerate(arcs):
        if crossing:
            cand = [r for l, r in arcs[idx + 1:] if l < r1 < r]
        else:
            cand = [r for l, r in arcs[idx + 1:] if r < r1]
        # ends[t][k]: chains of length k (candidates only) ending at candidate t
        ends = []
        out[1] += 1
        for t, r in enumerate(cand):
            row = [0, 1]
            for s in range(t):
                ok = cand[s] < r if crossing else cand[s] > r
                if ok:
                    prev = ends[s]
                    if len(row) < len(prev) + 1:
                        row += [0] * (len(prev) + 1 - len(row))
                    for k in range(1, len(prev)):
                        row[k + 1] += prev[k]
            ends.append(row)
            for k in range(1, len(row)):
                out[k + 1] += row[k]
    return out


def _by_colour(arcs):
    groups = defaultdict(list)
    for a in arcs:
        groups[Arc(*a).colour].append(a)
    return groups.values()


def _check_k(k):
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")


def count_k_crossings(arcs: Sequence, k: int, enhanced: bool = False) -> int:
    """Number of monochromatic k-crossings among ``arcs``.

    With ``enhanced`` the arcs may include loops ``(v, v)`` and shared
    endpoints; those vertices are split opener-then-closer first.
    """
    _check_k(k)
    total = 0
    for group in _by_colour(arcs):
        c = _chain_counts(_prepare(group, enhanced), crossing=True)
        total += c[k] if k < len(c) else 0
    return total


def count_k_nestings(arcs: Sequence, k: int, enhanced: bool = False) -> int:
    _check_k(k)
    total = 0
    for group in _by_colour(arcs):
        c = _chain_counts(_prepare(group, enhanced), crossing=False)
        total += c[k] if k < len(c) else 0
    return total


def naive_counts(arcs: Sequence[tuple[int, int]], k: int) -> tuple[int, int]:
    """(k-nestings, k-crossings) by checking every k-subset; reference oracle."""
    nest = cross = 0
    for combo in combinations(sorted(arcs), k):
        ls = [a[0] for a in combo]
        rs = [a[1] for a in combo]
        if ls[-1] >= min(rs):
            continue
        if all(rs[i] < rs[i + 1] for i in range(k - 1)):
            cross += 1
        if all(rs[i] > rs[i + 1] for i in range(k - 1)):
            nest += 1
    return nest, cross


def arc_label(arcs: Sequence, enhanced: bool = False) -> Label:
    """Label of a single arc layer, summed over colour classes."""
    total = Label()
    for group in _by_colour(arcs):
        prepared = _prepare(group, enhanced)
        nest = _chain_counts(prepared, crossing=False)[2:]
        cross = _chain_counts(prepared, crossing=True)[2:]
        total = total + Label(nest, cross)
    return total


def _upper_arcs(cls: ObjectClass, d: ArcDiagram, enhanced: bool) -> list[Arc]:
    if not enhanced:
        return list(d.upper)
    if cls is not ObjectClass.PERMUTATION:
        d = enhance(d)
    return list(d.upper) + list(d.loops)


def label_of(cls: ObjectClass, d: ArcDiagram, enhanced: bool | None = None):
    """Full label: :class:`Label` for matchings/partitions, :class:`PermLabel`
    for permutations (enhanced upper layer, ordinary lower layer by default).
    """
    enhanced = default_enhanced(cls, enhanced)
    upper = arc_label(_upper_arcs(cls, d, enhanced), enhanced)
    if cls is ObjectClass.PERMUTATION:
        return PermLabel(upper, arc_label(d.lower, False))
    return upper


def _max_k(vec: Sequence[int], has_arcs: bool) -> int:
    top = max((k for k, c in enumerate(vec, start=2) if c), default=0)
    return top or (1 if has_arcs else 0)


def max_crossing(cls: ObjectClass, d: ArcDiagram, enhanced: bool | None = None) -> int:
    enhanced = default_enhanced(cls, enhanced)
    lab = label_of(cls, d, enhanced)
    up = bool(_upper_arcs(cls, d, enhanced))
    if isinstance(lab, PermLabel):
        return max(_max_k(lab.upper.cross, up), _max_k(lab.lower.cross, bool(d.lower)))
    return _max_k(lab.cross, up)


def max_nesting(cls: ObjectClass, d: ArcDiagram, enhanced: bool | None = None) -> int:
    enhanced = default_enhanced(cls, enhanced)
    lab = label_of(cls, d, enhanced)
    up = bool(_upper_arcs(cls, d, enhanced))
    if isinstance(lab, PermLabel):
        return max(_max_k(lab.upper.nest, up), _max_k(lab.lower.nest, bool(d.lower)))
    return _max_k(lab.nest, up)
