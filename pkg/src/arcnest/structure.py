"""Interval decomposition, inflation/deflation and block classification.

Every admissibility decision is taken on an *inflated* layer: transitory
vertices (and, for enhanced statistics, loops) are split into two adjacent
positions so that the layer becomes a partial matching.  Each indecomposable
interval of that matching must then be of type P, OC or OCOC.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import groupby
from typing import Iterable, Sequence

from .diagram import Arc, ArcDiagram, DiagramError, ObjectClass, to_permutation


class DeflationError(RuntimeError):
    """An inflated pair lost its orientation; PTR never produces this."""


class SplitKind(enum.Enum):
    TRANSITORY_CO = "transitory-CO"
    TRANSITORY_OC = "transitory-OC"
    LOOP_OC = "loop-OC"


@dataclass(frozen=True)
class Split:
    vertex: int
    kind: SplitKind
    positions: tuple[int, int]


@dataclass(frozen=True)
class InflationMap:
    """How the vertices of one layer were spread over inflated positions.

    ``origin[p]`` is the original vertex at inflated position ``p``
    (index 0 unused).
    """

    n: int
    layer: str
    origin: tuple[int, ...]
    splits: tuple[Split, ...]

    @property
    def size(self) -> int:
        return len(self.origin) - 1


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int

    def __contains__(self, p: int) -> bool:
        return self.lo <= p <= self.hi


@dataclass(frozen=True)
class BlockType:
    kind: str  # "P", "OC", "OCOC" or "Inadmissible"
    n: int = 0
    k: int = 0
    j: int = 0
    reason: str | None = None

    @property
    def admissible(self) -> bool:
        return self.kind != "Inadmissible"

    def to_json(self) -> dict:
        out = {"type": self.kind}
        if self.kind == "OC":
            out["n"] = self.n
        elif self.kind == "OCOC":
            out.update(n=self.n, k=self.k, j=self.j)
        return out


@dataclass(frozen=True)
class LayerAnalysis:
    layer: str
    inflated: ArcDiagram
    imap: InflationMap
    intervals: tuple[tuple[Interval, BlockType], ...]

    @property
    def admissible(self) -> bool:
        return all(bt.admissible for _, bt in self.intervals)


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    layers: tuple[LayerAnalysis, ...] = field(default=())
    reason: str | None = None

    def to_json(self) -> dict:
        rows = []
        for la in self.layers:
            for iv, bt in la.intervals:
                row = {
                    "lo": la.imap.origin[iv.lo],
                    "hi": la.imap.origin[iv.hi],
                    **bt.to_json(),
                }
                if len(self.layers) > 1:
                    row = {"layer": la.layer, **row}
                if bt.reason:
                    row["reason"] = bt.reason
                rows.append(row)
        return {"admissible": self.admissible, "intervals": rows, "reason": self.reason}


# -- decomposition -----------------------------------------------------------


def intervals_of(n: int, arcs: Iterable[Arc]) -> list[Interval]:
    """Maximal indecomposable intervals of ``1..n`` under ``arcs``."""
    covered = [0] * (n + 2)
    for a in arcs:
        # the gap between p and p+1 is covered for left <= p < right
        covered[a.left] += 1
        covered[a.right] -= 1
    out, depth, lo = [], 0, 1
    for p in range(1, n + 1):
        depth += covered[p]
        if depth == 0:
            out.append(Interval(lo, p))
            lo = p + 1
    return out


def decompose(d: ArcDiagram, layer: str = "upper") -> list[Interval]:
    return intervals_of(d.n, d.arcs(layer))


# -- inflation ---------------------------------------------------------------


def enhance(d: ArcDiagram) -> ArcDiagram:
    """Draw every isolated vertex of a matching/partition as an upper loop."""
    touched = {v for a in d.upper for v in a[:2]} | d.loop_vertices
    loops = list(d.loops) + [Arc(v, v) for v in range(1, d.n + 1) if v not in touched]
    return ArcDiagram(d.n, d.upper, d.lower, loops)


def inflate_arcs(n: int, arcs: Sequence[Arc], loops: Sequence[Arc] = (), *,
                 opener_first: bool = False, layer: str = "upper"):
    """Split transitories (and loops) of a single arc layer.

    With ``opener_first`` a transitory becomes an opener followed by a
    closer; otherwise a closer followed by an opener.  Loops always become an
    opener followed by a closer joined by an arc.  Returns the inflated
    matching as an :class:`ArcDiagram` and the :class:`InflationMap`.
    """
    lefts = {a.left for a in arcs}
    rights = {a.right for a in arcs}
    loop_colour = {lp.left: lp.colour for lp in loops}
    origin = [0]
    splits = []
    open_pos, close_pos = {}, {}
    for v in range(1, n + 1):
        p = len(origin)
        if v in loop_colour:
            origin += [v, v]
            splits.append(Split(v, SplitKind.LOOP_OC, (p, p + 1)))
            open_pos[v], close_pos[v] = p, p + 1
        elif v in lefts and v in rights:
            origin += [v, v]
            if opener_first:
                splits.append(Split(v, SplitKind.TRANSITORY_OC, (p, p + 1)))
                open_pos[v], close_pos[v] = p, p + 1
            else:
                splits.append(Split(v, SplitKind.TRANSITORY_CO, (p, p + 1)))
                close_pos[v], open_pos[v] = p, p + 1
        else:
            origin.append(v)
            open_pos[v] = close_pos[v] = p
    new_arcs = [Arc(open_pos[a.left], close_pos[a.right], a.colour) for a in arcs]
    new_arcs += [Arc(open_pos[v], close_pos[v], c) for v, c in loop_colour.items()]
    imap = InflationMap(n, layer, tuple(origin), tuple(splits))
    return ArcDiagram(len(origin) - 1, new_arcs), imap


def inflate(cls: ObjectClass, d: ArcDiagram, enhanced: bool = False, layer: str = "upper",
            explicit_loops: bool = False):
    """Inflate one layer of ``d`` into a partial matching.

    Non-enhanced: each transitory becomes closer then opener, loops are
    plain fixed points.  Enhanced (upper layer only): loops and transitories
    become opener then closer; for matchings and set partitions every fixed
    point is first drawn as a loop unless ``explicit_loops`` is set.  The
    lower layer always uses the non-enhanced rule.
    """
    if layer == "lower":
        return inflate_arcs(d.n, d.lower, (), opener_first=False, layer="lower")
    if enhanced:
        if cls is not ObjectClass.PERMUTATION and not explicit_loops:
            d = enhance(d)
        return inflate_arcs(d.n, d.upper, d.loops, opener_first=True, layer="upper")
    return inflate_arcs(d.n, d.upper, (), opener_first=False, layer="upper")


def deflate(d: ArcDiagram, m: InflationMap) -> ArcDiagram:
    """Merge every split pair back into its original vertex.

    An opener-closer pair joined by its own arc becomes a loop; otherwise it
    becomes a transitory.  The result carries its arcs in ``m.layer``.
    """
    if d.n != m.size:
        raise DeflationError(f"inflated size {d.n} does not match map size {m.size}")
    lefts = {a.left: a for a in d.upper}
    rights = {a.right for a in d.upper}
    loop_pos = {}
    for sp in m.splits:
        p, q = sp.positions
        if sp.kind is SplitKind.TRANSITORY_CO:
            ok = p in rights and p not in lefts and q in lefts and q not in rights
        else:
            ok = p in lefts and p not in rights and q in rights and q not in lefts
        if not ok:
            raise DeflationError(f"inflated pair of vertex {sp.vertex} lost its {sp.kind.value} orientation")
        if sp.kind is not SplitKind.TRANSITORY_CO and lefts[p].right == q:
            loop_pos[p] = sp.vertex
    arcs, loops = [], []
    for a in d.upper:
        if a.left in loop_pos:
            loops.append(Arc(loop_pos[a.left], loop_pos[a.left], a.colour))
        else:
            arcs.append(Arc(m.origin[a.left], m.origin[a.right], a.colour))
    if m.layer == "lower":
        if loops:
            raise DeflationError("loops cannot appear in the lower layer")
        return ArcDiagram(m.n, lower=arcs)
    return ArcDiagram(m.n, arcs, loops=loops)


# -- classification ----------------------------------------------------------


def role_runs(d: ArcDiagram, iv: Interval) -> list[tuple[str, list[int]]]:
    """Maximal runs of openers ('O') and closers ('C') inside ``iv``.

    Positions touched by no arc are skipped: they are fixed points (or
    placeholders) that never take part in a reversal.
    """
    lefts = {a.left for a in d.upper}
    rights = {a.right for a in d.upper}
    seq = []
    for p in range(iv.lo, iv.hi + 1):
        if p in lefts:
            seq.append(("O", p))
        elif p in rights:
            seq.append(("C", p))
    return [(r, [p for _, p in grp]) for r, grp in groupby(seq, key=lambda t: t[0])]


def _arcs_in(d: ArcDiagram, iv: Interval) -> list[Arc]:
    return [a for a in d.upper if a.left in iv]


def classify_interval(d: ArcDiagram, iv: Interval, imap: InflationMap | None = None) -> BlockType:
    """Type of one indecomposable interval of an inflated layer."""
    runs = role_runs(d, iv)
    shape = "".join(r for r, _ in runs)
    if not runs:
        return BlockType("P")
    if shape == "OC":
        n = len(runs[0][1])
        if n == 1 and imap is not None and imap.origin[iv.lo] == imap.origin[iv.hi]:
            return BlockType("P")  # a lone loop
        return BlockType("OC", n=n)
    if shape == "OCOC":
        o1, c2, o3, c4 = (set(ps) for _, ps in runs)
        k, j = len(c2), len(o3)
        n = len(o1) - k
        inner1 = inner2 = connect = 0
        for a in _arcs_in(d, iv):
            if a.left in o1 and a.right in c2:
                inner1 += 1
            elif a.left in o3 and a.right in c4:
                inner2 += 1
            elif a.left in o1 and a.right in c4:
                connect += 1
        if n >= 1 and len(c4) == n + j and (inner1, inner2, connect) == (k, j, n):
            return BlockType("OCOC", n=n, k=k, j=j)
    return BlockType("Inadmissible", reason=_failure_reason(d, iv, shape))


def _failure_reason(d: ArcDiagram, iv: Interval, shape: str) -> str:
    for a in _arcs_in(d, iv):
        if a.left == iv.lo and a.right == iv.hi:
            inner = [b for b in d.upper if b is not a and iv.lo < b.left and b.right < iv.hi]
            sub = [s for s in intervals_of(d.n, inner)
                   if iv.lo < s.lo and s.hi < iv.hi and any(b.left in s for b in inner)]
            if len(sub) >= 3:
                return f"enveloping arc spans {len(sub)} indecomposable intervals"
    return f"role sequence {shape} is neither OC nor OCOC"


def analyse_layer(cls: ObjectClass, d: ArcDiagram, enhanced: bool, layer: str,
                  explicit_loops: bool = False) -> LayerAnalysis:
    inflated, imap = inflate(cls, d, enhanced, layer, explicit_loops=explicit_loops)
    rows = tuple((iv, classify_interval(inflated, iv, imap)) for iv in decompose(inflated))
    return LayerAnalysis(layer, inflated, imap, rows)


def default_enhanced(cls: ObjectClass, enhanced: bool | None) -> bool:
    # permutations conventionally use enhanced upper statistics
    if enhanced is None:
        return cls is ObjectClass.PERMUTATION
    return enhanced


def layers_for(cls: ObjectClass) -> tuple[str, ...]:
    return ("upper", "lower") if cls is ObjectClass.PERMUTATION else ("upper",)


def is_admissible(cls: ObjectClass, d: ArcDiagram, enhanced: bool | None = None,
                  explicit_loops: bool = False) -> AdmissibilityReport:
    """Whether PTR applies: every inflated interval (each layer) is P, OC or OCOC."""
    enhanced = default_enhanced(cls, enhanced)
    layers = tuple(
        analyse_layer(cls, d, enhanced and layer == "upper", layer, explicit_loops)
        for layer in layers_for(cls)
    )
    reason = None
    for la in layers:
        for iv, bt in la.intervals:
            if not bt.admissible:
                lo, hi = la.imap.origin[iv.lo], la.imap.origin[iv.hi]
                reason = f"{la.layer} interval [{lo},{hi}]: {bt.reason}"
                break
        if reason:
            break
    return AdmissibilityReport(reason is None, layers, reason)


# -- permutations ------------------------------------------------------------


def split_permutation(d: ArcDiagram) -> tuple[ArcDiagram, ArcDiagram]:
    """Upper diagram (arcs and loops) and lower diagram on the same vertices.

    Vertices without arcs in a half keep their positions as isolated points.
    """
    to_permutation(d)
    return ArcDiagram(d.n, d.upper, loops=d.loops), ArcDiagram(d.n, lower=d.lower)


def stitch_permutation(upper: ArcDiagram, lower: ArcDiagram) -> ArcDiagram:
    """Identify equal vertex labels of the two halves; must give a permutation."""
    if upper.n != lower.n:
        raise DiagramError("halves have different vertex counts")
    d = ArcDiagram(upper.n, upper.upper, lower.lower, upper.loops)
    to_permutation(d)
    return d
