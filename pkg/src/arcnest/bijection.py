"""The reverse-labelling involution (Procedure Triple Reverse, PTR).

Type OC intervals need one reversal of their closer labels.  Type OCOC
intervals need three: the first opener block, the last closer block, and
finally the closers of the arcs connecting those two blocks.  Set partitions
and permutations are handled by inflating transitories and loops first, and
permutations by treating the upper and lower layers separately.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Sequence

from .diagram import Arc, ArcDiagram, DiagramError, ObjectClass, to_permutation
from .structure import (
    AdmissibilityReport,
    BlockType,
    Interval,
    LayerAnalysis,
    analyse_layer,
    deflate,
    default_enhanced,
    enhance,
    is_admissible,
    layers_for,
    role_runs,
)


class InadmissibleError(ValueError):
    """PTR does not apply; ``report`` says which interval failed."""

    def __init__(self, report: AdmissibilityReport):
        super().__init__(report.reason or "inadmissible diagram")
        self.report = report


def reverse_positions(arcs: Iterable[Arc], positions: Iterable[int]) -> list[Arc]:
    """Relabel endpoints in ``positions`` by the order-reversal of that set."""
    ps = sorted(set(positions))
    flip = dict(zip(ps, reversed(ps)))
    out = []
    for a in arcs:
        a = Arc(*a)
        x, y = flip.get(a.left, a.left), flip.get(a.right, a.right)
        out.append(Arc(min(x, y), max(x, y), a.colour))
    return sorted(out)


def ptr_stages(arcs: Sequence[Arc], runs, btype: BlockType, step4: str = "closers") -> list[tuple[str, list[Arc]]]:
    """Every intermediate arc set of PTR on one inflated interval.

    Returns ``(step, arcs)`` pairs starting with ``("input", ...)``; the last
    entry is the image.  OCOC intervals go through ``"R1"`` (first opener run
    reversed), ``"R2"`` (last closer run reversed) and ``"R3"`` (connecting
    arcs' endpoints reversed among themselves).
    """
    kind = btype.kind
    if kind == "Inadmissible":
        raise ValueError("PTR is undefined on an inadmissible interval")
    arcs = sorted(Arc(*a) for a in arcs)
    stages = [("input", arcs)]
    if kind == "P":
        return stages
    if kind == "OC":
        return stages + [("R", reverse_positions(arcs, runs[1][1]))]
    first_openers, last_closers = set(runs[0][1]), set(runs[3][1])
    arcs = reverse_positions(arcs, first_openers)
    stages.append(("R1", arcs))
    arcs = reverse_positions(arcs, last_closers)
    stages.append(("R2", arcs))
    connecting = [a for a in arcs if a.left in first_openers and a.right in last_closers]
    if step4 == "closers":
        ends = [a.right for a in connecting]
    elif step4 == "openers":
        ends = [a.left for a in connecting]
    else:
        raise ValueError(f"step4 must be 'closers' or 'openers', not {step4!r}")
    flip = dict(zip(sorted(ends), reversed(sorted(ends))))
    rest = [a for a in arcs if a not in connecting]
    if step4 == "closers":
        moved = [Arc(a.left, flip[a.right], a.colour) for a in connecting]
    else:
        moved = [Arc(flip[a.left], a.right, a.colour) for a in connecting]
    stages.append(("R3", sorted(rest + moved)))
    return stages


def ptr_interval(arcs: Sequence[Arc], runs, btype: BlockType, step4: str = "closers") -> list[Arc]:
    """Apply PTR to the arcs of one inflated interval.

    ``runs`` are the opener/closer runs of the interval (see
    :func:`arcnest.structure.role_runs`).  ``step4`` picks which endpoints of
    the connecting arcs are reversed in the last OCOC step; the default
    ``"closers"`` makes the map an involution.
    """
    return ptr_stages(arcs, runs, btype, step4)[-1][1]


def _ptr_layer(la: LayerAnalysis, step4: str) -> ArcDiagram:
    d = la.inflated
    by_interval = defaultdict(list)
    for a in d.upper:
        for iv, _ in la.intervals:
            if a.left in iv:
                by_interval[iv].append(a)
                break
    out = []
    for iv, bt in la.intervals:
        out += ptr_interval(by_interval[iv], role_runs(d, iv), bt, step4)
    return deflate(ArcDiagram(d.n, out), la.imap)


def _drop_loops(d: ArcDiagram) -> ArcDiagram:
    # colour-1 loops are plain fixed points; coloured ones must survive
    return ArcDiagram(d.n, d.upper, d.lower, [lp for lp in d.loops if lp.colour != 1])


def _ptr_raw(cls: ObjectClass, d: ArcDiagram, enhanced: bool, step4: str,
             explicit_loops: bool = False) -> ArcDiagram:
    report = is_admissible(cls, d, enhanced, explicit_loops=explicit_loops)
    if not report.admissible:
        raise InadmissibleError(report)
    upper = lower = ArcDiagram(d.n)
    loops = d.loops  # plain fixed points when not enhanced
    for la in report.layers:
        res = _ptr_layer(la, step4)
        if la.layer == "upper":
            upper = res
            if enhanced:
                loops = res.loops
        else:
            lower = res
    return ArcDiagram(d.n, upper.upper, lower.lower, loops)


def ptr(cls: ObjectClass, d: ArcDiagram, enhanced: bool | None = None,
        step4: str = "closers") -> ArcDiagram:
    """Image of ``d`` under PTR.

    Raises :class:`InadmissibleError` (carrying the admissibility report)
    when some interval is not of type P, OC or OCOC.  With enhanced
    statistics a loop may turn into a transitory and back, so an enhanced
    matching can map to a set partition.
    """
    enhanced = default_enhanced(cls, enhanced)
    out = _ptr_raw(cls, d, enhanced, step4)
    if cls is ObjectClass.PERMUTATION:
        to_permutation(out)
        return out
    return _drop_loops(out)


def image_class(cls: ObjectClass, d: ArcDiagram) -> ObjectClass:
    """Class to print an image in: a matching with a transitory is a partition."""
    if cls is ObjectClass.MATCHING:
        ends = [v for a in d.upper for v in a[:2]]
        if len(ends) != len(set(ends)):
            return ObjectClass.SET_PARTITION
    return cls


def colour_classes(d: ArcDiagram) -> dict[int, ArcDiagram]:
    """Split a diagram into one sub-diagram per colour (same vertex set)."""
    groups = defaultdict(lambda: ([], [], []))
    for i, arcs in enumerate((d.upper, d.lower, d.loops)):
        for a in arcs:
            groups[a.colour][i].append(a)
    return {c: ArcDiagram(d.n, *g) for c, g in sorted(groups.items())}


def _check_def2_permutation(d: ArcDiagram):
    for c, sub in colour_classes(d).items():
        outs = [a.left for a in sub.upper + sub.loops] + [a.right for a in sub.lower]
        ins = [a.right for a in sub.upper + sub.loops] + [a.left for a in sub.lower]
        if sorted(outs) != sorted(ins):
            raise DiagramError(f"arcs of colour {c} do not form a permutation")


def ptr_coloured(cls: ObjectClass, d: ArcDiagram, enhanced: bool | None = None,
                 semantics: str = "def1", step4: str = "closers") -> ArcDiagram:
    """PTR on a coloured diagram; colours travel with their arcs.

    ``def1`` requires the uncoloured diagram to be admissible and relabels
    it as a whole.  ``def2`` requires each colour class to be admissible on
    its own and applies PTR to every class separately.
    """
    enhanced = default_enhanced(cls, enhanced)
    if semantics == "def1":
        return ptr(cls, d, enhanced, step4)
    if semantics != "def2":
        raise ValueError(f"semantics must be 'def1' or 'def2', not {semantics!r}")
    if cls is ObjectClass.PERMUTATION:
        _check_def2_permutation(d)
    base = enhance(d) if enhanced and cls is not ObjectClass.PERMUTATION else d
    upper, lower, loops = [], [], []
    for sub in colour_classes(base).values():
        img = _ptr_raw(cls, sub, enhanced, step4, explicit_loops=True)
        upper += img.upper
        lower += img.lower
        loops += img.loops
    out = ArcDiagram(d.n, upper, lower, loops)
    if cls is ObjectClass.PERMUTATION:
        to_permutation(out)
        return out
    return _drop_loops(out)


def coloured_admissible(cls: ObjectClass, d: ArcDiagram, enhanced: bool | None = None,
                        semantics: str = "def1") -> bool:
    enhanced = default_enhanced(cls, enhanced)
    if semantics == "def1":
        return is_admissible(cls, d, enhanced).admissible
    base = enhance(d) if enhanced and cls is not ObjectClass.PERMUTATION else d
    return all(is_admissible(cls, sub, enhanced, explicit_loops=True).admissible
               for sub in colour_classes(base).values())
