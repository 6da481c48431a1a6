"""Arc annotated diagrams for matchings, set partitions and permutations.

A diagram has vertices ``1..n`` on a line.  Upper arcs are drawn above the
line, lower arcs below it (permutations only), and loops are upper arcs whose
two endpoints coincide (fixed points of a permutation).

Diagrams are written one per line in a small ASCII grammar::

    M n=10; 1-9,2-5,3-6,4-7,8-10
    P n=9; {1,3,5}{2}{4,6}{7,8,9}
    S n=12; 9 5 6 7 8 3 2 1 4 12 11 10

Colours are positive integers attached with ``:c``; see :func:`parse`.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class DiagramError(ValueError):
    """Malformed text or a diagram violating the arc incidence rules."""


class ObjectClass(enum.Enum):
    MATCHING = "M"
    SET_PARTITION = "P"
    PERMUTATION = "S"

    @classmethod
    def from_name(cls, name: str) -> "ObjectClass":
        key = name.strip().lower().replace("_", "-")
        aliases = {
            "m": cls.MATCHING,
            "matching": cls.MATCHING,
            "p": cls.SET_PARTITION,
            "partition": cls.SET_PARTITION,
            "set-partition": cls.SET_PARTITION,
            "s": cls.PERMUTATION,
            "permutation": cls.PERMUTATION,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown object class {name!r}") from None


class Role(enum.Enum):
    FIXED = "fixed"
    OPENER = "opener"
    CLOSER = "closer"
    TRANSITORY = "transitory"
    LOOP = "loop"


class Arc(NamedTuple):
    left: int
    right: int
    colour: int = 1


def _sorted_arcs(arcs: Iterable) -> tuple[Arc, ...]:
    return tuple(sorted(Arc(*a) for a in arcs))


@dataclass(frozen=True)
class ArcDiagram:
    """Vertices ``1..n`` with upper arcs, lower arcs and loops.

    Arcs are stored sorted by opener so that equal diagrams compare equal.
    Loops are kept apart from ``upper`` as ``Arc(v, v, colour)``.
    """

    n: int
    upper: tuple[Arc, ...] = ()
    lower: tuple[Arc, ...] = ()
    loops: tuple[Arc, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "upper", _sorted_arcs(self.upper))
        object.__setattr__(self, "lower", _sorted_arcs(self.lower))
        object.__setattr__(self, "loops", _sorted_arcs(self.loops))
        self._check()

    def _check(self):
        if self.n < 0:
            raise DiagramError("vertex count must be non-negative")
        for layer, arcs in (("upper", self.upper), ("lower", self.lower)):
            lefts, rights = set(), set()
            for a in arcs:
                if not 1 <= a.left < a.right <= self.n:
                    raise DiagramError(f"{layer} arc {a.left}-{a.right} out of range or not left<right")
                if a.colour < 1:
                    raise DiagramError(f"colour must be a positive integer, got {a.colour}")
                if a.left in lefts or a.right in rights:
                    raise DiagramError(f"{layer} arcs share an endpoint at {a.left}-{a.right}")
                lefts.add(a.left)
                rights.add(a.right)
        upper_touched = {v for a in self.upper for v in a[:2]}
        seen = set()
        for lp in self.loops:
            v = lp.left
            if lp.right != v or not 1 <= v <= self.n:
                raise DiagramError(f"bad loop {lp}")
            if v in seen or v in upper_touched:
                raise DiagramError(f"loop at {v} collides with another upper arc")
            if lp.colour < 1:
                raise DiagramError(f"colour must be a positive integer, got {lp.colour}")
            seen.add(v)

    @property
    def loop_vertices(self) -> frozenset[int]:
        return frozenset(lp.left for lp in self.loops)

    def arcs(self, layer: str = "upper") -> tuple[Arc, ...]:
        if layer == "upper":
            return self.upper
        if layer == "lower":
            return self.lower
        raise ValueError(f"layer must be 'upper' or 'lower', not {layer!r}")

    def colours(self) -> list[int]:
        return sorted(a.colour for a in self.upper + self.lower + self.loops)

    def uncoloured(self) -> "ArcDiagram":
        strip = lambda arcs: [Arc(a.left, a.right) for a in arcs]
        return ArcDiagram(self.n, strip(self.upper), strip(self.lower), strip(self.loops))


def roles(d: ArcDiagram, layer: str = "upper", enhanced: bool = False) -> dict[int, Role]:
    """Role of every vertex in one layer, read off from arc incidence.

    Loops only exist in the upper layer; they report ``Role.LOOP`` when
    ``enhanced`` and ``Role.FIXED`` otherwise.
    """
    arcs = d.arcs(layer)
    lefts = {a.left for a in arcs}
    rights = {a.right for a in arcs}
    loops = d.loop_vertices if layer == "upper" else frozenset()
    out = {}
    for v in range(1, d.n + 1):
        if v in lefts and v in rights:
            out[v] = Role.TRANSITORY
        elif v in lefts:
            out[v] = Role.OPENER
        elif v in rights:
            out[v] = Role.CLOSER
        elif v in loops and enhanced:
            out[v] = Role.LOOP
        else:
            out[v] = Role.FIXED
    return out


def validate(cls: ObjectClass, d: ArcDiagram) -> None:
    """Raise :class:`DiagramError` unless ``d`` is a legal member of ``cls``."""
    if cls is ObjectClass.PERMUTATION:
        to_permutation(d)
        return
    if d.lower:
        raise DiagramError(f"{cls.name.lower()} diagrams carry upper arcs only")
    if cls is ObjectClass.MATCHING:
        endpoints = [v for a in d.upper for v in a[:2]]
        if len(endpoints) != len(set(endpoints)):
            raise DiagramError("a matching has no transitory vertices")


# -- permutations ------------------------------------------------------------


def from_permutation(sigma: Iterable[int], colours: Iterable[int] | None = None) -> ArcDiagram:
    """Diagram of a permutation in one-line notation (values ``1..n``).

    ``a < sigma(a)`` gives an upper arc, ``a > sigma(a)`` a lower arc and
    ``a == sigma(a)`` a loop.  ``colours[a-1]`` colours the arc leaving ``a``.
    """
    sigma = list(sigma)
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise DiagramError(f"not a permutation of 1..{n}: {sigma}")
    colours = [1] * n if colours is None else list(colours)
    upper, lower, loops = [], [], []
    for a, (b, c) in enumerate(zip(sigma, colours), start=1):
        if a < b:
            upper.append(Arc(a, b, c))
        elif a > b:
            lower.append(Arc(b, a, c))
        else:
            loops.append(Arc(a, a, c))
    return ArcDiagram(n, upper, lower, loops)


def to_permutation(d: ArcDiagram) -> tuple[list[int], list[int]]:
    """Recover ``(sigma, colours)`` in one-line notation from a diagram.

    Upper arcs and loops point rightwards, lower arcs point leftwards.
    """
    sigma = [0] * (d.n + 1)
    colours = [1] * (d.n + 1)

    def assign(a, b, c):
        if sigma[a]:
            raise DiagramError(f"vertex {a} has two outgoing arcs")
        sigma[a] = b
        colours[a] = c

    for a in d.upper + d.loops:
        assign(a.left, a.right, a.colour)
    for a in d.lower:
        assign(a.right, a.left, a.colour)
    if sorted(sigma[1:]) != list(range(1, d.n + 1)):
        raise DiagramError("upper and lower arcs do not form a permutation")
    return sigma[1:], colours[1:]


# -- set partitions ----------------------------------------------------------


def from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> ArcDiagram:
    """Standard representation: consecutive elements of each block are joined."""
    arcs = []
    for block in blocks:
        b = sorted(block)
        arcs.extend(Arc(x, y) for x, y in zip(b, b[1:]))
    return ArcDiagram(n, arcs)


def blocks_of(d: ArcDiagram) -> list[list[int]]:
    """Blocks of the set partition drawn by the upper arcs, sorted by minimum."""
    nxt = {a.left: a.right for a in d.upper}
    has_prev = {a.right for a in d.upper}
    out = []
    for v in range(1, d.n + 1):
        if v in has_prev:
            continue
        block = [v]
        while block[-1] in nxt:
            block.append(nxt[block[-1]])
        out.append(block)
    return out


# -- text grammar ------------------------------------------------------------

_HEAD = re.compile(r"^\s*([MPS])\s+n\s*=\s*(\d+)\s*;(.*)$")
_MATCH_ARC = re.compile(r"^(\d+)\s*-\s*(\d+)(?::(\d+))?$")
_BLOCK = re.compile(r"\{([^{}]*)\}(?::(\d+))?")
_ELEMENT = re.compile(r"^(\d+)(?::(\d+))?$")


def parse(text: str) -> tuple[ObjectClass, ArcDiagram]:
    """Parse one diagram line.

    ``M`` lines list arcs ``i-j[:c]``.  ``P`` lines list blocks ``{a,b,...}``;
    a suffix ``{...}:c`` colours every arc of the block, and an element
    written ``b:c`` colours just the arc ending at ``b``.  ``S`` lines give
    the permutation in one-line notation, where ``v:c`` colours the arc
    leaving that position.
    """
    m = _HEAD.match(text)
    if not m:
        raise DiagramError(f"cannot parse diagram header in {text!r}")
    tag, n, body = m.group(1), int(m.group(2)), m.group(3).strip()
    cls = ObjectClass(tag)
    if cls is ObjectClass.MATCHING:
        d = _parse_matching(n, body)
    elif cls is ObjectClass.SET_PARTITION:
        d = _parse_partition(n, body)
    else:
        d = _parse_permutation(n, body)
    validate(cls, d)
    return cls, d


def _parse_matching(n, body):
    arcs, loops = [], []
    if body:
        for tok in body.split(","):
            m = _MATCH_ARC.match(tok.strip())
            if not m:
                raise DiagramError(f"bad arc {tok.strip()!r}")
            i, j = int(m.group(1)), int(m.group(2))
            if i > j:
                i, j = j, i
            (loops if i == j else arcs).append(Arc(i, j, int(m.group(3) or 1)))
    return ArcDiagram(n, arcs, loops=loops)


def _parse_partition(n, body):
    arcs, loops, seen, pos = [], [], set(), 0
    for m in _BLOCK.finditer(body):
        if body[pos:m.start()].strip():
            raise DiagramError(f"unexpected text {body[pos:m.start()]!r}")
        pos = m.end()
        block_colour = m.group(2)
        elements = []
        for tok in filter(None, (t.strip() for t in m.group(1).split(","))):
            em = _ELEMENT.match(tok)
            if not em:
                raise DiagramError(f"bad block element {tok!r}")
            elements.append((int(em.group(1)), em.group(2)))
        elements.sort()
        for v, _ in elements:
            if v in seen or not 1 <= v <= n:
                raise DiagramError(f"element {v} repeated or outside 1..{n}")
            seen.add(v)
        for (a, _), (b, c) in zip(elements, elements[1:]):
            colour = c or block_colour or 1
            arcs.append(Arc(a, b, int(colour)))
        if len(elements) == 1 and block_colour:
            loops.append(Arc(elements[0][0], elements[0][0], int(block_colour)))
    if body[pos:].strip():
        raise DiagramError(f"unexpected text {body[pos:]!r}")
    return ArcDiagram(n, arcs, loops=loops)


def _parse_permutation(n, body):
    values, colours = [], []
    for tok in body.split():
        em = _ELEMENT.match(tok)
        if not em:
            raise DiagramError(f"bad permutation entry {tok!r}")
        values.append(int(em.group(1)))
        colours.append(int(em.group(2) or 1))
    if len(values) != n:
        raise DiagramError(f"expected {n} values, got {len(values)}")
    return from_permutation(values, colours)


def serialize(cls: ObjectClass, d: ArcDiagram) -> str:
    """Canonical text for ``d``; ``parse`` inverts it."""
    head = f"{cls.value} n={d.n};"
    if cls is ObjectClass.MATCHING:
        items = [f"{a.left}-{a.right}" + (f":{a.colour}" if a.colour != 1 else "")
                 for a in sorted(d.upper + d.loops)]
        return head + (" " + ",".join(items) if items else "")
    if cls is ObjectClass.SET_PARTITION:
        colour_in = {a.right: a.colour for a in d.upper}
        parts = []
        loop_colour = {lp.left: lp.colour for lp in d.loops}
        for block in blocks_of(d):
            cols = {colour_in[v] for v in block[1:]}
            if block[0] in loop_colour:
                parts.append(f"{{{block[0]}}}:{loop_colour[block[0]]}")
            elif len(cols) == 1 and cols != {1}:
                parts.append("{" + ",".join(map(str, block)) + "}:" + str(cols.pop()))
            else:
                elems = [str(block[0])] + [
                    f"{v}:{colour_in[v]}" if colour_in[v] != 1 else str(v) for v in block[1:]
                ]
                parts.append("{" + ",".join(elems) + "}")
        return head + (" " + "".join(parts) if parts else "")
    sigma, colours = to_permutation(d)
    items = [f"{v}:{c}" if c != 1 else str(v) for v, c in zip(sigma, colours)]
    return head + (" " + " ".join(items) if items else "")
