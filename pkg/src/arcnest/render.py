"""Deterministic ASCII and SVG drawings of arc diagrams."""

from __future__ import annotations

from .diagram import Arc, ArcDiagram

PALETTE = ("#000000", "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2")


def _levels(arcs) -> dict[Arc, int]:
    """Stack arcs so that arcs on one level never overlap; short arcs low."""
    placed: list[list[tuple[int, int]]] = []
    out = {}
    for a in sorted(arcs, key=lambda a: (a.right - a.left, a.left)):
        for lvl, spans in enumerate(placed):
            if all(a.right < l or a.left > r for l, r in spans):
                spans.append((a.left, a.right))
                out[a] = lvl + 1
                break
        else:
            placed.append([(a.left, a.right)])
            out[a] = len(placed)
    return out


def _grid(arcs, n, step, coloured):
    levels = _levels(arcs)
    height = max(levels.values(), default=0)
    width = step * (n - 1) + 1 if n else 1
    rows = [[" "] * width for _ in range(height)]
    for a, lvl in levels.items():
        row = rows[height - lvl]
        x1, x2 = step * (a.left - 1), step * (a.right - 1)
        for x in range(x1, x2 + 1):
            row[x] = "-"
        row[x1] = row[x2] = "+"
        if coloured:
            tag = str(a.colour)
            mid = (x1 + x2) // 2 - len(tag) // 2
            for i, ch in enumerate(tag):
                row[mid + i] = ch
    # vertical legs, drawn after all horizontals so crossings show as '|'
    for a, lvl in levels.items():
        for x in (step * (a.left - 1), step * (a.right - 1)):
            for r in range(height - lvl + 1, height):
                if rows[r][x] != "+":
                    rows[r][x] = "|"
    return ["".join(r).rstrip() for r in rows]


def render_ascii(d: ArcDiagram, step: int = 4) -> str:
    """Upper arcs above the vertex line, lower arcs mirrored below it.

    Loops are marked ``o`` just above their vertex; when any arc carries a
    colour other than 1 every arc shows its colour number.
    """
    coloured = any(c != 1 for c in d.colours())
    lines = _grid(d.upper, d.n, step, coloured)
    if d.loops:
        row = [" "] * (step * max(d.n - 1, 0) + 1)
        for lp in d.loops:
            row[step * (lp.left - 1)] = str(lp.colour) if coloured else "o"
        lines.append("".join(row).rstrip())
    lines.append(("*" + " " * (step - 1)) * (d.n - 1) + "*" if d.n else "")
    lines.append("".join(str(v).ljust(step) for v in range(1, d.n + 1)).rstrip())
    if d.lower:
        lines += reversed(_grid(d.lower, d.n, step, coloured))
    return "\n".join(lines) + "\n"


def render_svg(d: ArcDiagram, spacing: int = 40) -> str:
    """SVG with fixed vertex spacing and arc heights proportional to span."""
    coloured = any(c != 1 for c in d.colours())
    unit = spacing * 0.5
    span_max = max((a.right - a.left for a in d.upper + d.lower), default=1)
    up = unit * span_max + spacing
    down = unit * span_max + spacing if d.lower else spacing
    width = spacing * (d.n + 1)
    height = up + down
    base = up
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<line x1="{spacing/2:.1f}" y1="{base:.1f}" x2="{width - spacing/2:.1f}" y2="{base:.1f}" '
        'stroke="#bbbbbb" stroke-width="1"/>',
    ]

    def x(v):
        return spacing * v

    def stroke(c):
        return PALETTE[(c - 1) % len(PALETTE)]

    for sign, arcs in ((-1, d.upper), (1, d.lower)):
        for a in arcs:
            h = unit * (a.right - a.left) * 4 / 3  # cubic control height for apex = span * unit
            y = base + sign * h
            out.append(
                f'<path d="M {x(a.left):.1f} {base:.1f} C {x(a.left):.1f} {y:.1f} '
                f'{x(a.right):.1f} {y:.1f} {x(a.right):.1f} {base:.1f}" fill="none" '
                f'stroke="{stroke(a.colour)}" stroke-width="1.5"/>'
            )
            if coloured:
                ty = base + sign * unit * (a.right - a.left) + (-4 if sign < 0 else 12)
                out.append(f'<text x="{(x(a.left) + x(a.right)) / 2:.1f}" y="{ty:.1f}" '
                           f'font-size="11" text-anchor="middle">{a.colour}</text>')
    for lp in d.loops:
        r = spacing / 5
        out.append(f'<circle cx="{x(lp.left):.1f}" cy="{base - r:.1f}" r="{r:.1f}" fill="none" '
                   f'stroke="{stroke(lp.colour)}" stroke-width="1.5"/>')
    for v in range(1, d.n + 1):
        out.append(f'<circle cx="{x(v):.1f}" cy="{base:.1f}" r="3" fill="#000000"/>')
        out.append(f'<text x="{x(v) + 5:.1f}" y="{base + 14:.1f}" font-size="11">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
