"""ASCII and SVG drawings.

Run: python3 demos/07_rendering.py [outdir]
"""

import sys
from pathlib import Path

from arcnest import parse, render_ascii, render_svg

figures = {
    "matching": "M n=10; 1-9,2-5,3-6,4-7,8-10",
    "permutation": "S n=12; 9 5 6 7 8 3 2 1 4 12 11 10",
    "coloured": "P n=9; {1,3,5:2}{2}{4,6}:2{7,8,9:2}",
}

out = Path(sys.argv[1]) if len(sys.argv) > 1 else None
for name, text in figures.items():
    _, d = parse(text)
    print(f"-- {name}: {text}")
    print(render_ascii(d))
    if out:
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{name}.svg").write_text(render_svg(d))
        print("wrote", out / f"{name}.svg")
