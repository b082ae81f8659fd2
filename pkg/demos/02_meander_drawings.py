#!/usr/bin/env python3
# Render canonical meander diagrams to SVG files in the current directory.
from pathlib import Path

from sturm import RenderStyle, SturmPermutation, render_svg

examples = {
    "meander_7.svg": SturmPermutation((1, 4, 5, 6, 3, 2, 7)),
    "meander_5_nested.svg": SturmPermutation((1, 4, 3, 2, 5)),
    "meander_15.svg": SturmPermutation((1, 14, 13, 6, 5, 4, 7, 12, 11, 8, 9, 10, 3, 2, 15)),
}

style = RenderStyle(scale=36, show_morse=True)
for name, p in examples.items():
    Path(name).write_text(render_svg(p, style), encoding="utf-8")
    print(f"wrote {name}  ({p.n} crossings, Morse numbers {list(p.morse)})")

print()
print("Open the files in a browser; dots are crossings labeled along the")
print("curve, semicircles alternate sides, and i=k annotates Morse numbers.")
