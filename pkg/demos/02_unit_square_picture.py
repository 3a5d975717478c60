"""Drawing the unit-square window of the standard super-packing.

The standard configuration (two lines y = 1 and y = -1 with two unit
circles between them) generates, under swaps and dual swaps, a family of
circles meeting every region of the plane.  This script enumerates the
circles with curvature at most 60 that touch the unit square and writes
two SVG pictures: all circles shaded by nesting depth, and the circles
of odd curvature only.
"""

from gasket import (EnumerationBudget, RenderOptions, W_STANDARD, Window,
                    generate_superpacking, render_svg)

WINDOW = Window(0, 1, 0, 1)
circles = generate_superpacking(W_STANDARD,
                                EnumerationBudget(60, window=WINDOW))
print(f"{len(circles)} circles with curvature <= 60 touch the unit square")

by_depth = {}
for pc in circles:
    by_depth[pc.depth] = by_depth.get(pc.depth, 0) + 1
for depth in sorted(by_depth):
    print(f"  nesting depth {depth}: {by_depth[depth]} circles")

with open("unit_square_depth.svg", "w", encoding="utf-8") as fh:
    fh.write(render_svg(circles, RenderOptions(window=WINDOW, fill="depth",
                                               highlight_base=W_STANDARD)))
with open("unit_square_odd.svg", "w", encoding="utf-8") as fh:
    fh.write(render_svg(circles, RenderOptions(window=WINDOW,
                                               residue_filter=(2, 1))))
print("wrote unit_square_depth.svg and unit_square_odd.svg")
