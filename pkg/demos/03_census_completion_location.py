"""Orbit census, tangent-triple completion, and unit-square location.

Three independent views of the same integrality story: the 672 orbits
of decorated integral configurations grouped by their divisor vectors,
the exact completion of three tangent circles to a quadruple, and the
canonical position every integral packing occupies inside the square.
"""

from fractions import Fraction

from gasket import (circle_from_row, complete, locate_in_unit_square,
                    orbit_census)

print("census of decorated integral orbits by divisor vector:")
rows = orbit_census()
for row in rows:
    print(f"  gvector {row.gvector}: {row.count} orbits")
print(f"  total: {sum(r.count for r in rows)}")

print()
print("completing the outer circle and the two half-disks of (-1,2,2):")
a = circle_from_row((1, -1, 0, 0))
b = circle_from_row((0, 2, 1, 0))
c = circle_from_row((0, 2, -1, 0))
for w in complete(a, b, c):
    print(f"  fourth circle row: {w[3]}")

print()
print("unit-square locations of the curvature -6 root quadruples:")
for q in [(-6, 7, 42, 43), (-6, 10, 15, 19), (-6, 11, 14, 15)]:
    m = locate_in_unit_square(q)
    outer = min(m, key=lambda r: r[1])
    cx, cy = Fraction(outer[2], outer[1]), Fraction(outer[3], outer[1])
    print(f"  {q}: bounding circle centered at ({cx}, {cy})")
