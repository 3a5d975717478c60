"""Checking curvature quadruples and reducing them to ground position.

Four mutually tangent circles have curvatures satisfying
(b1+b2+b3+b4)^2 = 2(b1^2+b2^2+b3^2+b4^2).  The swap generators replace
one circle by its mirror through the other three; greedy descent drives
any valid quadruple down to the two-lines-two-circles ground position.
"""

from gasket import (InvalidQuadrupleError, descartes_defect,
                    reduce_to_ground, root_quadruple, validate_quadruple)

EXAMPLES = [(0, 0, 1, 1), (-1, 2, 2, 3), (-6, 11, 14, 15), (23, 27, 38, 134)]

for q in EXAMPLES:
    print(f"quadruple {q}: defect = {descartes_defect(q)}")
    try:
        validate_quadruple(q)
    except InvalidQuadrupleError as exc:
        print(f"  rejected: {exc}")

print()
print("reducing (15, 2, 2, 3) step by step:")
word, ground, trace = reduce_to_ground((15, 2, 2, 3), return_trace=True)
for letter, quadruple, size in trace:
    print(f"  {letter.text:>3}  ->  {quadruple}   size {size}")
print(f"word: {word.text!r}   ground: {ground}")

print()
print("root quadruples (the size-minimal member of each packing):")
for q in [(15, 2, 2, 3), (86, 11, 14, 15), (0, 0, 3, 3)]:
    print(f"  {q}  ->  {root_quadruple(q)}")
