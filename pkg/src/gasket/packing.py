"""Breadth-first enumeration of packings and super-packings.

Starting from a tangent quadruple, the swap generators sweep out an
Apollonian packing and the full generator set sweeps out the
super-packing.  Words are enumerated in normal form, so every
configuration is visited once; each step emits only the circles the last
letter created.  Pruning is monotone and therefore sound:

* a swap that replaces a circle by a strictly larger-curvature one can
  only be followed (without backtracking) by moves that grow curvatures
  further, so the branch dies once the new curvature passes the bound;
* a transpose move into a positive-curvature circle only ever produces
  circles nested inside it, with strictly larger curvature and inside
  its bounding box;
* a transpose move into a line confines the rest of the branch to the
  closed half plane on the line's interior side;
* a swap walk along a two-line ground configuration translates by a
  fixed step, so each step confines the branch beyond the tangency point
  of the two circles involved.

Each branch therefore carries a rectangular region (possibly unbounded)
that contains all circles it can still emit, and is cut when the region
misses the requested window.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .core import (Circle, GasketError, Matrix, Row, Scalar, canon,
                   canon_matrix, canon_row, circle_from_row, divisor,
                   orientation, validate_augmented)
from .classify import is_root_quadruple, reduce_to_ground, root_quadruple
from .core import W_STANDARD
from .group import GeneratorLetter, GroupWord, apply, perm_matrix


class EnumerationError(GasketError):
    """The budget does not bound the requested enumeration."""


@dataclass(frozen=True)
class Window:
    """Closed axis-aligned rectangle used for spatial filtering."""

    xmin: Scalar
    xmax: Scalar
    ymin: Scalar
    ymax: Scalar

    def __post_init__(self):
        for name in ("xmin", "xmax", "ymin", "ymax"):
            object.__setattr__(self, name, canon(getattr(self, name)))
        if self.xmin > self.xmax or self.ymin > self.ymax:
            raise GasketError("empty window")


@dataclass(frozen=True)
class EnumerationBudget:
    """Stopping rules for enumeration; max_curvature is always required."""

    max_curvature: Scalar
    max_word_length: Optional[int] = None
    window: Optional[Window] = None

    def __post_init__(self):
        object.__setattr__(self, "max_curvature", canon(self.max_curvature))
        if self.max_curvature <= 0:
            raise GasketError("max_curvature must be positive")
        if self.max_word_length is not None and self.max_word_length < 0:
            raise GasketError("max_word_length must be nonnegative")


@dataclass(frozen=True)
class PackedCircle:
    """An enumerated circle with its nesting depth and shortest witness."""

    circle: Circle
    depth: int
    witness: GroupWord


# Region boxes: (xmin, xmax, ymin, ymax) with None for unbounded sides.
Box = Tuple[Optional[Scalar], Optional[Scalar], Optional[Scalar], Optional[Scalar]]
FULL_PLANE: Box = (None, None, None, None)


def _box_intersect(a: Box, b: Box) -> Optional[Box]:
    def lo(x, y):
        if x is None:
            return y
        if y is None:
            return x
        return max(x, y)

    def hi(x, y):
        if x is None:
            return y
        if y is None:
            return x
        return min(x, y)

    out = (lo(a[0], b[0]), hi(a[1], b[1]), lo(a[2], b[2]), hi(a[3], b[3]))
    if out[0] is not None and out[1] is not None and out[0] > out[1]:
        return None
    if out[2] is not None and out[3] is not None and out[2] > out[3]:
        return None
    return out


def _window_box(w: Window) -> Box:
    return (w.xmin, w.xmax, w.ymin, w.ymax)


def _circle_bbox(row: Row) -> Box:
    bbar, b, bx, by = row
    x = Fraction(bx) / b
    y = Fraction(by) / b
    r = 1 / Fraction(abs(b))
    return (canon(x - r), canon(x + r), canon(y - r), canon(y + r))


def _line_halfplane_box(row: Row) -> Box:
    """Bounding box of a line's interior half plane; exact only when the
    line is axis parallel, otherwise the full plane."""
    bbar, b, nx, ny = row
    h = Fraction(bbar) / 2
    if nx == 0 and ny == 1:
        return (None, None, canon(h), None)
    if nx == 0 and ny == -1:
        return (None, None, None, canon(-h))
    if ny == 0 and nx == 1:
        return (canon(h), None, None, None)
    if ny == 0 and nx == -1:
        return (None, canon(-h), None, None)
    return FULL_PLANE


def window_touches(row: Row, window: Window) -> bool:
    """Closed intersection test between a row's disk (for circles) or
    line (for b = 0) and the window rectangle.  Orientation-independent:
    a row and its negation describe the same geometric object."""
    bbar, b, bx, by = row
    if b == 0:
        # The line {p . n = bbar/2} meets the rectangle iff the corner
        # values of p . n straddle bbar/2.
        lo = min(bx * x for x in (window.xmin, window.xmax)) + \
            min(by * y for y in (window.ymin, window.ymax))
        hi = max(bx * x for x in (window.xmin, window.xmax)) + \
            max(by * y for y in (window.ymin, window.ymax))
        return 2 * lo <= bbar <= 2 * hi
    x = Fraction(bx) / b
    y = Fraction(by) / b
    cx = min(max(x, window.xmin), window.xmax)
    cy = min(max(y, window.ymin), window.ymax)
    d2 = (x - cx) ** 2 + (y - cy) ** 2
    return d2 * b * b <= 1


def _letters_after(last: Optional[GeneratorLetter],
                   super_moves: bool) -> Tuple[GeneratorLetter, ...]:
    out = []
    for i in (1, 2, 3, 4):
        l = GeneratorLetter("s", i)
        if last is None or not (last.kind == "s" and last.index == i):
            out.append(l)
    if super_moves:
        for i in (1, 2, 3, 4):
            l = GeneratorLetter("t", i)
            if last is None:
                out.append(l)
            elif last.kind == "s":
                if last.index == i:
                    out.append(l)
            elif last.index != i:
                out.append(l)
    return tuple(out)


_EXPANSION_GUARD = 5_000_000


def _enumerate(base: Matrix, budget: EnumerationBudget,
               super_moves: bool) -> Tuple[PackedCircle, ...]:
    w0 = canon_matrix(base)
    if not validate_augmented(w0):
        raise GasketError("base matrix is not a tangent quadruple")
    if orientation(tuple(r[1] for r in w0)) < 0:
        raise GasketError("enumeration needs a positively oriented base")
    maxcurv = budget.max_curvature
    window = budget.window
    wbox = _window_box(window) if window is not None else None
    if window is None and budget.max_word_length is None:
        # A curvature bound alone only terminates for packings that stay
        # inside a bounding circle.  Super moves always reach quadruples
        # with lines, and those walk sideways forever.
        if super_moves:
            raise EnumerationError(
                "super-packing enumeration needs a window or a word-length"
                " bound: the orbit meets every region of the plane")
        from .classify import root_quadruple
        root = root_quadruple(tuple(r[1] for r in w0))
        if min(root) == 0:
            raise EnumerationError(
                "packings containing lines need a window or a word-length"
                " bound: they extend along the lines forever")

    emitted: Dict[Row, Tuple[int, str, PackedCircle]] = {}

    def emit(row: Row, word_applied: Tuple[GeneratorLetter, ...],
             skip_curvature: bool = False):
        if not skip_curvature and abs(row[1]) > maxcurv:
            return
        if window is not None and not window_touches(row, window):
            return
        neg = tuple(-x for x in row)
        if neg in emitted:
            return  # same circle, opposite orientation, already present
        word = GroupWord(tuple(reversed(word_applied)))
        depth = word.perp_count()
        key = (len(word_applied), word.text)
        prev = emitted.get(row)
        if prev is None or key < (prev[0], prev[1]):
            emitted[row] = (key[0], key[1],
                            PackedCircle(circle_from_row(row), depth, word))

    for row in w0:
        emit(row, (), skip_curvature=True)

    # State: (matrix, last letter, applied-order word, region box).
    frontier = deque()
    frontier.append((w0, None, (), FULL_PLANE))
    expansions = 0
    while frontier:
        wm, last, word_applied, region = frontier.popleft()
        if budget.max_word_length is not None and \
                len(word_applied) >= budget.max_word_length:
            continue
        expansions += 1
        if expansions > _EXPANSION_GUARD:
            raise EnumerationError(
                "the budget does not bound this enumeration")
        curv = tuple(r[1] for r in wm)
        zero_rows = [i for i in range(4) if curv[i] == 0]
        for l in _letters_after(last, super_moves):
            i = l.index - 1
            region2 = region
            if l.kind == "s":
                new_row = canon_row(tuple(
                    -wm[i][j] + 2 * sum(wm[k][j] for k in range(4) if k != i)
                    for j in range(4)))
                b_new, b_old = new_row[1], curv[i]
                child_word = word_applied + (l,)
                emit(new_row, child_word)
                if b_new >= b_old and abs(b_new) > maxcurv:
                    continue  # away move past the bound: subtree only grows
                if b_new == b_old and len(zero_rows) == 2:
                    # Ground walk: the branch moves past the tangency
                    # point of the two equal circles, along the lines.
                    j = next(k for k in range(4) if k != i and curv[k] != 0)
                    ci = (Fraction(wm[i][2]) / b_old, Fraction(wm[i][3]) / b_old)
                    cj = (Fraction(wm[j][2]) / curv[j],
                          Fraction(wm[j][3]) / curv[j])
                    cn = (Fraction(new_row[2]) / b_new,
                          Fraction(new_row[3]) / b_new)
                    tx = canon((ci[0] + cj[0]) / 2)
                    ty = canon((ci[1] + cj[1]) / 2)
                    half = FULL_PLANE
                    if cn[1] == cj[1] and cn[0] != cj[0]:
                        half = (tx, None, None, None) if cn[0] > cj[0] \
                            else (None, tx, None, None)
                    elif cn[0] == cj[0] and cn[1] != cj[1]:
                        half = (None, None, ty, None) if cn[1] > cj[1] \
                            else (None, None, None, ty)
                    nxt = _box_intersect(region2, half)
                    if nxt is None:
                        continue
                    region2 = nxt
                child = tuple(new_row if k == i else wm[k] for k in range(4))
            else:
                b_i = curv[i]
                if b_i > 0 and b_i >= maxcurv:
                    continue  # everything nested inside exceeds the bound
                if b_i > 0:
                    nxt = _box_intersect(region2, _circle_bbox(wm[i]))
                    if nxt is None:
                        continue
                    region2 = nxt
                elif b_i == 0:
                    nxt = _box_intersect(region2, _line_halfplane_box(wm[i]))
                    if nxt is None:
                        continue
                    region2 = nxt
                child = apply(l, wm)
                child_word = word_applied + (l,)
                for k in range(4):
                    if k != i:
                        emit(child[k], child_word)
            if wbox is not None and _box_intersect(region2, wbox) is None:
                continue
            frontier.append((child, l, child_word, region2))

    ordered = sorted(emitted.items(), key=lambda kv: tuple(map(Fraction, kv[0])))
    return tuple(entry[2] for _, entry in ordered)


def generate_packing(base: Matrix, budget: EnumerationBudget) -> Tuple[PackedCircle, ...]:
    """Enumerate the Apollonian packing of a tangent quadruple."""
    return _enumerate(base, budget, super_moves=False)


def generate_superpacking(base: Matrix, budget: EnumerationBudget) -> Tuple[PackedCircle, ...]:
    """Enumerate the super-packing generated by a tangent quadruple."""
    return _enumerate(base, budget, super_moves=True)


# ---------------------------------------------------------------------------
# Oriented containment and nesting depth.


def contains_oriented(outer: Circle, inner: Circle) -> bool:
    """Is the region bounded by ``inner`` inside the open interior of
    ``outer``?  Boundary tangency is allowed; equal curves are not
    contained in each other."""
    ro, ri = outer.row(), inner.row()
    if ro == ri:
        return False
    bo, bi = ro[1], ri[1]
    if bo == 0:
        nx, ny, h2 = ro[2], ro[3], ro[0]
        if bi == 0:
            return (ri[2], ri[3]) == (nx, ny) and ri[0] >= h2
        if bi < 0:
            return False
        # Disk of inner inside the half plane, tangency allowed.
        return 2 * (nx * ri[2] + ny * ri[3]) - h2 * bi >= 2
    if bo > 0:
        if bi <= 0:
            return False
        dx = ro[2] * bi - ri[2] * bo
        dy = ro[3] * bi - ri[3] * bo
        if bi < bo:
            return False
        return dx * dx + dy * dy <= (bi - bo) ** 2
    # Outer region is the exterior of a disk.
    if bi == 0:
        nx, ny = ri[2], ri[3]
        return -(2 * (nx * ro[2] + ny * ro[3]) - ri[0] * bo) >= 2
    dx = ro[2] * bi - ri[2] * bo
    dy = ro[3] * bi - ri[3] * bo
    if bi > 0:
        return dx * dx + dy * dy >= (abs(bo) + bi) ** 2
    if abs(bi) > abs(bo):
        return False
    return dx * dx + dy * dy <= (abs(bo) - abs(bi)) ** 2


def nesting_depth_geometric(c: Circle, circles: Iterable[PackedCircle]) -> int:
    """Number of distinct enumerated curves whose interior contains c."""
    count = 0
    for pc in circles:
        if contains_oriented(pc.circle, c):
            count += 1
    return count


def bounding_packing(c: PackedCircle, circles: Sequence[PackedCircle]
                     ) -> Tuple[Tuple[PackedCircle, ...], bool]:
    """The packing bounded by c: c plus the next-depth circles inside it.

    The flag reports truncation: True when no interior circle of depth
    c.depth + 1 was found in the enumerated set.
    """
    inside = tuple(pc for pc in circles
                   if pc.depth == c.depth + 1
                   and contains_oriented(c.circle, pc.circle))
    return ((c,) + inside, len(inside) == 0)


# ---------------------------------------------------------------------------
# Euclidean motions on rows.


def transform_row(row: Row, r2x2: Sequence[Sequence[Scalar]],
                  v: Tuple[Scalar, Scalar]) -> Row:
    """Image of a row under the isometry p -> R p + v, R orthogonal."""
    bbar, b, bx, by = canon_row(row)
    rx = canon(r2x2[0][0] * bx + r2x2[0][1] * by)
    ry = canon(r2x2[1][0] * bx + r2x2[1][1] * by)
    vx, vy = canon(v[0]), canon(v[1])
    nbbar = canon(bbar + 2 * (rx * vx + ry * vy) + b * (vx * vx + vy * vy))
    return (nbbar, b, canon(rx + b * vx), canon(ry + b * vy))


IDENT2 = ((1, 0), (0, 1))


def translate_row(row: Row, dx: Scalar, dy: Scalar) -> Row:
    return transform_row(row, IDENT2, (dx, dy))


def reflect_row_x(row: Row) -> Row:
    """Reflection across the y axis (x -> -x)."""
    return transform_row(row, ((-1, 0), (0, 1)), (0, 0))


def reflect_row_y(row: Row) -> Row:
    """Reflection across the x axis (y -> -y)."""
    return transform_row(row, ((1, 0), (0, -1)), (0, 0))


def transform_packed(pc: PackedCircle, r2x2, v) -> PackedCircle:
    return PackedCircle(circle_from_row(transform_row(pc.circle.row(), r2x2, v)),
                        pc.depth, pc.witness)


# ---------------------------------------------------------------------------
# Locating a root quadruple inside the unit square.


def locate_in_unit_square(root: Sequence[Scalar]) -> Matrix:
    """The copy of a primitive root quadruple whose largest circle has its
    center in the closed unit square.

    The input must be a primitive, sorted root quadruple with a negative
    smallest curvature.  The result is a strongly integral augmented
    matrix in the standard super-packing with curvature column equal to
    the input.
    """
    vals = canon_row(root)
    if not all(isinstance(x, int) for x in vals):
        raise GasketError("root quadruples are integral")
    if not is_root_quadruple(vals):
        raise GasketError(f"{vals} is not a sorted root quadruple")
    if divisor(vals) != 1:
        raise GasketError(f"{vals} is not primitive")
    if vals[0] >= 0:
        raise GasketError("the bounded case needs a negative smallest curvature")

    word, ground = reduce_to_ground(vals)
    # Build a ground matrix whose curvature column matches exactly.
    line_rows = iter(i for i in range(4) if W_STANDARD[i][1] == 0)
    circ_rows = iter(i for i in range(4) if W_STANDARD[i][1] != 0)
    order = tuple(next(line_rows) if g == 0 else next(circ_rows)
                  for g in ground)
    wg = tuple(W_STANDARD[order[i]] for i in range(4))
    wt = apply(word.inverse(), wg)
    if tuple(r[1] for r in wt) != vals:
        raise GasketError("internal check failed: curvatures do not match")

    a = vals[0]
    idx = next(i for i in range(4) if wt[i][1] == a)
    x = Fraction(wt[idx][2]) / a
    y = Fraction(wt[idx][3]) / a
    dx = -2 * math.floor((x + 1) / 2)
    dy = -2 * math.floor((y + 1) / 2)
    rows = tuple(translate_row(r, dx, dy) for r in wt)
    x += dx
    y += dy
    if x < 0:
        rows = tuple(reflect_row_x(r) for r in rows)
        x = -x
    if y < 0:
        rows = tuple(reflect_row_y(r) for r in rows)
        y = -y
    rows = canon_matrix(rows)
    if not (0 <= x <= 1 and 0 <= y <= 1):
        raise GasketError("internal check failed: center left the unit square")
    if not all(isinstance(v, int) for r in rows for v in r[1:]):
        raise GasketError("internal check failed: location is not strongly integral")
    if not validate_augmented(rows):
        raise GasketError("internal check failed: located matrix invalid")
    return rows


def unit_square_symmetries() -> Tuple[Tuple[Matrix, Tuple[int, int]], ...]:
    """Isometries preserving the standard super-packing that matter for
    uniqueness around the unit square: reflections combined with even
    translations up to one period in each direction."""
    out = []
    for sx in (1, -1):
        for sy in (1, -1):
            for tx in (-2, 0, 2):
                for ty in (-2, 0, 2):
                    if (sx, sy, tx, ty) == (1, 1, 0, 0):
                        continue
                    out.append((((sx, 0), (0, sy)), (tx, ty)))
    return tuple(out)
