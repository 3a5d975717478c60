"""JSON-friendly exact serialization of rationals, circles and matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Sequence

from .core import Circle, GasketError, Matrix, Row, Scalar, canon, canon_matrix
from .group import GroupWord
from .packing import PackedCircle


def scalar_to_str(x: Scalar) -> str:
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def scalar_from_str(s: str) -> Scalar:
    try:
        return canon(Fraction(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise GasketError(f"cannot parse rational {s!r}") from exc


def circle_to_json(c: Circle) -> Dict[str, str]:
    return {
        "bbar": scalar_to_str(c.cocurvature),
        "b": scalar_to_str(c.curvature),
        "bx": scalar_to_str(c.cx),
        "by": scalar_to_str(c.cy),
    }


def circle_from_json(d: Dict[str, Any]) -> Circle:
    try:
        vals = [scalar_from_str(str(d[k])) for k in ("bbar", "b", "bx", "by")]
    except KeyError as exc:
        raise GasketError(f"circle object missing key {exc}") from exc
    except TypeError as exc:
        raise GasketError(
            "circle must be an object with keys bbar, b, bx, by") from exc
    return Circle(*vals).validate()


def packed_to_json(pc: PackedCircle) -> Dict[str, Any]:
    out = circle_to_json(pc.circle)
    out["depth"] = pc.depth
    out["witness"] = pc.witness.text
    return out


def matrix_to_json(m: Matrix) -> List[List[str]]:
    return [[scalar_to_str(x) for x in row] for row in m]


def matrix_from_json(rows: Sequence[Sequence[Any]]) -> Matrix:
    return canon_matrix([[scalar_from_str(str(x)) for x in row]
                         for row in rows])
