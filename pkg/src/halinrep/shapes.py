"""Axis-parallel path shapes with exact rational coordinates."""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from typing import ClassVar, Union

from .errors import DegenerateShape

Point = tuple[Fraction, Fraction]
Segment = tuple[str, Fraction, Fraction, Fraction]  # (orientation, fixed, lo, hi)


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class OrthoPath:
    """Polyline of alternating horizontal and vertical segments."""

    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        pts = tuple((_q(x), _q(y)) for x, y in self.vertices)
        object.__setattr__(self, "vertices", pts)
        if len(pts) < 2:
            raise DegenerateShape("a path needs at least two points")
        last = None
        for (x1, y1), (x2, y2) in zip(pts, pts[1:]):
            if (x1 == x2) == (y1 == y2):
                raise DegenerateShape(f"segment {(x1, y1)}-{(x2, y2)} is not axis-parallel or has zero length")
            orient = "V" if x1 == x2 else "H"
            if orient == last:
                raise DegenerateShape("consecutive segments share an orientation")
            last = orient

    @property
    def bend_count(self) -> int:
        return len(self.vertices) - 2

    def segments(self) -> list[Segment]:
        out = []
        for (x1, y1), (x2, y2) in zip(self.vertices, self.vertices[1:]):
            if x1 == x2:
                out.append(("V", x1, min(y1, y2), max(y1, y2)))
            else:
                out.append(("H", y1, min(x1, x2), max(x1, x2)))
        return out


def _polyline(points: list[Point], allow_collapse: bool) -> OrthoPath:
    pts = [points[0]]
    for p in points[1:]:
        if p == pts[-1]:
            if not allow_collapse:
                raise DegenerateShape(f"zero-length leg at {p}")
            continue
        pts.append(p)
    if len(pts) < 2:
        raise DegenerateShape("shape collapses to a point")
    return OrthoPath(tuple(pts))


class _Shape:
    field_names: ClassVar[tuple[str, ...]]

    def __post_init__(self) -> None:
        for f in fields(self):
            object.__setattr__(self, f.name, _q(getattr(self, f.name)))

    def coords(self) -> tuple[Fraction, ...]:
        return tuple(getattr(self, name) for name in self.field_names)


@dataclass(frozen=True)
class LShape(_Shape):
    """Vertical leg at ``x = l_x`` over ``[l_y, r_y]`` and horizontal leg at
    ``y = l_y`` over ``[l_x, r_x]``; the corner sits at ``(l_x, l_y)``.

    A leg may have zero length (a vertex with a single descendant leaf gets
    ``l_x == r_x``); the point set is then a plain segment.
    """

    l_x: Fraction
    r_x: Fraction
    l_y: Fraction
    r_y: Fraction

    field_names: ClassVar[tuple[str, ...]] = ("l_x", "r_x", "l_y", "r_y")

    def to_path(self) -> OrthoPath:
        if self.r_x < self.l_x or self.r_y < self.l_y:
            raise DegenerateShape(f"inverted L {self}")
        return _polyline(
            [(self.l_x, self.r_y), (self.l_x, self.l_y), (self.r_x, self.l_y)], allow_collapse=True
        )


@dataclass(frozen=True)
class CShape(_Shape):
    """Vertical leg at ``x = l_x``; bottom arm to ``p_x`` at ``y = l_y``,
    top arm to ``q_x`` at ``y = r_y``.  Opens to the right."""

    l_x: Fraction
    p_x: Fraction
    q_x: Fraction
    l_y: Fraction
    r_y: Fraction

    field_names: ClassVar[tuple[str, ...]] = ("l_x", "p_x", "q_x", "l_y", "r_y")

    def to_path(self) -> OrthoPath:
        if not (self.l_x < min(self.p_x, self.q_x) and self.l_y < self.r_y):
            raise DegenerateShape(f"degenerate C {self}")
        return _polyline(
            [(self.p_x, self.l_y), (self.l_x, self.l_y), (self.l_x, self.r_y), (self.q_x, self.r_y)],
            allow_collapse=False,
        )


@dataclass(frozen=True)
class SShape(_Shape):
    """Bottom arm ``[l_x, m_x]`` at ``y = l_y``, vertical leg at ``x = m_x``,
    top arm ``[m_x, r_x]`` at ``y = r_y``."""

    l_x: Fraction
    m_x: Fraction
    r_x: Fraction
    l_y: Fraction
    r_y: Fraction

    field_names: ClassVar[tuple[str, ...]] = ("l_x", "m_x", "r_x", "l_y", "r_y")

    def to_path(self) -> OrthoPath:
        if not (self.l_x < self.m_x < self.r_x and self.l_y < self.r_y):
            raise DegenerateShape(f"degenerate S {self}")
        return _polyline(
            [(self.l_x, self.l_y), (self.m_x, self.l_y), (self.m_x, self.r_y), (self.r_x, self.r_y)],
            allow_collapse=False,
        )


@dataclass(frozen=True)
class GridSegment(_Shape):
    """A 0-bend path: ``orientation`` is ``"H"`` (``fixed`` is y) or ``"V"``."""

    orientation: str
    fixed: Fraction
    lo: Fraction
    hi: Fraction

    field_names: ClassVar[tuple[str, ...]] = ("fixed", "lo", "hi")

    def __post_init__(self) -> None:
        if self.orientation not in ("H", "V"):
            raise ValueError(f"orientation must be H or V, got {self.orientation!r}")
        for name in self.field_names:
            object.__setattr__(self, name, _q(getattr(self, name)))

    def to_path(self) -> OrthoPath:
        if not self.lo < self.hi:
            raise DegenerateShape(f"degenerate segment {self}")
        if self.orientation == "H":
            return OrthoPath(((self.lo, self.fixed), (self.hi, self.fixed)))
        return OrthoPath(((self.fixed, self.lo), (self.fixed, self.hi)))


Shape = Union[LShape, CShape, SShape, GridSegment]


def to_path(shape: Shape | OrthoPath) -> OrthoPath:
    if isinstance(shape, OrthoPath):
        return shape
    return shape.to_path()
