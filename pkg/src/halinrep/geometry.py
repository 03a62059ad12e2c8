"""Exact intersection predicates for axis-parallel paths and representation checks.

Two independent routes decide whether a pair of shapes meets:

* the geometric oracle, which unfolds each shape into segments and compares
  segment pairs (``paths_touch``, ``paths_share_segment``, and the vectorised
  ``relation_matrix`` used for whole representations);
* the closed-form conditions on shape parameters (``*_condition_*``).

All arithmetic is exact.  The vectorised routes rescale coordinates to
integers by the least common denominator before handing them to numpy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

import numpy as np

from .errors import MissingShape
from .graph import Graph
from .shapes import CShape, GridSegment, LShape, OrthoPath, Segment, Shape, SShape, to_path

KIND_SHAPE = {"vpg-L": LShape, "epg-C": CShape, "epg-S": SShape, "vpg-seg": GridSegment}
KIND_BENDS = {"vpg-L": 1, "epg-C": 2, "epg-S": 2, "vpg-seg": 0}


@dataclass(frozen=True)
class Representation:
    """One shape per vertex.  ``kind`` is one of ``KIND_SHAPE``'s keys."""

    kind: str
    shapes: Mapping[int, Shape]
    scale_denominator: int = 1
    provenance: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in KIND_SHAPE:
            raise ValueError(f"unknown representation kind {self.kind!r}")

    @property
    def is_vpg(self) -> bool:
        return self.kind.startswith("vpg")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.kind == other.kind
            and dict(self.shapes) == dict(other.shapes)
            and self.scale_denominator == other.scale_denominator
            and dict(self.provenance) == dict(other.provenance)
        )

    def scaled(self, v: int) -> tuple[int, ...]:
        """Coordinates of ``v``'s shape multiplied by the scale denominator."""
        out = []
        for c in self.shapes[v].coords():
            s = c * self.scale_denominator
            if s.denominator != 1:
                raise ValueError(f"coordinate {c} of vertex {v} not on the 1/{self.scale_denominator} grid")
            out.append(s.numerator)
        return tuple(out)


# ---------------------------------------------------------------------------
# Geometric oracle: scalar
# ---------------------------------------------------------------------------


def _seg_touch(s: Segment, t: Segment) -> bool:
    o1, f1, lo1, hi1 = s
    o2, f2, lo2, hi2 = t
    if o1 == o2:
        return f1 == f2 and lo1 <= hi2 and lo2 <= hi1
    return lo1 <= f2 <= hi1 and lo2 <= f1 <= hi2


def _seg_share(s: Segment, t: Segment) -> bool:
    o1, f1, lo1, hi1 = s
    o2, f2, lo2, hi2 = t
    return o1 == o2 and f1 == f2 and min(hi1, hi2) > max(lo1, lo2)


def paths_touch(p: OrthoPath, q: OrthoPath) -> bool:
    """Whether the two paths have at least one point in common."""
    return any(_seg_touch(s, t) for s in p.segments() for t in q.segments())


def paths_share_segment(p: OrthoPath, q: OrthoPath) -> bool:
    """Whether the two paths overlap along a segment of positive length."""
    return any(_seg_share(s, t) for s in p.segments() for t in q.segments())


# ---------------------------------------------------------------------------
# Geometric oracle: all pairs at once
# ---------------------------------------------------------------------------


def _common_scale(values: Sequence[Fraction]) -> int:
    d = 1
    for v in values:
        d = d * v.denominator // math.gcd(d, v.denominator)
    return d


def relation_matrix(paths: Sequence[OrthoPath], share: bool) -> np.ndarray:
    """``M[i, j]`` is True iff paths ``i`` and ``j`` touch (or share a
    positive-length segment when ``share``)."""
    n = len(paths)
    segs: list[Segment] = []
    owner: list[int] = []
    for i, p in enumerate(paths):
        for s in p.segments():
            segs.append(s)
            owner.append(i)
    if not segs:
        return np.zeros((n, n), dtype=bool)
    scale = _common_scale([c for s in segs for c in s[1:]])
    arr = np.array([[int(c * scale) for c in s[1:]] for s in segs], dtype=object)
    if max(abs(int(x)) for x in arr.flat) < 2**62:
        arr = arr.astype(np.int64)
    vert = np.array([s[0] == "V" for s in segs])
    fixed, lo, hi = arr[:, 0], arr[:, 1], arr[:, 2]

    same = vert[:, None] == vert[None, :]
    collinear = same & (fixed[:, None] == fixed[None, :])
    if share:
        seg = collinear & (np.minimum(hi[:, None], hi[None, :]) > np.maximum(lo[:, None], lo[None, :]))
    else:
        closed = (lo[:, None] <= hi[None, :]) & (lo[None, :] <= hi[:, None])
        cross = (
            ~same
            & (lo[:, None] <= fixed[None, :])
            & (fixed[None, :] <= hi[:, None])
            & (lo[None, :] <= fixed[:, None])
            & (fixed[:, None] <= hi[None, :])
        )
        seg = (collinear & closed) | cross
    inc = np.zeros((len(segs), n), dtype=np.int32)
    inc[np.arange(len(segs)), owner] = 1
    return (inc.T @ seg.astype(np.int32) @ inc) > 0


# ---------------------------------------------------------------------------
# Closed-form conditions
# ---------------------------------------------------------------------------


def _overlaps(a1, b1, a2, b2) -> bool:
    return min(b1, b2) > max(a1, a2)


def lvpg_condition_intersect(u: LShape, v: LShape) -> bool:
    """The corner of one L lies on the other L's span, read per leg."""
    return (v.l_x <= u.l_x <= v.r_x and u.l_y <= v.l_y <= u.r_y) or (
        u.l_x <= v.l_x <= u.r_x and v.l_y <= u.l_y <= v.r_y
    )


def cepg_condition_share(u: CShape, v: CShape) -> bool:
    return (
        (u.l_y == v.l_y and _overlaps(u.l_x, u.p_x, v.l_x, v.p_x))
        or (u.r_y == v.r_y and _overlaps(u.l_x, u.q_x, v.l_x, v.q_x))
        or (u.l_y == v.r_y and _overlaps(u.l_x, u.p_x, v.l_x, v.q_x))
        or (v.l_y == u.r_y and _overlaps(v.l_x, v.p_x, u.l_x, u.q_x))
        or (u.l_x == v.l_x and _overlaps(u.l_y, u.r_y, v.l_y, v.r_y))
    )


def sepg_condition_share(u: SShape, v: SShape) -> bool:
    return (
        (u.l_y == v.l_y and _overlaps(u.l_x, u.m_x, v.l_x, v.m_x))
        or (u.r_y == v.r_y and _overlaps(u.m_x, u.r_x, v.m_x, v.r_x))
        or (u.l_y == v.r_y and _overlaps(u.l_x, u.m_x, v.m_x, v.r_x))
        or (v.l_y == u.r_y and _overlaps(v.l_x, v.m_x, u.m_x, u.r_x))
        or (u.m_x == v.m_x and _overlaps(u.l_y, u.r_y, v.l_y, v.r_y))
    )


def _columns(shapes: Sequence[Shape]) -> dict[str, np.ndarray]:
    names = type(shapes[0]).field_names
    scale = _common_scale([c for s in shapes for c in s.coords()])
    table = np.array([[int(c * scale) for c in s.coords()] for s in shapes], dtype=np.int64)
    return {name: table[:, i] for i, name in enumerate(names)}


def _col(a: np.ndarray) -> np.ndarray:
    return a[:, None]


def _row(a: np.ndarray) -> np.ndarray:
    return a[None, :]


def _ov(a1, b1, a2, b2) -> np.ndarray:
    return np.minimum(b1, b2) > np.maximum(a1, a2)


def condition_matrix(shapes: Sequence[Shape]) -> np.ndarray:
    """Pairwise closed-form verdicts for same-type shapes (L, C or S)."""
    n = len(shapes)
    if n == 0:
        return np.zeros((0, 0), dtype=bool)
    kind = type(shapes[0])
    if any(type(s) is not kind for s in shapes):
        raise TypeError("condition_matrix needs shapes of a single type")
    c = _columns(shapes)
    if kind is LShape:
        lx, rx, ly, ry = c["l_x"], c["r_x"], c["l_y"], c["r_y"]
        one = (_row(lx) <= _col(lx)) & (_col(lx) <= _row(rx)) & (_col(ly) <= _row(ly)) & (_row(ly) <= _col(ry))
        return one | one.T
    if kind is CShape:
        lx, px, qx, ly, ry = c["l_x"], c["p_x"], c["q_x"], c["l_y"], c["r_y"]
        c1 = (_col(ly) == _row(ly)) & _ov(_col(lx), _col(px), _row(lx), _row(px))
        c2 = (_col(ry) == _row(ry)) & _ov(_col(lx), _col(qx), _row(lx), _row(qx))
        c3 = (_col(ly) == _row(ry)) & _ov(_col(lx), _col(px), _row(lx), _row(qx))
        c5 = (_col(lx) == _row(lx)) & _ov(_col(ly), _col(ry), _row(ly), _row(ry))
        return c1 | c2 | c3 | c3.T | c5
    if kind is SShape:
        lx, mx, rx, ly, ry = c["l_x"], c["m_x"], c["r_x"], c["l_y"], c["r_y"]
        c1 = (_col(ly) == _row(ly)) & _ov(_col(lx), _col(mx), _row(lx), _row(mx))
        c2 = (_col(ry) == _row(ry)) & _ov(_col(mx), _col(rx), _row(mx), _row(rx))
        c3 = (_col(ly) == _row(ry)) & _ov(_col(lx), _col(mx), _row(mx), _row(rx))
        c5 = (_col(mx) == _row(mx)) & _ov(_col(ly), _col(ry), _row(ly), _row(ry))
        return c1 | c2 | c3 | c3.T | c5
    raise TypeError(f"no closed-form conditions for {kind.__name__}")


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


@dataclass
class VerifyReport:
    """Pairwise verdicts of a representation against its graph."""

    vertices: list[int]
    expected: np.ndarray
    got: np.ndarray
    bend_violations: list[int]
    type_violations: list[int]

    @property
    def pair_count(self) -> int:
        n = len(self.vertices)
        return n * (n - 1) // 2

    @property
    def intersecting(self) -> int:
        return int(np.triu(self.got, 1).sum())

    @property
    def mismatches(self) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self.expected != self.got, 1))
        return [(self.vertices[i], self.vertices[j]) for i, j in zip(iu, ju)]

    @property
    def passed(self) -> bool:
        return not self.bend_violations and not self.type_violations and not self.mismatches

    def lines(self) -> Iterator[str]:
        n = len(self.vertices)
        for i in range(n):
            for j in range(i + 1, n):
                e, g = int(self.expected[i, j]), int(self.got[i, j])
                yield f"{self.vertices[i]} {self.vertices[j]} expected={e} got={g} {'OK' if e == g else 'MISMATCH'}"

    def to_text(self) -> str:
        return "".join(line + "\n" for line in self.lines())


def verify_representation(g: Graph, rep: Representation) -> VerifyReport:
    """Compare the geometric relation of ``rep`` with the edges of ``g``.

    VPG kinds use "touch", EPG kinds use "share a positive-length segment".
    A path over the kind's bend bound, or a shape of the wrong type, fails the
    report regardless of the pairwise verdicts.
    """
    missing = [v for v in range(g.n) if v not in rep.shapes]
    if missing:
        raise MissingShape(f"no shape for vertices {missing}")
    vertices = list(range(g.n))
    paths = [to_path(rep.shapes[v]) for v in vertices]
    want = KIND_SHAPE[rep.kind]
    bend_bad = [v for v, p in zip(vertices, paths) if p.bend_count > KIND_BENDS[rep.kind]]
    type_bad = [v for v in vertices if type(rep.shapes[v]) is not want]
    got = relation_matrix(paths, share=not rep.is_vpg)
    expected = np.zeros((g.n, g.n), dtype=bool)
    for u, v in g.edges():
        expected[u, v] = expected[v, u] = True
    np.fill_diagonal(got, False)
    return VerifyReport(vertices, expected, got, bend_bad, type_bad)
