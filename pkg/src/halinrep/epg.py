"""2-bend EPG representations with C-shaped or S-shaped paths."""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateHeight
from .geometry import Representation
from .graph import TucDecomposition
from .rooting import EpgFrame, make_epg_frame, wheel_epg_frame
from .shapes import CShape, SShape


def _provenance(frame: EpgFrame) -> dict[str, str]:
    prov = {
        "root": str(frame.r),
        "a_prime": str(frame.a_prime),
        "order": " ".join(map(str, frame.a)),
    }
    if frame.vpg is not None:
        d = frame.decomposition
        i, k = frame.vpg.i, d.k
        prov["base_pair"] = f"{d.cycle[i]} {d.cycle[(i + 1) % k]}"
    return prov


def build_c_epg(frame: EpgFrame) -> Representation:
    """C-shaped layout with ``eps = 1/4``.

    Leaves ``a_1..a_{k-2}`` stand side by side with overlapping bottom arms;
    ``a_0`` and ``a_{k-1}`` reach up to the top row, where the root's top arm
    meets them.  Each other internal vertex sits one row above its children
    with its bottom arm covering the top arms of its children.
    """
    t = frame.tree
    a, r, ap = frame.a, frame.r, frame.a_prime
    k = len(a)
    h = t.hmax
    eps = Fraction(1, 4)
    shapes: dict[int, CShape] = {}

    for i in range(1, k - 1):
        shapes[a[i]] = CShape(i, i + 1 + eps, i + 3 * eps, 0, h - t.height[a[i]] + 1)
    shapes[a[0]] = CShape(0, 1 + eps, k - 1 + eps, 0, h + 1)
    shapes[a[-1]] = CShape(k - 1, k + eps, k - 1 + eps, 0, h + 1)

    for v in frame.decomposition.internal:
        if v in (r, ap):
            continue
        pos = t.leaf_positions(v)
        level = h - t.height[v]
        shapes[v] = CShape(min(pos) + 2 * eps, max(pos) + 3 * eps, min(pos) + 3 * eps, level, level + 1)

    if ap != r:
        shapes[ap] = CShape(k - 1 + 2 * eps, k - 1 + 3 * eps, k - 1 + 3 * eps, 0, h - t.height[ap] + 1)
        shapes[r] = CShape(2 * eps, k - 1 + 3 * eps, 1, h, h + 1)
    else:
        shapes[r] = CShape(2 * eps, k - 1 + 3 * eps, k - 1 + eps, h, h + 1)

    return Representation("epg-C", shapes, 4, _provenance(frame))


def _last_leaf_path(frame: EpgFrame) -> list[int]:
    """Vertices strictly between ``a'`` and the root, bottom first."""
    t, r, ap = frame.tree, frame.r, frame.a_prime
    if ap == r:
        return []
    path = []
    w = t.parent[ap]
    while w != r:
        path.append(w)
        w = t.parent[w]
    return path


def build_s_epg(frame: EpgFrame, verbatim: bool = False) -> Representation:
    """S-shaped layout with ``eps = 1/(2h)``.

    The vertical leg of an internal vertex is shifted right by a multiple of
    ``eps`` that shrinks with depth, keeping nested vertices' legs apart.

    When ``a'`` is not the root and the tree path from ``a'`` up to the root
    has vertices in between, the depth rule puts the leg of the topmost one
    at ``k-1+(h-1)*eps``, right of where the root's bottom arm ends, and the
    root loses that child.  Unless ``verbatim`` is set, those in-between
    vertices get their legs spaced evenly inside ``(k-1+eps, k-1+2*eps)``
    instead, on a grid refined by their count.  In a Halin graph ``a'`` is
    always the root, so Halin layouts are never touched.
    """
    t = frame.tree
    a, r, ap = frame.a, frame.r, frame.a_prime
    k = len(a)
    h = t.hmax
    if h == 0:
        raise DegenerateHeight("tree of height zero")
    eps = Fraction(1, 2 * h)
    shapes: dict[int, SShape] = {}

    for i in range(1, k - 1):
        shapes[a[i]] = SShape(i - 1 - eps, i, i + 1 - eps, 0, h - t.height[a[i]] + 1)
    shapes[a[0]] = SShape(-eps, 0, k - 1 + 3 * eps, 0, h + 1)
    shapes[a[-1]] = SShape(k - 2 - eps, k - 1, k - 1 + eps, 0, h + 1)

    for v in frame.decomposition.internal:
        if v in (r, ap):
            continue
        pos = t.leaf_positions(v)
        level = h - t.height[v]
        shapes[v] = SShape(min(pos), max(pos) + level * eps, max(pos) + 1 - eps, level, level + 1)

    if ap != r:
        shapes[ap] = SShape(k - 1 - eps, k - 1 + eps, k - 1 + 2 * eps, 0, h - t.height[ap] + 1)
        shapes[r] = SShape(eps, k - 1 + 2 * eps, k - 1 + 3 * eps, h, h + 1)
    else:
        shapes[r] = SShape(eps, k - 1 - eps, k - 1 + eps, h, h + 1)

    scale = 2 * h
    chain = [] if verbatim else _last_leaf_path(frame)
    if chain:
        step = eps / (len(chain) + 1)
        for idx, w in enumerate(chain, start=1):
            old = shapes[w]
            shapes[w] = SShape(old.l_x, k - 1 + eps + idx * step, old.r_x, old.l_y, old.r_y)
        scale *= len(chain) + 1

    for s in shapes.values():
        assert s.l_x < s.m_x < s.r_x, f"S-shape with a degenerate arm: {s}"
    prov = _provenance(frame)
    if chain:
        prov["respaced"] = " ".join(map(str, chain))
    return Representation("epg-S", shapes, scale, prov)


def build_epg_wheel(d: TucDecomposition, kind: str, verbatim: bool = False) -> Representation:
    """Wheels reuse the general layouts with the hub as root."""
    frame = wheel_epg_frame(d)
    if kind == "C":
        return build_c_epg(frame)
    if kind == "S":
        return build_s_epg(frame, verbatim)
    raise ValueError(f"kind must be 'C' or 'S', got {kind!r}")


def c_epg_representation(d: TucDecomposition) -> Representation:
    if len(d.internal) == 1:
        return build_epg_wheel(d, "C")
    return build_c_epg(make_epg_frame(d))


def s_epg_representation(d: TucDecomposition, verbatim: bool = False) -> Representation:
    if len(d.internal) == 1:
        return build_epg_wheel(d, "S", verbatim)
    return build_s_epg(make_epg_frame(d), verbatim)
