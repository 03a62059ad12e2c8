"""L-shaped 1-bend VPG representations of tree-union-cycle graphs."""

from __future__ import annotations

from fractions import Fraction

from .geometry import Representation
from .graph import TucDecomposition
from .rooting import VpgFrame, make_vpg_frame, wheel_vpg_frame
from .shapes import LShape

def _leaf_lx(j: int, k: int) -> Fraction:
    if j == 0:
        return Fraction(3, 2)
    if j == 1:
        return Fraction(1)
    return Fraction(j)


def build_lvpg(frame: VpgFrame) -> Representation:
    """Place every vertex as an L whose corner is its lower-left point.

    Leaves sit in a row ordered by ``frame.b``; each internal vertex gets a
    horizontal bar one unit above its children spanning the corners of its
    descendant leaves, so only parent/child pairs and consecutive leaves meet.
    """
    t = frame.tree
    b = frame.b
    k = len(b)
    h = t.hmax
    shapes: dict[int, LShape] = {}

    for j, leaf in enumerate(b):
        top = h - t.height[leaf] + 2
        if j == 0:
            shapes[leaf] = LShape(Fraction(3, 2), k - 1, 0, top)
        elif j == 1:
            shapes[leaf] = LShape(1, 2, 1, top)
        elif j == k - 1:
            shapes[leaf] = LShape(k - 1, k, 0, top)
        else:
            shapes[leaf] = LShape(j, j + 1, 1, top)

    for v in frame.decomposition.internal:
        xs = [_leaf_lx(j, k) for j in t.leaf_positions(v)]
        level = h - t.height[v]
        shapes[v] = LShape(min(xs), max(xs), level + 1, level + 2)

    return Representation(
        kind="vpg-L",
        shapes=shapes,
        scale_denominator=2,
        provenance=_provenance(frame),
    )


def _provenance(frame: VpgFrame) -> dict[str, str]:
    d = frame.decomposition
    k = d.k
    return {
        "root": str(frame.r_prime),
        "base_pair": f"{d.cycle[frame.i]} {d.cycle[(frame.i + 1) % k]}",
        "order": " ".join(map(str, frame.b)),
    }


def build_lvpg_wheel(d: TucDecomposition) -> Representation:
    """Wheels take the same layout with the hub as root and any starting leaf."""
    return build_lvpg(wheel_vpg_frame(d))


def lvpg_representation(d: TucDecomposition) -> Representation:
    if len(d.internal) == 1:
        return build_lvpg_wheel(d)
    return build_lvpg(make_vpg_frame(d))
