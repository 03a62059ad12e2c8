"""Structural facts the layouts rely on, checked on concrete instances.

Each check returns an :class:`ObservationResult` listing the offending
vertices or pairs.  Pair checks are vectorised: coordinates are pulled into
integer arrays (scaled by the representation's denominator) and compared
as ``n x n`` matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import Representation
from .graph import RootedTree, TucDecomposition, check_consecutive
from .rooting import EpgFrame, VpgFrame, make_epg_frame, make_vpg_frame, wheel_epg_frame, wheel_vpg_frame
from .epg import build_c_epg
from .vpg import build_lvpg


@dataclass
class ObservationResult:
    name: str
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.passed:
            return f"{self.name}: ok"
        shown = "; ".join(self.violations[:5])
        more = f" (+{len(self.violations) - 5} more)" if len(self.violations) > 5 else ""
        return f"{self.name}: {len(self.violations)} violations: {shown}{more}"


def _result(name: str, bad: np.ndarray, what: str = "pair") -> ObservationResult:
    idx = np.argwhere(bad)
    return ObservationResult(name, [f"{what} {' '.join(map(str, row))}" for row in idx.tolist()])


# ---------------------------------------------------------------------------
# shared arrays


def _coords(rep: Representation, n: int) -> dict[str, np.ndarray]:
    """Scaled integer coordinate columns, one entry per vertex id."""
    names = type(next(iter(rep.shapes.values()))).field_names
    cols = {name: np.zeros(n, dtype=np.int64) for name in names}
    for v in range(n):
        for name, value in zip(names, rep.scaled(v)):
            cols[name][v] = value
    return cols


def _relations(t: RootedTree) -> tuple[np.ndarray, np.ndarray]:
    """``anc[u, v]``: u is a proper ancestor of v; ``par[u, v]``: u is v's parent."""
    tin = np.array(t.tin)
    tout = np.array(t.tout)
    anc = (tin[:, None] <= tin[None, :]) & (tout[None, :] <= tout[:, None])
    np.fill_diagonal(anc, False)
    n = len(tin)
    par = np.zeros((n, n), dtype=bool)
    for v, p in enumerate(t.parent):
        if p is not None:
            par[p, v] = True
    return anc, par


def _leaf_mask(d: TucDecomposition) -> np.ndarray:
    leaf = np.zeros(d.graph.n, dtype=bool)
    leaf[list(d.cycle)] = True
    return leaf


def _cycle_neighbours(d: TucDecomposition) -> np.ndarray:
    n, k = d.graph.n, d.k
    cons = np.zeros((n, n), dtype=bool)
    for j in range(k):
        a, b = d.cycle[j], d.cycle[(j + 1) % k]
        cons[a, b] = cons[b, a] = True
    return cons


def _within(x: np.ndarray, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """``[u, v]``: ``x[v]`` lies in ``[lo[u], hi[u]]``."""
    return (lo[:, None] <= x[None, :]) & (x[None, :] <= hi[:, None])


def _positive_overlap(a1: np.ndarray, b1: np.ndarray, a2: np.ndarray, b2: np.ndarray) -> np.ndarray:
    """``[u, v]``: ``[a1[u], b1[u]]`` and ``[a2[v], b2[v]]`` share more than a point."""
    return np.minimum(b1[:, None], b2[None, :]) > np.maximum(a1[:, None], a2[None, :])


# ---------------------------------------------------------------------------
# frame facts


def vpg_frame_observations(frame: VpgFrame) -> list[ObservationResult]:
    t, b, rp = frame.tree, frame.b, frame.r_prime
    one_leaf = ObservationResult("single leaf below the base-pair paths")
    for leaf in (b[0], b[1]):
        for w in t.path(leaf, rp)[1:-1]:
            if t.leaf_mask[w].bit_count() != 1:
                one_leaf.violations.append(f"vertex {w} on the path from {leaf}")
    linear = ObservationResult("leaf sets consecutive in the b-order")
    if not check_consecutive(t, cyclic=False):
        linear.violations.append("some leaf set is not a run")
    return [one_leaf, linear]


def epg_frame_observations(frame: EpgFrame) -> list[ObservationResult]:
    t, d = frame.tree, frame.decomposition
    linear = ObservationResult("leaf sets consecutive in the a-order")
    if not check_consecutive(t, cyclic=False):
        linear.violations.append("some leaf set is not a run")
    root_parent = ObservationResult("root is the parent of a_0")
    if t.parent[frame.a[0]] != frame.r:
        root_parent.violations.append(f"parent of {frame.a[0]} is {t.parent[frame.a[0]]}")
    last_parent = ObservationResult("parent of a_(k-1) is the root or has degree two")
    ap = frame.a_prime
    if ap != t.parent[frame.a[-1]]:
        last_parent.violations.append(f"a' = {ap} is not the parent of {frame.a[-1]}")
    if ap != frame.r and d.tree_degree(ap) != 2:
        last_parent.violations.append(f"a' = {ap} has tree degree {d.tree_degree(ap)}")
    return [linear, root_parent, last_parent]


# ---------------------------------------------------------------------------
# L-shaped layout


def lvpg_observations(frame: VpgFrame, rep: Representation) -> list[ObservationResult]:
    d, t = frame.decomposition, frame.tree
    n = d.graph.n
    c = _coords(rep, n)
    lx, rx, ly, ry = c["l_x"], c["r_x"], c["l_y"], c["r_y"]
    anc, par = _relations(t)
    leaf = _leaf_mask(d)
    internal = ~leaf
    incomparable = ~anc & ~anc.T & ~np.eye(n, dtype=bool)
    out = []

    # leaf sets form runs when leaves are sorted by corner x
    leaves = np.flatnonzero(leaf)
    by_x = leaves[np.argsort(lx[leaves], kind="stable")]
    ids = np.flatnonzero(internal)
    inside = anc[np.ix_(ids, by_x)]
    starts = np.diff(inside.astype(np.int8), axis=1, prepend=0) == 1
    split = ids[starts.sum(axis=1) > 1]
    out.append(ObservationResult("leaf sets are runs in corner-x order", [f"vertex {u}" for u in split]))

    ly_in_u = _within(ly, ly, ry)  # [u, v]: ly[v] in [ly[u], ry[u]]
    lx_in_u = _within(lx, lx, rx)
    out.append(_result("descendant corner y outside ancestor's leg", anc & ly_in_u))
    out.append(_result("descendant corner x inside ancestor's bar", anc & ~lx_in_u))
    out.append(_result("ancestor corner y on descendant's leg iff parent", anc & (ly_in_u.T != par)))

    iu = internal[:, None] & leaf[None, :]
    out.append(_result("leaf corner y outside internal leg", iu & ly_in_u))
    out.append(_result("leaf corner x inside internal bar iff ancestor", iu & (lx_in_u != anc)))

    both = internal[:, None] & internal[None, :] & incomparable
    disjoint = (rx[:, None] < lx[None, :]) | (rx[None, :] < lx[:, None])
    out.append(_result("incomparable internal bars are disjoint", both & ~disjoint))

    ll = leaf[:, None] & leaf[None, :] & ~np.eye(n, dtype=bool)
    meet = (lx_in_u.T & ly_in_u) | (lx_in_u & ly_in_u.T)
    out.append(_result("leaves meet iff consecutive", ll & (meet != _cycle_neighbours(d))))

    same_x = (lx[:, None] == lx[None, :]) & ll
    out.append(_result("leaf corner x values distinct", same_x))
    return out


# ---------------------------------------------------------------------------
# C-shaped layout


def cepg_observations(frame: EpgFrame, rep: Representation) -> list[ObservationResult]:
    d, t = frame.decomposition, frame.tree
    n = d.graph.n
    c = _coords(rep, n)
    lx, px, qx, ly, ry = c["l_x"], c["p_x"], c["q_x"], c["l_y"], c["r_y"]
    anc, par = _relations(t)
    leaf = _leaf_mask(d)
    internal = ~leaf
    a0, alast, r = frame.a[0], frame.a[-1], frame.r
    out = []

    ends = np.zeros(n, dtype=bool)
    ends[[a0, alast]] = True
    is_root = np.arange(n) == r
    is_last = np.arange(n) == alast

    case_a = par & ~ends[None, :]
    ok_a = (ly[:, None] == ry[None, :]) & _positive_overlap(lx, px, lx, qx)
    out.append(_result("parent bottom arm on child top arm", case_a & ~ok_a))

    case_b = par & ends[None, :] & is_root[:, None]
    ok_b = (ry[:, None] == ry[None, :]) & _positive_overlap(lx, qx, lx, qx)
    out.append(_result("root top arm on end-leaf top arm", case_b & ~ok_b))

    case_c = par & is_last[None, :] & ~is_root[:, None]
    ok_c = (ly[:, None] == ly[None, :]) & _positive_overlap(lx, px, lx, px)
    out.append(_result("a' bottom arm on last leaf bottom arm", case_c & ~ok_c))

    incomparable = internal[:, None] & ~anc & ~anc.T & ~np.eye(n, dtype=bool)
    closed_meet = np.minimum(px[:, None], px[None, :]) >= np.maximum(lx[:, None], lx[None, :])
    out.append(_result("incomparable bottom ranges disjoint", incomparable & closed_meet))
    reach = np.maximum(px, qx)
    wide_meet = np.minimum(reach[:, None], reach[None, :]) >= np.maximum(lx[:, None], lx[None, :])
    not_a0 = np.arange(n) != a0
    out.append(_result("incomparable full ranges disjoint", incomparable & not_a0[None, :] & wide_meet))

    cons = _cycle_neighbours(d)
    share = ((ly[:, None] == ly[None, :]) & _positive_overlap(lx, px, lx, px)) | (
        (ry[:, None] == ry[None, :]) & _positive_overlap(lx, qx, lx, qx)
    )
    out.append(_result("consecutive leaves share an arm", cons & ~share))
    return out


# ---------------------------------------------------------------------------
# everything at once


def all_observations(d: TucDecomposition) -> list[ObservationResult]:
    """Build both frames and the L and C layouts of ``d`` and check them all."""
    wheel = len(d.internal) == 1
    vf = wheel_vpg_frame(d) if wheel else make_vpg_frame(d)
    ef = wheel_epg_frame(d) if wheel else make_epg_frame(d)
    results = vpg_frame_observations(vf) + epg_frame_observations(ef)
    results += lvpg_observations(vf, build_lvpg(vf))
    results += cepg_observations(ef, build_c_epg(ef))
    return results

