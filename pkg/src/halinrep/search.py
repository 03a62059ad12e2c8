"""Exhaustive search for 0-bend VPG representations on a bounded grid.

Every vertex becomes a horizontal or vertical segment with integer endpoints
in ``0..grid-1``; two segments must touch exactly when their vertices are
adjacent.  Only the relative order of the endpoint coordinates on each axis
matters for which segments touch, and a graph on ``n`` vertices has at most
``2n`` distinct endpoint values per axis.  Ranking those values therefore
maps any representation onto the ``2n``-point grid without changing the
intersection pattern, so ``grid = 2n`` makes the search complete.

The search is plain backtracking with forward checking.  Candidate segments
are enumerated once; the "touches" relation between candidates is stored as
one packed bitmask per candidate, and each unplaced vertex keeps a bitmask
domain that is narrowed after every placement.  The inner loop is compiled
with numba; Python drives it once per placement of the first vertex, which
is also where progress is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from numba import njit

from .errors import GridTooSmall
from .geometry import Representation, verify_representation
from .graph import Graph
from .shapes import GridSegment

SAT = "SAT"
UNSAT = "UNSAT"
ABORTED = "Aborted"

DEFAULT_BUDGET = 10**10

Progress = Callable[[int, int], None]


@dataclass
class SearchOutcome:
    status: str
    witness: dict[int, GridSegment] | None = None
    nodes_explored: int = 0
    order: list[int] = field(default_factory=list)

    def representation(self) -> Representation | None:
        if self.witness is None:
            return None
        return Representation("vpg-seg", dict(self.witness), 1)


def normalize_grid_bound(n: int) -> int:
    """Number of coordinate values per axis that suffices for ``n`` segments."""
    if n < 1:
        raise ValueError("n must be positive")
    return 2 * n


def candidate_segments(grid: int) -> list[tuple[str, int, int, int]]:
    """All ``(orientation, fixed, lo, hi)`` with ``0 <= lo < hi < grid``."""
    return [
        (o, f, lo, hi)
        for o in ("H", "V")
        for f in range(grid)
        for lo in range(grid)
        for hi in range(lo + 1, grid)
    ]


def touch_matrix(cands: Sequence[tuple[str, int, int, int]]) -> np.ndarray:
    """Boolean matrix: entry ``[i, j]`` says candidates ``i`` and ``j`` touch."""
    vert = np.array([c[0] == "V" for c in cands])
    fixed = np.array([c[1] for c in cands])
    lo = np.array([c[2] for c in cands])
    hi = np.array([c[3] for c in cands])
    same = vert[:, None] == vert[None, :]
    par = same & (fixed[:, None] == fixed[None, :]) & (lo[:, None] <= hi[None, :]) & (lo[None, :] <= hi[:, None])
    perp = (
        ~same
        & (lo[:, None] <= fixed[None, :])
        & (fixed[None, :] <= hi[:, None])
        & (lo[None, :] <= fixed[:, None])
        & (fixed[:, None] <= hi[None, :])
    )
    return par | perp


def _pack(rows: np.ndarray) -> np.ndarray:
    """Pack boolean rows into little-endian ``uint64`` words."""
    rows = np.atleast_2d(rows)
    words = (rows.shape[1] + 63) // 64
    padded = np.zeros((rows.shape[0], words * 64), dtype=bool)
    padded[:, : rows.shape[1]] = rows
    return np.packbits(padded, axis=1, bitorder="little").view(np.uint64)


# ---------------------------------------------------------------------------
# compiled core


@njit(cache=True)
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(cache=True)
def _members(dom, out):
    count = 0
    for w in range(dom.shape[0]):
        x = dom[w]
        while x:
            low = x & (~x + np.uint64(1))
            out[count] = w * 64 + np.int64(_popcount(low - np.uint64(1)))
            count += 1
            x ^= low
    return count


@njit(cache=True)
def _dfs(touch, apart, adj, init, budget, choice):
    """Depth-first search with forward checking over packed domains.

    Returns ``(status, nodes)`` with status 1 for SAT (``choice`` filled),
    0 for UNSAT and 2 when ``budget`` nodes were expanded first.
    """
    n, words = init.shape
    doms = np.zeros((n + 1, n, words), dtype=np.uint64)
    doms[0] = init
    cand = np.empty((n, touch.shape[0]), dtype=np.int64)
    count = np.zeros(n, dtype=np.int64)
    cursor = np.zeros(n, dtype=np.int64)
    nodes = 0
    d = 0
    count[0] = _members(doms[0, 0], cand[0])
    while True:
        if cursor[d] == count[d]:
            if d == 0:
                return 0, nodes
            d -= 1
            continue
        if nodes == budget:
            return 2, nodes
        c = cand[d, cursor[d]]
        cursor[d] += 1
        nodes += 1
        ok = True
        for u in range(d + 1, n):
            mask = touch[c] if adj[d, u] else apart[c]
            alive = False
            for w in range(words):
                x = doms[d, u, w] & mask[w]
                doms[d + 1, u, w] = x
                if x:
                    alive = True
            if not alive:
                ok = False
                break
        if not ok:
            continue
        choice[d] = c
        if d == n - 1:
            return 1, nodes
        d += 1
        count[d] = _members(doms[d, d], cand[d])
        cursor[d] = 0


def degree_order(g: Graph) -> list[int]:
    """Descending degree; ties go to the vertex with more already-ordered
    neighbours, then to the smaller id."""
    order: list[int] = []
    rest = set(range(g.n))
    while rest:
        v = max(rest, key=lambda u: (g.degree(u), len(g.adjacency[u] & set(order)), -u))
        order.append(v)
        rest.remove(v)
    return order


def b0vpg_search(
    g: Graph,
    grid: int | None = None,
    budget: int = DEFAULT_BUDGET,
    order: Sequence[int] | None = None,
    progress: Progress | None = None,
) -> SearchOutcome:
    """Decide whether ``g`` has a 0-bend VPG representation on the grid.

    The first vertex of ``order`` is fixed horizontal (rotate by a quarter
    turn otherwise), left of the vertical midline and below the horizontal
    one (reflect otherwise).  Returns SAT with a witness, UNSAT, or Aborted
    once ``budget`` search nodes have been expanded.
    """
    n = g.n
    if n == 0:
        return SearchOutcome(SAT, {}, 0, [])
    if grid is None:
        grid = normalize_grid_bound(n)
    if grid < 2 * n:
        raise GridTooSmall(f"grid {grid} is below 2n = {2 * n}")
    order = list(degree_order(g) if order is None else order)
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the vertices")

    cands = candidate_segments(grid)
    rel = touch_matrix(cands)
    touch = _pack(rel)
    apart = _pack(~rel)
    vert = np.array([c[0] == "V" for c in cands])
    fixed = np.array([c[1] for c in cands])
    span = np.array([c[2] + c[3] for c in cands])
    first = np.flatnonzero(~vert & (2 * fixed <= grid - 1) & (span <= grid - 1))

    adj = np.array([[w in g.adjacency[v] for w in order] for v in order], dtype=np.bool_)
    init = np.repeat(_pack(np.ones(len(cands), dtype=bool)), n, axis=0)
    choice = np.zeros(n, dtype=np.int64)
    nodes = 0
    status = 0
    # one compiled run per placement of the first vertex
    for c0 in first:
        init[0] = _pack(np.arange(len(cands)) == c0)[0]
        status, used = _dfs(touch, apart, adj, init, budget - nodes, choice)
        nodes += int(used)
        if progress is not None:
            progress(nodes, 0)
        if status != 0:
            break

    if status == 2:
        return SearchOutcome(ABORTED, None, nodes, order)
    if status == 0:
        return SearchOutcome(UNSAT, None, nodes, order)
    witness = {v: GridSegment(*cands[choice[i]]) for i, v in enumerate(order)}
    outcome = SearchOutcome(SAT, witness, nodes, order)
    report = verify_representation(g, outcome.representation())
    assert report.passed, f"search witness fails verification: {report.mismatches}"
    return outcome
