"""
No straight-segment layout for the prism
========================================

Runs the exhaustive 0-bend search on a few small graphs that do have such a
layout, then on the prism, which does not.

Why a grid of 2n values per axis is enough: whether two axis-parallel
segments touch depends only on how their endpoint coordinates compare on
each axis. n segments have at most 2n distinct x values and 2n distinct y
values. Replacing each value by its rank keeps every comparison, so any
layout maps to one on the 2n-point grid with the same touching pairs.

Run with ``python3 notebooks/03_zero_bend_search.py``. The prism search
expands about 1.7 billion nodes; expect half a minute or so.
"""

# %%
import time

from halinrep import Graph, b0vpg_search, load_fixture

controls = {
    "path P4": Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]),
    "triangle": Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]),
    "K4": Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)]),
}

for name, g in controls.items():
    out = b0vpg_search(g)
    print(f"{name}: {out.status} after {out.nodes_explored} nodes")
    for v, seg in sorted(out.witness.items()):
        print(f"    {v}: {seg.orientation} at {seg.fixed}, [{seg.lo}, {seg.hi}]")

# %% [markdown]
# The first vertex is pinned to a horizontal segment in the lower-left
# quarter of the grid; the square's symmetries map every layout to one of
# those. Progress is reported after each first-vertex placement.

# %%
prism = load_fixture("fig1")
marks = []


def progress(nodes, depth):
    marks.append(nodes)


start = time.perf_counter()
out = b0vpg_search(prism, grid=12, progress=progress)
elapsed = time.perf_counter() - start
print(f"prism on a 12-value grid: {out.status}")
print(f"{out.nodes_explored:,} nodes over {len(marks)} first placements in {elapsed:.1f} s")
