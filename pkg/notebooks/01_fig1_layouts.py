"""
The six-vertex prism, three ways
================================

Walks the triangular prism through decomposition, the two leaf relabelings
and the three layouts, checking each one against the graph and writing SVG
drawings to ``notebooks/output/``.

Run with ``python3 notebooks/01_fig1_layouts.py``.
"""

# %%
from pathlib import Path

from halinrep import (
    build_c_epg,
    build_lvpg,
    build_s_epg,
    decompose_tuc,
    emit_svg,
    format_representation,
    is_halin,
    load_fixture,
    make_epg_frame,
    make_vpg_frame,
    verify_representation,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

g = load_fixture("fig1")
names = g.labels


def show(vertices):
    return "(" + ", ".join(names[v] for v in vertices) + ")"


# %% [markdown]
# The prism has three quadrilateral faces, and each one is a valid leaf
# cycle. The decomposer keeps the split with the lowest internal ids, so
# v1 and v2 form the tree's interior.

# %%
d = decompose_tuc(g)
print("internal:", sorted(names[v] for v in d.internal))
print("cycle:   ", show(d.cycle))
print("Halin:   ", is_halin(d))

# %% [markdown]
# The L layout rotates the cycle so the deepest consecutive pair comes
# first, and hangs the tree from that pair's meeting point.

# %%
vf = make_vpg_frame(d)
print("b =", show(vf.b), " root", names[vf.r_prime])
print("heights:", {names[v]: vf.tree.height[v] for v in range(g.n)})

lrep = build_lvpg(vf)
for v in range(g.n):
    print(f"  {names[v]}: {tuple(str(c) for c in lrep.shapes[v].coords())}")
report = verify_representation(g, lrep)
print(f"L layout: {report.intersecting}/{report.pair_count} pairs touch, passed={report.passed}")

# %% [markdown]
# The two EPG layouts share a second relabeling. Here the neighbour of b_0
# has degree three, so the order is reversed and that neighbour becomes the
# root.

# %%
ef = make_epg_frame(d)
print("a =", show(ef.a), " root", names[ef.r], " a'", names[ef.a_prime])

for label, rep in (("C", build_c_epg(ef)), ("S", build_s_epg(ef))):
    report = verify_representation(g, rep)
    print(f"{label} layout: scale 1/{rep.scale_denominator}, passed={report.passed}")
    emit_svg(rep, OUT / f"fig1_{label}.svg", names)
emit_svg(lrep, OUT / "fig1_L.svg", names)

# %% [markdown]
# Documents keep coordinates as exact fractions, so they read back
# unchanged.

# %%
print(format_representation(lrep))
print("drawings written to", OUT)
