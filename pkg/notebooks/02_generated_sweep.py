"""
Layouts on generated graphs
===========================

Builds all three layouts for a batch of random Halin and tree-union-cycle
graphs, then looks at the one place the S layout needs help: graphs where the
last leaf's parent sits below a chain of degree-two vertices.

Run with ``python3 notebooks/02_generated_sweep.py [count]``.
"""

# %%
import sys
from collections import Counter

import numpy as np

from halinrep import (
    all_observations,
    c_epg_representation,
    decompose_tuc,
    gen_halin,
    gen_tuc,
    lvpg_representation,
    s_epg_representation,
    verify_representation,
)

COUNT = int(sys.argv[1]) if len(sys.argv) > 1 else 300


def instance(seed):
    target = 1 + seed % 40
    if seed % 3 == 2:
        return gen_tuc(seed, target, 1 + seed % 5)
    return gen_halin(seed, target)


# %% [markdown]
# Every layout is checked pair by pair against the graph, and the structural
# observations the layouts rely on are checked as well.

# %%
sizes = []
failed = Counter()
observation_failures = 0
for seed in range(COUNT):
    g = instance(seed)
    d = decompose_tuc(g)
    sizes.append(g.n)
    for label, build in (("L", lvpg_representation), ("C", c_epg_representation), ("S", s_epg_representation)):
        if not verify_representation(g, build(d)).passed:
            failed[label] += 1
    observation_failures += sum(not r.passed for r in all_observations(d))

sizes = np.array(sizes)
print(f"{COUNT} graphs, n from {sizes.min()} to {sizes.max()} (median {np.median(sizes):.0f})")
print("failed layouts:", dict(failed) or "none")
print("observation violations:", observation_failures)

# %% [markdown]
# The S layout as written places the legs of in-between chain vertices by
# depth alone, which can push the top one past the root's bottom arm. The
# builder respaces those legs unless asked for the verbatim formulas. The
# batch above rarely hits this case, so this part uses non-Halin graphs with
# more subdivided edges.

# %%
verbatim_fail = respaced = 0
for seed in range(COUNT):
    g = gen_tuc(seed, 2 + seed % 20, 1 + seed % 6)
    d = decompose_tuc(g)
    rep = s_epg_representation(d)
    if "respaced" in rep.provenance:
        respaced += 1
    if not verify_representation(g, s_epg_representation(d, verbatim=True)).passed:
        verbatim_fail += 1

print(f"verbatim S layout fails on {verbatim_fail} graphs")
print(f"respacing applied on {respaced} graphs")
