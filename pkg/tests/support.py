"""Shared instances and helpers for the test modules."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from halinrep import (
    Graph,
    Representation,
    c_epg_representation,
    decompose_tuc,
    gen_halin,
    gen_tuc,
    load_fixture,
    lvpg_representation,
    s_epg_representation,
)

# one summary line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []

# prism (fixture "fig1") ids: 0..5 are v1..v6
V1, V2, V3, V4, V5, V6 = range(6)

FIG1_EDGES = [(V1, V2), (V1, V5), (V1, V6), (V2, V3), (V2, V4), (V3, V4), (V4, V5), (V5, V6), (V6, V3)]


def q(text: str | int) -> Fraction:
    return Fraction(text)


def fig1() -> Graph:
    return Graph.from_edges(6, FIG1_EDGES, [f"v{i}" for i in range(1, 7)])


def wheel(k: int) -> Graph:
    """Hub 0 joined to the rim cycle 1..k."""
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, i % k + 1) for i in range(1, k + 1)]
    return Graph.from_edges(k + 1, edges)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def interval_graph6() -> Graph:
    """Intersection graph of six intervals on a line.

    [0,2] [1,4] [3,5] [4,7] [6,8] [1,6]
    """
    spans = [(0, 2), (1, 4), (3, 5), (4, 7), (6, 8), (1, 6)]
    edges = [
        (i, j)
        for i in range(6)
        for j in range(i + 1, 6)
        if max(spans[i][0], spans[j][0]) <= min(spans[i][1], spans[j][1])
    ]
    return Graph.from_edges(6, edges)


def fig1_subdivided() -> Graph:
    """The prism with the tree edge v2-v3 subdivided by a new vertex 6.

    The base pair is (v3, v4) under root v2, and v3's tree neighbour is the
    new degree-two vertex.
    """
    edges = [e for e in FIG1_EDGES if e != (V2, V3)] + [(V2, 6), (6, V3)]
    return Graph.from_edges(7, edges)


def tuc_k3() -> Graph:
    """Smallest non-wheel TUC graph: tree x-y, x with leaves c0 c1, y with leaf c2.

    Ids: x=0, y=1, c0=2, c1=3, c2=4; y has degree two.
    """
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 3), (3, 4), (4, 2)])


# ---------------------------------------------------------------------------
# the 500 generated instances plus the two figures


def generated_instance(seed: int) -> Graph:
    target = 1 + seed % 40
    if seed % 3 == 2:
        return gen_tuc(seed, target, 1 + seed % 5)
    return gen_halin(seed, target)


@lru_cache(maxsize=None)
def property_instances() -> tuple[tuple[str, Graph], ...]:
    named = [("fig1", load_fixture("fig1")), ("fig2", load_fixture("fig2"))]
    return tuple(named + [(f"seed{s}", generated_instance(s)) for s in range(500)])


def all_representations(g: Graph) -> dict[str, Representation]:
    d = decompose_tuc(g)
    return {
        "L": lvpg_representation(d),
        "C": c_epg_representation(d),
        "S": s_epg_representation(d),
    }


def coords(rep: Representation, v: int) -> tuple[Fraction, ...]:
    return rep.shapes[v].coords()
