"""Random Halin and tree-union-cycle graph instances."""

from __future__ import annotations

import random

from .graph import Graph


def _plane_tree(rng: random.Random, internal_target: int) -> list[list[int]]:
    children: list[list[int]] = [[1, 2, 3]] + [[] for _ in range(3)]
    leaves = [1, 2, 3]
    internal = 1
    while internal < internal_target:
        u = leaves.pop(rng.randrange(len(leaves)))
        count = rng.choice((2, 2, 3, 3, 4))
        for _ in range(count):
            children.append([])
            children[u].append(len(children) - 1)
            leaves.append(len(children) - 1)
        internal += 1
    return children


def _leaf_cycle(children: list[list[int]]) -> list[int]:
    order = []
    stack = [0]
    while stack:
        u = stack.pop()
        if not children[u]:
            order.append(u)
        stack.extend(reversed(children[u]))
    return order


def _assemble(rng: random.Random, children: list[list[int]], shuffle: bool) -> Graph:
    n = len(children)
    edges = [(u, w) for u in range(n) for w in children[u]]
    cyc = _leaf_cycle(children)
    edges += [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
    perm = list(range(n))
    if shuffle:
        rng.shuffle(perm)
    return Graph.from_edges(n, ((perm[u], perm[v]) for u, v in edges))


def gen_halin(seed: int, internal_target: int, shuffle: bool = True) -> Graph:
    """Random Halin graph whose tree has ``internal_target`` internal vertices.

    The root gets three children and every expanded vertex two to four, so no
    tree vertex has degree two; leaves are joined in depth-first order, which
    keeps the drawing planar.  Vertex ids are shuffled unless ``shuffle`` is
    off.  Deterministic in ``seed``.
    """
    if internal_target < 1:
        raise ValueError("internal_target must be at least 1")
    rng = random.Random(seed)
    return _assemble(rng, _plane_tree(rng, internal_target), shuffle)


def gen_tuc(seed: int, internal_target: int, degree_two: int, shuffle: bool = True) -> Graph:
    """Like :func:`gen_halin`, then subdivide ``degree_two`` random tree edges.

    Each subdivision adds an internal tree vertex of degree two, so the result
    is a tree-union-cycle graph that is not Halin when ``degree_two > 0``.
    """
    if internal_target < 1:
        raise ValueError("internal_target must be at least 1")
    rng = random.Random(seed)
    children = _plane_tree(rng, internal_target)
    for _ in range(degree_two):
        tree_edges = [(u, i) for u in range(len(children)) for i in range(len(children[u]))]
        u, i = rng.choice(tree_edges)
        mid = len(children)
        children.append([children[u][i]])
        children[u][i] = mid
    return _assemble(rng, children, shuffle)
