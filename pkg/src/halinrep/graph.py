"""Graph storage, tree-union-cycle decomposition and rooted-tree utilities.

A tree-union-cycle (TUC) graph is a tree T together with a cycle C through
exactly the leaves of T, drawn without crossings.  Leaf sets below a vertex
are kept as integer bitmasks over a designated leaf order, so that unions,
intersections and consecutiveness tests are single integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from .errors import NotInternal, NotTuc, TooSmall

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on the dense vertex ids ``0..n-1``."""

    adjacency: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        n = len(self.adjacency)
        for u, nbrs in enumerate(self.adjacency):
            if u in nbrs:
                raise ValueError(f"self-loop at vertex {u}")
            for v in nbrs:
                if not 0 <= v < n:
                    raise ValueError(f"neighbour {v} of {u} out of range")
                if u not in self.adjacency[v]:
                    raise ValueError(f"adjacency not symmetric for {u}-{v}")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels must have one entry per vertex")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Edge], labels: Sequence[str] | None = None
    ) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(tuple(frozenset(a) for a in adj), tuple(labels) if labels else None)

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def edges(self) -> list[Edge]:
        return sorted((u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def index(self, name: str) -> int:
        """Vertex id for a label (or for a decimal id when unlabeled)."""
        if self.labels and name in self.labels:
            return self.labels.index(name)
        return int(name)

    def relabeled(self, perm: Sequence[int]) -> Graph:
        """Copy with vertex ``v`` renamed to ``perm[v]``."""
        labels = None
        if self.labels:
            new = [""] * self.n
            for v, p in enumerate(perm):
                new[p] = self.labels[v]
            labels = new
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()), labels)


@dataclass(frozen=True)
class TucDecomposition:
    graph: Graph
    tree_edges: frozenset[Edge]
    internal: frozenset[int]
    cycle: tuple[int, ...]
    tree_adjacency: tuple[frozenset[int], ...] = field(repr=False)

    @property
    def k(self) -> int:
        return len(self.cycle)

    def cycle_edges(self) -> frozenset[Edge]:
        k = self.k
        return frozenset(_edge(self.cycle[i], self.cycle[(i + 1) % k]) for i in range(k))

    def tree_degree(self, v: int) -> int:
        return len(self.tree_adjacency[v])

    def is_leaf(self, v: int) -> bool:
        return v not in self.internal


@dataclass(frozen=True)
class RootedTree:
    """The tree of a decomposition hung from ``root``.

    ``leaf_mask[u]`` has bit ``j`` set iff ``leaf_order[j]`` descends from ``u``.
    ``leaf_interval[u]`` is ``(start, length)`` of that set read cyclically in
    ``leaf_order`` (wrapping past the end), or None when the set is not
    cyclically consecutive.
    """

    decomposition: TucDecomposition = field(repr=False)
    root: int
    parent: tuple[int | None, ...]
    height: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    leaf_order: tuple[int, ...]
    leaf_mask: tuple[int, ...]
    leaf_interval: tuple[tuple[int, int] | None, ...]
    tin: tuple[int, ...] = field(repr=False)
    tout: tuple[int, ...] = field(repr=False)

    @property
    def hmax(self) -> int:
        return max(self.height)

    def leaves_below(self, u: int) -> list[int]:
        mask = self.leaf_mask[u]
        return [leaf for j, leaf in enumerate(self.leaf_order) if mask >> j & 1]

    def leaf_positions(self, u: int) -> list[int]:
        mask = self.leaf_mask[u]
        return [j for j in range(len(self.leaf_order)) if mask >> j & 1]

    def is_ancestor(self, u: int, v: int) -> bool:
        """True iff ``u`` lies on the root path of ``v`` (``u == v`` included)."""
        return self.tin[u] <= self.tin[v] and self.tout[v] <= self.tout[u]

    def path(self, u: int, v: int) -> list[int]:
        """Vertices of the tree path from ``u`` to ``v``."""
        up, down = [u], [v]
        while up[-1] != down[-1]:
            if self.height[up[-1]] >= self.height[down[-1]]:
                up.append(self.parent[up[-1]])
            else:
                down.append(self.parent[down[-1]])
        return up + down[-2::-1]


# ---------------------------------------------------------------------------
# Decomposition
# ---------------------------------------------------------------------------


def _faces(g: Graph) -> list[list[int]] | None:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    planar, emb = nx.check_planarity(nxg)
    if not planar:
        return None
    seen: set[tuple[int, int]] = set()
    faces = []
    for u, v in emb.edges():
        if (u, v) not in seen:
            faces.append(emb.traverse_face(u, v, mark_half_edges=seen))
    return faces


def _orient_cycle(face: Sequence[int]) -> tuple[int, ...]:
    k = len(face)
    s = face.index(min(face))
    rot = list(face[s:]) + list(face[:s])
    if rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    assert len(rot) == k
    return tuple(rot)


def _try_split(g: Graph, cycle: tuple[int, ...]) -> TucDecomposition | None:
    k = len(cycle)
    cset = set(cycle)
    cyc = {_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)}
    if len(cyc) != k:
        return None
    tree = [e for e in g.edges() if e not in cyc]
    if len(tree) != g.n - 1:
        return None
    tadj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in tree:
        tadj[u].add(v)
        tadj[v].add(u)
    seen = {cycle[0]}
    stack = [cycle[0]]
    while stack:
        for w in tadj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != g.n:
        return None
    leaves = {v for v in range(g.n) if len(tadj[v]) == 1}
    if leaves != cset:
        return None
    # the leaves induce exactly the cycle
    for c in cycle:
        if len(g.adjacency[c] & cset) != 2:
            return None
    return TucDecomposition(
        graph=g,
        tree_edges=frozenset(tree),
        internal=frozenset(range(g.n)) - cset,
        cycle=cycle,
        tree_adjacency=tuple(frozenset(a) for a in tadj),
    )


def decompose_tuc(g: Graph) -> TucDecomposition:
    """Split ``g`` into a tree and a cycle through exactly the tree's leaves.

    Candidate cycles are the faces of a planar embedding: a TUC graph is a
    subdivision of a 3-connected planar graph, so its embedding is unique and
    the leaf cycle bounds a face.  A graph can have several valid splits (the
    triangular prism has three); the one whose sorted internal vertex list
    comes first wins, so low ids end up in the tree.
    """
    if g.n < 4:
        raise TooSmall(f"need at least 4 vertices, got {g.n}")
    k = g.edge_count - g.n + 1
    if k < 3:
        raise NotTuc(f"edge count {g.edge_count} leaves room for a cycle of length {k}")
    faces = _faces(g)
    if faces is None:
        raise NotTuc("graph is not planar")
    candidates = sorted(
        {
            _orient_cycle(f)
            for f in faces
            if len(f) == k and len(set(f)) == k and all(g.degree(v) == 3 for v in f)
        },
        key=lambda c: (sorted(set(range(g.n)) - set(c)), c),
    )
    for cycle in candidates:
        d = _try_split(g, cycle)
        if d is None:
            continue
        if not check_consecutive(root_at(d, min(d.internal)), cyclic=True):
            raise NotTuc("leaf sets are not consecutive around the cycle")
        return d
    raise NotTuc("no face splits the graph into a tree and its leaf cycle")


def is_halin(d: TucDecomposition) -> bool:
    return all(d.graph.degree(v) != 2 for v in range(d.graph.n))


# ---------------------------------------------------------------------------
# Rooted trees
# ---------------------------------------------------------------------------


def _linear_run(mask: int) -> bool:
    if mask == 0:
        return False
    m = mask >> ((mask & -mask).bit_length() - 1)
    return m & (m + 1) == 0


def _cyclic_interval(mask: int, k: int) -> tuple[int, int] | None:
    full = (1 << k) - 1
    size = mask.bit_count()
    if mask == full:
        return (0, k)
    if _linear_run(mask):
        return ((mask & -mask).bit_length() - 1, size)
    comp = full & ~mask
    if _linear_run(comp):
        lo = (comp & -comp).bit_length() - 1
        csize = k - size
        return ((lo + csize) % k, size)
    return None


def root_at(d: TucDecomposition, r: int, leaf_order: Sequence[int] | None = None) -> RootedTree:
    """Hang the tree of ``d`` from internal vertex ``r``.

    ``leaf_order`` defaults to the cycle order; callers pass a rotation or
    reflection of it when they need linear consecutiveness from a fixed start.
    """
    if r not in d.internal:
        raise NotInternal(f"vertex {r} is a leaf")
    order = tuple(d.cycle if leaf_order is None else leaf_order)
    if sorted(order) != sorted(d.cycle):
        raise ValueError("leaf_order must list every cycle vertex once")
    n = d.graph.n
    k = len(order)
    pos = {leaf: j for j, leaf in enumerate(order)}

    parent: list[int | None] = [None] * n
    height = [0] * n
    children: list[list[int]] = [[] for _ in range(n)]
    tin = [0] * n
    tout = [0] * n
    preorder = []
    clock = 0
    stack: list[tuple[int, bool]] = [(r, False)]
    visited = [False] * n
    visited[r] = True
    while stack:
        u, done = stack.pop()
        if done:
            tout[u] = clock
            continue
        tin[u] = clock
        clock += 1
        preorder.append(u)
        stack.append((u, True))
        for w in sorted(d.tree_adjacency[u], reverse=True):
            if not visited[w]:
                visited[w] = True
                parent[w] = u
                height[w] = height[u] + 1
                children[u].append(w)
                stack.append((w, False))
    for u in range(n):
        children[u].reverse()

    mask = [0] * n
    for u in reversed(preorder):
        if u in pos:
            mask[u] = 1 << pos[u]
        else:
            m = 0
            for w in children[u]:
                m |= mask[w]
            mask[u] = m
    return RootedTree(
        decomposition=d,
        root=r,
        parent=tuple(parent),
        height=tuple(height),
        children=tuple(tuple(c) for c in children),
        leaf_order=order,
        leaf_mask=tuple(mask),
        leaf_interval=tuple(_cyclic_interval(m, k) for m in mask),
        tin=tuple(tin),
        tout=tuple(tout),
    )


def hca(t: RootedTree, u: int, v: int) -> tuple[int, int]:
    """Highest vertex on the tree path between ``u`` and ``v``, with its height.

    This is the lowest common ancestor under ``t.root``.
    """
    while u != v:
        if t.height[u] >= t.height[v]:
            u = t.parent[u]
        else:
            v = t.parent[v]
    return u, t.height[u]


def check_consecutive(t: RootedTree, cyclic: bool) -> bool:
    """Whether every internal leaf set is a run of ``t.leaf_order``.

    With ``cyclic`` the run may wrap from the last leaf to the first.
    """
    for u in t.decomposition.internal:
        if cyclic:
            if t.leaf_interval[u] is None:
                return False
        elif not _linear_run(t.leaf_mask[u]):
            return False
    return True
