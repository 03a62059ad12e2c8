"""Base leaf pair selection and the two leaf relabelings used by the builders."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IsWheel
from .graph import RootedTree, TucDecomposition, check_consecutive, hca, root_at


@dataclass(frozen=True)
class VpgFrame:
    """Leaves ``b[0..k-1]`` and the tree rooted at ``r_prime``.

    ``i`` is the cycle index with ``b[j] == cycle[(i + j) % k]``.
    """

    decomposition: TucDecomposition
    i: int
    b: tuple[int, ...]
    r_prime: int
    tree: RootedTree


@dataclass(frozen=True)
class EpgFrame:
    decomposition: TucDecomposition
    a: tuple[int, ...]
    r: int
    a_prime: int
    tree: RootedTree
    vpg: VpgFrame | None = None

    @property
    def a_prime_is_root(self) -> bool:
        return self.a_prime == self.r


def _require_non_wheel(d: TucDecomposition) -> None:
    if len(d.internal) == 1:
        raise IsWheel("the tree has a single internal vertex")


def base_pair_degree_property(d: TucDecomposition, c: int, c_next: int, top: int) -> bool:
    """Every internal vertex of the tree path between the two leaves has tree
    degree two, except possibly ``top``."""
    t = root_at(d, top)
    inner = t.path(c, c_next)[1:-1]
    return all(w == top or d.tree_degree(w) == 2 for w in inner)


def find_base_pair(d: TucDecomposition, aux_root: int | None = None) -> tuple[int, int]:
    """Index ``i`` of consecutive leaves whose hca is deepest, and that hca.

    Heights are measured from ``aux_root`` (default: the smallest internal id);
    ties go to the smallest ``i``.
    """
    _require_non_wheel(d)
    r = min(d.internal) if aux_root is None else aux_root
    t = root_at(d, r)
    k = d.k
    best_i, best_x, best_h = 0, None, -1
    for i in range(k):
        x, h = hca(t, d.cycle[i], d.cycle[(i + 1) % k])
        if h > best_h:
            best_i, best_x, best_h = i, x, h
    assert base_pair_degree_property(d, d.cycle[best_i], d.cycle[(best_i + 1) % k], best_x), (
        "deepest consecutive pair violates the path-degree property"
    )
    return best_i, best_x


def _vpg_frame(d: TucDecomposition, i: int, r_prime: int) -> VpgFrame:
    k = d.k
    b = tuple(d.cycle[(i + j) % k] for j in range(k))
    t = root_at(d, r_prime, leaf_order=b)
    for leaf in b[:2]:
        w = t.parent[leaf]
        while w != r_prime:
            assert t.leaf_mask[w].bit_count() == 1, f"{w} above {leaf} has several leaves"
            w = t.parent[w]
    assert check_consecutive(t, cyclic=False), "leaf sets not consecutive in b-order"
    return VpgFrame(d, i, b, r_prime, t)


def make_vpg_frame(d: TucDecomposition) -> VpgFrame:
    i, r_prime = find_base_pair(d)
    return _vpg_frame(d, i, r_prime)


def wheel_vpg_frame(d: TucDecomposition) -> VpgFrame:
    """Frame for a wheel: any consecutive pair works, with the hub as root."""
    if len(d.internal) != 1:
        raise ValueError("not a wheel")
    (hub,) = d.internal
    return _vpg_frame(d, 0, hub)


def _epg_frame(vf: VpgFrame) -> EpgFrame:
    d = vf.decomposition
    b, k = vf.b, d.k
    (b0p,) = d.tree_adjacency[b[0]]
    (b1p,) = d.tree_adjacency[b[1]]
    if d.tree_degree(b0p) == 2:
        assert b0p != b1p, "b'_0 = b'_1 with tree degree two"
        a = tuple(b[(j + 1) % k] for j in range(k))
        r = b1p
    else:
        a = tuple(b[(k - j) % k] for j in range(k))
        r = b0p
    t = root_at(d, r, leaf_order=a)
    a_prime = t.parent[a[-1]]
    assert check_consecutive(t, cyclic=False), "leaf sets not consecutive in a-order"
    assert t.parent[a[0]] == r, "root is not the parent of a_0"
    assert a_prime == r or d.tree_degree(a_prime) == 2, "a' is neither the root nor degree two"
    return EpgFrame(d, a, r, a_prime, t, vf)


def make_epg_frame(d: TucDecomposition) -> EpgFrame:
    return _epg_frame(make_vpg_frame(d))


def wheel_epg_frame(d: TucDecomposition) -> EpgFrame:
    return _epg_frame(wheel_vpg_frame(d))
