from __future__ import annotations

import random

import pytest

from halinrep import (
    GridTooSmall,
    b0vpg_search,
    normalize_grid_bound,
    verify_representation,
)
from halinrep.search import ABORTED, SAT, UNSAT, candidate_segments, degree_order, touch_matrix

from support import complete_graph, fig1, interval_graph6, path_graph, wheel


def test_normalize_examples():
    assert normalize_grid_bound(6) == 12
    assert normalize_grid_bound(1) == 2
    assert normalize_grid_bound(3) == 6
    with pytest.raises(ValueError):
        normalize_grid_bound(0)


def test_candidates_and_touch_relation():
    cands = candidate_segments(3)
    # two orientations x three fixed values x three (lo, hi) pairs
    assert len(cands) == 18
    rel = touch_matrix(cands)
    assert rel.shape == (18, 18)
    assert (rel == rel.T).all() and rel.diagonal().all()


@pytest.mark.parametrize(
    "graph",
    [path_graph(3), complete_graph(3), path_graph(4), interval_graph6()],
    ids=["P3", "K3", "P4", "interval6"],
)
def test_positive_instances(graph):
    out = b0vpg_search(graph)
    assert out.status == SAT
    assert verify_representation(graph, out.representation()).passed


def test_grid_too_small():
    with pytest.raises(GridTooSmall):
        b0vpg_search(path_graph(3), grid=5)


def test_bad_order():
    with pytest.raises(ValueError):
        b0vpg_search(path_graph(3), order=[0, 0, 1])


def test_k4_is_sat():
    # four segments pairwise touching: two crossing pairs of collinear ones
    assert b0vpg_search(complete_graph(4)).status == SAT


def test_degree_order_starts_with_the_hub():
    assert degree_order(wheel(5))[0] == 0


@pytest.mark.parametrize("graph", [path_graph(4), complete_graph(3), interval_graph6()])
def test_result_independent_of_order(graph):
    rng = random.Random(5)
    base = b0vpg_search(graph).status
    for _ in range(3):
        order = list(range(graph.n))
        rng.shuffle(order)
        assert b0vpg_search(graph, order=order).status == base


def test_monotone_in_grid():
    g = path_graph(4)
    assert all(b0vpg_search(g, grid=grid).status == SAT for grid in (8, 9, 11))


def test_budget_aborts():
    out = b0vpg_search(fig1(), budget=1000)
    assert out.status == ABORTED
    assert out.nodes_explored <= 1000
    assert out.witness is None


def test_progress_callback_reports_growing_counts():
    seen = []
    b0vpg_search(fig1(), budget=50_000, progress=lambda nodes, depth: seen.append((nodes, depth)))
    assert seen
    counts = [c for c, _ in seen]
    assert counts == sorted(counts)


@pytest.mark.slow
def test_fig1_unsat():
    out = b0vpg_search(fig1(), grid=12)
    assert out.status == UNSAT
    assert out.witness is None


@pytest.mark.slow
def test_fig1_unsat_under_relabeling():
    perm = list(range(6))
    random.Random(11).shuffle(perm)
    out = b0vpg_search(fig1().relabeled(perm), grid=12)
    assert out.status == UNSAT
