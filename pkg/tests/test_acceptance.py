"""Acceptance criteria, one test each.

Every test records a ``criterion N: PASS|FAIL`` line with its measured time
and limit; the lines are printed together at the end of the pytest run.
"""

from __future__ import annotations

import random
import time
import xml.etree.ElementTree as ET
from fractions import Fraction

import numpy as np
import pytest

from halinrep import (
    CShape,
    LShape,
    SShape,
    all_observations,
    b0vpg_search,
    build_c_epg,
    build_lvpg,
    condition_matrix,
    decompose_tuc,
    emit_svg,
    format_representation,
    is_halin,
    make_epg_frame,
    make_vpg_frame,
    parse_representation,
    relation_matrix,
    to_path,
    verify_representation,
)
from halinrep.geometry import (
    KIND_BENDS,
    KIND_SHAPE,
    cepg_condition_share,
    lvpg_condition_intersect,
    paths_share_segment,
    paths_touch,
    sepg_condition_share,
)
from halinrep.search import SAT, UNSAT

from support import (
    ACCEPTANCE_LINES,
    V1,
    V2,
    V3,
    V4,
    V5,
    V6,
    all_representations,
    complete_graph,
    fig1,
    interval_graph6,
    path_graph,
    property_instances,
)


def record(number: int, passed: bool, seconds: float, limit: float, detail: str = "") -> None:
    verdict = "PASS" if passed and seconds < limit else "FAIL"
    extra = f"; {detail}" if detail else ""
    ACCEPTANCE_LINES.append(f"criterion {number}: {verdict} ({seconds:.2f} s, limit {limit:g} s{extra})")
    assert passed, detail
    assert seconds < limit, f"took {seconds:.2f} s, limit {limit} s"


def scaled(rep, v) -> tuple[int, ...]:
    return rep.scaled(v)


# ---------------------------------------------------------------------------
# 1-2: prism layouts reproduced exactly

FIG1_L_SCALED = {
    V3: (3, 6, 0, 6),
    V4: (2, 4, 2, 6),
    V5: (4, 6, 2, 4),
    V6: (6, 8, 0, 4),
    V1: (4, 6, 4, 6),
    V2: (2, 6, 6, 8),
}

FIG1_C_SCALED = {
    V3: (0, 5, 13, 0, 12),
    V4: (12, 17, 13, 0, 12),
    V6: (4, 9, 7, 0, 4),
    V5: (8, 13, 11, 0, 4),
    V1: (6, 11, 7, 4, 8),
    V2: (2, 15, 13, 8, 12),
}


def test_criterion_1_fig1_lvpg():
    start = time.perf_counter()
    g = fig1()
    rep = build_lvpg(make_vpg_frame(decompose_tuc(g)))
    got = {v: scaled(rep, v) for v in range(6)}
    report = verify_representation(g, rep)
    seconds = time.perf_counter() - start
    ok = rep.scale_denominator == 2 and got == FIG1_L_SCALED and report.passed
    ok = ok and report.intersecting == 9 and report.pair_count == 15
    record(1, ok, seconds, 1.0, f"{report.intersecting}/{report.pair_count} pairs intersect")


def test_criterion_2_fig1_cepg():
    start = time.perf_counter()
    g = fig1()
    rep = build_c_epg(make_epg_frame(decompose_tuc(g)))
    got = {v: scaled(rep, v) for v in range(6)}
    report = verify_representation(g, rep)
    seconds = time.perf_counter() - start
    ok = rep.scale_denominator == 4 and got == FIG1_C_SCALED and report.passed
    record(2, ok, seconds, 1.0, f"{len(report.mismatches)} mismatches")


# ---------------------------------------------------------------------------
# 3-5: the property suite over 500 generated graphs plus the two fixtures


@pytest.fixture(scope="module")
def built():
    """Build every representation once, timing the construction and check."""
    start = time.perf_counter()
    out = []
    failures = []
    for name, g in property_instances():
        reps = all_representations(g)
        for tag, rep in reps.items():
            report = verify_representation(g, rep)
            bends = max(to_path(s).bend_count for s in rep.shapes.values())
            ok = (
                report.passed
                and all(type(s) is KIND_SHAPE[rep.kind] for s in rep.shapes.values())
                and bends <= KIND_BENDS[rep.kind]
            )
            if not ok:
                failures.append(f"{name}/{tag}")
            out.append((name, g, tag, rep, report))
    return out, failures, time.perf_counter() - start


def test_criterion_3_constructions_verify(built):
    out, failures, seconds = built
    instances = {name for name, *_ in out}
    graphs = {name: g for name, g, *_ in out}
    wheels = sum(len(decompose_tuc(g).internal) == 1 for g in graphs.values())
    non_halin = sum(not is_halin(decompose_tuc(g)) for g in graphs.values())
    fig2 = graphs["fig2"]
    fig2_ok = is_halin(decompose_tuc(fig2)) and fig2.n == 31
    ok = not failures and len(instances) == 502 and wheels > 0 and non_halin > 0 and fig2_ok
    largest = max(g.n for g in graphs.values())
    detail = (
        f"{len(out)} representations over {len(instances)} graphs, {wheels} wheels, "
        f"{non_halin} with degree-2 vertices, largest n={largest}, failures {failures[:5]}"
    )
    record(3, ok, seconds, 60.0, detail)


def test_criterion_4_observations(built):
    out, _, _ = built
    start = time.perf_counter()
    violations = []
    seen = set()
    for name, g, *_ in out:
        if name in seen:
            continue
        seen.add(name)
        for result in all_observations(decompose_tuc(g)):
            if not result.passed:
                violations.append(f"{name}: {result}")
    seconds = time.perf_counter() - start
    record(4, not violations, seconds, 60.0, f"{len(seen)} graphs, {len(violations)} violations")


def _random_pairs(rng: random.Random, count: int):
    """Same-type shape pairs with coordinates on small half/quarter grids."""

    def ordered(k, hi):
        return sorted(rng.sample(range(hi + 1), k))

    pairs = []
    for _ in range(count):
        kind = rng.randrange(3)
        pair = []
        for _ in range(2):
            if kind == 0:
                lx, rx = ordered(2, 12)
                ly, ry = ordered(2, 12)
                pair.append(LShape(Fraction(lx, 2), Fraction(rx, 2), Fraction(ly, 2), Fraction(ry, 2)))
            elif kind == 1:
                lx = rng.randrange(16)
                px, qx = rng.randint(lx + 1, 16), rng.randint(lx + 1, 16)
                ly, ry = ordered(2, 16)
                pair.append(CShape(*(Fraction(v, 4) for v in (lx, px, qx, ly, ry))))
            else:
                lx, mx, rx = ordered(3, 16)
                ly, ry = ordered(2, 16)
                pair.append(SShape(*(Fraction(v, 4) for v in (lx, mx, rx, ly, ry))))
        pairs.append(tuple(pair))
    return pairs


CONDITION = {LShape: lvpg_condition_intersect, CShape: cepg_condition_share, SShape: sepg_condition_share}


def test_criterion_5_conditions_match_oracle(built):
    out, _, _ = built
    start = time.perf_counter()
    disagreements = 0
    construction_pairs = 0
    for _, g, _, rep, _ in out:
        shapes = [rep.shapes[v] for v in range(g.n)]
        paths = [to_path(s) for s in shapes]
        oracle = relation_matrix(paths, share=not rep.is_vpg)
        cond = condition_matrix(shapes)
        iu = np.triu_indices(g.n, 1)
        disagreements += int((oracle[iu] != cond[iu]).sum())
        construction_pairs += len(iu[0])
    random_pairs = _random_pairs(random.Random(2024), 10_000)
    for u, v in random_pairs:
        oracle = paths_touch if isinstance(u, LShape) else paths_share_segment
        if CONDITION[type(u)](u, v) != oracle(to_path(u), to_path(v)):
            disagreements += 1
    seconds = time.perf_counter() - start
    detail = f"{construction_pairs} construction pairs + {len(random_pairs)} random pairs, {disagreements} disagreements"
    record(5, disagreements == 0, seconds, 60.0, detail)


# ---------------------------------------------------------------------------
# 6-7: the 0-bend search


def test_criterion_6_fig1_has_no_zero_bend_layout():
    start = time.perf_counter()
    outcome = b0vpg_search(fig1(), grid=12)
    seconds = time.perf_counter() - start
    record(6, outcome.status == UNSAT, seconds, 600.0, f"{outcome.status}, {outcome.nodes_explored} nodes")


def test_criterion_7_positive_controls():
    cases = {"P4": path_graph(4), "K3": complete_graph(3), "interval6": interval_graph6()}
    details, ok, worst = [], True, 0.0
    for name, g in cases.items():
        start = time.perf_counter()
        outcome = b0vpg_search(g)
        good = outcome.status == SAT and verify_representation(g, outcome.representation()).passed
        seconds = time.perf_counter() - start
        worst = max(worst, seconds)
        ok = ok and good
        details.append(f"{name} {outcome.status} {seconds:.2f} s")
    record(7, ok, worst, 10.0, ", ".join(details))


# ---------------------------------------------------------------------------
# 8: documents and drawings


def test_criterion_8_round_trip_and_svg():
    g = fig1()
    d = decompose_tuc(g)
    reps = [build_lvpg(make_vpg_frame(d)), build_c_epg(make_epg_frame(d))]
    start = time.perf_counter()
    ok = True
    for rep in reps + [all_representations(g)["S"]]:
        ok = ok and parse_representation(format_representation(rep)) == rep
    counts = []
    for rep in reps:
        text = emit_svg(rep, names=g.labels)
        root = ET.fromstring(text.split("\n", 1)[1])
        counts.append(sum(1 for el in root.iter() if el.tag.endswith("polyline")))
    seconds = time.perf_counter() - start
    record(8, ok and counts == [6, 6], seconds, 1.0, f"polylines {counts}")
