from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from halinrep import (
    DocumentFormatError,
    DuplicateEdge,
    GraphFormatError,
    GridSegment,
    IdOutOfRange,
    Representation,
    decompose_tuc,
    format_graph,
    format_representation,
    is_halin,
    load_fixture,
    parse_graph,
    parse_representation,
    read_graph,
)

from support import FIG1_EDGES, all_representations, fig1, generated_instance


# ---------------------------------------------------------------------------
# graphs


def test_parse_fig1():
    text = "6 9\n" + "".join(f"{u} {v}\n" for u, v in FIG1_EDGES)
    g = parse_graph(text)
    assert g.n == 6 and set(g.edges()) == set(fig1().edges())


def test_parse_empty_graph():
    g = parse_graph("0 0\n")
    assert g.n == 0 and g.edges() == []


def test_id_out_of_range():
    with pytest.raises(IdOutOfRange) as exc:
        parse_graph("2 1\n0 2\n")
    assert exc.value.line == 2


@pytest.mark.parametrize(
    "text, error",
    [
        ("3 2\n0 1\n1 0\n", DuplicateEdge),
        ("3 1\n1 1\n", GraphFormatError),
        ("3 2\n0 1\n", GraphFormatError),
        ("3 1\n0 x\n", GraphFormatError),
        ("# only comments\n", GraphFormatError),
        ("2 1\n# label 5 far\n0 1\n", IdOutOfRange),
    ],
)
def test_malformed_graphs(text, error):
    with pytest.raises(error):
        parse_graph(text)


def test_labels_round_trip():
    g = fig1()
    again = parse_graph(format_graph(g))
    assert again.labels == g.labels
    assert set(again.edges()) == set(g.edges())


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 499))
def test_graph_round_trip(seed):
    g = generated_instance(seed)
    again = parse_graph(format_graph(g))
    assert again.n == g.n and set(again.edges()) == set(g.edges())


def test_fixtures(tmp_path):
    g1 = load_fixture("fig1")
    assert g1.n == 6 and g1.edge_count == 9
    assert list(g1.labels) == [f"v{i}" for i in range(1, 7)]
    g2 = load_fixture("fig2")
    assert g2.n == 31 and g2.edge_count == 50
    d2 = decompose_tuc(g2)
    assert is_halin(d2)
    v0, v1, v7, v8, v9, v10, v11 = (g2.index(f"v{i}") for i in (0, 1, 7, 8, 9, 10, 11))
    assert g2.adjacency[v0] == {g2.index(f"v{i}") for i in range(1, 6)}
    for cyc in ((v1, v8, v9, v7), (v1, v7, v10, v11)):
        assert all(g2.has_edge(cyc[i], cyc[(i + 1) % 4]) for i in range(4))
    path = tmp_path / "g.graph"
    path.write_text(format_graph(g2))
    assert set(read_graph(path).edges()) == set(g2.edges())


# ---------------------------------------------------------------------------
# representation documents


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 499))
def test_representation_round_trip(seed):
    for rep in all_representations(generated_instance(seed)).values():
        text = format_representation(rep)
        assert parse_representation(text) == rep
        assert format_representation(parse_representation(text)) == text


def test_segment_round_trip():
    rep = Representation("vpg-seg", {0: GridSegment("H", 0, 1, 3), 1: GridSegment("V", 2, 0, 1)}, 1)
    text = format_representation(rep)
    assert "shape 0 H 0 1 3" in text
    assert parse_representation(text) == rep


def test_document_uses_exact_rationals():
    text = format_representation(all_representations(fig1())["C"])
    assert "shape 2 0 5/4 13/4 0 3" in text
    assert "." not in text


@pytest.mark.parametrize(
    "text",
    [
        "",
        "kind vpg-X\nscale 1\nn 0\n",
        "kind vpg-L\nscale two\nn 0\n",
        "kind vpg-L\nscale 1\nn 1\n",
        "kind vpg-L\nscale 1\nn 1\nshape 0 1 2 3\n",
        "kind vpg-L\nscale 1\nn 1\nshape 0 1 2 3 4 5\n",
        "kind vpg-L\nscale 1\nn 2\nshape 0 1 2 3 4\nshape 0 1 2 3 4\n",
        "kind vpg-L\nscale 1\nn 0\nbogus line\n",
        "kind vpg-L\nscale 1\nn 1\nshape 0 1/0 2 3 4\n",
    ],
)
def test_malformed_documents(text):
    with pytest.raises(DocumentFormatError):
        parse_representation(text)


def test_parsed_coordinates_are_fractions():
    rep = parse_representation("kind vpg-L\nscale 2\nn 1\nshape 0 3/2 3 0 3\n")
    assert rep.shapes[0].l_x == Fraction(3, 2)
