"""Grid path representations of Halin and tree-union-cycle graphs.

Build 1-bend VPG (L-shaped) and 2-bend EPG (C- or S-shaped) layouts, check
them exactly against the graph, and search small graphs for 0-bend VPG
layouts.
"""

from __future__ import annotations

import sys

from .epg import build_c_epg, build_epg_wheel, build_s_epg, c_epg_representation, s_epg_representation
from .errors import (
    DegenerateHeight,
    DegenerateShape,
    DocumentFormatError,
    DuplicateEdge,
    GraphFormatError,
    GridTooSmall,
    HalinRepError,
    IdOutOfRange,
    IsWheel,
    MissingShape,
    NotInternal,
    NotTuc,
    TooSmall,
)
from .generate import gen_halin, gen_tuc
from .geometry import Representation, VerifyReport, condition_matrix, relation_matrix, verify_representation
from .graph import Graph, RootedTree, TucDecomposition, check_consecutive, decompose_tuc, hca, is_halin, root_at
from .io import (
    format_graph,
    format_representation,
    load_fixture,
    parse_graph,
    parse_representation,
    read_graph,
)
from .observations import ObservationResult, all_observations
from .rooting import (
    EpgFrame,
    VpgFrame,
    find_base_pair,
    make_epg_frame,
    make_vpg_frame,
    wheel_epg_frame,
    wheel_vpg_frame,
)
from .search import SearchOutcome, b0vpg_search, normalize_grid_bound
from .shapes import CShape, GridSegment, LShape, OrthoPath, SShape, to_path
from .svg import emit_svg
from .vpg import build_lvpg, build_lvpg_wheel, lvpg_representation

__all__ = sorted(
    name
    for name, value in globals().items()
    if not name.startswith("_") and name != "annotations" and not isinstance(value, type(sys))
)
