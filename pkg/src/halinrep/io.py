"""Text formats for graphs and representations.

Graph files::

    # label 0 v1
    6 9
    0 1
    ...

The first non-comment line is ``n m``; exactly ``m`` edge lines follow.
``# label <id> <name>`` comments name vertices, other ``#`` lines are ignored.

Representation documents are line-oriented with a fixed field order::

    kind vpg-L
    scale 2
    n 6
    provenance root 3
    shape 0 3/2 3 0 4

Shape coordinates are written as exact rationals (``p/q`` or ``p``), in the
field order of the shape class; ``vpg-seg`` shapes carry the orientation
letter first.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .errors import DocumentFormatError, DuplicateEdge, GraphFormatError, IdOutOfRange
from .geometry import KIND_SHAPE, Representation
from .graph import Graph
from .shapes import GridSegment

DATA_DIR = Path(__file__).parent / "data"


# ---------------------------------------------------------------------------
# graphs


def parse_graph(text: str) -> Graph:
    """Read a graph file; errors carry the 1-based line number."""
    labels: dict[int, str] = {}
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[frozenset[int]] = set()
    label_lines: list[tuple[int, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if parts[:1] == ["label"]:
                if len(parts) != 3 or not _is_int(parts[1]):
                    raise GraphFormatError("label comment must be '# label <id> <name>'", lineno)
                labels[int(parts[1])] = parts[2]
                label_lines.append((int(parts[1]), lineno))
            continue
        parts = line.split()
        if len(parts) != 2 or not all(_is_int(p) for p in parts):
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        a, b = int(parts[0]), int(parts[1])
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("negative count in header", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise IdOutOfRange(f"edge {a} {b} has an id outside 0..{n - 1}", lineno)
        if a == b:
            raise GraphFormatError(f"self-loop at {a}", lineno)
        key = frozenset((a, b))
        if key in seen:
            raise DuplicateEdge(f"edge {a} {b} listed twice", lineno)
        seen.add(key)
        edges.append((a, b))

    if header is None:
        raise GraphFormatError("missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    for v, lineno in label_lines:
        if not 0 <= v < n:
            raise IdOutOfRange(f"label for vertex {v} outside 0..{n - 1}", lineno)
    names = [labels.get(v, str(v)) for v in range(n)] if labels else None
    return Graph.from_edges(n, edges, names)


def format_graph(g: Graph) -> str:
    lines = []
    if g.labels is not None:
        lines += [f"# label {v} {g.labels[v]}" for v in range(g.n)]
    edges = sorted(g.edges())
    lines.append(f"{g.n} {len(edges)}")
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def load_fixture(name: str) -> Graph:
    """Bundled graphs: ``"fig1"`` (6 vertices) and ``"fig2"`` (31 vertices)."""
    return read_graph(DATA_DIR / f"{name}.graph")


def _is_int(s: str) -> bool:
    return s.lstrip("-").isdigit()


# ---------------------------------------------------------------------------
# representations


def _rational(q: Fraction) -> str:
    return str(q)


def format_representation(rep: Representation) -> str:
    shape_cls = KIND_SHAPE[rep.kind]
    lines = [f"kind {rep.kind}", f"scale {rep.scale_denominator}", f"n {len(rep.shapes)}"]
    for key, value in rep.provenance.items():
        if not key or any(ch.isspace() for ch in key):
            raise ValueError(f"provenance key {key!r} must be a single word")
        lines.append(f"provenance {key} {value}".rstrip())
    for v in sorted(rep.shapes):
        s = rep.shapes[v]
        if type(s) is not shape_cls:
            raise ValueError(f"vertex {v} has a {type(s).__name__}, expected {shape_cls.__name__}")
        head = [str(v)] + ([s.orientation] if isinstance(s, GridSegment) else [])
        lines.append("shape " + " ".join(head + [_rational(c) for c in s.coords()]))
    return "\n".join(lines) + "\n"


def parse_representation(text: str) -> Representation:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    fixed_fields = []
    for want, line in zip(("kind", "scale", "n"), lines):
        word, _, value = line.partition(" ")
        if word != want:
            raise DocumentFormatError(f"expected '{want}' line, got {line!r}")
        fixed_fields.append(value.strip())
    if len(fixed_fields) < 3:
        raise DocumentFormatError("document must start with kind, scale and n lines")
    kind, scale_s, n_s = fixed_fields
    if kind not in KIND_SHAPE:
        raise DocumentFormatError(f"unknown kind {kind!r}")
    try:
        scale, n = int(scale_s), int(n_s)
    except ValueError as exc:
        raise DocumentFormatError(f"bad scale or n: {exc}") from None
    shape_cls = KIND_SHAPE[kind]

    provenance: dict[str, str] = {}
    shapes = {}
    for line in lines[3:]:
        word, _, rest = line.partition(" ")
        if word == "provenance":
            key, _, value = rest.partition(" ")
            provenance[key] = value
        elif word == "shape":
            parts = rest.split()
            try:
                v = int(parts[0])
                if shape_cls is GridSegment:
                    shape = GridSegment(parts[1], *(Fraction(p) for p in parts[2:5]))
                    extra = parts[5:]
                else:
                    width = len(shape_cls.field_names)
                    shape = shape_cls(*(Fraction(p) for p in parts[1 : 1 + width]))
                    extra = parts[1 + width :]
            except (IndexError, ValueError, TypeError, ZeroDivisionError) as exc:
                raise DocumentFormatError(f"bad shape line {line!r}: {exc}") from None
            if extra:
                raise DocumentFormatError(f"trailing fields in {line!r}")
            if v in shapes:
                raise DocumentFormatError(f"vertex {v} has two shapes")
            shapes[v] = shape
        else:
            raise DocumentFormatError(f"unexpected line {line!r}")
    if len(shapes) != n:
        raise DocumentFormatError(f"declared {n} shapes, found {len(shapes)}")
    return Representation(kind, shapes, scale, provenance)
