"""SVG drawings of representations: one coloured polyline per vertex."""

from __future__ import annotations

import colorsys
import xml.etree.ElementTree as ET
from pathlib import Path
from typing import Sequence

from .geometry import Representation
from .shapes import to_path

PX_PER_UNIT = 20
MARGIN = 0.05
STROKE = 3
SVG_NS = "http://www.w3.org/2000/svg"


def palette(count: int) -> list[str]:
    """``count`` distinct colours, hues spread by the golden angle."""
    out = []
    for i in range(count):
        r, g, b = colorsys.hls_to_rgb((i * 0.381966) % 1.0, 0.42, 0.75)
        out.append(f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}")
    return out


def emit_svg(
    rep: Representation,
    out: str | Path | None = None,
    names: Sequence[str] | None = None,
) -> str:
    """Render ``rep`` as SVG 1.1 text, also writing it to ``out`` if given.

    Grid coordinates are multiplied by the scale denominator and by
    ``PX_PER_UNIT``, so every point lands on an integer pixel; y grows upward
    as in the layouts.  Each vertex is labelled at its first bend, or at its
    start when the path is straight.
    """
    unit = rep.scale_denominator * PX_PER_UNIT
    polylines = []
    for v in sorted(rep.shapes):
        pts = []
        for x, y in to_path(rep.shapes[v]).vertices:
            px, py = x * unit, -y * unit
            if px.denominator != 1 or py.denominator != 1:
                raise ValueError(f"vertex {v} is off the 1/{rep.scale_denominator} grid")
            pts.append((int(px), int(py)))
        polylines.append((v, pts))

    svg = ET.Element("svg", xmlns=SVG_NS, version="1.1")
    if polylines:
        xs = [x for _, pts in polylines for x, _ in pts]
        ys = [y for _, pts in polylines for _, y in pts]
        w, h = max(xs) - min(xs), max(ys) - min(ys)
        mx = max(MARGIN * w, PX_PER_UNIT)
        my = max(MARGIN * h, PX_PER_UNIT)
        box = (min(xs) - mx, min(ys) - my, w + 2 * mx, h + 2 * my)
    else:
        box = (0, 0, 0, 0)
    svg.set("viewBox", " ".join(f"{b:g}" for b in box))
    svg.set("width", f"{box[2]:g}")
    svg.set("height", f"{box[3]:g}")

    colours = palette(len(polylines))
    for (v, pts), colour in zip(polylines, colours):
        group = ET.SubElement(svg, "g", id=f"vertex-{v}")
        ET.SubElement(
            group,
            "polyline",
            points=" ".join(f"{x},{y}" for x, y in pts),
            fill="none",
            stroke=colour,
            **{"stroke-width": str(STROKE), "stroke-linecap": "round"},
        )
        lx, ly = pts[1] if len(pts) > 2 else pts[0]
        text = ET.SubElement(group, "text", x=str(lx + 4), y=str(ly - 4), fill=colour)
        text.set("font-size", "12")
        text.set("font-family", "sans-serif")
        text.text = names[v] if names is not None else str(v)

    body = ET.tostring(svg, encoding="unicode")
    doc = '<?xml version="1.0" encoding="UTF-8"?>\n' + body + "\n"
    if out is not None:
        Path(out).write_text(doc)
    return doc
