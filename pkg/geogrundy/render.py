"""
SVG figures of a drawing: points as disks, edges stroked by color class.
"""
import logging
import xml.etree.ElementTree as ET
from typing import Iterable, Optional

from . import config
from .constructions.greedy import EdgeColoring
from .exceptions import InputError
from .geometry import PointSet

logger = logging.getLogger(__name__)

GOLDEN_ANGLE = 137.508
MARGIN = 24


def class_color(color: int) -> str:
    """Golden-angle hue stepping keeps neighboring class numbers apart"""
    hue = (color * GOLDEN_ANGLE) % 360
    return f"hsl({hue:.1f},70%,45%)"


def svgroot(size: int) -> ET.Element:
    return ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        version="1.1",
        width=f"{size}px",
        height=f"{size}px",
        viewBox=f"0 0 {size} {size}",
    )


def render_svg(
    s: PointSet,
    coloring: Optional[EdgeColoring] = None,
    classes: Optional[Iterable[int]] = None,
    size: Optional[int] = None,
) -> str:
    size = size or config.SVG_SIZE
    if coloring is not None and coloring.n != len(s):
        raise InputError(f"coloring is for K_{coloring.n} but the point set has {len(s)} points")

    xs = [p.x for p in s]
    ys = [p.y for p in s]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    scale = (size - 2 * MARGIN) / span

    def place(i: int) -> tuple:
        # SVG y grows downwards
        return (
            f"{MARGIN + (s[i].x - min(xs)) * scale:.2f}",
            f"{size - MARGIN - (s[i].y - min(ys)) * scale:.2f}",
        )

    root = svgroot(size)
    edges = ET.SubElement(root, "g", {"stroke-width": "1.5", "stroke-linecap": "round"})
    if coloring is not None:
        wanted = set(classes) if classes is not None else None
        for color, members in coloring.classes().items():
            if wanted is not None and color not in wanted:
                continue
            group = ET.SubElement(edges, "g", {"stroke": class_color(color), "class": f"color-{color}"})
            for e in members:
                (x1, y1), (x2, y2) = place(e.a), place(e.b)
                ET.SubElement(group, "line", x1=x1, y1=y1, x2=x2, y2=y2)

    disks = ET.SubElement(root, "g", fill="#000000")
    for i in range(len(s)):
        cx, cy = place(i)
        ET.SubElement(disks, "circle", cx=cx, cy=cy, r="3")

    logger.debug("rendered %s points at %spx", len(s), size)
    return ET.tostring(root, encoding="unicode") + "\n"
