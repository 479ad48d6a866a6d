"""Deterministic SVG rendering: lattice grid, path polyline, optional circle.

Output is plain SVG 1.1 text with one lattice unit drawn as 8 px and the
y axis pointing up.  No timestamps or randomness: identical input gives
identical bytes.
"""

from __future__ import annotations

from typing import Sequence

from latticircle.lattice import Point

UNIT = 8  # px per lattice unit


def render_path_svg(
    points: Sequence[Point],
    radius: int,
    closed: bool = False,
    overlay_circle: bool = False,
) -> str:
    """Render a lattice path; ``closed`` draws a polygon, else a polyline.

    ``overlay_circle`` adds the real circle of ``radius`` around the origin
    for visual comparison.
    """
    if not points:
        raise ValueError("nothing to render")
    xmin = min(x for x, _ in points) - 1
    xmax = max(x for x, _ in points) + 1
    ymin = min(y for _, y in points) - 1
    ymax = max(y for _, y in points) + 1
    width = (xmax - xmin) * UNIT
    height = (ymax - ymin) * UNIT

    def tx(x: int) -> int:
        return (x - xmin) * UNIT

    def ty(y: int) -> int:
        return (ymax - y) * UNIT

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
        '<g stroke="#dddddd" stroke-width="1">',
    ]
    for gx in range(xmin, xmax + 1):
        px = tx(gx)
        lines.append(f'<line x1="{px}" y1="0" x2="{px}" y2="{height}"/>')
    for gy in range(ymin, ymax + 1):
        py = ty(gy)
        lines.append(f'<line x1="0" y1="{py}" x2="{width}" y2="{py}"/>')
    lines.append("</g>")

    if overlay_circle:
        lines.append(
            f'<circle cx="{tx(0)}" cy="{ty(0)}" r="{radius * UNIT}" '
            'fill="none" stroke="#999999" stroke-width="1" stroke-dasharray="4 4"/>'
        )

    coords = " ".join(f"{tx(x)},{ty(y)}" for x, y in points)
    shape = "polygon" if closed else "polyline"
    lines.append(
        f'<{shape} points="{coords}" fill="none" stroke="#000000" stroke-width="2"/>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
