"""Angle-sampled circle discretizations and a classic midpoint rasterizer.

The angle samples place 2r points on the quarter circle at phi = n pi / (4r);
the floor and round variants snap those samples to the lattice.  The
midpoint rasterizer is the textbook integer scheme with second-order
increments, kept verbatim including the seam pixels its eight-way plotter
emits twice, so its output doubles as a known-invalid baseline for the
path checker.
"""

from __future__ import annotations

import enum
import math

from latticircle.lattice import Point


class DiscretizationSource(enum.Enum):
    """Where a circle discretization's sample points come from."""

    SIGNUM = "signum"
    PARAM_EXACT = "param-exact"
    PARAM_FLOOR = "param-floor"
    PARAM_ROUND = "param-round"
    MIDPOINT = "midpoint"


def phi_n(r: int, n: int) -> float:
    """Sample angle n pi / (4r) for index n in [0, 2r - 1]."""
    if r < 1:
        raise ValueError("radius must be >= 1")
    if not 0 <= n <= 2 * r - 1:
        raise ValueError(f"sample index {n} outside [0, {2 * r - 1}]")
    return n * math.pi / (4 * r)


def a_param_exact(r: int, n: int) -> float:
    """Manhattan distance r (cos phi + sin phi) of the exact circle sample."""
    phi = phi_n(r, n)
    return r * (math.cos(phi) + math.sin(phi))


def a_param_floor(r: int, n: int) -> int:
    """Manhattan distance floor(r cos phi) + floor(r sin phi)."""
    phi = phi_n(r, n)
    return math.floor(r * math.cos(phi)) + math.floor(r * math.sin(phi))


def a_param_round(r: int, n: int) -> int:
    """Manhattan distance floor(r cos phi + 1/2) + floor(r sin phi + 1/2)."""
    phi = phi_n(r, n)
    return math.floor(r * math.cos(phi) + 0.5) + math.floor(r * math.sin(phi) + 0.5)


def midpoint_quadrant(r: int) -> list[Point]:
    """First-quadrant points of the textbook midpoint circle, ordered by angle.

    Emits the octant from (0, r) toward the diagonal with the second-order
    increment scheme, then mirrors it across the diagonal.  The octant loop
    runs while y > x and so crosses the diagonal; mirroring therefore
    repeats the seam points, exactly as the textbook eight-way plotter
    paints them twice.  Diagonal gaps and those duplicates are the point:
    this output is the known-invalid baseline, not a usable path.
    """
    if r < 1:
        raise ValueError("radius must be >= 1")
    x, y = 0, r
    d = 1 - r
    delta_e = 3
    delta_se = -2 * r + 5
    octant: list[Point] = [(x, y)]
    while y > x:
        if d < 0:
            d += delta_e
            delta_e += 2
            delta_se += 2
        else:
            d += delta_se
            delta_e += 2
            delta_se += 4
            y -= 1
        x += 1
        octant.append((x, y))
    pts = octant + [(py, px) for px, py in octant]
    pts.sort(key=lambda p: math.atan2(p[1], p[0]))
    return pts
