"""Quarter-disc area from the recursion, and integer cell-count bounds.

Every upward step of the quarter-circle walk closes off a vertical strip
of x unit cells, so summing x over the upward steps gives the area
enclosed by the path, the axes included.  Counting unit cells whose far
corner stays inside the circle (inner) and whose near corner does (outer)
brackets that area, and 4 area / r^2 approaches pi as r grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from latticircle.signum import CostVariant, QuadrantTrace, generate_quadrant


def area_recursive(trace: QuadrantTrace) -> int:
    """Cells under the quarter path: sum of x over upward steps n <= 2r - 2.

    The final decision of the trace never contributes (it is always a
    leftward step), so the sum over the first 2r - 1 decisions is the whole
    quarter-disc area.
    """
    xs = trace.xs
    signs = trace.signs
    return sum(xs[n] for n in range(2 * trace.radius - 1) if signs[n] > 0)


def inner_outer_areas(r: int) -> tuple[int, int]:
    """Unit-cell counts bracketing the quarter-disc area.

    A cell with lower-left corner (i, j), i, j >= 0, counts as inner when
    its far corner satisfies (i+1)^2 + (j+1)^2 <= r^2 and as outer when its
    near corner satisfies i^2 + j^2 < r^2.
    """
    if r < 1:
        raise ValueError("radius must be >= 1")
    rsq = r * r
    # inner: a far corner at x = i (1 <= i <= r) admits far-corner heights
    # 1..isqrt(r^2 - i^2)
    inner = sum(math.isqrt(rsq - i * i) for i in range(1, r + 1))
    # outer: a near corner at x = i (0 <= i < r) admits heights j with
    # j^2 < r^2 - i^2, i.e. 0..isqrt(r^2 - i^2 - 1)
    outer = sum(math.isqrt(rsq - i * i - 1) + 1 for i in range(r))
    return inner, outer


def check_sum_identity(trace: QuadrantTrace) -> bool:
    """Running decision sums tie to the area:
    sum_{k=1}^{2r-2} sign_sums[k-1] == 2 area - r^2 - 1."""
    r = trace.radius
    lhs = sum(trace.sign_sums[k - 1] for k in range(1, 2 * r - 1))
    return lhs == 2 * area_recursive(trace) - r * r - 1


@dataclass(frozen=True)
class AreaReport:
    """Area of one quarter path with its cell-count bracket and pi ratio."""

    radius: int
    area: int
    inner: int
    outer: int
    ratio: float


def area_report(radius: int, variant: CostVariant = CostVariant.EXACT) -> AreaReport:
    """Generate the trace for ``radius`` and report area, bounds and ratio."""
    trace = generate_quadrant(radius, variant)
    area = area_recursive(trace)
    inner, outer = inner_outer_areas(radius)
    return AreaReport(
        radius=radius,
        area=area,
        inner=inner,
        outer=outer,
        ratio=4 * area / (radius * radius),
    )
