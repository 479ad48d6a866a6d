"""Recursive circle construction driven by exact sign decisions.

From a quadrant point (x, y) the path moves either left to (x-1, y) or up
to (x, y+1), whichever lands radially closer to the circle of radius r;
the leftward move wins exact ties.  Comparisons that would involve square
roots are resolved by repeated squaring in integer arithmetic, so every
platform produces the same trace and no radius overflows (Python integers
are unbounded).

Three equivalent step deciders are provided:

* ``cost_exact``     compares the radial deviations of the two candidate
                     points directly,
* ``cost_simplified`` is the same decision rewritten in the diagonal
                     coordinates a = x + y and c = x - y - 1,
* ``cost_approx``    drops the square roots altogether and keeps only the
                     quadratic term; it is admitted for radius >= 5.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from latticircle.lattice import Point, rotate90


class CostVariant(enum.Enum):
    """Which step decider drives the recursion."""

    EXACT = "exact"
    SIMPLIFIED = "simplified"
    APPROX = "approx"


def sgn(v) -> int:
    """Sign of v with the tie convention sgn(0) = -1."""
    return -1 if v <= 0 else 1


def cost_exact(x: int, y: int, r: int) -> int:
    """Step decision at (x, y) for radius r: +1 steps up, -1 steps left.

    Decides the sign of |r - sqrt((x-1)^2 + y^2)| - |r - sqrt(x^2 + (y+1)^2)|
    without floating point.  Writing u and v for the two squared candidate
    norms, the difference of squared deviations factors as
    (sqrt(u) - sqrt(v)) (sqrt(u) + sqrt(v) - 2r), and u < v always holds
    here (their difference is -2(x+y)), so only sqrt(u) + sqrt(v) versus 2r
    remains.  One more squaring reduces that to integer comparisons.
    """
    if r < 1:
        raise ValueError("radius must be >= 1")
    if x < 0 or y < 0 or (x == 0 and y == 0):
        raise ValueError("cost_exact needs a quadrant point other than the origin")
    u = (x - 1) * (x - 1) + y * y
    v = x * x + (y + 1) * (y + 1)
    # sqrt(u) + sqrt(v) < 2r  <=>  t > 0 and 4uv < t^2, with t = 4r^2 - u - v;
    # equality lands on the tie branch and ties step left.
    t = 4 * r * r - u - v
    return 1 if t > 0 and 4 * u * v < t * t else -1


def cost_simplified(a: int, c: int, r: int) -> int:
    """Step decision in diagonal coordinates: a = x + y, c = x - y - 1.

    Returns -sgn(a + (r/sqrt(2)) (sqrt((a-1)^2 + c^2) - sqrt((a+1)^2 + c^2))),
    decided exactly.  With p = (a-1)^2 + c^2 and q = (a+1)^2 + c^2 the inner
    expression has the sign of sqrt(2) a - r (sqrt(q) - sqrt(p)); both sides
    are nonnegative, so two squarings settle it in integers.  On the path c
    equals r - n - 1 at step n and may be negative; only c^2 enters.
    """
    if r < 1:
        raise ValueError("radius must be >= 1")
    if a < 1:
        raise ValueError("cost_simplified needs a = x + y >= 1")
    p = (a - 1) * (a - 1) + c * c
    q = (a + 1) * (a + 1) + c * c
    # sqrt(2) a vs r (sqrt(q) - sqrt(p)): square once to
    #   2 a^2 vs r^2 (p + q) - 2 r^2 sqrt(pq),
    # i.e. 2 r^2 sqrt(pq) vs w = r^2 (p + q) - 2 a^2, then square again.
    w = r * r * (p + q) - 2 * a * a
    if w < 0:
        return -1
    # d == 0 is the exact tie: the inner expression is 0 and -sgn(0) = +1.
    d = 4 * r ** 4 * p * q - w * w
    return -1 if d > 0 else 1


def cost_approx(a: int, c: int, r: int) -> int:
    """Integer-only step decision: -sgn(a^2 + c^2 + 1 - 2 r^2).

    Keeping just the quadratic term of the simplified decision never flips
    a sign for integer states once r >= 5 (the dropped terms are too small
    to cross an integer boundary), so the variant is admitted only there.
    """
    if r < 5:
        raise ValueError("approx requires radius ≥ 5")
    if a < 1:
        raise ValueError("cost_approx needs a = x + y >= 1")
    return -sgn(a * a + c * c + 1 - 2 * r * r)


@dataclass(frozen=True)
class QuadrantTrace:
    """Complete record of one quarter-circle recursion.

    Index n runs over the 2r generated points.  ``signs[n]`` is the step
    decision taken at point n (+1 up, -1 left), ``l1_dists[n]`` the
    Manhattan distance x + y of point n from the center, and
    ``sign_sums[n]`` the running sum of decisions up to and including n.
    """

    radius: int
    variant: CostVariant
    xs: tuple[int, ...]
    ys: tuple[int, ...]
    signs: tuple[int, ...]
    l1_dists: tuple[int, ...]
    sign_sums: tuple[int, ...]

    @property
    def points(self) -> tuple[Point, ...]:
        return tuple(zip(self.xs, self.ys))


def generate_quadrant(r: int, variant: CostVariant = CostVariant.EXACT) -> QuadrantTrace:
    """Walk the quarter circle from (r, 0): 2r points, one decision each.

    The trace stops one step short of the vertical axis; a final leftward
    step from the last point would land on (0, r), which belongs to the
    next quadrant.
    """
    if r < 1:
        raise ValueError("radius must be >= 1")
    n_steps = 2 * r
    xs = [0] * n_steps
    ys = [0] * n_steps
    signs = [0] * n_steps
    l1s = [0] * n_steps
    sums = [0] * n_steps

    x, y = r, 0
    running = 0
    for n in range(n_steps):
        xs[n] = x
        ys[n] = y
        l1s[n] = x + y
        if variant is CostVariant.EXACT:
            s = cost_exact(x, y, r)
        elif variant is CostVariant.SIMPLIFIED:
            s = cost_simplified(x + y, r - n - 1, r)
        else:
            s = cost_approx(x + y, r - n - 1, r)
        signs[n] = s
        running += s
        sums[n] = running
        if s > 0:
            y += 1
        else:
            x -= 1
    assert (x, y) == (0, r), "quarter turn must end one step past (1, r)"
    return QuadrantTrace(
        radius=r,
        variant=variant,
        xs=tuple(xs),
        ys=tuple(ys),
        signs=tuple(signs),
        l1_dists=tuple(l1s),
        sign_sums=tuple(sums),
    )


@dataclass(frozen=True)
class CirclePath:
    """An ordered sequence of lattice points tracing a circle or an arc."""

    radius: int
    points: tuple[Point, ...]
    closed: bool


def assemble_full_circle(trace: QuadrantTrace) -> CirclePath:
    """Counterclockwise full circle: the quadrant plus its three rotations.

    The quadrant's 2r points exclude (0, r), so the four rotated copies are
    disjoint and concatenate to exactly 8r distinct points forming a closed
    4-connected loop.
    """
    quad = trace.points
    pts: list[Point] = []
    for k in range(4):
        pts.extend(rotate90(p, k) for p in quad)
    return CirclePath(radius=trace.radius, points=tuple(pts), closed=True)
