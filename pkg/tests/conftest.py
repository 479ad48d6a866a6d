"""Shared helpers: memoized traces so the suite builds each one once."""

from __future__ import annotations

import functools

from latticircle.signum import CostVariant, QuadrantTrace, generate_quadrant


@functools.lru_cache(maxsize=None)
def cached_trace(r: int, variant: CostVariant = CostVariant.EXACT) -> QuadrantTrace:
    return generate_quadrant(r, variant)
