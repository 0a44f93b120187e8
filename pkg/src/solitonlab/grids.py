"""Rectangular sample grids over a chart."""

from __future__ import annotations

from typing import Mapping, Sequence

import numpy as np

__all__ = ["grid_points"]


def grid_points(
    chart: Sequence[str],
    ranges: Mapping[str, tuple[float, float, int]],
) -> np.ndarray:
    """Cartesian grid as an (N, dim) array, rows in lexicographic order.

    ``ranges`` maps every chart name to (minimum, maximum, count); count
    must be at least 1, and a count of 1 pins the coordinate at the
    minimum.  The first chart coordinate varies slowest.
    """
    chart_t = tuple(chart)
    missing = [name for name in chart_t if name not in ranges]
    if missing:
        raise ValueError(f"grid ranges missing for {missing}")
    extra = [name for name in ranges if name not in chart_t]
    if extra:
        raise ValueError(f"grid ranges name unknown coordinates {extra}")
    axes = []
    for name in chart_t:
        lo, hi, count = ranges[name]
        count = int(count)
        if count < 1:
            raise ValueError(f"grid count for '{name}' must be positive")
        if count == 1:
            axes.append(np.array([float(lo)]))
        else:
            axes.append(np.linspace(float(lo), float(hi), count))
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=-1)
