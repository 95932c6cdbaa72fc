"""Detection-threshold location by coarse sign scan plus bisection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np


@dataclass(frozen=True)
class ThresholdResult:
    """Outcome of a threshold search over a mixing parameter.

    ``found`` is False when the margin never changes sign on the scan
    grid; ``all_positive`` then distinguishes detection everywhere from
    detection nowhere.  When found, ``bracket`` holds the final interval
    of width <= tol around the sign change and ``margins`` the criterion
    margins at its two ends.
    """

    found: bool
    threshold: float | None = None
    bracket: tuple[float, float] | None = None
    margins: tuple[float, float] | None = None
    all_positive: bool = False
    evaluations: int = 0


def find_threshold(
    margin: Callable[[float], float],
    lo: float = 0.0,
    hi: float = 1.0,
    tol: float = 1e-6,
    prescan: int = 64,
) -> ThresholdResult:
    """Locate where ``margin`` crosses zero on [lo, hi].

    A uniform scan of ``prescan`` points guards against non-monotone
    margins; the bracket enclosing the last negative-to-positive
    crossing (so that [threshold, hi] is the detected side) is then
    bisected until its width is at most ``tol``.
    """
    if tol <= 0.0:
        raise ValueError("tolerance must be positive")
    if prescan < 2:
        raise ValueError("prescan needs at least 2 points")
    grid = np.linspace(lo, hi, prescan)
    values = [float(margin(w)) for w in grid]
    evaluations = prescan

    bracket = None
    for i in range(prescan - 1, 0, -1):
        if values[i] > 0.0 >= values[i - 1]:
            bracket = (float(grid[i - 1]), float(grid[i]), values[i - 1], values[i])
            break
    if bracket is None:
        return ThresholdResult(
            found=False,
            all_positive=all(v > 0.0 for v in values),
            evaluations=evaluations,
        )

    a, b, fa, fb = bracket
    while b - a > tol:
        mid = 0.5 * (a + b)
        fm = float(margin(mid))
        evaluations += 1
        if fm > 0.0:
            b, fb = mid, fm
        else:
            a, fa = mid, fm
    return ThresholdResult(
        found=True,
        threshold=0.5 * (a + b),
        bracket=(a, b),
        margins=(fa, fb),
        evaluations=evaluations,
    )
