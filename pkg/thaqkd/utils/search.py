"""One-dimensional grid scans with golden-section refinement."""

import math
from collections.abc import Callable, Sequence

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2

IMPROVEMENT_TOL = 1e-12


def gss(f: Callable[[float], float], a: float, b: float, tol: float = 1e-9) -> tuple[float, float]:
    """Golden-section search.

    Given a function f with a single local minimum in [a, b], return a
    sub-interval [c, d] containing the minimum with d - c <= tol.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        return a, b

    steps = math.ceil(math.log(tol / h) / math.log(INV_PHI))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(steps - 1):
        if yc < yd:
            b, d, yd = d, c, yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    return (a, d) if yc < yd else (c, b)


def minimize_on_grid(
    f: Callable[[float], float],
    grid: Sequence[float],
    tol: float = 1e-9,
) -> tuple[float, float]:
    """Minimize f over a sorted grid, then polish the best bracket.

    The coarse minimum is the first grid point attaining the lowest value,
    so ties go to the smaller argument. The bracket around it is refined by
    golden-section search and the refined point replaces the grid point only
    if it is lower by more than IMPROVEMENT_TOL.

    Returns:
        (argmin, minimum)

    Raises:
        ValueError: If the grid is empty
    """
    if len(grid) == 0:
        raise ValueError("search grid is empty")
    values = [f(x) for x in grid]
    best = min(range(len(values)), key=lambda i: (values[i], i))
    x_best, y_best = grid[best], values[best]
    if len(grid) < 2:
        return x_best, y_best

    lo = grid[max(best - 1, 0)]
    hi = grid[min(best + 1, len(grid) - 1)]
    c, d = gss(f, lo, hi, tol)
    x_ref = (c + d) / 2
    y_ref = f(x_ref)
    if y_ref < y_best - IMPROVEMENT_TOL:
        return x_ref, y_ref
    return x_best, y_best


def maximize_on_grid(
    f: Callable[[float], float],
    grid: Sequence[float],
    tol: float = 1e-9,
) -> tuple[float, float]:
    """Maximize f the same way minimize_on_grid minimizes it."""
    x, y = minimize_on_grid(lambda v: -f(v), grid, tol)
    return x, -y
