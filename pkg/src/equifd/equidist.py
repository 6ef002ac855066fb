"""Numerical grid equidistribution by iterated linearized tridiagonal solves.

The node positions solve the nonlinear central-difference system

    omega_{j+1/2} (x_{j+1} - x_j) - omega_{j-1/2} (x_j - x_{j-1}) = 0,

with x_0 = 0, x_N = ell.  Each sweep freezes the weights at the current
iterate and solves the resulting tridiagonal system; at the fixed point
the discrete equidistribution principle omega_{j+1/2} J_{j+1/2} = const
holds.

Smooth monitors contract plainly.  Piecewise-constant monitors (the
solution-adaptive family) make the sweep map discontinuous and it can
enter a small limit cycle instead of converging; when the displacement
grows between sweeps the update is therefore progressively damped.
Convergence is always measured on the undamped sweep displacement, so a
converged grid moves less than tol under one more full sweep.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import Grid, uniform_grid
from .monitor import MonitorFunction
from .problem import ProblemSpec
from .tridiag import TridiagonalSystem, solve_tridiagonal

DAMPING_FLOOR = 0.25


class EquidistributionError(RuntimeError):
    """Sweeps did not converge; carries the best iterate seen."""

    def __init__(self, message: str, grid: Grid, final_update: float, iterations: int):
        super().__init__(message)
        self.grid = grid
        self.final_update = final_update
        self.iterations = iterations


class MonotonicityError(RuntimeError):
    """An iterate lost strict node ordering (signals a bad monitor)."""


@dataclass(frozen=True)
class EquidistResult:
    """Converged grid plus iteration diagnostics."""

    grid: Grid
    iterations: int
    final_update: float
    equidist_defect: float


def _interval_weights(monitor: MonitorFunction, nodes: np.ndarray) -> np.ndarray:
    w = np.asarray(monitor.interval_values(nodes), dtype=float)
    if w.shape != (len(nodes) - 1,):
        raise ValueError(f"monitor returned {w.shape}, expected ({len(nodes) - 1},)")
    if not np.all(np.isfinite(w)) or np.any(w <= 0.0):
        raise ValueError("monitor values must be finite and strictly positive")
    return w


def _sweep(nodes: np.ndarray, w: np.ndarray) -> np.ndarray:
    """One linearized solve: weights frozen, node positions unknown."""
    rhs = np.zeros(len(w) - 1)
    rhs[0] += w[0] * nodes[0]
    rhs[-1] += w[-1] * nodes[-1]
    sys = TridiagonalSystem(lower=-w[1:-1], diag=w[:-1] + w[1:], upper=-w[1:-1], rhs=rhs)
    new = np.empty_like(nodes)
    new[0] = nodes[0]
    new[-1] = nodes[-1]
    new[1:-1] = solve_tridiagonal(sys)
    return new


def equidist_defect(grid: Grid, monitor: MonitorFunction) -> float:
    """Relative spread of omega_{j+1/2} * J_{j+1/2} around its mean."""
    w = _interval_weights(monitor, grid.nodes)
    c = w * grid.midpoint_jacobian
    mean = float(np.mean(c))
    return float(np.max(np.abs(c - mean)) / mean)


def equidistribute(
    monitor: MonitorFunction,
    spec: ProblemSpec,
    n_cells: int,
    initial: Grid | None = None,
    tol: float = 1e-12,
    max_iter: int = 10000,
) -> EquidistResult:
    """Solve the discrete equidistribution equations for the given monitor.

    Starts from the uniform grid unless an initial grid with the same
    N and ell is supplied.  Raises EquidistributionError after max_iter
    sweeps (the exception carries the best iterate), MonotonicityError
    if an iterate loses node ordering.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if initial is None:
        initial = uniform_grid(spec, n_cells)
    if initial.n_cells != n_cells or initial.ell != spec.ell:
        raise ValueError("initial grid does not match n_cells and ell")

    x = initial.nodes.copy()
    relax = 1.0
    prev_update = None
    best = (np.inf, x)
    for it in range(1, max_iter + 1):
        w = _interval_weights(monitor, x)
        target = _sweep(x, w)
        update = float(np.max(np.abs(target - x)))
        if update < best[0]:
            best = (update, x)
        if update < tol:
            grid = Grid(x, spec.ell)
            return EquidistResult(grid, it, update, equidist_defect(grid, monitor))
        if prev_update is not None and update > prev_update:
            relax = max(0.5 * relax, DAMPING_FLOOR)
        prev_update = update
        x = x + relax * (target - x)
        if np.any(np.diff(x) <= 0.0):
            raise MonotonicityError(
                f"node ordering lost after sweep {it}; monitor values may be invalid"
            )
    raise EquidistributionError(
        f"no convergence after {max_iter} sweeps (best update {best[0]:.3e})",
        grid=Grid(best[1], spec.ell),
        final_update=best[0],
        iterations=max_iter,
    )
