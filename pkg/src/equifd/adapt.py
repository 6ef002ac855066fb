"""Solution-adaptive outer loop: solve, remesh, repeat.

Each outer iteration solves the layer problem on the current grid,
builds the monitor 1 + alpha*|u_x|^beta from that discrete solution,
and equidistributes it to obtain the next grid.  The loop stops when
two consecutive solutions agree at like node indices to within eps
(the solutions live on different grids; the comparison is deliberately
index-wise), or when the grid itself stops moving.

The solve-remesh alternation can oscillate for aggressive monitors
(large alpha with beta >= 1); as in the inner solver, the grid update
is progressively damped whenever the solution change grows.  A stalled
inner equidistribution (possible for rough piecewise-constant monitors,
which need not admit an exact discrete fixed point) is not fatal: its
best iterate is taken and the outer iteration proceeds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .analysis import max_error
from .equidist import DAMPING_FLOOR, EquidistributionError, equidistribute
from .grid import Grid, uniform_grid
from .monitor import DiscreteGradientMonitor
from .problem import ProblemSpec
from .solver import DiscreteSolution, solve_bvp


@dataclass(frozen=True)
class AdaptiveConfig:
    """Monitor parameters and stopping tolerances for the adaptive loop."""

    alpha: float
    beta: float
    eps: float = 1e-10
    max_outer: int = 1000
    inner_tol: float = 1e-12
    inner_max_iter: int = 10000

    def __post_init__(self):
        if self.alpha < 0.0 or self.beta < 0.0:
            raise ValueError("alpha and beta must be >= 0")
        if not self.eps > 0.0:
            raise ValueError("eps must be positive")


@dataclass(frozen=True)
class AdaptiveResult:
    """Final solution with iteration diagnostics.

    outer_iterations counts BVP solves.  history rows are
    (n, error_norm, solution_change, grid_change) with nan for
    quantities undefined at the first iteration.
    """

    solution: DiscreteSolution
    outer_iterations: int
    error_norm: float
    converged: bool
    history: list = field(default_factory=list)

    def write_trace_csv(self, path) -> None:
        from .io import write_csv

        cols = list(zip(*self.history)) if self.history else [[], [], [], []]
        write_csv(path, ["n", "error_norm", "solution_change", "grid_change"], cols)


def adaptive_solve(spec: ProblemSpec, n_cells: int, config: AdaptiveConfig) -> AdaptiveResult:
    """Run the solve-remesh loop from the uniform grid."""
    grid = uniform_grid(spec, n_cells)
    prev_values = None
    prev_change = None
    relax = 1.0
    history = []
    solution = None
    for n in range(1, config.max_outer + 1):
        solution = solve_bvp(grid, spec)
        change = np.nan
        if prev_values is not None:
            change = float(np.max(np.abs(solution.values - prev_values)))
            if change < config.eps:
                history.append((n, max_error(solution), change, 0.0))
                return AdaptiveResult(solution, n, max_error(solution), True, history)
            if prev_change is not None and change > prev_change:
                relax = max(0.5 * relax, DAMPING_FLOOR)
            prev_change = change

        monitor = DiscreteGradientMonitor.from_solution(config.alpha, config.beta, solution)
        try:
            target = equidistribute(
                monitor,
                spec,
                n_cells,
                initial=grid,
                tol=config.inner_tol,
                max_iter=config.inner_max_iter,
            ).grid
        except EquidistributionError as err:
            target = err.grid
        new_nodes = grid.nodes + relax * (target.nodes - grid.nodes)
        grid_change = float(np.max(np.abs(new_nodes - grid.nodes)))
        history.append((n, max_error(solution), change, grid_change))
        if grid_change < config.inner_tol:
            # stationary grid: the next solve would reproduce this solution
            return AdaptiveResult(solution, n, max_error(solution), True, history)
        new_nodes[0] = 0.0
        new_nodes[-1] = spec.ell
        prev_values = solution.values
        grid = Grid(new_nodes, spec.ell)
    return AdaptiveResult(solution, config.max_outer, max_error(solution), False, history)
