"""Shared fixtures: the reference problem and random valid grids."""

import sys

import numpy as np
import pytest

from equifd import Grid, ProblemSpec


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the per-criterion acceptance outcomes after the test summary."""
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def spec10():
    return ProblemSpec(lam=10.0, ell=1.0)


def random_grid(rng, n_cells, ell=1.0, min_frac=0.05):
    """Strictly increasing random grid with a floor on relative step size."""
    steps = min_frac + rng.random(n_cells)
    nodes = np.concatenate([[0.0], np.cumsum(steps)])
    nodes *= ell / nodes[-1]
    nodes[0], nodes[-1] = 0.0, ell
    return Grid(nodes, ell)


@pytest.fixture(scope="session")
def table2_cells():
    """Full 45-cell adaptive sweep, computed once per session."""
    from equifd.experiments import run_table2

    return run_table2()
