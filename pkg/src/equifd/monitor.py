"""Monitor functions for grid equidistribution.

A monitor assigns a positive weight to each grid interval; the
equidistribution solver places nodes so that weight times interval
length is constant.  Three families are provided: a constant weight,
the analytic power monitor (u_x)^beta, and the solution-adaptive
monitor 1 + alpha*|u_x|^beta built from a discrete solution.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .problem import ProblemSpec, exact_derivative


class MonitorFunction:
    """Base class: a positive weight attached to grid intervals."""

    def interval_values(self, nodes: np.ndarray) -> np.ndarray:
        """Weights for the N intervals of the given node array."""
        raise NotImplementedError

    def scaled(self, factor: float) -> "ScaledMonitor":
        return ScaledMonitor(self, factor)


@dataclass(frozen=True)
class ConstantMonitor(MonitorFunction):
    """Uniform weight; equidistributes to the uniform grid."""

    value: float = 1.0

    def __post_init__(self):
        if not self.value > 0.0:
            raise ValueError("monitor value must be positive")

    def interval_values(self, nodes: np.ndarray) -> np.ndarray:
        return np.full(len(nodes) - 1, self.value)


@dataclass(frozen=True)
class ExactPowerMonitor(MonitorFunction):
    """(u_x)^beta with the exact derivative, sampled at interval midpoints."""

    spec: ProblemSpec
    beta: float

    def __post_init__(self):
        if self.beta < 0.0:
            raise ValueError(f"beta must be >= 0, got {self.beta}")

    def interval_values(self, nodes: np.ndarray) -> np.ndarray:
        mid = 0.5 * (nodes[:-1] + nodes[1:])
        return exact_derivative(self.spec, mid, 1) ** self.beta


class DiscreteGradientMonitor(MonitorFunction):
    """1 + alpha*|u_x|^beta with |u_x| taken from a discrete solution.

    The slope on each interval of the solution's own grid is the
    difference quotient |u_{k+1} - u_k| / h_{k+1/2}; as a function of x
    the monitor is piecewise constant, so querying any node set looks up
    the containing interval.
    """

    def __init__(self, alpha: float, beta: float, nodes, values):
        if alpha < 0.0 or beta < 0.0:
            raise ValueError("alpha and beta must be >= 0")
        self.alpha = float(alpha)
        self.beta = float(beta)
        self._nodes = np.asarray(nodes, dtype=float)
        values = np.asarray(values, dtype=float)
        slopes = np.abs(np.diff(values)) / np.diff(self._nodes)
        self._weights = 1.0 + self.alpha * slopes**self.beta

    @classmethod
    def from_solution(cls, alpha: float, beta: float, solution) -> "DiscreteGradientMonitor":
        return cls(alpha, beta, solution.grid.nodes, solution.values)

    def interval_values(self, nodes: np.ndarray) -> np.ndarray:
        mid = 0.5 * (nodes[:-1] + nodes[1:])
        k = np.clip(np.searchsorted(self._nodes, mid, side="right") - 1, 0, len(self._weights) - 1)
        return self._weights[k]


@dataclass(frozen=True)
class ScaledMonitor(MonitorFunction):
    """c * omega for c > 0; equidistribution is invariant under this."""

    inner: MonitorFunction
    factor: float

    def __post_init__(self):
        if not self.factor > 0.0:
            raise ValueError("scale factor must be positive")

    def interval_values(self, nodes: np.ndarray) -> np.ndarray:
        return self.factor * self.inner.interval_values(nodes)
