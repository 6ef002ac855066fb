"""Why uniform grids struggle with boundary layers.

The model problem is -u'' + lam^2 u = 0 on [0, 1] with u(0) = e^{-lam},
u(1) = 1.  Its solution e^{lam (x - 1)} rises from nearly zero to one
inside a layer of width ~1/lam at the right endpoint.  The standard
three-point scheme is second-order accurate on a uniform grid, but its
error constant grows like lam^4 e^{lam (x - 1)}: all the damage happens
in the layer.
"""

import numpy as np

from equifd import (
    ProblemSpec,
    consistency_error,
    exact_solution,
    max_error,
    solve_bvp,
    uniform_grid,
)

spec = ProblemSpec(lam=10.0, ell=1.0)
print(f"lam = {spec.lam:g}: the solution spans {exact_solution(spec, 0.0):.2e} .. 1")
print(f"singular-perturbation parameter eps = 1/lam^2 = {spec.epsilon:g}\n")

print("uniform-grid solve, N = 20:")
grid = uniform_grid(spec, 20)
sol = solve_bvp(grid, spec)
print(f"  max nodal error {max_error(sol):.3e}")

err = np.abs(sol.values - exact_solution(spec, grid.nodes))
worst = grid.nodes[np.argmax(err)]
print(f"  worst node sits at x = {worst:.3f}, right inside the layer\n")

print("the local truncation error tells the same story:")
psi = consistency_error(grid, spec)
print(f"  |psi| at the left end   {abs(psi[0]):.3e}")
print(f"  |psi| next to the layer {abs(psi[-1]):.3e}")
print(f"  ratio {abs(psi[-1] / psi[0]):.0f}, roughly e^(lam*ell) = {np.exp(10.0):.0f}")
print("\nRefining uniformly buys second order but wastes most nodes where")
print("nothing happens; the other demos redistribute them instead.")
