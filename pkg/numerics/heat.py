"""Residual of the heat-type equation on Lax-transported wave functions.

Psi_x comes from a centered difference of grids transported to x - h and
x + h, Psi_tt from the gauged t-equation, and the operator coefficients
from the elimination pipeline with g = 0. The identity is exact, so the
residual is discretization error only and halves quadratically with h.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from numerics.coefficients import heat_coefficients
from numerics.integrator import PviTrajectory, Tolerances
from numerics.wave import WaveGrid, psi_tt, wave_transport_path
from util.config import get_settings

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class HeatResidual:
    t: float
    x: float
    steps: tuple[float, ...]
    residuals: tuple[float, ...]

    @property
    def residual_h(self) -> float:
        return self.residuals[0]

    @property
    def residual_h2(self) -> float:
        return self.residuals[1]

    @property
    def orders(self) -> tuple[float, ...]:
        """log2 of the ratio of consecutive residuals."""
        orders = []
        for coarse, fine in zip(self.residuals, self.residuals[1:]):
            orders.append(math.inf if fine == 0 else math.log2(coarse / fine))
        return tuple(orders)

    @property
    def order(self) -> float:
        return self.orders[-1]

    def passed(self, min_order: float | None = None) -> bool:
        if min_order is None:
            min_order = get_settings().MIN_CONVERGENCE_ORDER
        return all(order >= min_order for order in self.orders)


def heat_sweep(
    traj: PviTrajectory,
    grid: WaveGrid,
    x: float,
    h: float,
    tol: Tolerances | None = None,
    psi_coefficient_shift: float = 0.0,
) -> list[HeatResidual]:
    """Residuals at every grid node for steps h, h/2, ..., one level per Richardson level."""
    tol = tol or traj.tolerances
    if h <= 0:
        raise ValueError(f"h must be positive, got {h}")
    steps = [h / 2**k for k in range(tol.richardson_levels)]
    levels = len(steps)
    targets = [x, *(x - step for step in steps), *(x + step for step in steps)]
    grids = wave_transport_path(traj, grid, targets, tol)

    at_x = grids[0]
    second = psi_tt(traj, at_x)
    heat = heat_coefficients(traj.theta)
    u, u1 = traj(x)
    args = (at_x.nodes, x, u, u1)
    c_tt, c_t, c_x = heat.c_tt(*args), heat.c_t(*args), heat.c_x(*args)
    c_0 = heat.c_0(*args) + psi_coefficient_shift

    table = np.empty((levels, len(at_x.nodes)))
    for k, step in enumerate(steps):
        psi_x = (grids[1 + levels + k].psi - grids[1 + k].psi) / (2 * step)
        table[k] = np.abs(c_tt * second + c_t * at_x.dpsi + c_x * psi_x + c_0 * at_x.psi)

    results = [
        HeatResidual(float(node), float(x), tuple(steps), tuple(float(r) for r in table[:, j]))
        for j, node in enumerate(at_x.nodes)
    ]
    for result in results:
        log.info("heat: t = %s, x = %s, residuals %s, observed order %.3f",
                 result.t, result.x, ", ".join(f"{r:.3e}" for r in result.residuals), result.order)
    return results


def heat_residual(
    traj: PviTrajectory,
    grid: WaveGrid,
    t_node: float,
    x: float,
    h: float,
    tol: Tolerances | None = None,
    psi_coefficient_shift: float = 0.0,
) -> HeatResidual:
    matches = np.flatnonzero(np.isclose(grid.nodes, t_node, rtol=0.0, atol=1e-12))
    if not len(matches):
        raise ValueError(f"t = {t_node} is not a node of the grid")
    return heat_sweep(traj, grid.subgrid(int(matches[0])), x, h, tol, psi_coefficient_shift)[0]
