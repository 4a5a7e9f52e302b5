"""The numeric checks behind `pvi-heat numeric`."""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace

import numpy as np

from numerics.elliptic import legendre_residuals
from numerics.export import heat_frame, trajectory_frame, write_csv
from numerics.heat import HeatResidual, heat_sweep
from numerics.integrator import PviTrajectory, TerminationReason, Tolerances, integrate_pvi
from numerics.wave import WaveGrid
from painleve_forms.theta import Theta

log = logging.getLogger(__name__)

HEAT_NODES = (-0.6, -0.3, 0.8, 1.4, 3.0)


@dataclass(frozen=True)
class NumericOutcome:
    passed: bool
    summary: str


def tolerances(rtol: float | None = None, atol: float | None = None) -> Tolerances:
    tol = Tolerances.from_settings()
    if rtol is not None:
        tol = replace(tol, rtol=rtol)
    if atol is not None:
        tol = replace(tol, atol=atol)
    return tol


def run_pvi(theta: Theta, x0: float, u0: float, du0: float, x_end: float, tol: Tolerances,
            fixed_step: float | None = None, csv: str | None = None) -> tuple[PviTrajectory, NumericOutcome]:
    traj = integrate_pvi(theta, x0, u0, du0, x_end, tol, fixed_step)
    if csv:
        write_csv(trajectory_frame(traj), csv)
    summary = (f"{traj.termination.value} at x = {traj.x[-1]:.12g}: u = {traj.u[-1]:.12g}, "
               f"u' = {traj.u_prime[-1]:.12g} ({traj.n_steps} steps, {traj.nfev} evaluations)")
    return traj, NumericOutcome(traj.termination == TerminationReason.ENDPOINT, summary)


def random_wave_grid(nodes, x: float, seed: int) -> WaveGrid:
    rng = np.random.default_rng(seed)
    n = len(nodes)
    return WaveGrid.of(nodes, rng.normal(size=n) + 1j * rng.normal(size=n),
                       rng.normal(size=n) + 1j * rng.normal(size=n), x)


def run_heat_check(theta: Theta, x0: float, u0: float, du0: float, x: float, h: float, nodes, tol: Tolerances,
                   min_order: float, seed: int = 0, psi_coefficient_shift: float = 0.0,
                   csv: str | None = None) -> tuple[list[HeatResidual], NumericOutcome]:
    """Residuals at x for a random wave function given at x0 <= x - h."""
    if x - h < x0:
        raise ValueError(f"x - h = {x - h} lies before x0 = {x0}")
    traj = integrate_pvi(theta, x0, u0, du0, x + h, tol)
    if traj.termination != TerminationReason.ENDPOINT:
        return [], NumericOutcome(False, f"PVI integration stopped early: {traj.termination.value} "
                                         f"at x = {traj.x[-1]:.12g}")
    results = heat_sweep(traj, random_wave_grid(nodes, x0, seed), x, h, tol, psi_coefficient_shift)
    if csv:
        write_csv(heat_frame(results), csv)
    worst = min(min(r.orders) for r in results)
    summary = f"{len(results)} nodes at x = {x}, lowest observed order {worst:.3f} (threshold {min_order})"
    return results, NumericOutcome(all(r.passed(min_order) for r in results), summary)


def run_legendre(points, threshold: float) -> NumericOutcome:
    rows = legendre_residuals(points)
    worst = max(row.residual for row in rows)
    for row in rows:
        log.info("legendre: t = %s, Psi = %.15g, residual %.3e", row.t, row.psi, row.residual)
    return NumericOutcome(worst <= threshold, f"max residual {worst:.3e} (threshold {threshold:g})")
