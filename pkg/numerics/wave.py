"""Transport of the wave function along the gauged Lax pair.

At each t-node the state (Psi, Psi_t) evolves in x by

    Psi_x  = -(V Psi_t + W Psi) / (x(x-1))
    Psi_tx = -(V_t Psi_t + V Psi_tt + W_t Psi + W Psi_t) / (x(x-1)),
    Psi_tt = -(b Psi_t + Phi Psi),

where d_t^2 + b d_t + Phi is the gauged t-equation and x(x-1) d_x + V d_t + W
is the gauged x-equation with G' = F/(x(x-1)). No derivative in t is
approximated; the nodes are independent of each other.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import solve_ivp

from numerics.coefficients import WaveCoefficients, wave_coefficients
from numerics.errors import WaveTransportError
from numerics.integrator import DEFAULT_METHOD, PviTrajectory, Tolerances

log = logging.getLogger(__name__)

EXCLUSION_SAMPLES = 257


@dataclass(frozen=True, eq=False)
class WaveGrid:
    nodes: np.ndarray
    psi: np.ndarray
    dpsi: np.ndarray
    x: float

    @classmethod
    def of(cls, nodes, psi, dpsi, x: float) -> "WaveGrid":
        nodes = np.asarray(nodes, dtype=float)
        psi, dpsi = np.asarray(psi, dtype=complex), np.asarray(dpsi, dtype=complex)
        if nodes.ndim != 1 or psi.shape != nodes.shape or dpsi.shape != nodes.shape:
            raise ValueError("nodes, psi and dpsi must be one-dimensional and of equal length")
        if len(np.unique(nodes)) != len(nodes):
            raise ValueError("grid nodes must be distinct")
        return cls(nodes, psi, dpsi, float(x))

    def state(self) -> np.ndarray:
        return np.concatenate([self.psi, self.dpsi])

    def with_state(self, state: np.ndarray, x: float) -> "WaveGrid":
        n = len(self.nodes)
        return WaveGrid(self.nodes, state[:n].copy(), state[n:].copy(), float(x))

    def subgrid(self, index: int) -> "WaveGrid":
        keep = slice(index, index + 1)
        return WaveGrid(self.nodes[keep], self.psi[keep], self.dpsi[keep], self.x)

    def combine(self, a: complex, other: "WaveGrid", b: complex) -> "WaveGrid":
        """a*self + b*other on a shared grid."""
        if self.x != other.x or not np.array_equal(self.nodes, other.nodes):
            raise ValueError("grids differ in nodes or x")
        return WaveGrid(self.nodes, a * self.psi + b * other.psi, a * self.dpsi + b * other.dpsi, self.x)


def singular_points(x_value: float, u_value: float) -> tuple[tuple[str, float], ...]:
    return (("0", 0.0), ("1", 1.0), ("x", float(x_value)), ("u", float(u_value)))


def check_exclusion(traj: PviTrajectory, nodes: np.ndarray, x_from: float, x_to: float, radius: float) -> None:
    """Raise WaveTransportError if a node comes within radius of 0, 1, x or u(x) on the path.

    A sign change of node - x or node - u(x) between consecutive samples counts as a crossing.
    """
    lo, hi = min(x_from, x_to), max(x_from, x_to)
    inside = traj.x[(traj.x > lo) & (traj.x < hi)]
    previous = None
    for x_value in np.unique(np.concatenate([np.linspace(lo, hi, EXCLUSION_SAMPLES), inside])):
        u_value = traj(x_value)[0]
        for name, point in singular_points(x_value, u_value):
            close = np.abs(nodes - point) < radius
            if close.any():
                node = float(nodes[np.argmax(close)])
                raise WaveTransportError(
                    f"node t = {node} enters the exclusion zone of t = {name} at x = {x_value:.6g}",
                    node=node, x=float(x_value),
                )
        if previous is not None:
            for name, before, after in (("x", previous[0], x_value), ("u", previous[1], u_value)):
                crossed = np.sign(nodes - before) * np.sign(nodes - after) < 0
                if crossed.any():
                    node = float(nodes[np.argmax(crossed)])
                    raise WaveTransportError(
                        f"t = {name} crosses node t = {node} between x = {previous[0]:.6g} and x = {x_value:.6g}",
                        node=node, x=float(x_value),
                    )
        previous = (x_value, u_value)


def exclusion_events(traj: PviTrajectory, nodes: np.ndarray, radius: float) -> list[Callable]:
    """Terminal solve_ivp events for a node reaching the exclusion zone of t = x or t = u(x).

    The zone is entered exactly when node - point - radius or node - point + radius
    changes sign, however long the step.
    """
    events = []
    for node in map(float, nodes):
        for name in ("x", "u"):
            for edge in (-radius, radius):
                def event(x_value, y, node=node, name=name, edge=edge):
                    point = x_value if name == "x" else traj(x_value)[0]
                    return node - point - edge

                event.terminal = True
                event.node, event.point = node, name
                events.append(event)
    return events


def _integrate_to(fun: Callable, start: float, y0: np.ndarray, targets: np.ndarray, tol: Tolerances,
                  events: list[Callable] | None = None) -> np.ndarray:
    """States at each target, columns in the order of targets; one solve per direction."""
    states = np.empty((len(y0), len(targets)), dtype=complex)
    for direction in (1, -1):
        index = np.flatnonzero(direction * (targets - start) > 0)
        if not len(index):
            continue
        index = index[np.argsort(direction * targets[index])]
        solution = solve_ivp(fun, (start, targets[index[-1]]), y0, method=DEFAULT_METHOD,
                             t_eval=targets[index], rtol=tol.rtol, atol=tol.atol, events=events)
        if solution.status == 1:
            hit = next(k for k, found in enumerate(solution.t_events) if len(found))
            event, x_hit = events[hit], float(solution.t_events[hit][0])
            raise WaveTransportError(
                f"node t = {event.node} enters the exclusion zone of t = {event.point} at x = {x_hit:.6g}",
                node=event.node, x=x_hit,
            )
        if solution.status != 0:
            raise WaveTransportError(f"transport failed: {solution.message}")
        states[:, index] = solution.y
    states[:, targets == start] = y0[:, None]
    return states


def transport_system(traj: PviTrajectory, nodes: np.ndarray, coefficients: WaveCoefficients) -> Callable:
    spectral, deformation, deformation_t = coefficients.spectral, coefficients.deformation, coefficients.deformation_t
    n = len(nodes)

    def system(x, y):
        u, u1 = traj(x)
        psi, dpsi = y[:n], y[n:]
        psi_tt = -(spectral.c_t(nodes, x, u, u1) * dpsi + spectral.c_0(nodes, x, u, u1) * psi) \
            / spectral.c_tt(nodes, x, u, u1)
        V, W = deformation.c_t(nodes, x, u, u1), deformation.c_0(nodes, x, u, u1)
        V_t, W_t = deformation_t.c_t(nodes, x, u, u1), deformation_t.c_0(nodes, x, u, u1)
        d = deformation.c_x(nodes, x, u, u1)
        psi_x = -(V * dpsi + W * psi) / d
        dpsi_x = -(V_t * dpsi + V * psi_tt + W_t * psi + W * dpsi) / d
        return np.concatenate([psi_x, dpsi_x])

    return system


def wave_transport_path(
    traj: PviTrajectory,
    grid: WaveGrid,
    x_targets: Sequence[float],
    tol: Tolerances | None = None,
) -> list[WaveGrid]:
    """The grid transported to every x in x_targets."""
    tol = tol or traj.tolerances
    targets = np.asarray(x_targets, dtype=float)
    lo, hi = min(grid.x, targets.min()), max(grid.x, targets.max())
    if not traj.covers(lo, hi):
        raise WaveTransportError(f"x-path [{lo}, {hi}] leaves the trajectory span {traj.span}", x=hi)
    check_exclusion(traj, grid.nodes, lo, hi, tol.exclusion_radius)

    system = transport_system(traj, grid.nodes, wave_coefficients(traj.theta))
    states = _integrate_to(system, grid.x, grid.state(), targets, tol,
                          exclusion_events(traj, grid.nodes, tol.exclusion_radius))
    log.debug("wave: %d nodes transported from x = %s to %d targets", len(grid.nodes), grid.x, len(targets))
    return [grid.with_state(states[:, k], x_value) for k, x_value in enumerate(targets)]


def wave_transport(traj: PviTrajectory, grid: WaveGrid, x_target: float, tol: Tolerances | None = None) -> WaveGrid:
    return wave_transport_path(traj, grid, [x_target], tol)[0]


def psi_tt(traj: PviTrajectory, grid: WaveGrid) -> np.ndarray:
    """Psi_tt at the grid's x from the gauged t-equation."""
    spectral = wave_coefficients(traj.theta).spectral
    u, u1 = traj(grid.x)
    args = (grid.nodes, grid.x, u, u1)
    return -(spectral.c_t(*args) * grid.dpsi + spectral.c_0(*args) * grid.psi) / spectral.c_tt(*args)


def seed_wave_grid(
    traj: PviTrajectory,
    x: float,
    t0: float,
    psi0: complex,
    dpsi0: complex,
    nodes: Sequence[float],
    tol: Tolerances | None = None,
) -> WaveGrid:
    """Values at the nodes of the solution of the t-equation with (Psi, Psi_t)(t0) = (psi0, dpsi0).

    All nodes must lie with t0 in one real interval between consecutive
    points of {0, 1, x, u(x)}.
    """
    tol = tol or traj.tolerances
    nodes = np.asarray(nodes, dtype=float)
    u, u1 = traj(x)
    points = singular_points(x, u)
    lower = max((value for _, value in points if value < t0), default=-np.inf)
    upper = min((value for _, value in points if value > t0), default=np.inf)
    for node in (t0, *nodes):
        near = [name for name, value in points if abs(node - value) < tol.exclusion_radius]
        if near:
            raise WaveTransportError(f"node t = {node} lies in the exclusion zone of t = {near[0]}", node=node, x=x)
        if not lower < node < upper:
            raise WaveTransportError(f"node t = {node} is not in the interval ({lower}, {upper}) of t0 = {t0}",
                                     node=node, x=x)

    spectral = wave_coefficients(traj.theta).spectral

    def system(t_value, y):
        args = (t_value, x, u, u1)
        return np.array([y[1], -(spectral.c_t(*args) * y[1] + spectral.c_0(*args) * y[0]) / spectral.c_tt(*args)])

    states = _integrate_to(system, t0, np.array([psi0, dpsi0], dtype=complex), nodes, tol)
    return WaveGrid.of(nodes, states[0], states[1], x)
