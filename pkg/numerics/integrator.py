"""Adaptive integration of PVI as the first-order system (u, u') in x."""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable

import numpy as np
import pandas as pd
from scipy.integrate import OdeSolution, solve_ivp

from numerics.coefficients import pvi_function, singular_factor_functions
from numerics.errors import NumericDomainError, SingularInitialDataError
from painleve_forms.theta import Theta
from util.config import Settings, get_settings

log = logging.getLogger(__name__)

DEFAULT_METHOD = "DOP853"
FIXED_STEP_METHOD = "RK45"


class TerminationReason(str, Enum):
    ENDPOINT = "reached endpoint"
    SINGULAR_LOCUS = "approached singular locus"
    STEP_UNDERFLOW = "step underflow"


@dataclass(frozen=True)
class Tolerances:
    rtol: float = 1e-10
    atol: float = 1e-12
    exclusion_radius: float = 1e-3
    blowup_bound: float = 1e8
    richardson_levels: int = 3

    def __post_init__(self):
        for name in ("rtol", "atol"):
            value = getattr(self, name)
            if not 0 < value < 1:
                raise ValueError(f"{name} must lie in (0, 1), got {value}")
        if self.exclusion_radius <= 0:
            raise ValueError(f"exclusion_radius must be positive, got {self.exclusion_radius}")
        if self.blowup_bound <= 0:
            raise ValueError(f"blowup_bound must be positive, got {self.blowup_bound}")
        if isinstance(self.richardson_levels, bool) or not isinstance(self.richardson_levels, int) \
                or self.richardson_levels < 2:
            raise ValueError(f"richardson_levels must be an integer >= 2, got {self.richardson_levels!r}")

    @classmethod
    def from_settings(cls, settings: Settings | None = None) -> "Tolerances":
        settings = settings or get_settings()
        return cls(
            rtol=settings.RTOL,
            atol=settings.ATOL,
            exclusion_radius=settings.EXCLUSION_RADIUS,
            blowup_bound=settings.BLOWUP_BOUND,
            richardson_levels=settings.RICHARDSON_LEVELS,
        )

    def tightened(self, factor: float) -> "Tolerances":
        return replace(self, rtol=self.rtol / factor, atol=self.atol / factor)


@dataclass(frozen=True, eq=False)
class PviTrajectory:
    theta: Theta
    x: np.ndarray
    u: np.ndarray
    u_prime: np.ndarray
    dense: OdeSolution | None
    tolerances: Tolerances
    termination: TerminationReason
    method: str
    n_steps: int
    nfev: int
    message: str = ""

    @property
    def span(self) -> tuple[float, float]:
        return float(min(self.x[0], self.x[-1])), float(max(self.x[0], self.x[-1]))

    def covers(self, lo: float, hi: float) -> bool:
        start, end = self.span
        return start <= min(lo, hi) and max(lo, hi) <= end

    def __call__(self, x_value: float) -> np.ndarray:
        """(u, u') at x_value from the dense output."""
        if self.dense is None or not self.covers(x_value, x_value):
            raise NumericDomainError(f"x = {x_value} outside the trajectory span {self.span}")
        return self.dense(x_value)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"x": self.x, "u": self.u, "u_prime": self.u_prime})


def _exclusion_event(factor: Callable, radius: float):
    def event(x, y):
        return abs(factor(x, y[0])) - radius

    event.terminal = True
    event.direction = -1
    return event


def _blowup_event(bound: float):
    def event(x, y):
        return abs(y[0]) - bound

    event.terminal = True
    event.direction = 1
    return event


def check_initial_point(x0: float, u0: float, radius: float) -> None:
    for name, factor in singular_factor_functions():
        if abs(factor(x0, u0)) < radius:
            raise SingularInitialDataError(name, f"x = {x0}, u = {u0}")


def integrate_pvi(
    theta: Theta,
    x0: float,
    u0: float,
    u1_0: float,
    x_end: float,
    tol: Tolerances | None = None,
    fixed_step: float | None = None,
) -> PviTrajectory:
    """Integrate PVI from (x0, u0, u1_0) towards x_end.

    By default DOP853 runs with tol's rtol/atol. With fixed_step the RK45 pair
    takes steps of exactly that size (the error control never rejects), which
    is what convergence-order measurements need. Integration stops early
    when u comes within the exclusion radius of the singular locus or
    exceeds the blowup bound.
    """
    tol = tol or Tolerances.from_settings()
    check_initial_point(x0, u0, tol.exclusion_radius)
    rhs = pvi_function(theta)

    def system(x, y):
        return np.array([y[1], rhs(x, y[0], y[1])])

    events = [_exclusion_event(factor, tol.exclusion_radius) for _, factor in singular_factor_functions()]
    events.append(_blowup_event(tol.blowup_bound))

    if fixed_step is None:
        method, options = DEFAULT_METHOD, {"rtol": tol.rtol, "atol": tol.atol}
    else:
        if fixed_step <= 0:
            raise ValueError(f"fixed_step must be positive, got {fixed_step}")
        method = FIXED_STEP_METHOD
        options = {"rtol": 1.0, "atol": 1.0, "first_step": fixed_step, "max_step": fixed_step}

    solution = solve_ivp(system, (x0, x_end), [u0, u1_0], method=method, dense_output=True, events=events, **options)

    if solution.status == 0:
        termination = TerminationReason.ENDPOINT
    elif solution.status == 1:
        termination = TerminationReason.SINGULAR_LOCUS
    else:
        termination = TerminationReason.STEP_UNDERFLOW
    log.info("pvi: theta=%s, x in [%s, %s], %d steps, %s", theta.label, x0, solution.t[-1],
             len(solution.t) - 1, termination.value)

    return PviTrajectory(
        theta=theta,
        x=solution.t,
        u=solution.y[0],
        u_prime=solution.y[1],
        dense=solution.sol if len(solution.t) > 1 else None,
        tolerances=tol,
        termination=termination,
        method=method,
        n_steps=len(solution.t) - 1,
        nfev=solution.nfev,
        message=solution.message,
    )
