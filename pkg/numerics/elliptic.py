"""The complete elliptic integral K by the arithmetic-geometric mean, and the
Legendre check of the Picard reduction.

Psi(t) = (2/pi) K(sqrt(t)) = 1/agm(1, sqrt(1-t)) = 2F1(1/2, 1/2; 1; t), with
Psi' = 1/4 2F1(3/2, 3/2; 2; t) and Psi'' = 9/32 2F1(5/2, 5/2; 3; t).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from numerics.coefficients import legendre_coefficients
from numerics.errors import NumericDomainError

AGM_RTOL = 1e-15
AGM_MAX_ITER = 64
SERIES_MAX_TERMS = 100_000
LEGENDRE_POINTS = (0.25, 0.5, 0.75)


def agm(a: float, b: float) -> float:
    if a < 0 or b < 0:
        raise NumericDomainError(f"agm needs non-negative arguments, got ({a}, {b})")
    for _ in range(AGM_MAX_ITER):
        if abs(a - b) <= AGM_RTOL * abs(a):
            return (a + b) / 2
        a, b = (a + b) / 2, np.sqrt(a * b)
    raise NumericDomainError(f"agm did not converge in {AGM_MAX_ITER} iterations")


def elliptic_K_agm(k: float) -> float:
    """K(k) = pi / (2 agm(1, sqrt(1 - k^2))) for the modulus 0 <= k < 1."""
    if not 0 <= k < 1:
        raise NumericDomainError(f"K(k) needs 0 <= k < 1, got {k}")
    return np.pi / (2 * agm(1.0, np.sqrt(1 - k * k)))


def hypergeometric_2f1(a: float, b: float, c: float, z: float) -> float:
    """Power series of 2F1(a, b; c; z) for 0 <= z < 1, summed until a term is below machine precision."""
    if not 0 <= z < 1:
        raise NumericDomainError(f"the series needs 0 <= z < 1, got {z}")
    total, term = 1.0, 1.0
    for n in range(SERIES_MAX_TERMS):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        if abs(term) <= np.finfo(float).eps * abs(total):
            return total
    raise NumericDomainError(f"2F1({a}, {b}; {c}; {z}) did not converge in {SERIES_MAX_TERMS} terms")


def legendre_psi(t: float) -> float:
    if not 0 <= t < 1:
        raise NumericDomainError(f"Psi(t) needs 0 <= t < 1, got {t}")
    return 1.0 / agm(1.0, np.sqrt(1 - t))


def legendre_derivatives(t: float) -> tuple[float, float]:
    return 0.25 * hypergeometric_2f1(1.5, 1.5, 2.0, t), 9 / 32 * hypergeometric_2f1(2.5, 2.5, 3.0, t)


@dataclass(frozen=True)
class LegendrePoint:
    t: float
    psi: float
    residual: float


def legendre_residuals(points: Iterable[float] = LEGENDRE_POINTS, psi_coefficient_shift: float = 0.0) -> list[LegendrePoint]:
    op = legendre_coefficients()
    rows = []
    for t in points:
        if not 0 < t < 1:
            raise NumericDomainError(f"legendre check points must lie in (0, 1), got {t}")
        psi = legendre_psi(t)
        d1, d2 = legendre_derivatives(t)
        residual = op.c_tt(t) * d2 + op.c_t(t) * d1 + (op.c_0(t) + psi_coefficient_shift) * psi
        rows.append(LegendrePoint(t, psi, abs(float(residual))))
    return rows


def legendre_check(points: Iterable[float] = LEGENDRE_POINTS, psi_coefficient_shift: float = 0.0) -> float:
    """Largest residual of the Picard reduction on the AGM solution."""
    return max(row.residual for row in legendre_residuals(points, psi_coefficient_shift))
