"""The Picard case th = 0, g = 0: the t-part of the heat operator is Legendre's equation

    t(t-1) Psi'' + (2t-1) Psi' + Psi/4 = 0,

solved at t = 0 by 2F1(1/2, 1/2; 1; t) = sum ((1/2)_n / n!)^2 t^n.
"""

from __future__ import annotations

from fractions import Fraction

from exact_kernel.errors import CertificationError
from exact_kernel.field import K, RatFunc, as_ratfunc, t, x
from exact_kernel.operators import LinOp
from elimination.pipeline import GChoice, run_pipeline
from painleve_forms.theta import Theta

PICARD_THETA = Theta.of(0, 0, 0, 0)


def picard_reduction() -> LinOp:
    heat = run_pipeline(PICARD_THETA, GChoice.ZERO).heat.op
    reduced = LinOp(heat.c_tt, heat.c_t, K.zero, heat.c_0).map(lambda coeff: coeff / (t - x))
    if reduced.depends_on(x):
        raise CertificationError("picard", "t-part of the heat operator is not divisible by t - x")
    return reduced


def picard_series_coefficients(order: int) -> list[Fraction]:
    coefficients = [Fraction(1)]
    for n in range(order):
        coefficients.append(coefficients[-1] * (Fraction(2 * n + 1, 2 * n + 2)) ** 2)
    return coefficients


def picard_series_defect(order: int, op: LinOp | None = None) -> RatFunc:
    """op applied to the series truncated at t^order, minus the expected remainder a_N (N+1/2)^2 t^N."""
    op = op or picard_reduction()
    coefficients = picard_series_coefficients(order)
    series = sum((as_ratfunc(a) * t**n for n, a in enumerate(coefficients)), K.zero)
    remainder = as_ratfunc(coefficients[order] * Fraction(2 * order + 1, 2) ** 2) * t**order
    return op.apply(series) - remainder
