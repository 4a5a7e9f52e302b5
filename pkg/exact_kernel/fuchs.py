"""Local analysis of second-order Fuchsian operators in t.

An operator c_tt*d_t^2 + c_t*d_t + c_0 (no d_x part) is normalized to
psi'' + P psi' + Q psi. At a finite point c the local data are
p0 = [(t-c)P](c) and q0 = [(t-c)^2 Q](c); at infinity they are the limits of
t*P and t^2*Q. In both cases the indicial polynomial is
rho^2 + (p0 - 1) rho + q0, with exponents at infinity taken for psi ~ t^rho.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Union

from exact_kernel.errors import FrobeniusError, IrregularSingularityError, SingularLocusError
from exact_kernel.field import (
    K,
    RatFunc,
    as_ratfunc,
    coefficients_in,
    degree,
    exact_sqrt,
    index_of,
    substitute,
    t,
    taylor_coefficients,
    to_text,
)
from exact_kernel.operators import LinOp
from exact_kernel.partial_fractions import residue_t

INFINITY = "infinity"
Point = Union[RatFunc, Literal["infinity"]]

_T = index_of(t)


def is_infinity(point: Point) -> bool:
    return isinstance(point, str) and point == INFINITY


def point_text(point: Point) -> str:
    return INFINITY if is_infinity(point) else to_text(point)


def normalized(op: LinOp) -> tuple[RatFunc, RatFunc]:
    """(P, Q) of the monic form psi'' + P psi' + Q psi."""
    if op.c_x:
        raise ValueError("local analysis needs an ODE in t; the operator has a d_x part")
    if not op.c_tt:
        raise ValueError("operator is not of second order in t")
    return op.c_t / op.c_tt, op.c_0 / op.c_tt


def _value_at(f: RatFunc, point: RatFunc, what: str) -> RatFunc:
    try:
        return substitute(f, t, point)
    except SingularLocusError as exc:
        raise IrregularSingularityError(f"{what} has no finite limit at t = {to_text(point)}") from exc


def _limit_at_infinity(f: RatFunc, power: int, what: str) -> RatFunc:
    """lim t**power * f(t) as t -> infinity."""
    if not f:
        return K.zero
    num_degree, den_degree = degree(f, t)
    if num_degree + power > den_degree:
        raise IrregularSingularityError(f"{what} grows too fast at t = infinity")
    if num_degree + power < den_degree:
        return K.zero
    lead_num = coefficients_in(f.numer, _T)[num_degree]
    lead_den = coefficients_in(f.denom, _T)[den_degree]
    return K.new(lead_num, lead_den)


def local_data(op: LinOp, point: Point) -> tuple[RatFunc, RatFunc]:
    P, Q = normalized(op)
    if is_infinity(point):
        return _limit_at_infinity(P, 1, "t*P"), _limit_at_infinity(Q, 2, "t^2*Q")
    point = as_ratfunc(point)
    shift = t - point
    return _value_at(shift * P, point, "(t-c)*P"), _value_at(shift**2 * Q, point, "(t-c)^2*Q")


def indicial_polynomial(op: LinOp, point: Point) -> tuple[RatFunc, RatFunc]:
    """(b, c) with indicial polynomial rho^2 + b*rho + c."""
    p0, q0 = local_data(op, point)
    return p0 - 1, q0


def indicial_exponents(op: LinOp, point: Point) -> tuple[RatFunc, RatFunc]:
    """The two exponents ((1-p0-r)/2, (1-p0+r)/2), r the exact root of the discriminant.

    Raises ExponentError when the discriminant is not a square in the field.
    """
    b, c0 = indicial_polynomial(op, point)
    root = exact_sqrt(b**2 - 4 * c0)
    return (-b - root) / 2, (-b + root) / 2


def first_order_exponent(op: LinOp, point: Point) -> RatFunc:
    """Exponent of the first-order reduction c_t*psi' + c_0*psi = 0 (d_x dropped)."""
    if op.c_tt or not op.c_t:
        raise ValueError("expected an operator of first order in t")
    ratio = -op.c_0 / op.c_t
    if is_infinity(point):
        return _limit_at_infinity(ratio, 1, "t*c_0/c_t")
    return residue_t(ratio, point)


@dataclass(frozen=True)
class RiemannScheme:
    columns: tuple[tuple[Point, tuple[RatFunc, RatFunc]], ...]

    def exponents(self, point: Point) -> tuple[RatFunc, RatFunc]:
        for column_point, pair in self.columns:
            if is_infinity(column_point) == is_infinity(point) and (is_infinity(point) or column_point == point):
                return pair
        raise KeyError(point_text(point))

    def fuchs_defect(self) -> RatFunc:
        """sum(finite) - sum(infinity) - (points - 2); zero for a Fuchsian equation."""
        total = K.zero
        for point, (e1, e2) in self.columns:
            total += -(e1 + e2) if is_infinity(point) else e1 + e2
        return total - (len(self.columns) - 2)

    def as_rows(self) -> list[tuple[str, str, str]]:
        return [(point_text(point), to_text(e1), to_text(e2)) for point, (e1, e2) in self.columns]


def riemann_scheme(op: LinOp, points) -> RiemannScheme:
    return RiemannScheme(tuple(
        (point if is_infinity(point) else as_ratfunc(point), indicial_exponents(op, point)) for point in points
    ))


def frobenius_obstruction(op: LinOp, point, exponent, gap: int) -> RatFunc:
    """Coefficient that must vanish for a log-free Frobenius solution at `exponent`.

    With (t-c)P = sum p_k s^k, (t-c)^2 Q = sum q_k s^k and
    I(r) = r^2 + (p_0 - 1) r + q_0, the series psi = sum a_n s^(rho+n), a_0 = 1,
    obeys I(rho+n) a_n = -sum_{m<n} ((rho+m) p_(n-m) + q_(n-m)) a_m.
    The obstruction is that sum at n = gap.
    """
    if isinstance(gap, bool) or not isinstance(gap, int) or gap <= 0:
        raise FrobeniusError(f"gap must be a positive integer, got {gap!r}")
    if is_infinity(point):
        raise FrobeniusError("Frobenius expansion is implemented for finite points only")
    point, rho = as_ratfunc(point), as_ratfunc(exponent)
    P, Q = normalized(op)
    shift = t - point
    try:
        ps = taylor_coefficients(shift * P, t, point, gap + 1)
        qs = taylor_coefficients(shift**2 * Q, t, point, gap + 1)
    except SingularLocusError as exc:
        raise IrregularSingularityError(f"t = {to_text(point)} is not a regular singular point") from exc

    b, c0 = ps[0] - 1, qs[0]
    if not (b**2 - 4 * c0):
        raise FrobeniusError(f"exponents at t = {to_text(point)} coincide (gap 0)")

    def indicial(r: RatFunc) -> RatFunc:
        return r**2 + b * r + c0

    def recursion_sum(n: int, series: list[RatFunc]) -> RatFunc:
        return sum(((rho + m) * ps[n - m] + qs[n - m]) * series[m] for m in range(n))

    series = [K.one]
    for n in range(1, gap):
        weight = indicial(rho + n)
        if not weight:
            raise FrobeniusError(f"intermediate resonance at n = {n}")
        series.append(-recursion_sum(n, series) / weight)
    return as_ratfunc(recursion_sum(gap, series))

