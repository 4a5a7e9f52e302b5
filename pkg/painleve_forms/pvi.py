"""The sixth Painleve equation as a right-hand side and as an x-derivation."""

from __future__ import annotations

from exact_kernel.derivation import Derivation
from exact_kernel.errors import SingularLocusError
from exact_kernel.field import K, RatFunc, as_ratfunc, substitute_all, u, u1, x
from painleve_forms.theta import PviParams, Theta

# factor name -> factor, in the order reported when several vanish
SINGULAR_FACTORS = (
    ("x", x),
    ("x - 1", x - 1),
    ("u", u),
    ("u - 1", u - 1),
    ("u - x", u - x),
)


def pvi_rhs(params: PviParams) -> RatFunc:
    """u'' as a rational function of (x, u, u1)."""
    P3 = u * (u - 1) * (u - x)
    return (
        (1 / u + 1 / (u - 1) + 1 / (u - x)) * u1**2 / 2
        - (1 / x + 1 / (x - 1) + 1 / (u - x)) * u1
        + P3 / (x**2 * (x - 1) ** 2) * (
            params.alpha
            + params.beta * x / u**2
            + params.gamma * (x - 1) / (u - 1) ** 2
            + params.delta * x * (x - 1) / (u - x) ** 2
        )
    )


def singular_factor(x_value, u_value) -> str | None:
    point = {x: as_ratfunc(x_value), u: as_ratfunc(u_value)}
    for name, factor in SINGULAR_FACTORS:
        if not substitute_all(factor, point):
            return name
    return None


def pvi_rhs_at(params: PviParams, x_value, u_value, u1_value) -> RatFunc:
    """Exact evaluation at a point; SingularLocusError names the vanishing factor."""
    name = singular_factor(x_value, u_value)
    if name is not None:
        raise SingularLocusError(name, f"x = {x_value}, u = {u_value}")
    return substitute_all(pvi_rhs(params), {x: x_value, u: u_value, u1: u1_value})


def x_flow(params: PviParams | Theta) -> Derivation:
    """Total x-derivative along solutions: x -> 1, u -> u1, u1 -> u''."""
    if isinstance(params, Theta):
        params = PviParams.from_theta(params)
    return Derivation("x_flow", {x: K.one, u: u1, u1: pvi_rhs(params)})
