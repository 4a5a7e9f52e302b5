"""The scalar Lax pair in Garnier's form.

    L1 = d_t^2 + S/2
    L2 = d_x + W d_t - W_t/2

with

    -S/2 = 3/4/(t-u)^2 + (g1 u1 + g0)/((t-u) t (t-1))
           + M/(t (t-1) (t-x)) + f_G(t),
    M    = [(g1 u1)^2 - g0^2] (u-x)/(u(u-1)) - u(u-1)(u-x) f_G(u),
    W    = -t(t-1)(u-x)/((t-u) x(x-1)),
    g1   = -x(x-1)/(2(u-x)),  g0 = -u + 1/2,
    f_G(z) = A/z^2 + B/(z-1)^2 + C/(z-x)^2 + E/(z(z-1)).

The pair is compatible exactly when u(x) solves PVI; `compat_residual`
checks that mechanically by rewriting derivatives of psi.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from exact_kernel.derivation import D_T, Derivation
from exact_kernel.errors import RewriteError
from exact_kernel.field import RatFunc, as_ratfunc, rat, t, u, u1, x
from exact_kernel.fuchs import INFINITY, RiemannScheme, first_order_exponent, frobenius_obstruction, riemann_scheme
from exact_kernel.operators import LinOp
from painleve_forms.theta import FuchsParams, Theta, theta_correspondence

log = logging.getLogger(__name__)

# a + b*psi_t, where a and b multiply psi
Jet = tuple[RatFunc, RatFunc]


def fuchs_potential(fuchs: FuchsParams, z) -> RatFunc:
    z = as_ratfunc(z)
    return fuchs.A / z**2 + fuchs.B / (z - 1) ** 2 + fuchs.C / (z - x) ** 2 + fuchs.E / (z * (z - 1))


@dataclass(frozen=True)
class LaxForms:
    S: RatFunc
    W: RatFunc
    g0: RatFunc
    g1: RatFunc
    fuchs: FuchsParams

    def fG(self, z) -> RatFunc:
        return fuchs_potential(self.fuchs, z)


@dataclass(frozen=True)
class LaxPair:
    L1: LinOp
    L2: LinOp
    forms: LaxForms
    theta: Theta


def garnier_forms(theta: Theta) -> LaxForms:
    _, fuchs = theta_correspondence(theta)
    D = x * (x - 1)
    P3 = u * (u - 1) * (u - x)
    g1 = -D / (2 * (u - x))
    g0 = -u + rat(1, 2)
    M = ((g1 * u1) ** 2 - g0**2) * (u - x) / (u * (u - 1)) - P3 * fuchs_potential(fuchs, u)
    minus_half_S = (
        rat(3, 4) / (t - u) ** 2
        + (g1 * u1 + g0) / ((t - u) * t * (t - 1))
        + M / (t * (t - 1) * (t - x))
        + fuchs_potential(fuchs, t)
    )
    W = -t * (t - 1) * (u - x) / ((t - u) * D)
    return LaxForms(S=-2 * minus_half_S, W=W, g0=g0, g1=g1, fuchs=fuchs)


def build_lax(theta: Theta) -> LaxPair:
    forms = garnier_forms(theta)
    L1 = LinOp.of(c_tt=1, c_0=forms.S / 2)
    L2 = LinOp.of(c_t=forms.W, c_x=1, c_0=-D_T(forms.W) / 2)
    return LaxPair(L1, L2, forms, theta)


def _solved_for_tt(op: LinOp) -> Jet:
    if op.c_x or not op.c_tt:
        raise RewriteError("first operator must be an ODE of second order in t")
    return -op.c_0 / op.c_tt, -op.c_t / op.c_tt


def _solved_for_x(op: LinOp) -> Jet:
    if op.c_tt or not op.c_x:
        raise RewriteError("second operator must be of first order in x and t")
    return -op.c_0 / op.c_x, -op.c_t / op.c_x


def compat_jets(L1: LinOp, L2: LinOp, flow: Derivation) -> Jet:
    """(psi part, psi_t part) of d_x(psi_tt) - d_t^2(psi_x) after rewriting.

    psi_tt is replaced by L1 and psi_x by L2 until only psi and psi_t remain.
    """
    P, R = _solved_for_tt(L1)
    alpha, beta = _solved_for_x(L2)

    def d_t(jet: Jet) -> Jet:
        a, b = jet
        return D_T(a) + b * P, a + D_T(b) + b * R

    psi_tx = d_t((alpha, beta))

    def d_x(jet: Jet) -> Jet:
        a, b = jet
        return (
            flow(a) + a * alpha + b * psi_tx[0],
            flow(b) + a * beta + b * psi_tx[1],
        )

    lhs = d_x((P, R))
    rhs = d_t(psi_tx)
    return lhs[0] - rhs[0], lhs[1] - rhs[1]


def compat_residual(L1: LinOp, L2: LinOp, flow: Derivation) -> RatFunc:
    """The multiplier of psi left by the compatibility condition of L1 and L2."""
    psi_part, psi_t_part = compat_jets(L1, L2, flow)
    if psi_t_part:
        raise RewriteError("rewriting left a psi_t term; the operators are not in normalized form")
    log.debug("compat residual computed with flow %s", flow.name)
    return psi_part


def compatibility_condition(forms: LaxForms, flow: Derivation) -> RatFunc:
    """Closed form of the residual: d_x Q + 2 W_t Q + W Q_t - W_ttt/2 with Q = -S/2."""
    Q = -forms.S / 2
    W = forms.W
    W_t = D_T(W)
    return flow(Q) + 2 * W_t * Q + W * D_T(Q) - D_T(D_T(W_t)) / 2


SCHEME_POINTS = (INFINITY, 0, 1, x, u)


def lax_riemann_scheme(pair: LaxPair) -> RiemannScheme:
    return riemann_scheme(pair.L1, SCHEME_POINTS)


def expected_riemann_scheme(theta: Theta) -> dict:
    """Exponent pairs of L1 keyed like SCHEME_POINTS."""
    half = rat(1, 2)
    return {
        INFINITY: ((1 - theta.th_inf) / 2, (1 + theta.th_inf) / 2),
        0: ((1 - theta.th_0) / 2, (1 + theta.th_0) / 2),
        1: ((1 - theta.th_1) / 2, (1 + theta.th_1) / 2),
        x: ((1 - theta.th_x) / 2, (1 + theta.th_x) / 2),
        u: (-half, 3 * half),
    }


def apparent_obstruction(pair: LaxPair) -> RatFunc:
    """Frobenius obstruction of L1 at t = u for the exponent -1/2 (gap 2)."""
    return frobenius_obstruction(pair.L1, u, rat(-1, 2), 2)


def lax_pde_reduction_exponent(pair: LaxPair) -> RatFunc:
    """Exponent at t = u of W psi_t - W_t/2 psi = 0, the d_x = 0 reduction of L2."""
    reduced = LinOp(c_t=pair.L2.c_t, c_0=pair.L2.c_0)
    return first_order_exponent(reduced, u)
