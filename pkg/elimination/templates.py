"""Operators as displayed at each stage of the elimination, written out by hand.

Every stage of the pipeline is certified coefficientwise against one of
these, so a transcription error here shows up as a certification failure.
"""

from __future__ import annotations

from exact_kernel.field import RatFunc, g, gp, t, u, x
from exact_kernel.operators import LinOp
from painleve_forms.riccati import residues, riccati_K, riccati_R
from painleve_forms.theta import Theta

D = x * (x - 1)
SPECTRAL_CUBIC = t * (t - 1) * (t - x)
LAMBDA13 = -1 / SPECTRAL_CUBIC


def gauged_dt_coefficient(theta: Theta) -> RatFunc:
    return (1 - theta.th_0) / t + (1 - theta.th_1) / (t - 1) + (1 - theta.th_x) / (t - x) - 1 / (t - u)


def spectral_template(theta: Theta) -> LinOp:
    """d_t^2 + (sum (1-th_j)/(t-j) - 1/(t-u)) d_t + (R0/t + R1/(t-1) + Rx/(t-x) + 2Ru/(t-u))/(4u(u-1)(u-x))."""
    return LinOp.of(c_tt=1, c_t=gauged_dt_coefficient(theta), c_0=residues(theta).psi_coefficient(t))


def deformation_template(theta: Theta) -> LinOp:
    Ru = residues(theta).Ru
    return LinOp.of(
        c_t=-t * (t - 1) * (u - x) / (t - u),
        c_x=D,
        c_0=D * gp + Ru / (2 * (t - u)) + (theta.th_0 + theta.th_1 + theta.th_x - 1) * (u - x) / 2,
    )


def heat_dt_coefficient(theta: Theta) -> RatFunc:
    return -((theta.th_0 - 1) / t + (theta.th_1 - 1) / (t - 1) + theta.th_x / (t - x))


def eliminated_template(theta: Theta, F: RatFunc) -> LinOp:
    """The pole-free combination; its psi coefficient is (K(t-x)/4 - x(x-1) gp + F)/(t(t-1)(t-x))."""
    K = riccati_K(theta)
    return LinOp.of(
        c_tt=1,
        c_t=heat_dt_coefficient(theta),
        c_x=-D / SPECTRAL_CUBIC,
        c_0=(K * (t - x) / 4 - D * gp + F) / SPECTRAL_CUBIC,
    )


def display_F(theta: Theta) -> RatFunc:
    """F = -R(th)R(-th)/(4u(u-1)(u-x)) + (th_inf^2 + 1 - (th_0+th_1+th_x)^2)(u-x)/4."""
    th0, th1, thx = theta.th_0, theta.th_1, theta.th_x
    P3 = u * (u - 1) * (u - x)
    return (
        -riccati_R(th0, th1, thx) * riccati_R(-th0, -th1, -thx) / (4 * P3)
        + (theta.th_inf**2 + 1 - (th0 + th1 + thx) ** 2) * (u - x) / 4
    )


def heat_template(theta: Theta) -> LinOp:
    """-x(x-1) d_x + t(t-1)(t-x) d_t^2 - t(t-1)(t-x) (...) d_t + K(t-x)/4 - g."""
    return LinOp.of(
        c_tt=SPECTRAL_CUBIC,
        c_t=SPECTRAL_CUBIC * heat_dt_coefficient(theta),
        c_x=-D,
        c_0=riccati_K(theta) * (t - x) / 4 - g,
    )
