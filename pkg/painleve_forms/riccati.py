"""Riccati forms, residues of the gauged pair and the PVI Hamiltonian.

    R(a, b, c) = x(x-1) u1 + a (u-1)(u-x) + b u(u-x) + (c-1) u(u-1)
    K          = (1 - th_0 - th_1 - th_x)^2 - th_inf^2

R = 0 together with K = 0 is the locus of the one-parameter family of
Riccati (hypergeometric) solutions of PVI.
"""

from __future__ import annotations

from dataclasses import dataclass

from exact_kernel.derivation import Derivation
from exact_kernel.field import RatFunc, as_ratfunc, p, substitute, u, u1, x
from painleve_forms.pvi import x_flow
from painleve_forms.theta import Theta

D = x * (x - 1)
P3 = u * (u - 1) * (u - x)


def riccati_R(a, b, c) -> RatFunc:
    a, b, c = as_ratfunc(a), as_ratfunc(b), as_ratfunc(c)
    return D * u1 + a * (u - 1) * (u - x) + b * u * (u - x) + (c - 1) * u * (u - 1)


def riccati_K(theta: Theta) -> RatFunc:
    return (1 - theta.th_0 - theta.th_1 - theta.th_x) ** 2 - theta.th_inf**2


def big_theta(theta: Theta) -> RatFunc:
    """Theta(u) = R(th_0, th_1, th_x) - x(x-1) u1."""
    return theta.th_0 * (u - 1) * (u - x) + theta.th_1 * u * (u - x) + (theta.th_x - 1) * u * (u - 1)


@dataclass(frozen=True)
class RiccatiForms:
    theta: Theta
    K: RatFunc

    def R(self, a, b, c) -> RatFunc:
        return riccati_R(a, b, c)

    @property
    def R_theta(self) -> RatFunc:
        return riccati_R(self.theta.th_0, self.theta.th_1, self.theta.th_x)


def riccati_forms(theta: Theta) -> RiccatiForms:
    return RiccatiForms(theta, riccati_K(theta))


@dataclass(frozen=True)
class Residues:
    R0: RatFunc
    R1: RatFunc
    Rx: RatFunc
    Ru: RatFunc

    def psi_coefficient(self, t_var) -> RatFunc:
        """(R0/t + R1/(t-1) + Rx/(t-x) + 2 Ru/(t-u)) / (4 u(u-1)(u-x))."""
        return (self.R0 / t_var + self.R1 / (t_var - 1) + self.Rx / (t_var - x) + 2 * self.Ru / (t_var - u)) / (4 * P3)


def residues(theta: Theta) -> Residues:
    forms = riccati_forms(theta)
    th0, th1, thx = theta.th_0, theta.th_1, theta.th_x
    Ru = forms.R_theta
    K = forms.K
    return Residues(
        R0=-(Ru * riccati_R(2 - th0, -th1, -thx) + K * P3 * u) / x,
        R1=-(Ru * riccati_R(-th0, 2 - th1, -thx) + K * P3 * (u - 1)) / (1 - x),
        Rx=-(Ru * riccati_R(-th0, -th1, 2 - thx) + K * P3 * (u - x)) / D,
        Ru=Ru,
    )


def momentum(theta: Theta) -> RatFunc:
    """p = R(th_0, th_1, th_x) / (2 u(u-1)(u-x)) as a function of (x, u, u1)."""
    return riccati_forms(theta).R_theta / (2 * P3)


def velocity_in_momentum(theta: Theta) -> RatFunc:
    """u1 expressed through (u, p, x), inverting `momentum`."""
    return (2 * P3 * p - big_theta(theta)) / D


def hamiltonian(theta: Theta) -> RatFunc:
    """H(u, p, x) = [u(u-1)(u-x) p^2 - Theta(u) p + K (u-x)/4] / (x(x-1))."""
    K = riccati_K(theta)
    return (P3 * p**2 - big_theta(theta) * p + K * (u - x) / 4) / D


def hamiltonian_from_residue(theta: Theta) -> RatFunc:
    """-Rx / (4 u(u-1)(u-x)), in (x, u, u1)."""
    return -residues(theta).Rx / (4 * P3)


def hamiltonian_check(theta: Theta) -> RatFunc:
    """-Rx/(4u(u-1)(u-x)) rewritten in (u, p, x), times x(x-1), minus the polynomial Hamiltonian."""
    rewritten = substitute(hamiltonian_from_residue(theta), u1, velocity_in_momentum(theta))
    return rewritten * D - hamiltonian(theta) * D


def hamilton_velocity_defect(theta: Theta) -> RatFunc:
    """dH/dp with p = momentum, minus u1."""
    return substitute(hamiltonian(theta).diff(p), p, momentum(theta)) - u1


def hamilton_flow_defect(theta: Theta, flow: Derivation | None = None) -> RatFunc:
    """x-flow of the momentum plus dH/du, both in (x, u, u1)."""
    flow = flow or x_flow(theta)
    return flow(momentum(theta)) + substitute(hamiltonian(theta).diff(u), p, momentum(theta))


def riccati_theta(theta: Theta) -> Theta:
    """The same finite exponents with th_inf = 1 - th_0 - th_1 - th_x, so that K = 0."""
    return Theta(1 - theta.th_0 - theta.th_1 - theta.th_x, theta.th_0, theta.th_1, theta.th_x)


def riccati_flow_defect(theta: Theta) -> RatFunc:
    """x-flow of R(th_0, th_1, th_x) restricted to R = 0, on the K = 0 locus."""
    locus = riccati_theta(theta)
    R = riccati_R(locus.th_0, locus.th_1, locus.th_x)
    on_locus = -big_theta(locus) / D
    return substitute(x_flow(locus)(R), u1, on_locus)
