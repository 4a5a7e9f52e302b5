"""First step: the change of wave function

    psi = t^((1-th_0)/2) (t-1)^((1-th_1)/2) (t-x)^((1-th_x)/2) (t-u)^(-1/2) exp(G(x)) Psi

handled through its logarithmic derivatives only, with G' kept as the inert symbol gp.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from exact_kernel.derivation import Derivation
from exact_kernel.field import gp, rat, t, u, u1, x
from exact_kernel.operators import GaugeLog, LinOp
from exact_kernel.partial_fractions import residue_t
from elimination.certificate import Witness, certify, certify_against_template
from elimination.templates import D, deformation_template, spectral_template
from painleve_forms.lax import LaxPair
from painleve_forms.riccati import residues
from painleve_forms.theta import Theta

log = logging.getLogger(__name__)


def gauge_log_derivatives(theta: Theta) -> GaugeLog:
    half = rat(1, 2)
    lam_t = (
        (1 - theta.th_0) / (2 * t)
        + (1 - theta.th_1) / (2 * (t - 1))
        + (1 - theta.th_x) / (2 * (t - x))
        - half / (t - u)
    )
    # x-derivative along the flow: (t-u)^(-1/2) contributes u1/(2(t-u))
    lam_x = -(1 - theta.th_x) / (2 * (t - x)) + u1 / (2 * (t - u)) + gp
    return GaugeLog(lam_t, lam_x)


@dataclass(frozen=True)
class GaugedPair:
    L1: LinOp
    L2: LinOp
    witnesses: tuple[Witness, ...]


def conjugate_pair(L1: LinOp, L2: LinOp, gauge: GaugeLog) -> tuple[LinOp, LinOp]:
    """L1' is L1 conjugated by the gauge; L2' is x(x-1) times the conjugate of L2."""
    return L1.conjugate(gauge), L2.conjugate(gauge).scale(D)


def residue_witnesses(L1p: LinOp, theta: Theta, rng: random.Random | None = None) -> list[Witness]:
    """4u(u-1)(u-x) times each residue of L1''s psi coefficient against R0, R1, Rx and 2Ru."""
    r = residues(theta)
    scale = 4 * u * (u - 1) * (u - x)
    expected = ((0, "0", r.R0), (1, "1", r.R1), (x, "x", r.Rx), (u, "u", 2 * r.Ru))
    return [
        certify(scale * residue_t(L1p.c_0, pole) - value, "residues", "c_0", name,
                "residue differs from the displayed formula", rng)
        for pole, name, value in expected
    ]


def transform_lax(lax: LaxPair, gauge: GaugeLog, flow: Derivation, rng: random.Random | None = None) -> GaugedPair:
    """Gauge the pair and certify the result against the displayed transformed pair."""
    witnesses = [certify(gauge.cross_defect(flow), "gauge", "lam", message="gauge is not cross-consistent", rng=rng)]
    L1p, L2p = conjugate_pair(lax.L1, lax.L2, gauge)
    witnesses += certify_against_template(L1p, spectral_template(lax.theta), "gauge", rng=rng)
    witnesses += certify_against_template(L2p, deformation_template(lax.theta), "gauge", rng=rng)
    witnesses += residue_witnesses(L1p, lax.theta, rng)
    log.debug("gauge: transformed pair certified for theta=%s", lax.theta.label)
    return GaugedPair(L1p, L2p, tuple(witnesses))
