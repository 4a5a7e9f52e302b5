"""The three-step elimination of u and u1 from the scalar Lax pair.

1. gauge the pair (`elimination.gauge`);
2. add lambda13 times the gauged x-equation to the gauged t-equation so that
   the apparent pole t = u cancels, leaving F, a t-free expression in (x, u, u1);
3. choose G' = (g + F)/(x(x-1)), which absorbs F and leaves an operator with
   coefficients rational in (t, x) only.

Each stage is cached per theta and certified against `elimination.templates`.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from exact_kernel.errors import CertificationError
from exact_kernel.field import K, RatFunc, depends_on, g, gp, substitute, t, u, u1, x
from exact_kernel.operators import LinOp
from exact_kernel.partial_fractions import pole_order, residue_t
from elimination.certificate import EliminationCertificate, Witness, certify, certify_against_template
from elimination.gauge import GaugedPair, gauge_log_derivatives, transform_lax
from elimination.templates import D, LAMBDA13, SPECTRAL_CUBIC, display_F, eliminated_template, heat_template
from painleve_forms.lax import LaxPair, build_lax, compat_residual
from painleve_forms.pvi import x_flow
from painleve_forms.riccati import riccati_K
from painleve_forms.theta import Theta

log = logging.getLogger(__name__)


class GChoice(str, Enum):
    ZERO = "zero"
    SYMBOLIC = "symbolic"


@dataclass(frozen=True)
class EliminatedPair:
    L15: LinOp
    lambda13: RatFunc
    F: RatFunc
    witnesses: tuple[Witness, ...]


@dataclass(frozen=True)
class HeatOperator:
    op: LinOp
    theta: Theta
    g_choice: GChoice

    @property
    def psi_coefficient(self) -> RatFunc:
        return self.op.c_0

    def depends_on_painleve_variables(self) -> bool:
        return self.op.depends_on(u) or self.op.depends_on(u1)


@dataclass(frozen=True)
class PipelineResult:
    lax: LaxPair
    gauged: GaugedPair
    eliminated: EliminatedPair
    heat: HeatOperator
    certificate: EliminationCertificate


def extract_F(L15: LinOp, theta: Theta) -> RatFunc:
    """t(t-1)(t-x) c_0(L15) - K(t-x)/4 + x(x-1) gp."""
    return SPECTRAL_CUBIC * L15.c_0 - riccati_K(theta) * (t - x) / 4 + D * gp


def eliminate_apparent_pole(L1p: LinOp, L2p: LinOp, theta: Theta,
                            rng: random.Random | None = None) -> EliminatedPair:
    r1_t, r2_t = residue_t(L1p.c_t, u), residue_t(L2p.c_t, u)
    r1_0, r2_0 = residue_t(L1p.c_0, u), residue_t(L2p.c_0, u)
    if not r2_t:
        raise CertificationError("eliminate", "the gauged x-equation has no pole at t = u", coefficient="c_t", pole="u")
    witnesses = [
        certify(r1_0 * r2_t - r1_t * r2_0, "eliminate", "c_0", "u",
                "residue quotients at t = u differ between d_t and psi", rng),
    ]

    # the multiplier is fixed at t = u; replacing u by t lifts it
    at_apparent_pole = -r1_t / r2_t
    lambda13 = substitute(at_apparent_pole, u, t)
    witnesses.append(certify(lambda13 - LAMBDA13, "eliminate", "lambda13", message="unexpected multiplier", rng=rng))

    L15 = L1p + L2p.scale(lambda13)
    for slot, coefficient in L15.coefficients().items():
        witnesses.append(certify(residue_t(coefficient, u), "eliminate", slot, "u", "pole at t = u survives", rng))
        if pole_order(coefficient, u):
            raise CertificationError("eliminate", "higher order pole at t = u survives", coefficient=slot, pole="u")

    F = extract_F(L15, theta)
    witnesses.append(certify(F.diff(t), "F", "c_0", message="F depends on t", rng=rng))
    witnesses += certify_against_template(L15, eliminated_template(theta, display_F(theta)), "eliminate", rng=rng)
    log.debug("eliminate: lambda13 = -1/(t(t-1)(t-x)) certified")
    return EliminatedPair(L15, lambda13, F, tuple(witnesses))


def compute_F(theta: Theta, extracted: RatFunc | None = None, rng: random.Random | None = None) -> RatFunc:
    """The displayed F; with `extracted` given, certify that both agree."""
    F = display_F(theta)
    if extracted is not None:
        certify(extracted - F, "F", "c_0", message="extracted F differs from the display", rng=rng)
    if depends_on(F, t):
        raise CertificationError("F", "F depends on t", coefficient="c_0")
    return F


def gauge_choice(F: RatFunc, g_choice: GChoice) -> RatFunc:
    """The value of G' that absorbs F."""
    g_value = K.zero if g_choice == GChoice.ZERO else g
    return (g_value + F) / D


def absorb_gauge(L15: LinOp, choice: RatFunc) -> LinOp:
    """Substitute G' = choice and clear the cubic denominator."""
    return L15.substitute(gp, choice).scale(SPECTRAL_CUBIC)


def painleve_free_witnesses(op: LinOp, rng: random.Random | None = None) -> list[Witness]:
    """Partial derivatives of every coefficient in u and u1."""
    witnesses = []
    for slot, coefficient in op.coefficients().items():
        for var, name in ((u, "u"), (u1, "u1")):
            witnesses.append(certify(coefficient.diff(var), "heat", slot,
                                     message=f"coefficient still depends on {name}", rng=rng))
    return witnesses


def heat_from(eliminated: EliminatedPair, theta: Theta, g_choice: GChoice,
              rng: random.Random | None = None) -> tuple[HeatOperator, RatFunc, list[Witness]]:
    choice = gauge_choice(eliminated.F, g_choice)
    op = absorb_gauge(eliminated.L15, choice)
    witnesses = painleve_free_witnesses(op, rng)
    template = heat_template(theta)
    if g_choice == GChoice.ZERO:
        template = template.substitute(g, K.zero)
    witnesses += certify_against_template(op, template, "heat", rng=rng)
    return HeatOperator(op, theta, g_choice), choice, witnesses


@lru_cache(maxsize=None)
def lax_stage(theta: Theta) -> tuple[LaxPair, Witness]:
    lax = build_lax(theta)
    witness = certify(compat_residual(lax.L1, lax.L2, x_flow(theta)), "compat", "c_0",
                      message="the Lax pair is not compatible along PVI")
    return lax, witness


@lru_cache(maxsize=None)
def gauge_stage(theta: Theta) -> GaugedPair:
    lax, _ = lax_stage(theta)
    return transform_lax(lax, gauge_log_derivatives(theta), x_flow(theta))


@lru_cache(maxsize=None)
def elimination_stage(theta: Theta) -> EliminatedPair:
    gauged = gauge_stage(theta)
    eliminated = eliminate_apparent_pole(gauged.L1, gauged.L2, theta)
    compute_F(theta, eliminated.F)
    return eliminated


@lru_cache(maxsize=None)
def run_pipeline(theta: Theta, g_choice: GChoice = GChoice.SYMBOLIC) -> PipelineResult:
    """Every stage, certified, ending with the heat operator."""
    lax, compat_witness = lax_stage(theta)
    gauged = gauge_stage(theta)
    eliminated = elimination_stage(theta)
    heat, choice, heat_witnesses = heat_from(eliminated, theta, g_choice)
    certificate = EliminationCertificate(
        theta=theta.label,
        g_choice=g_choice.value,
        lambda13=eliminated.lambda13,
        F=eliminated.F,
        gauge_choice=choice,
        witnesses=(compat_witness, *gauged.witnesses, *eliminated.witnesses, *heat_witnesses),
    )
    log.debug("pipeline certified for theta=%s, g=%s (%d witnesses)", theta.label, g_choice.value,
              len(certificate.witnesses))
    return PipelineResult(lax, gauged, eliminated, heat, certificate)


def heat_operator(theta: Theta, g_choice: GChoice = GChoice.SYMBOLIC) -> tuple[HeatOperator, EliminationCertificate]:
    result = run_pipeline(theta, g_choice)
    return result.heat, result.certificate
