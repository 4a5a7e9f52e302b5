"""The certification checks behind `pvi-heat verify`.

Each check takes (theta, rng) and returns the witnesses it certified to be
exactly zero. A failed certification raises CertificationError, which the
runner records as a failing check.
"""

from __future__ import annotations

import hashlib
import json
import logging
import random
import time
from typing import Iterable

from exact_kernel.errors import CertificationError
from exact_kernel.field import rat, t
from exact_kernel.fuchs import point_text
from exact_kernel.operators import LinOp
from elimination.certificate import Witness, certify, certify_against_template
from elimination.gauge import conjugate_pair, gauge_log_derivatives, residue_witnesses, transform_lax
from elimination.picard import picard_reduction, picard_series_defect
from elimination.pipeline import GChoice, compute_F, eliminate_apparent_pole, elimination_stage, gauge_stage, run_pipeline
from painleve_forms.lax import apparent_obstruction, build_lax, compat_residual, expected_riemann_scheme, lax_riemann_scheme
from painleve_forms.pvi import x_flow
from painleve_forms.riccati import hamilton_flow_defect, hamilton_velocity_defect, hamiltonian_check, riccati_flow_defect
from painleve_forms.theta import Theta
from pvi_heat.schemas import CheckReport, CheckStatus
from util.check_registry import CHECKS, check

log = logging.getLogger(__name__)

LEGENDRE = LinOp.of(c_tt=t * (t - 1), c_t=2 * t - 1, c_0=rat(1, 4))
PICARD_SERIES_ORDERS = (0, 4, 12)


@check
def check_compat(theta: Theta, rng: random.Random) -> list[Witness]:
    lax = build_lax(theta)
    return [certify(compat_residual(lax.L1, lax.L2, x_flow(theta)), "compat", "c_0",
                    message="the Lax pair is not compatible along PVI", rng=rng)]


@check
def check_gauge(theta: Theta, rng: random.Random) -> list[Witness]:
    gauged = transform_lax(build_lax(theta), gauge_log_derivatives(theta), x_flow(theta), rng)
    return list(gauged.witnesses)


@check
def check_residues(theta: Theta, rng: random.Random) -> list[Witness]:
    lax = build_lax(theta)
    L1p, _ = conjugate_pair(lax.L1, lax.L2, gauge_log_derivatives(theta))
    return residue_witnesses(L1p, theta, rng)


@check
def check_hamiltonian(theta: Theta, rng: random.Random) -> list[Witness]:
    return [
        certify(hamiltonian_check(theta), "hamiltonian", "H", message="residue at x is not the Hamiltonian", rng=rng),
        certify(hamilton_velocity_defect(theta), "hamiltonian", "dH/dp", message="u' != dH/dp", rng=rng),
        certify(hamilton_flow_defect(theta), "hamiltonian", "dH/du", message="p' != -dH/du", rng=rng),
        certify(riccati_flow_defect(theta), "hamiltonian", "riccati",
                message="the Riccati locus is not invariant", rng=rng),
    ]


@check
def check_apparent(theta: Theta, rng: random.Random) -> list[Witness]:
    lax = build_lax(theta)
    witnesses = [certify(apparent_obstruction(lax), "apparent", "c_0", "u",
                         "t = u is not an apparent singularity", rng)]
    scheme = lax_riemann_scheme(lax)
    for point, pair in expected_riemann_scheme(theta).items():
        if set(scheme.exponents(point)) != set(pair):
            raise CertificationError("apparent", "exponents differ from the Riemann scheme", pole=point_text(point))
    witnesses.append(certify(scheme.fuchs_defect(), "apparent", "fuchs", message="Fuchs relation fails", rng=rng))
    return witnesses


@check
def check_eliminate(theta: Theta, rng: random.Random) -> list[Witness]:
    gauged = gauge_stage(theta)
    return list(eliminate_apparent_pole(gauged.L1, gauged.L2, theta, rng).witnesses)


@check
def check_F(theta: Theta, rng: random.Random) -> list[Witness]:
    extracted = elimination_stage(theta).F
    F = compute_F(theta, extracted, rng)
    return [
        certify(extracted - F, "F", "c_0", message="extracted F differs from the display", rng=rng),
        certify(F.diff(t), "F", "c_0", message="F depends on t", rng=rng),
    ]


@check
def check_heat(theta: Theta, rng: random.Random) -> list[Witness]:
    witnesses = []
    for g_choice in GChoice:
        result = run_pipeline(theta, g_choice)
        if result.heat.depends_on_painleve_variables():
            raise CertificationError("heat", "the eliminated operator still depends on u or u1")
        witnesses += result.certificate.witnesses
    return witnesses


@check
def check_picard(theta: Theta, rng: random.Random) -> list[Witness]:
    witnesses = certify_against_template(picard_reduction(), LEGENDRE, "picard", poles=(0, 1), rng=rng)
    for order in PICARD_SERIES_ORDERS:
        witnesses.append(certify(picard_series_defect(order), "picard", f"series_{order}",
                                 message="the hypergeometric series is not annihilated", rng=rng))
    return witnesses


def witness_digest(records) -> str:
    payload = json.dumps(records, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def run_check(name: str, theta: Theta, seed: int) -> CheckReport:
    rng = random.Random(f"{seed}:{name}")
    start = time.perf_counter()
    try:
        witnesses = CHECKS[name](theta, rng)
        nonzero = [w for w in witnesses if w.value]
        status = CheckStatus.FAIL if nonzero else CheckStatus.PASS
        detail = f"{len(witnesses)} witnesses, {len(nonzero)} nonzero (theta={theta.label})"
        digest = witness_digest([w.to_record() for w in witnesses])
    except CertificationError as exc:
        status, detail, digest = CheckStatus.FAIL, str(exc), witness_digest(exc.witness)
    except Exception as exc:
        log.exception("check %s raised", name)
        status, detail, digest = CheckStatus.ERROR, f"{type(exc).__name__}: {exc}", witness_digest(None)
    elapsed_ms = int(round((time.perf_counter() - start) * 1000))
    log.debug("%s: %s in %d ms", name, status.value, elapsed_ms)
    return CheckReport(check_name=name, status=status, detail=detail, witness_digest=digest, elapsed_ms=elapsed_ms)


def run_checks(names: Iterable[str], theta: Theta, seed: int) -> list[CheckReport]:
    """Each requested check once, in the order given."""
    return [run_check(name, theta, seed) for name in dict.fromkeys(names)]
