"""Zero testing: exact expansion, with random evaluation as a pre-filter."""

from __future__ import annotations

import logging
import random
from enum import Enum

from sympy.polys.domains import QQ

from exact_kernel.errors import CertificationError, ZeroTestBudgetError
from exact_kernel.field import MultiPoly, RatFunc, as_ratfunc, index_of, to_text, variables_of
from util.config import get_settings

log = logging.getLogger(__name__)


class ZeroTestMode(str, Enum):
    EXACT = "exact"
    PROBABILISTIC = "probabilistic"


def _evaluate(poly: MultiPoly, point: dict[int, object]):
    total = QQ.zero
    for monom, coeff in poly.iterterms():
        term = coeff
        for i, e in enumerate(monom):
            if e:
                term *= point[i] ** e
        total += term
    return total


def random_point(f: RatFunc, rng: random.Random, bound: int = 10**6) -> dict[int, object]:
    return {
        index_of(var): QQ(rng.randint(-bound, bound), rng.randint(1, 997))
        for var in variables_of(f)
    }


def probably_zero(f: RatFunc, rng: random.Random, retries: int | None = None) -> bool:
    """False means f is certainly nonzero; True means it vanished at a random point.

    retries defaults to the ZERO_TEST_RETRIES setting.
    """
    if retries is None:
        retries = get_settings().ZERO_TEST_RETRIES
    for _ in range(retries):
        point = random_point(f, rng)
        if _evaluate(f.denom, point) == 0:
            continue
        return _evaluate(f.numer, point) == 0
    raise ZeroTestBudgetError(f"no evaluation point off the poles of {to_text(f)[:80]} in {retries} tries")


def is_zero(f, mode: ZeroTestMode = ZeroTestMode.EXACT, rng: random.Random | None = None,
            retries: int | None = None) -> bool:
    f = as_ratfunc(f)
    if mode == ZeroTestMode.PROBABILISTIC:
        return probably_zero(f, rng or random.Random(0), retries)
    # reduced form: the numerator is empty exactly for zero
    return not f.numer


def certify_zero(witness: RatFunc, step: str, message: str = "expected an identically zero witness",
                 coefficient: str = "", pole: str = "", rng: random.Random | None = None) -> RatFunc:
    """Raise CertificationError unless witness is exactly zero; return it otherwise."""
    # a nonzero random evaluation is already a proof of failure
    if (rng is not None and not probably_zero(witness, rng)) or not is_zero(witness):
        raise CertificationError(step, message, coefficient=coefficient, pole=pole, witness=to_text(witness))
    log.debug("%s: exact zero", step)
    return witness
