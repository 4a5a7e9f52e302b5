"""Zero witnesses and the certificate the pipeline hands out."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field

from exact_kernel.errors import UndeclaredPoleError
from exact_kernel.field import RatFunc, to_text, u, x
from exact_kernel.fuchs import point_text
from exact_kernel.identity import certify_zero
from exact_kernel.operators import LinOp
from exact_kernel.partial_fractions import partial_fractions_t

log = logging.getLogger(__name__)

DECLARED_POLES = (0, 1, x, u)


@dataclass(frozen=True)
class Witness:
    """A quantity that was certified to be exactly zero."""

    step: str
    coefficient: str
    value: RatFunc
    pole: str = ""

    def to_record(self) -> dict[str, str]:
        return {"step": self.step, "coefficient": self.coefficient, "pole": self.pole, "value": to_text(self.value)}


def offending_pole(difference: RatFunc, poles=DECLARED_POLES) -> str:
    """First pole at which a nonzero difference has a nonzero principal part."""
    try:
        split = partial_fractions_t(difference, poles)
    except UndeclaredPoleError as exc:
        return exc.factor
    for part in split.parts:
        if any(part.coefficients):
            return point_text(part.pole)
    return "polynomial part"


def certify(value: RatFunc, step: str, coefficient: str = "", pole: str = "",
            message: str = "expected an identically zero witness", rng: random.Random | None = None) -> Witness:
    certify_zero(value, step, message, coefficient=coefficient, pole=pole, rng=rng)
    return Witness(step, coefficient, value, pole)


def certify_against_template(actual: LinOp, template: LinOp, step: str, poles=DECLARED_POLES,
                             rng: random.Random | None = None) -> list[Witness]:
    """Coefficientwise equality of two operators; a mismatch names its slot and pole."""
    witnesses = []
    for slot in LinOp.SLOTS:
        difference = getattr(actual, slot) - getattr(template, slot)
        pole = offending_pole(difference, poles) if difference else ""
        witnesses.append(certify(difference, step, slot, pole, "coefficient differs from the template", rng))
    log.debug("%s: operator matches its template", step)
    return witnesses


@dataclass(frozen=True)
class EliminationCertificate:
    theta: str
    g_choice: str
    lambda13: RatFunc
    F: RatFunc
    gauge_choice: RatFunc
    witnesses: tuple[Witness, ...] = field(default_factory=tuple)

    @property
    def all_zero(self) -> bool:
        return not any(witness.value for witness in self.witnesses)

    def to_record(self) -> dict:
        return {
            "theta": self.theta,
            "g_choice": self.g_choice,
            "lambda13": to_text(self.lambda13),
            "F": to_text(self.F),
            "gauge_choice": to_text(self.gauge_choice),
            "witnesses": [witness.to_record() for witness in self.witnesses],
        }
