from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, ClassVar

from exact_kernel.derivation import D_T, Derivation
from exact_kernel.field import K, RatFunc, as_ratfunc, depends_on, substitute


@dataclass(frozen=True)
class LinOp:
    """c_tt*d_t^2 + c_t*d_t + c_x*d_x + c_0 with exact coefficients."""

    c_tt: RatFunc = K.zero
    c_t: RatFunc = K.zero
    c_x: RatFunc = K.zero
    c_0: RatFunc = K.zero

    SLOTS: ClassVar[tuple[str, ...]] = ("c_tt", "c_t", "c_x", "c_0")

    @classmethod
    def of(cls, c_tt=0, c_t=0, c_x=0, c_0=0) -> "LinOp":
        return cls(as_ratfunc(c_tt), as_ratfunc(c_t), as_ratfunc(c_x), as_ratfunc(c_0))

    def coefficients(self) -> dict[str, RatFunc]:
        return {slot: getattr(self, slot) for slot in self.SLOTS}

    def map(self, fn: Callable[[RatFunc], RatFunc]) -> "LinOp":
        return LinOp(*(fn(getattr(self, slot)) for slot in self.SLOTS))

    def scale(self, factor) -> "LinOp":
        factor = as_ratfunc(factor)
        return self.map(lambda coeff: coeff * factor)

    def __add__(self, other: "LinOp") -> "LinOp":
        return LinOp(*(getattr(self, s) + getattr(other, s) for s in self.SLOTS))

    def __sub__(self, other: "LinOp") -> "LinOp":
        return LinOp(*(getattr(self, s) - getattr(other, s) for s in self.SLOTS))

    def substitute(self, var: RatFunc, value) -> "LinOp":
        return self.map(lambda coeff: substitute(coeff, var, value))

    def depends_on(self, var: RatFunc) -> bool:
        return any(depends_on(coeff, var) for coeff in self.coefficients().values())

    def apply(self, f: RatFunc, d_x: Derivation | None = None, d_t: Derivation = D_T) -> RatFunc:
        f = as_ratfunc(f)
        f_t = d_t(f)
        result = self.c_tt * d_t(f_t) + self.c_t * f_t + self.c_0 * f
        if self.c_x:
            if d_x is None:
                raise ValueError("operator has a d_x part; an x-derivation is required")
            result += self.c_x * d_x(f)
        return result

    def conjugate(self, gauge: "GaugeLog", d_t: Derivation = D_T) -> "LinOp":
        """The operator L' with L(exp(lambda)*Psi) = exp(lambda)*L'(Psi)."""
        lam_t, lam_x = gauge.lam_t, gauge.lam_x
        return LinOp(
            self.c_tt,
            2 * self.c_tt * lam_t + self.c_t,
            self.c_x,
            self.c_tt * (lam_t**2 + d_t(lam_t)) + self.c_t * lam_t + self.c_x * lam_x + self.c_0,
        )


@dataclass(frozen=True)
class GaugeLog:
    """Logarithmic t- and x-derivatives of a gauge prefactor."""

    lam_t: RatFunc
    lam_x: RatFunc

    def cross_defect(self, flow: Derivation, d_t: Derivation = D_T) -> RatFunc:
        return d_t(self.lam_x) - flow(self.lam_t)
