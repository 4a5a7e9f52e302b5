"""Monodromy exponents and the two parameter sets they determine.

    (2 alpha, -2 beta, 2 gamma, 1 - 2 delta) = (th_inf^2, th_0^2, th_1^2, th_x^2)
    (2 alpha, -2 beta, 2 gamma, 1 - 2 delta) = (4(A+B+C+E+1), 4A+1, 4B+1, 4C+1)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from exact_kernel.field import (
    THETA_SYMBOLS,
    RatFunc,
    as_ratfunc,
    constant_value,
    depends_on,
    is_constant,
    substitute_all,
    th_0,
    th_1,
    th_inf,
    th_x,
    to_text,
)

SYMBOLIC = "symbolic"


@dataclass(frozen=True)
class Theta:
    """(th_inf, th_0, th_1, th_x); each entry is a field element, symbolic or rational."""

    th_inf: RatFunc
    th_0: RatFunc
    th_1: RatFunc
    th_x: RatFunc

    @classmethod
    def symbolic(cls) -> "Theta":
        return cls(th_inf, th_0, th_1, th_x)

    @classmethod
    def of(cls, th_inf_, th_0_, th_1_, th_x_) -> "Theta":
        return cls(as_ratfunc(th_inf_), as_ratfunc(th_0_), as_ratfunc(th_1_), as_ratfunc(th_x_))

    @classmethod
    def parse(cls, text: str) -> "Theta":
        """`symbolic` or four comma-separated rationals `p/q` in the order inf, 0, 1, x."""
        text = text.strip()
        if text == SYMBOLIC:
            return cls.symbolic()
        pieces = [piece.strip() for piece in text.split(",")]
        if len(pieces) != 4:
            raise ValueError(f"theta needs four comma-separated rationals, got {text!r}")
        try:
            values = [Fraction(piece) for piece in pieces]
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed theta {text!r}: {exc}") from exc
        return cls.of(*values)

    def values(self) -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
        return self.th_inf, self.th_0, self.th_1, self.th_x

    @property
    def is_rational(self) -> bool:
        return all(is_constant(value) for value in self.values())

    @property
    def is_symbolic(self) -> bool:
        return any(depends_on(value, symbol) for value in self.values() for symbol in THETA_SYMBOLS)

    def specialize(self, f: RatFunc) -> RatFunc:
        """Replace the theta symbols of f by this theta's entries."""
        return substitute_all(f, zip(THETA_SYMBOLS, self.values()))

    def as_fractions(self) -> tuple[Fraction, ...]:
        return tuple(constant_value(value) for value in self.values())

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(value) for value in self.as_fractions())

    @property
    def label(self) -> str:
        if self == Theta.symbolic():
            return SYMBOLIC
        return ",".join(to_text(value) for value in self.values())


@dataclass(frozen=True)
class PviParams:
    alpha: RatFunc
    beta: RatFunc
    gamma: RatFunc
    delta: RatFunc

    @classmethod
    def of(cls, alpha, beta, gamma, delta) -> "PviParams":
        return cls(as_ratfunc(alpha), as_ratfunc(beta), as_ratfunc(gamma), as_ratfunc(delta))

    @classmethod
    def from_theta(cls, theta: Theta) -> "PviParams":
        return cls(
            theta.th_inf**2 / 2,
            -theta.th_0**2 / 2,
            theta.th_1**2 / 2,
            (1 - theta.th_x**2) / 2,
        )

    @classmethod
    def from_fuchs(cls, fuchs: "FuchsParams") -> "PviParams":
        return cls(
            2 * (fuchs.A + fuchs.B + fuchs.C + fuchs.E + 1),
            -(4 * fuchs.A + 1) / 2,
            (4 * fuchs.B + 1) / 2,
            -2 * fuchs.C,
        )

    def theta_squares(self) -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
        return 2 * self.alpha, -2 * self.beta, 2 * self.gamma, 1 - 2 * self.delta


@dataclass(frozen=True)
class FuchsParams:
    A: RatFunc
    B: RatFunc
    C: RatFunc
    E: RatFunc

    @classmethod
    def of(cls, A, B, C, E) -> "FuchsParams":
        return cls(as_ratfunc(A), as_ratfunc(B), as_ratfunc(C), as_ratfunc(E))

    @classmethod
    def from_pvi(cls, params: PviParams) -> "FuchsParams":
        A = (-2 * params.beta - 1) / 4
        B = (2 * params.gamma - 1) / 4
        C = -params.delta / 2
        return cls(A, B, C, params.alpha / 2 - 1 - A - B - C)

    def theta_squares(self) -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
        return (
            4 * (self.A + self.B + self.C + self.E + 1),
            4 * self.A + 1,
            4 * self.B + 1,
            4 * self.C + 1,
        )


def theta_correspondence(theta: Theta) -> tuple[PviParams, FuchsParams]:
    params = PviParams.from_theta(theta)
    return params, FuchsParams.from_pvi(params)
