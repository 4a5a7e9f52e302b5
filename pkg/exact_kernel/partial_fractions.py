"""Partial fractions in the spectral variable t over declared poles."""

from __future__ import annotations

from dataclasses import dataclass

from exact_kernel.errors import UndeclaredPoleError
from exact_kernel.field import K, MultiPoly, RatFunc, as_ratfunc, depends_on, index_of, poly_text, t, taylor_coefficients, to_text

_T = index_of(t)


@dataclass(frozen=True)
class PolePart:
    pole: RatFunc
    order: int
    coefficients: tuple[RatFunc, ...]  # of 1/(t - pole)^k for k = 1..order

    @property
    def residue(self) -> RatFunc:
        return self.coefficients[0]

    def as_ratfunc(self) -> RatFunc:
        total = K.zero
        for k, coeff in enumerate(self.coefficients, start=1):
            total += coeff / (t - self.pole) ** k
        return total


@dataclass(frozen=True)
class PartialFractions:
    parts: tuple[PolePart, ...]
    polynomial_part: RatFunc

    def part(self, pole) -> PolePart | None:
        pole = as_ratfunc(pole)
        for part in self.parts:
            if part.pole == pole:
                return part
        return None

    def recompose(self) -> RatFunc:
        total = self.polynomial_part
        for part in self.parts:
            total += part.as_ratfunc()
        return total


def _linear_factor(pole: RatFunc) -> MultiPoly:
    if depends_on(pole, t):
        raise ValueError(f"pole {to_text(pole)} depends on t")
    return t.numer * pole.denom - pole.numer


def _strip(den: MultiPoly, linear: MultiPoly) -> tuple[MultiPoly, int]:
    order = 0
    while den.degree(_T) > 0:
        quotient, remainder = divmod(den, linear)
        if remainder:
            break
        den, order = quotient, order + 1
    return den, order


def pole_order(f: RatFunc, pole) -> int:
    _, order = _strip(f.denom, _linear_factor(as_ratfunc(pole)))
    return order


def has_pole_at(f: RatFunc, pole) -> bool:
    return pole_order(f, pole) > 0


def _pole_part(f: RatFunc, pole: RatFunc, order: int) -> PolePart:
    shifted = f * (t - pole) ** order
    taylor = taylor_coefficients(shifted, t, pole, order)
    # coefficient of (t - pole)^-k is the Taylor coefficient of index order - k
    return PolePart(pole, order, tuple(taylor[order - k] for k in range(1, order + 1)))


def residue_t(f: RatFunc, pole) -> RatFunc:
    pole = as_ratfunc(pole)
    order = pole_order(f, pole)
    if order == 0:
        return K.zero
    return _pole_part(f, pole, order).residue


def partial_fractions_t(f: RatFunc, poles) -> PartialFractions:
    """Split f into pole parts at the declared poles plus a part polynomial in t.

    The denominator must factor into powers of (t - pole) times a t-free
    factor; anything else raises UndeclaredPoleError naming the factor.
    """
    f = as_ratfunc(f)
    den = f.denom
    orders: list[tuple[RatFunc, int]] = []
    for pole in poles:
        pole = as_ratfunc(pole)
        den, order = _strip(den, _linear_factor(pole))
        if order:
            orders.append((pole, order))
    if den.degree(_T) > 0:
        _, factors = den.factor_list()
        offending = [poly_text(fac) for fac, _ in factors if fac.degree(_T) > 0]
        raise UndeclaredPoleError(", ".join(offending) or poly_text(den))

    parts = tuple(_pole_part(f, pole, order) for pole, order in orders)
    polynomial_part = f
    for part in parts:
        polynomial_part -= part.as_ratfunc()
    return PartialFractions(parts, polynomial_part)
