"""Exact coefficients turned into numpy callables.

Everything numeric starts from the certified operators of the exact layer,
so the floating-point checks exercise the same rational functions the
certificates are about.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import sympy

from exact_kernel.field import VARIABLE_NAMES, K, RatFunc, gp, name_of, t, variables_of
from exact_kernel.operators import LinOp
from elimination.picard import picard_reduction
from elimination.pipeline import GChoice, elimination_stage, gauge_choice, gauge_stage, run_pipeline
from numerics.errors import NumericDomainError
from painleve_forms.pvi import SINGULAR_FACTORS, pvi_rhs
from painleve_forms.riccati import riccati_R
from painleve_forms.theta import PviParams, Theta

SYMBOLS = dict(zip(VARIABLE_NAMES, K.symbols))
ARGUMENTS = ("t", "x", "u", "u1")


def compile_ratfunc(f: RatFunc, arguments: tuple[str, ...] = ARGUMENTS) -> Callable:
    free = sorted({name_of(var) for var in variables_of(f)} - set(arguments))
    if free:
        raise NumericDomainError(f"cannot evaluate numerically, free symbols remain: {', '.join(free)}")
    return sympy.lambdify([SYMBOLS[name] for name in arguments], f.as_expr(), modules="numpy")


@dataclass(frozen=True)
class CompiledOperator:
    """c_tt, c_t, c_x, c_0 as callables of (t, x, u, u1)."""

    c_tt: Callable
    c_t: Callable
    c_x: Callable
    c_0: Callable


def compile_operator(op: LinOp, arguments: tuple[str, ...] = ARGUMENTS) -> CompiledOperator:
    return CompiledOperator(*(compile_ratfunc(coeff, arguments) for coeff in op.coefficients().values()))


def _require_rational(theta: Theta) -> None:
    if not theta.is_rational:
        raise NumericDomainError(f"numerics need rational exponents, got theta={theta.label}")


@dataclass(frozen=True)
class WaveCoefficients:
    spectral: CompiledOperator
    deformation: CompiledOperator
    deformation_t: CompiledOperator


@lru_cache(maxsize=None)
def wave_coefficients(theta: Theta) -> WaveCoefficients:
    """The gauged pair with G' = F/(x(x-1)), plus the t-derivatives of the x-equation."""
    _require_rational(theta)
    gauged = gauge_stage(theta)
    F = elimination_stage(theta).F
    L2 = gauged.L2.substitute(gp, gauge_choice(F, GChoice.ZERO))
    return WaveCoefficients(
        compile_operator(gauged.L1),
        compile_operator(L2),
        compile_operator(L2.map(lambda coeff: coeff.diff(t))),
    )


@lru_cache(maxsize=None)
def heat_coefficients(theta: Theta) -> CompiledOperator:
    _require_rational(theta)
    return compile_operator(run_pipeline(theta, GChoice.ZERO).heat.op)


@lru_cache(maxsize=None)
def pvi_function(theta: Theta) -> Callable:
    """u'' as a callable of (x, u, u1)."""
    _require_rational(theta)
    return compile_ratfunc(pvi_rhs(PviParams.from_theta(theta)), ("x", "u", "u1"))


@lru_cache(maxsize=None)
def riccati_function(theta: Theta) -> Callable:
    _require_rational(theta)
    return compile_ratfunc(riccati_R(theta.th_0, theta.th_1, theta.th_x), ("x", "u", "u1"))


@lru_cache(maxsize=None)
def singular_factor_functions() -> tuple[tuple[str, Callable], ...]:
    return tuple((name, compile_ratfunc(factor, ("x", "u"))) for name, factor in SINGULAR_FACTORS)


@lru_cache(maxsize=None)
def legendre_coefficients() -> CompiledOperator:
    return compile_operator(picard_reduction(), ("t",))
