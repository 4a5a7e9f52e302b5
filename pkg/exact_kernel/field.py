"""The exact rational-function field every identity lives in.

All expressions are elements of one sympy sparse fraction field over QQ in
the generators below, ordered graded-lexicographically. Elements are
immutable and kept in reduced form (sympy cancels on construction), the
denominator carries a positive leading coefficient and zero is 0/1.

    t                       spectral variable
    x                       deformation (Painleve) variable
    u, u1                   Painleve function and its x-derivative
    th_inf, th_0, th_1, th_x   monodromy exponents
    gp, g, p                inert symbols: G'(x), g(x), Hamiltonian momentum
    c                       a free constant

sympy supplies arithmetic, cancellation, partial derivatives and
factorization; substitution of rational functions, exact square roots and
printing are done here.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from sympy import integer_nthroot
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement

from exact_kernel.errors import ExponentError, PolynomialDivisionError, SingularLocusError

VARIABLE_NAMES = ("t", "x", "u", "u1", "th_inf", "th_0", "th_1", "th_x", "gp", "g", "p", "c")

K, t, x, u, u1, th_inf, th_0, th_1, th_x, gp, g, p, c = field(",".join(VARIABLE_NAMES), QQ, grlex)

RatFunc = FracElement
MultiPoly = PolyElement

GENERATORS: dict[str, RatFunc] = dict(zip(VARIABLE_NAMES, K.gens))
THETA_SYMBOLS = (th_inf, th_0, th_1, th_x)
INERT_SYMBOLS = (gp, g, p)


def rat(numerator: int, denominator: int = 1) -> RatFunc:
    if denominator == 0:
        raise PolynomialDivisionError("zero denominator in rational constant")
    return K.ground_new(QQ(numerator, denominator))


def as_ratfunc(value) -> RatFunc:
    """Coerce ints, Fractions, 'p/q' strings and field elements into the field."""
    if isinstance(value, FracElement):
        return value
    if isinstance(value, PolyElement):
        return K.new(value)
    if isinstance(value, bool):
        raise TypeError("booleans are not field elements")
    if isinstance(value, int):
        return rat(value)
    if isinstance(value, str):
        value = Fraction(value.strip())
    if isinstance(value, Fraction):
        return rat(value.numerator, value.denominator)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return rat(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot convert {type(value).__name__} into the rational-function field")


def divide(a, b) -> RatFunc:
    a, b = as_ratfunc(a), as_ratfunc(b)
    if not b:
        raise PolynomialDivisionError("division by the zero polynomial")
    return a / b


def index_of(var: RatFunc) -> int:
    try:
        return K.gens.index(var)
    except ValueError:
        raise ValueError(f"{var} is not a generator of the field") from None


def name_of(var: RatFunc) -> str:
    return VARIABLE_NAMES[index_of(var)]


def _used_indices(poly: MultiPoly) -> set[int]:
    used: set[int] = set()
    for monom in poly.itermonoms():
        used.update(i for i, e in enumerate(monom) if e)
    return used


def variables_of(f: RatFunc) -> tuple[RatFunc, ...]:
    """Generators that actually occur in f, in field order."""
    used = _used_indices(f.numer) | _used_indices(f.denom)
    return tuple(K.gens[i] for i in sorted(used))


def depends_on(f: RatFunc, var: RatFunc) -> bool:
    i = index_of(var)
    return any(m[i] for m in f.numer.itermonoms()) or any(m[i] for m in f.denom.itermonoms())


def is_constant(f: RatFunc) -> bool:
    return f.numer.is_ground and f.denom.is_ground


def degree(f: RatFunc, var: RatFunc) -> tuple[int, int]:
    """(degree of numerator, degree of denominator) in var; the zero numerator has degree -1."""
    i = index_of(var)
    num = max((m[i] for m in f.numer.itermonoms()), default=-1) if f.numer else -1
    den = max(m[i] for m in f.denom.itermonoms())
    return num, den


def coefficients_in(poly: MultiPoly, index: int) -> dict[int, MultiPoly]:
    """Split poly into {k: coefficient of var**k} with var = generator number `index`."""
    groups: dict[int, dict] = {}
    for monom, coeff in poly.iterterms():
        k = monom[index]
        rest = monom[:index] + (0,) + monom[index + 1:]
        groups.setdefault(k, {})[rest] = coeff
    return {k: poly.ring.from_dict(terms) for k, terms in groups.items()}


def _compose(poly: MultiPoly, index: int, num: MultiPoly, den: MultiPoly) -> tuple[MultiPoly, int]:
    # poly(var := num/den) * den**top, returned with top
    groups = coefficients_in(poly, index)
    if not groups:
        return poly.ring.zero, 0
    top = max(groups)
    result = poly.ring.zero
    for k, coeff in groups.items():
        # PolyElement refuses 0**0
        power = num**k if k else poly.ring.one
        result += coeff * power * den ** (top - k)
    return result, top


def _vanishing_factor(den: MultiPoly, index: int, value: RatFunc) -> str:
    _, factors = den.factor_list()
    for factor, _ in factors:
        composed, _ = _compose(factor, index, value.numer, value.denom)
        if not composed:
            return poly_text(factor)
    return poly_text(den)


def substitute(f: RatFunc, var: RatFunc, value) -> RatFunc:
    """Replace the generator var by a rational function, exactly.

    Raises SingularLocusError naming the denominator factor that vanishes
    when the substitution lands on a pole.
    """
    value = as_ratfunc(value)
    index = index_of(var)
    if not depends_on(f, var):
        return f
    num, num_top = _compose(f.numer, index, value.numer, value.denom)
    den, den_top = _compose(f.denom, index, value.numer, value.denom)
    if not den:
        factor = _vanishing_factor(f.denom, index, value)
        raise SingularLocusError(factor, f"{VARIABLE_NAMES[index]} = {to_text(value)}")
    b = value.denom
    return K.new(num * b**den_top, den * b**num_top)


def substitute_all(f: RatFunc, values) -> RatFunc:
    """Sequential substitution from a {generator: value} mapping or pair list."""
    pairs = values.items() if hasattr(values, "items") else values
    for var, value in pairs:
        f = substitute(f, var, value)
    return f


def constant_value(f: RatFunc) -> Fraction:
    if not is_constant(f):
        raise ValueError(f"expected a constant, got {to_text(f)}")
    num = f.numer.const() if f.numer else QQ.zero
    den = f.denom.const()
    return Fraction(int(num.numerator), int(num.denominator)) / Fraction(int(den.numerator), int(den.denominator))


def taylor_coefficients(f: RatFunc, var: RatFunc, point, count: int) -> list[RatFunc]:
    """First `count` Taylor coefficients of f in var around point."""
    coefficients = []
    current = f
    for k in range(count):
        coefficients.append(substitute(current, var, point) / factorial(k))
        current = current.diff(var)
    return coefficients


def _rational_sqrt(value) -> Fraction | None:
    value = Fraction(int(value.numerator), int(value.denominator))
    if value < 0:
        return None
    num, exact_num = integer_nthroot(value.numerator, 2)
    den, exact_den = integer_nthroot(value.denominator, 2)
    if not (exact_num and exact_den):
        return None
    return Fraction(int(num), int(den))


def _poly_sqrt(poly: MultiPoly) -> MultiPoly | None:
    coeff, factors = poly.factor_list()
    root = _rational_sqrt(coeff)
    if root is None or any(e % 2 for _, e in factors):
        return None
    result = poly.ring.ground_new(QQ(root.numerator, root.denominator))
    for factor, e in factors:
        result *= factor ** (e // 2)
    return result


def exact_sqrt(f: RatFunc) -> RatFunc:
    """Square root inside the field, or ExponentError when there is none."""
    if not f:
        return K.zero
    num, den = _poly_sqrt(f.numer), _poly_sqrt(f.denom)
    if num is None or den is None:
        raise ExponentError(f"{to_text(f)} is not a square in the rational-function field")
    return K.new(num, den)


def _coeff_text(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def poly_text(poly: MultiPoly) -> str:
    if not poly:
        return "0"
    pieces = []
    for monom, coeff in poly.terms():
        value = _coeff_text(coeff)
        factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(VARIABLE_NAMES, monom) if e]
        magnitude = abs(value)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = f"{magnitude}*" + "*".join(factors)
        pieces.append(("-" if value < 0 else "+", body))
    sign, body = pieces[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def to_text(f: RatFunc) -> str:
    """Plain-text form accepted back by exact_kernel.grammar.parse."""
    if f.denom.is_ground:
        return poly_text(f.numer.mul_ground(QQ.one / f.denom.LC))
    return f"({poly_text(f.numer)})/({poly_text(f.denom)})"
